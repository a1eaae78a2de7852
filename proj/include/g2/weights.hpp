#pragma once

#include <string>

#include "g2/rational.hpp"
#include "g2/rootsys.hpp"

namespace g2 {

// The three coordinate systems on the weight lattice:
//   Fund : (m, n) on the fundamental weights (gamma_l, gamma_s)
//   T0   : (a, b) on (2alpha+beta, alpha+beta)   [Borel / M_alpha torus]
//   TBeta: (c, d) on (alpha+beta, alpha)         [M_beta torus]
enum class Basis { Fund, T0, TBeta };

enum class DominanceScope { G, MAlpha, MBeta };

// A weight tagged with the basis its two coordinates refer to.
struct WeightCoords {
  Basis basis = Basis::T0;
  Rational u;
  Rational v;

  WeightCoords() = default;
  WeightCoords(Basis b, Rational uu, Rational vv) : basis(b), u(uu), v(vv) {}
  static WeightCoords ints(Basis b, long long uu, long long vv) {
    return {b, Rational(uu), Rational(vv)};
  }

  bool operator==(const WeightCoords& o) const;
  bool is_integral() const { return u.is_integer() && v.is_integer(); }
};

RootVectorQ to_root_coords(const WeightCoords& w);
WeightCoords from_root_coords(const RootVectorQ& r, Basis target);

WeightCoords convert(const WeightCoords& w, Basis target);

/// G: both simple pairings >= 0. M_theta: only the Levi pairing.
/// Requires an integral weight.
bool is_dominant(const WeightCoords& w, DominanceScope scope);

/// Twisted action w.(lambda) = w(lambda + rho_G) - rho_G, returned in
/// lambda's basis.
WeightCoords dot_action(const WeylElement& w, const WeightCoords& lambda);

std::string to_string(const WeightCoords& w);

}  // namespace g2
