#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2/lcrit.hpp"
#include "g2/purity.hpp"
#include "g2/rational.hpp"
#include "g2/rootsys.hpp"

namespace g2 {

class DegenerateError : public std::domain_error {
 public:
  explicit DegenerateError(const std::string& what) : std::domain_error(what) {}
};

// Algebraic character z -> z^p zbar^q of the multiplicative group of C,
// with any |.|^shift Tate twist already folded into p and q.
struct CChar {
  HalfInt p;
  HalfInt q;

  CChar() = default;
  CChar(HalfInt pp, HalfInt qq) : p(pp), q(qq) {}

  bool algebraic() const { return (p - q).is_integer(); }
  CChar operator*(const CChar& o) const { return {p + o.p, q + o.q}; }
  CChar inverse() const { return {-p, -q}; }
  CChar shifted(HalfInt s) const { return {p + s, q + s}; }
  bool operator==(const CChar& o) const { return p == o.p && q == o.q; }
};

// Symbolic form psi1^e1 psi2^e2 |.|^shift of a chain character, tracked
// alongside the numeric exponents for the bookkeeping identities.
struct SymChar {
  long long e1 = 0;
  long long e2 = 0;
  HalfInt shift;

  SymChar operator*(const SymChar& o) const {
    return {e1 + o.e1, e2 + o.e2, shift + o.shift};
  }
  SymChar inverse() const { return {-e1, -e2, -shift}; }
  SymChar shifted(HalfInt s) const { return {e1, e2, shift + s}; }
  bool operator==(const SymChar& o) const {
    return e1 == o.e1 && e2 == o.e2 && shift == o.shift;
  }
  std::string to_string() const;
};

// Exact value rat * (2*pi)^two_pi_power; never evaluated numerically.
struct GammaRatio {
  Rational rat = Rational(1);
  long long two_pi_power = 0;

  GammaRatio operator*(const GammaRatio& o) const {
    return {rat * o.rat, two_pi_power + o.two_pi_power};
  }
  bool operator==(const GammaRatio& o) const {
    return rat == o.rat && two_pi_power == o.two_pi_power;
  }
  std::string to_string() const {
    return rat.to_string() + "*(2pi)^" + std::to_string(two_pi_power);
  }
};

enum class CharBasis { T0, TBeta };

template <typename Char>
using CharPair = std::array<Char, 2>;

struct ChainStep {
  SimpleRoot reflection;
  CharPair<CChar> before;       // T0 pair the rank-one operator acts on
  CharPair<SymChar> before_sym;
  CChar factor_char;            // character whose L-ratio is the factor
  SymChar factor_sym;
  GammaRatio ratio;
};

struct CocycleChain {
  std::vector<ChainStep> steps;  // five rank-one steps
  CharPair<CChar> final_pair;
  CharPair<SymChar> final_sym;
  GammaRatio product;
};

struct CocycleVerification {
  GammaRatio chain_product;
  GammaRatio combined;
  bool equal = false;
};

/// Exponent arithmetic of the two torus parametrizations:
/// T0 -> TBeta is (x, y) -> (x*y, x); TBeta -> T0 is (x, y) -> (y, x/y).
template <typename Char>
CharPair<Char> char_convert(const CharPair<Char>& pair, CharBasis from,
                            CharBasis to) {
  if (from == to) return pair;
  if (from == CharBasis::T0) return {pair[0] * pair[1], pair[0]};
  return {pair[1], pair[0] * pair[1].inverse()};
}

/// Simple-reflection action on a T0 character pair:
/// alpha swaps; beta maps (x, y) -> (x*y, y^-1).
template <typename Char>
CharPair<Char> weyl_char_action(SimpleRoot refl, const CharPair<Char>& pair) {
  if (refl == SimpleRoot::Alpha) return {pair[1], pair[0]};
  return {pair[0] * pair[1], pair[1].inverse()};
}

/// Offset c with L_oo(s, chi) = Gamma_C(s + c), c = max(p, q).
/// Gamma_C(s) = 2 (2pi)^(-s) Gamma(s). Requires an algebraic character.
HalfInt linf_char(const CChar& chi);

/// L_oo(0, chi)/L_oo(1, chi) = (2pi)/c for the step's character;
/// Degenerate when c is a nonpositive integer.
GammaRatio rank_one_ratio(SimpleRoot step, const CharPair<CChar>& pair);

/// Character of C* whose L-ratio the rank-one operator contributes:
/// x/y for an alpha step, y for a beta step (T0 coordinates).
CChar rank_one_character(SimpleRoot step, const CharPair<CChar>& pair);

/// Rank-one decomposition of the long intertwining operator at the point
/// of evaluation, for a single conjugate pair of mu.
CocycleChain cocycle_chain(const PureWeight& mu, Parabolic tag);

/// Product over factors of L_oo(j*m, .)/L_oo(j*m+1, .) in Gamma_C units.
GammaRatio combined_ratio(const PureWeight& mu, Parabolic tag, HalfInt m);
/// One conjugate pair only.
GammaRatio combined_ratio_pair(const PlacePair& pair, long long pw,
                               Parabolic tag, HalfInt m);

/// Chain product against the combined ratio at the evaluation point,
/// multiplied over all places of mu.
CocycleVerification verify_cocycle_identity(const PureWeight& mu,
                                            Parabolic tag);

}  // namespace g2
