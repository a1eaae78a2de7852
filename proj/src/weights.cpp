#include "g2/weights.hpp"

#include <stdexcept>

namespace g2 {

bool WeightCoords::operator==(const WeightCoords& o) const {
  return to_root_coords(*this) == to_root_coords(o);
}

RootVectorQ to_root_coords(const WeightCoords& w) {
  switch (w.basis) {
    case Basis::Fund:  // m*gamma_l + n*gamma_s, gamma_l = (3,2), gamma_s = (2,1)
      return {Rational(3) * w.u + Rational(2) * w.v,
              Rational(2) * w.u + w.v};
    case Basis::T0:  // a*(2alpha+beta) + b*(alpha+beta)
      return {Rational(2) * w.u + w.v, w.u + w.v};
    default:  // c*(alpha+beta) + d*alpha
      return {w.u + w.v, w.u};
  }
}

WeightCoords from_root_coords(const RootVectorQ& r, Basis target) {
  switch (target) {
    case Basis::Fund:
      return {target, Rational(2) * r.y - r.x, Rational(2) * r.x - Rational(3) * r.y};
    case Basis::T0:
      return {target, r.x - r.y, Rational(2) * r.y - r.x};
    default:
      return {target, r.y, r.x - r.y};
  }
}

WeightCoords convert(const WeightCoords& w, Basis target) {
  return from_root_coords(to_root_coords(w), target);
}

bool is_dominant(const WeightCoords& w, DominanceScope scope) {
  if (!convert(w, Basis::T0).is_integral())
    throw std::domain_error("is_dominant: weight is not integral");
  RootVectorQ r = to_root_coords(w);
  Rational pa = pairing(r, simple_root(SimpleRoot::Alpha));
  Rational pb = pairing(r, simple_root(SimpleRoot::Beta));
  switch (scope) {
    case DominanceScope::G: return pa >= Rational(0) && pb >= Rational(0);
    case DominanceScope::MAlpha: return pa >= Rational(0);
    default: return pb >= Rational(0);
  }
}

WeightCoords dot_action(const WeylElement& w, const WeightCoords& lambda) {
  RootVectorQ r = to_root_coords(lambda);
  RootVectorQ rho(rho_g());
  RootVectorQ moved = w.apply(r + rho) - rho;
  return from_root_coords(moved, lambda.basis);
}

std::string to_string(const WeightCoords& w) {
  const char* tag = w.basis == Basis::Fund ? "fund"
                    : w.basis == Basis::T0 ? "t0"
                                           : "tbeta";
  return std::string(tag) + "(" + w.u.to_string() + "," + w.v.to_string() + ")";
}

}  // namespace g2
