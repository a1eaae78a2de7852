#include "g2/sampling.hpp"

namespace g2 {

PureWeight random_pure_weight(Rng& rng, int places, long long spread,
                              long long pw_lo, long long pw_hi, Basis basis) {
  long long pw = rng.range(pw_lo, pw_hi);
  std::vector<PlacePair> pairs;
  for (int i = 0; i < places; ++i) {
    long long b = rng.range(-spread, spread);
    long long a = b + rng.range(0, spread);
    pairs.push_back({{a, b}, {pw - b, pw - a}});
  }
  return make_pure_weight(pairs, basis);
}

PureWeight random_chain_weight(Rng& rng, Parabolic tag) {
  Basis basis = tag == Parabolic::PBeta ? Basis::TBeta : Basis::T0;
  for (;;) {
    long long b = rng.range(-20, 20);
    long long a = b + rng.range(0, 25);
    long long pw = rng.range(-40, tag == Parabolic::PBeta ? -5 : -3);
    PureWeight mu =
        make_pure_weight_single({a, b}, {pw - b, pw - a}, basis);
    if (unitary_axis_check(mu, tag) && poe_check(mu, tag).pair_critical)
      return mu;
  }
}

}  // namespace g2
