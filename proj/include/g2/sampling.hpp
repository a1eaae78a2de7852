#pragma once

#include <cstdint>
#include <vector>

#include "g2/lcrit.hpp"
#include "g2/purity.hpp"

namespace g2 {

// splitmix64: platform-independent deterministic stream for the seeded
// verification runs (standard-library distributions are not portable).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi]
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() %
                                       static_cast<uint64_t>(hi - lo + 1));
  }

 private:
  uint64_t state_;
};

/// Random pure weight with the given number of places, entries bounded
/// by `spread`, purity weight in [pw_lo, pw_hi].
PureWeight random_pure_weight(Rng& rng, int places, long long spread,
                              long long pw_lo, long long pw_hi,
                              Basis basis);

/// Random single-place weight right of the unitary axis whose evaluation
/// point passes poe_check; rejection-sampled, deterministic per seed.
PureWeight random_chain_weight(Rng& rng, Parabolic tag);

}  // namespace g2
