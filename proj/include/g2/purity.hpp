#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2/rational.hpp"
#include "g2/weights.hpp"

namespace g2 {

// GL2 highest-weight pair (a >= b).
struct GLPair {
  long long a = 0;
  long long b = 0;
  bool operator==(const GLPair& o) const { return a == o.a && b == o.b; }
};

// One archimedean place: weights at the two conjugate embeddings.
struct PlacePair {
  GLPair eta;
  GLPair etabar;
  bool operator==(const PlacePair& o) const {
    return eta == o.eta && etabar == o.etabar;
  }
};

class NotPureError : public std::domain_error {
 public:
  NotPureError(const std::string& what, size_t pair_index)
      : std::domain_error(what), pair_index(pair_index) {}
  size_t pair_index;
};

// A strongly pure weight: conjugate-pair GL2 weights sharing one purity
// weight pw, i.e. a + b* = b + a* = pw at every place.
struct PureWeight {
  std::vector<PlacePair> pairs;
  long long pw = 0;
  Basis basis = Basis::T0;  // coordinate system used when read as a G-weight

  bool operator==(const PureWeight& o) const {
    return pairs == o.pairs && pw == o.pw;
  }
};

// alpha_j + beta_j = -pw for j = 1, 2.
struct CuspidalParams {
  std::array<HalfInt, 2> alpha;
  std::array<HalfInt, 2> beta;
};

/// The unique pw with a + b* = b + a* = pw across all pairs.
/// Throws NotPureError naming the offending pair.
long long purity_weight(const std::vector<PlacePair>& pairs);

/// Validated constructor; basis defaults to the parametrization the
/// caller will read the weight in.
PureWeight make_pure_weight(const std::vector<PlacePair>& pairs,
                            Basis basis = Basis::T0);
PureWeight make_pure_weight_single(GLPair eta, GLPair etabar,
                                   Basis basis = Basis::T0);

/// All entries shifted by t; pw becomes pw + 2t.
PureWeight tate_twist(const PureWeight& mu, long long t);

/// Per pair ((-b,-a),(-b*,-a*)); purity weight -pw.
PureWeight dual_twist(const PureWeight& mu);

/// alpha = (-b+1/2, -a-1/2), beta = (-a*-1/2, -b*+1/2).
CuspidalParams cuspidal_parameters(const PlacePair& pair, long long pw);

std::string to_string(const PureWeight& mu);

}  // namespace g2
