#include "g2/purity.hpp"

namespace g2 {

long long purity_weight(const std::vector<PlacePair>& pairs) {
  if (pairs.empty())
    throw std::domain_error("purity_weight: no conjugate pairs given");
  long long pw = pairs[0].eta.a + pairs[0].etabar.b;
  for (size_t i = 0; i < pairs.size(); ++i) {
    const PlacePair& p = pairs[i];
    if (p.eta.a < p.eta.b || p.etabar.a < p.etabar.b)
      throw NotPureError("pair " + std::to_string(i) + " is not dominant", i);
    if (p.eta.a + p.etabar.b != pw || p.eta.b + p.etabar.a != pw)
      throw NotPureError("pair " + std::to_string(i) +
                             " violates the purity equations",
                         i);
  }
  return pw;
}

PureWeight make_pure_weight(const std::vector<PlacePair>& pairs, Basis basis) {
  PureWeight mu;
  mu.pairs = pairs;
  mu.pw = purity_weight(pairs);
  mu.basis = basis;
  return mu;
}

PureWeight make_pure_weight_single(GLPair eta, GLPair etabar, Basis basis) {
  return make_pure_weight({PlacePair{eta, etabar}}, basis);
}

PureWeight tate_twist(const PureWeight& mu, long long t) {
  PureWeight out = mu;
  for (PlacePair& p : out.pairs) {
    p.eta.a += t;
    p.eta.b += t;
    p.etabar.a += t;
    p.etabar.b += t;
  }
  out.pw = mu.pw + 2 * t;
  return out;
}

PureWeight dual_twist(const PureWeight& mu) {
  PureWeight out = mu;
  for (PlacePair& p : out.pairs) {
    p.eta = {-p.eta.b, -p.eta.a};
    p.etabar = {-p.etabar.b, -p.etabar.a};
  }
  out.pw = -mu.pw;
  return out;
}

CuspidalParams cuspidal_parameters(const PlacePair& pair, long long pw) {
  if (purity_weight({pair}) != pw)
    throw std::domain_error(
        "cuspidal_parameters: pair is not pure of weight " +
        std::to_string(pw));
  CuspidalParams c;
  c.alpha = {HalfInt::from_twice(-2 * pair.eta.b + 1),
             HalfInt::from_twice(-2 * pair.eta.a - 1)};
  c.beta = {HalfInt::from_twice(-2 * pair.etabar.a - 1),
            HalfInt::from_twice(-2 * pair.etabar.b + 1)};
  return c;
}

std::string to_string(const PureWeight& mu) {
  std::string s;
  for (size_t i = 0; i < mu.pairs.size(); ++i) {
    const PlacePair& p = mu.pairs[i];
    if (i) s += ";";
    s += "(" + std::to_string(p.eta.a) + "," + std::to_string(p.eta.b) + ")(" +
         std::to_string(p.etabar.a) + "," + std::to_string(p.etabar.b) + ")";
  }
  s += " pw=" + std::to_string(mu.pw);
  return s;
}

}  // namespace g2
