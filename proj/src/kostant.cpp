#include "g2/kostant.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2 {

namespace {

bool in_kostant_set(const WeylElement& w, Parabolic tag) {
  if (tag == Parabolic::B) return true;
  RootVector levi = simple_root(tag == Parabolic::PBeta ? SimpleRoot::Beta
                                                        : SimpleRoot::Alpha);
  RootVector img = inverse(w).apply(levi);
  return img.x > 0 || (img.x == 0 && img.y > 0);
}

long long tate_shift(Parabolic tag) {
  return tag == Parabolic::PBeta ? -5 : -3;
}

}  // namespace

Basis parabolic_basis(Parabolic tag) {
  return tag == Parabolic::PBeta ? Basis::TBeta : Basis::T0;
}

WeightCoords pair_weight(const GLPair& p, Parabolic tag) {
  return WeightCoords::ints(parabolic_basis(tag), p.a, p.b);
}

std::vector<WeylElement> kostant_reps(Parabolic tag) {
  std::vector<WeylElement> reps;
  for (const WeylElement& w : weyl_group())
    if (in_kostant_set(w, tag)) reps.push_back(w);
  std::stable_sort(reps.begin(), reps.end(),
                   [](const WeylElement& a, const WeylElement& b) {
                     return a.length < b.length;
                   });
  return reps;
}

const WeylElement& longest_kostant_rep(Parabolic tag) {
  if (tag == Parabolic::B) return longest_element();
  static const WeylElement w_beta = kostant_reps(Parabolic::PBeta).back();
  static const WeylElement w_alpha = kostant_reps(Parabolic::PAlpha).back();
  return tag == Parabolic::PBeta ? w_beta : w_alpha;
}

WeylElement prime_involution(const WeylElement& w, Parabolic tag) {
  if (tag == Parabolic::B)
    throw std::domain_error("prime_involution: maximal parabolic required");
  if (!in_kostant_set(w, tag))
    throw std::domain_error("prime_involution: " + w.name() +
                            " is not a Kostant representative");
  return compose(longest_kostant_rep(tag), w);
}

WeightIdentityResult wprime_weight_identity(
    const std::vector<std::array<WeightCoords, 2>>& lambda,
    const std::vector<KostantPair>& pairs, Parabolic tag) {
  if (lambda.size() != pairs.size())
    throw std::domain_error("wprime_weight_identity: size mismatch");
  Basis basis = parabolic_basis(tag);

  // mu = w.lambda, read as GL2 pairs; must be pure.
  std::vector<PlacePair> mu_pairs;
  for (size_t i = 0; i < pairs.size(); ++i) {
    WeightCoords me = convert(dot_action(pairs[i].eta, lambda[i][0]), basis);
    WeightCoords mb = convert(dot_action(pairs[i].etabar, lambda[i][1]), basis);
    if (!me.is_integral() || !mb.is_integral())
      throw std::domain_error("wprime_weight_identity: non-integral weight");
    mu_pairs.push_back(PlacePair{{me.u.num_ll(), me.v.num_ll()},
                                 {mb.u.num_ll(), mb.v.num_ll()}});
  }
  PureWeight mu = make_pure_weight(mu_pairs, basis);
  PureWeight twisted = tate_twist(dual_twist(mu), tate_shift(tag));

  WeightIdentityResult res;
  res.equal = true;
  for (size_t i = 0; i < pairs.size(); ++i) {
    WeylElement pe = prime_involution(pairs[i].eta, tag);
    WeylElement pb = prime_involution(pairs[i].etabar, tag);
    WeightCoords le = convert(dot_action(pe, lambda[i][0]), basis);
    WeightCoords lb = convert(dot_action(pb, lambda[i][1]), basis);
    WeightCoords re = pair_weight(twisted.pairs[i].eta, tag);
    WeightCoords rb = pair_weight(twisted.pairs[i].etabar, tag);
    res.lhs.push_back({le, lb});
    res.rhs.push_back({re, rb});
    res.equal = res.equal && le == re && lb == rb;
  }
  return res;
}

std::optional<BalancedResult> find_balanced(const PureWeight& mu,
                                            Parabolic tag) {
  static const int kShapeOrder[6][2] = {{5, 0}, {0, 5}, {4, 1},
                                        {1, 4}, {3, 2}, {2, 3}};
  std::vector<WeylElement> reps = kostant_reps(tag);  // ordered by length

  BalancedResult result;
  for (const PlacePair& place : mu.pairs) {
    WeightCoords we = pair_weight(place.eta, tag);
    WeightCoords wb = pair_weight(place.etabar, tag);
    bool found = false;
    for (const auto& shape : kShapeOrder) {
      const WeylElement& w_eta = reps[static_cast<size_t>(shape[0])];
      const WeylElement& w_etabar = reps[static_cast<size_t>(shape[1])];
      WeightCoords le = dot_action(inverse(w_eta), we);
      WeightCoords lb = dot_action(inverse(w_etabar), wb);
      if (is_dominant(le, DominanceScope::G) &&
          is_dominant(lb, DominanceScope::G)) {
        result.pairs.push_back(KostantPair{w_eta, w_etabar});
        result.lambda.push_back({le, lb});
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return result;
}

DegreeWindow degree_window(const KostantPair& pair, Parabolic tag, int r) {
  (void)tag;
  DegreeWindow d;
  d.bottom_degree = r;
  d.top_degree = 3LL * r - 1;
  d.total_length = static_cast<long long>(pair.total_length()) * r;
  d.q_min = d.total_length + d.bottom_degree;
  d.q_max = d.total_length + d.top_degree;
  return d;
}

int epsilon_sign(const std::vector<long long>& block_lengths,
                 const std::vector<size_t>& perm) {
  if (perm.size() != block_lengths.size())
    throw std::domain_error("epsilon_sign: permutation size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (size_t p : perm) {
    if (p >= perm.size() || seen[p])
      throw std::domain_error("epsilon_sign: not a permutation");
    seen[p] = true;
  }
  long long crossings = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j])
        crossings += block_lengths[perm[i]] * block_lengths[perm[j]];
  return crossings % 2 == 0 ? 1 : -1;
}

}  // namespace g2
