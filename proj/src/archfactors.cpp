#include "g2/archfactors.hpp"

namespace g2 {

namespace {

// Reduced word of the longest Kostant representative, the reflection
// order of the rank-one decomposition.
std::vector<SimpleRoot> chain_word(Parabolic tag) {
  if (tag == Parabolic::PBeta)
    return {SimpleRoot::Alpha, SimpleRoot::Beta, SimpleRoot::Alpha,
            SimpleRoot::Beta, SimpleRoot::Alpha};
  if (tag == Parabolic::PAlpha)
    return {SimpleRoot::Beta, SimpleRoot::Alpha, SimpleRoot::Beta,
            SimpleRoot::Alpha, SimpleRoot::Beta};
  throw std::domain_error("cocycle_chain: maximal parabolic required");
}

// Starting principal-series character pair in T0 coordinates for one
// place, at the point of evaluation.
void chain_start(const PlacePair& place, long long pw, Parabolic tag,
                 CharPair<CChar>& num, CharPair<SymChar>& sym) {
  CuspidalParams cp = cuspidal_parameters(place, pw);
  CChar psi1{cp.alpha[0], cp.beta[0]};
  CChar psi2{cp.alpha[1], cp.beta[1]};
  HalfInt k = *parabolic_data(tag).evaluation_point;
  if (tag == Parabolic::PBeta) {
    // Ind_B(psi2(k) (x) psi1 psi2^-1) in T0 coordinates.
    num = {psi2.shifted(k), psi1 * psi2.inverse()};
    sym = {SymChar{0, 1, k}, SymChar{1, -1, HalfInt(0)}};
  } else {
    num = {psi1.shifted(k), psi2.shifted(k)};
    sym = {SymChar{1, 0, k}, SymChar{0, 1, k}};
  }
}

GammaRatio gamma_c_successive(HalfInt offset, const std::string& what) {
  // L(0)/L(1) = Gamma_C(c)/Gamma_C(1+c) = (2pi)/c
  if (offset.is_integer() && offset.as_integer() <= 0)
    throw DegenerateError("Gamma pole at offset " + offset.to_string() +
                          " for " + what);
  return {Rational(2, offset.twice()), 1};
}

}  // namespace

std::string SymChar::to_string() const {
  std::string s;
  auto power = [&](const char* base, long long e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += base;
    if (e != 1) s += "^" + std::to_string(e);
  };
  power("psi1", e1);
  power("psi2", e2);
  if (s.empty()) s = "1";
  if (shift != HalfInt(0)) s += "(" + shift.to_string() + ")";
  return s;
}

HalfInt linf_char(const CChar& chi) {
  if (!chi.algebraic())
    throw std::domain_error("linf_char: character is not algebraic");
  return chi.p >= chi.q ? chi.p : chi.q;
}

CChar rank_one_character(SimpleRoot step, const CharPair<CChar>& pair) {
  return step == SimpleRoot::Alpha ? pair[0] * pair[1].inverse() : pair[1];
}

GammaRatio rank_one_ratio(SimpleRoot step, const CharPair<CChar>& pair) {
  CChar chi = rank_one_character(step, pair);
  return gamma_c_successive(linf_char(chi), "rank-one step");
}

CocycleChain cocycle_chain(const PureWeight& mu, Parabolic tag) {
  if (mu.pairs.size() != 1)
    throw std::domain_error("cocycle_chain: single conjugate pair expected");
  CocycleChain chain;
  chain.product = GammaRatio{};
  CharPair<CChar> cur;
  CharPair<SymChar> cur_sym;
  chain_start(mu.pairs[0], mu.pw, tag, cur, cur_sym);
  for (SimpleRoot r : chain_word(tag)) {
    ChainStep step;
    step.reflection = r;
    step.before = cur;
    step.before_sym = cur_sym;
    step.factor_char = rank_one_character(r, cur);
    step.factor_sym = r == SimpleRoot::Alpha
                          ? cur_sym[0] * cur_sym[1].inverse()
                          : cur_sym[1];
    step.ratio = gamma_c_successive(linf_char(step.factor_char),
                                    step.factor_sym.to_string());
    chain.product = chain.product * step.ratio;
    cur = weyl_char_action(r, cur);
    cur_sym = weyl_char_action(r, cur_sym);
    chain.steps.push_back(std::move(step));
  }
  chain.final_pair = cur;
  chain.final_sym = cur_sym;
  return chain;
}

GammaRatio combined_ratio_pair(const PlacePair& pair, long long pw,
                               Parabolic tag, HalfInt m) {
  GammaRatio out;
  for (LKind kind : parabolic_factors(tag)) {
    HalfInt jm = m * lkind_scale(kind);
    for (HalfInt c : gamma_arguments_pair(pair, pw, kind))
      out = out * gamma_c_successive(jm + c, lkind_name(kind) + " factor");
  }
  return out;
}

GammaRatio combined_ratio(const PureWeight& mu, Parabolic tag, HalfInt m) {
  GammaRatio out;
  for (const PlacePair& p : mu.pairs)
    out = out * combined_ratio_pair(p, mu.pw, tag, m);
  return out;
}

CocycleVerification verify_cocycle_identity(const PureWeight& mu,
                                            Parabolic tag) {
  HalfInt k = *parabolic_data(tag).evaluation_point;
  CocycleVerification v;
  v.chain_product = GammaRatio{};
  for (const PlacePair& p : mu.pairs) {
    PureWeight single = make_pure_weight_single(p.eta, p.etabar, mu.basis);
    v.chain_product = v.chain_product * cocycle_chain(single, tag).product;
  }
  v.combined = combined_ratio(mu, tag, k);
  v.equal = v.chain_product == v.combined;
  return v;
}

}  // namespace g2
