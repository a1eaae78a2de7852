#include "g2/rootsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2 {

namespace {

const Mat2 kReflectAlpha{-1, 3, 0, 1};
const Mat2 kReflectBeta{1, 0, 1, -1};

Mat2 word_matrix(const std::vector<SimpleRoot>& word) {
  Mat2 m;
  for (SimpleRoot r : word)
    m = m * (r == SimpleRoot::Alpha ? kReflectAlpha : kReflectBeta);
  return m;
}

std::vector<SimpleRoot> parse_word(const char* letters) {
  std::vector<SimpleRoot> w;
  for (const char* p = letters; *p; ++p)
    w.push_back(*p == 'a' ? SimpleRoot::Alpha : SimpleRoot::Beta);
  return w;
}

std::vector<WeylElement> build_weyl_group() {
  static const char* kWords[12] = {"",     "a",    "b",     "ab",
                                   "ba",   "aba",  "bab",   "abab",
                                   "baba", "ababa", "babab", "ababab"};
  std::vector<WeylElement> group;
  group.reserve(12);
  for (const char* w : kWords) {
    WeylElement e;
    e.word = parse_word(w);
    e.matrix = word_matrix(e.word);
    e.length = static_cast<int>(e.word.size());
    group.push_back(std::move(e));
  }
  return group;
}

}  // namespace

RootVector simple_root(SimpleRoot r) {
  return r == SimpleRoot::Alpha ? RootVector{1, 0} : RootVector{0, 1};
}

const std::array<RootVector, 6>& positive_roots() {
  static const std::array<RootVector, 6> roots = {
      RootVector{1, 0}, RootVector{0, 1}, RootVector{1, 1},
      RootVector{3, 2}, RootVector{2, 1}, RootVector{3, 1}};
  return roots;
}

bool is_root(const RootVector& v) {
  for (const RootVector& r : positive_roots())
    if (v == r || v == -r) return true;
  return false;
}

Rational bilinear_form(const RootVectorQ& v, const RootVectorQ& w) {
  return Rational(2) * v.x * w.x + Rational(6) * v.y * w.y -
         Rational(3) * (v.x * w.y + w.x * v.y);
}

Rational pairing(const RootVectorQ& v, const RootVector& theta) {
  if (!is_root(theta))
    throw std::domain_error("pairing: " + to_string(theta) + " is not a root");
  return Rational(2) * bilinear_form(v, RootVectorQ(theta)) /
         bilinear_form(RootVectorQ(theta), RootVectorQ(theta));
}

RootVectorQ reflect(const RootVector& theta, const RootVectorQ& v) {
  Rational c = pairing(v, theta);
  return {v.x - c * Rational(theta.x), v.y - c * Rational(theta.y)};
}

RootVector reflect(const RootVector& theta, const RootVector& v) {
  RootVectorQ r = reflect(theta, RootVectorQ(v));
  return {r.x.num_ll(), r.y.num_ll()};
}

const std::vector<WeylElement>& weyl_group() {
  static const std::vector<WeylElement> group = build_weyl_group();
  return group;
}

std::vector<WeylElement> weyl_table_order() {
  static const int kOrder[12] = {0, 2, 4, 6, 8, 10, 1, 3, 5, 7, 9, 11};
  std::vector<WeylElement> rows;
  rows.reserve(12);
  for (int i : kOrder) rows.push_back(weyl_group()[i]);
  return rows;
}

const WeylElement& weyl_identity() { return weyl_group()[0]; }

const WeylElement& longest_element() { return weyl_group()[11]; }

const WeylElement& weyl_from_matrix(const Mat2& m) {
  for (const WeylElement& w : weyl_group())
    if (w.matrix == m) return w;
  throw std::domain_error("weyl_from_matrix: matrix is not a Weyl action");
}

WeylElement inverse(const WeylElement& w) {
  std::vector<SimpleRoot> rev(w.word.rbegin(), w.word.rend());
  return weyl_from_matrix(word_matrix(rev));
}

WeylElement compose(const WeylElement& w1, const WeylElement& w2) {
  return weyl_from_matrix(w1.matrix * w2.matrix);
}

std::string WeylElement::name() const {
  if (word.empty()) return "1";
  if (word.size() == 6) return "w_G";
  std::string s = "w_";
  for (SimpleRoot r : word) s += (r == SimpleRoot::Alpha ? "α" : "β");
  return s;
}

RootVector rho_g() { return {5, 3}; }

ParabolicData parabolic_data(Parabolic tag) {
  ParabolicData d;
  d.tag = tag;
  if (tag == Parabolic::B) {
    d.unipotent_roots.assign(positive_roots().begin(), positive_roots().end());
    d.rho_p = RootVectorQ(rho_g());
    return d;
  }

  const bool beta_case = tag == Parabolic::PBeta;
  RootVector levi = simple_root(beta_case ? SimpleRoot::Beta : SimpleRoot::Alpha);
  d.levi_simple_root = levi;
  if (beta_case)
    d.unipotent_roots = {{1, 0}, {1, 1}, {3, 2}, {2, 1}, {3, 1}};
  else
    d.unipotent_roots = {{0, 1}, {1, 1}, {3, 2}, {2, 1}, {3, 1}};

  // rho_P = rho_G - rho_{M_P}; the Levi has the single positive root levi.
  d.rho_p = RootVectorQ(Rational(10 - levi.x, 2), Rational(6 - levi.y, 2));
  d.fundamental_weight = beta_case ? RootVector{2, 1} : RootVector{3, 2};
  d.modulus_exponent = beta_case ? 5 : 3;
  d.num_grading_pieces = beta_case ? 2 : 3;

  // Point of evaluation k = -<rho_P, theta^vee> for the unipotent simple
  // root theta (alpha for P_beta, beta for P_alpha).
  RootVector unip_simple =
      simple_root(beta_case ? SimpleRoot::Alpha : SimpleRoot::Beta);
  Rational k = -pairing(d.rho_p, unip_simple);
  d.evaluation_point = HalfInt::from_twice((k * Rational(2)).num_ll());

  int m = *d.num_grading_pieces;
  d.adjoint_grading.assign(m, {});
  for (const RootVector& r : d.unipotent_roots) {
    Rational g = pairing(RootVectorQ(*d.fundamental_weight), r);
    long long grade = g.num_ll();  // integral for all unipotent roots
    d.adjoint_grading[static_cast<size_t>(grade - 1)].push_back(r);
  }

  if (beta_case)
    d.h_values = {HalfInt::half(1), HalfInt(0)};
  else
    d.h_values = {HalfInt::half(1), HalfInt(0), HalfInt::half(1)};
  return d;
}

R7Blocks r7_restriction(Parabolic tag) {
  if (tag == Parabolic::B)
    throw std::domain_error("r7_restriction: maximal parabolic required");

  // Weights in the ordered basis of the standard representation.
  static const RootVector kWeights[7] = {{-2, -1}, {-1, -1}, {-1, 0}, {0, 0},
                                         {1, 0},   {1, 1},   {2, 1}};
  auto exps = [&](const RootVector& w) -> std::pair<long long, long long> {
    if (tag == Parabolic::PBeta) return {w.y, w.x - w.y};   // alpha -> b, beta -> a/b
    return {w.x - w.y, 2 * w.y - w.x};                      // alpha -> a/b, beta -> b^2/a
  };

  R7Blocks out;
  auto push = [&](const std::string& name, std::initializer_list<int> idx) {
    std::vector<std::pair<long long, long long>> block;
    for (int i : idx) block.push_back(exps(kWeights[i]));
    out.blocks.emplace_back(name, std::move(block));
  };

  if (tag == Parabolic::PBeta) {
    push("det^-1", {0});
    push("std-dual", {1, 2});
    push("triv", {3});
    push("std", {4, 5});
    push("det", {6});
  } else {
    push("std-dual", {0, 1});
    push("ad2", {2, 3, 4});
    push("std", {5, 6});
  }
  return out;
}

std::string to_string(const RootVector& v) {
  if (v.x == 0 && v.y == 0) return "0";
  if (v.x <= 0 && v.y <= 0) {
    std::string inner = to_string(-v);
    bool single = (v.x == 0 && v.y == -1) || (v.x == -1 && v.y == 0);
    return single ? "-" + inner : "-(" + inner + ")";
  }
  std::string s;
  auto term = [&](long long c, const char* sym) {
    if (c == 0) return;
    if (!s.empty()) s += c > 0 ? "+" : "-";
    else if (c < 0) s += "-";
    long long a = c > 0 ? c : -c;
    if (a != 1) s += std::to_string(a);
    s += sym;
  };
  term(v.x, "α");
  term(v.y, "β");
  return s;
}

std::string parabolic_name(Parabolic tag) {
  switch (tag) {
    case Parabolic::B: return "B";
    case Parabolic::PAlpha: return "P_alpha";
    default: return "P_beta";
  }
}

}  // namespace g2
