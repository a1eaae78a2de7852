// g2crit: exact tables, critical-set computations and verification runs
// for the G2 constant-term L-function combinatorics.

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "g2/archfactors.hpp"
#include "g2/comblemma.hpp"
#include "g2/kostant.hpp"
#include "g2/lcrit.hpp"
#include "g2/purity.hpp"
#include "g2/rational.hpp"
#include "g2/reftables.hpp"
#include "g2/report.hpp"
#include "g2/rootsys.hpp"
#include "g2/sampling.hpp"
#include "g2/weights.hpp"

namespace {

using namespace g2;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "tsv";
  std::string parabolic;
  std::string weight;
  std::string kind;
  std::string pw_range;   // "lo..hi" or comma list
  std::string m;
  std::string which = "crit";
  long long window = 40;
  long long grid = 20;
  long long count = 100;
  unsigned long long seed = 20260808;
  bool points = false;
};

ReportFormat format_of(const Options& o) {
  if (o.format == "tsv") return ReportFormat::Tsv;
  if (o.format == "json") return ReportFormat::Json;
  throw CLI::ValidationError("--format must be tsv or json");
}

Parabolic parse_parabolic(const std::string& s, bool allow_borel = false) {
  if (s == "alpha") return Parabolic::PAlpha;
  if (s == "beta") return Parabolic::PBeta;
  if (allow_borel && s == "b") return Parabolic::B;
  throw std::domain_error("--parabolic must be " +
                          std::string(allow_borel ? "b, alpha or beta"
                                                  : "alpha or beta"));
}

LKind parse_kind(const std::string& s) {
  if (s == "ad3") return LKind::Ad3;
  if (s == "omega") return LKind::Omega;
  if (s == "std") return LKind::Std;
  if (s == "stdtwist") return LKind::StdTwist;
  throw std::domain_error("--kind must be ad3, omega, std or stdtwist");
}

long long parse_ll(const std::string& tok) {
  size_t used = 0;
  long long v = std::stoll(tok, &used);
  if (used != tok.size())
    throw std::domain_error("not an integer: " + tok);
  return v;
}

std::vector<long long> parse_int_list(const std::string& s, char sep) {
  std::vector<long long> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(sep, pos);
    std::string tok =
        s.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.empty()) throw std::domain_error("empty numeric field in " + s);
    out.push_back(parse_ll(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

// "a,b,a*,b*" per place, places separated by ';'.
PureWeight parse_weight(const std::string& s, Parabolic tag) {
  std::vector<PlacePair> pairs;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(';', pos);
    std::string place =
        s.substr(pos, next == std::string::npos ? next : next - pos);
    std::vector<long long> v = parse_int_list(place, ',');
    if (v.size() != 4)
      throw std::domain_error("weight place needs four integers: " + place);
    pairs.push_back({{v[0], v[1]}, {v[2], v[3]}});
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return make_pure_weight(pairs, parabolic_basis(tag));
}

HalfInt parse_half_int(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) return HalfInt(parse_ll(s));
  if (s.substr(slash + 1) != "2")
    throw std::domain_error("half-integers are written n/2: " + s);
  return HalfInt::from_twice(parse_ll(s.substr(0, slash)));
}

std::pair<long long, long long> parse_range(const std::string& s) {
  size_t dots = s.find("..");
  if (dots == std::string::npos)
    throw std::domain_error("range must be lo..hi: " + s);
  return {parse_ll(s.substr(0, dots)), parse_ll(s.substr(dots + 2))};
}

std::string b2s(bool v) { return v ? "true" : "false"; }

std::string format_pair(const CChar& c) {
  return "z^" + c.p.to_string() + "*zb^" + c.q.to_string();
}

// ---------------------------------------------------------------------
// table subcommands

Report table_weyl() {
  Report r;
  r.command = "table weyl";
  r.columns = {"l", "w", "w_inv_alpha", "w_inv_beta"};
  for (const WeylElement& w : weyl_table_order()) {
    WeylElement wi = inverse(w);
    r.rows.push_back({std::to_string(w.length), w.name(),
                      to_string(wi.apply(simple_root(SimpleRoot::Alpha))),
                      to_string(wi.apply(simple_root(SimpleRoot::Beta)))});
  }
  return r;
}

Report table_roots() {
  Report r;
  r.command = "table roots";
  r.columns = {"root", "x", "y", "norm"};
  for (const RootVector& v : positive_roots())
    r.rows.push_back({to_string(v), std::to_string(v.x), std::to_string(v.y),
                      bilinear_form(RootVectorQ(v), RootVectorQ(v)).to_string()});
  return r;
}

Report table_parabolic(Parabolic tag) {
  ParabolicData d = parabolic_data(tag);
  Report r;
  r.command = "table parabolic";
  r.parameters = {{"parabolic", parabolic_name(tag)}};
  r.columns = {"field", "value"};
  auto row = [&](const std::string& k, const std::string& v) {
    r.rows.push_back({k, v});
  };
  row("levi_simple_root",
      d.levi_simple_root ? to_string(*d.levi_simple_root) : "-");
  std::string unip;
  for (size_t i = 0; i < d.unipotent_roots.size(); ++i)
    unip += (i ? " " : "") + to_string(d.unipotent_roots[i]);
  row("unipotent_roots", unip);
  row("rho_p", "(" + d.rho_p.x.to_string() + "," + d.rho_p.y.to_string() + ")");
  row("fundamental_weight",
      d.fundamental_weight ? to_string(*d.fundamental_weight) : "-");
  row("evaluation_point",
      d.evaluation_point ? d.evaluation_point->to_string() : "-");
  row("modulus_exponent",
      d.modulus_exponent ? std::to_string(*d.modulus_exponent) : "-");
  row("m", d.num_grading_pieces ? std::to_string(*d.num_grading_pieces) : "-");
  for (size_t j = 0; j < d.adjoint_grading.size(); ++j) {
    std::string piece;
    for (size_t i = 0; i < d.adjoint_grading[j].size(); ++i)
      piece += (i ? " " : "") + to_string(d.adjoint_grading[j][i]);
    row("V" + std::to_string(j + 1), piece);
  }
  for (size_t j = 0; j < d.h_values.size(); ++j)
    row("h" + std::to_string(j + 1), d.h_values[j].to_string());
  return r;
}

Report table_twisted(Parabolic tag) {
  Report r;
  r.command = "table twisted";
  r.parameters = {{"parabolic", parabolic_name(tag)}};
  r.columns = {"l", "w", "eta_action", "etabar_action"};
  for (const TwistedActionRow& row : twisted_action_rows(tag)) {
    r.rows.push_back({std::to_string(row.length), row.name,
                      "(" + row.eta[0].to_string() + "," +
                          row.eta[1].to_string() + ")",
                      "(" + row.etabar[0].to_string() + "," +
                          row.etabar[1].to_string() + ")"});
  }
  return r;
}

Report table_r7(Parabolic tag) {
  R7Blocks blocks = r7_restriction(tag);
  Report r;
  r.command = "table r7";
  r.parameters = {{"parabolic", parabolic_name(tag)}};
  r.columns = {"block", "exponents"};
  for (const auto& bl : blocks.blocks) {
    std::string e;
    for (size_t i = 0; i < bl.second.size(); ++i)
      e += (i ? " " : "") + std::string("(") +
           std::to_string(bl.second[i].first) + "," +
           std::to_string(bl.second[i].second) + ")";
    r.rows.push_back({bl.first, e});
  }
  return r;
}

// ---------------------------------------------------------------------
// crit subcommands

Report crit_set_cmd(const Options& o) {
  Parabolic tag = o.parabolic.empty() ? Parabolic::PBeta
                                      : parse_parabolic(o.parabolic);
  PureWeight mu = parse_weight(o.weight, tag);
  LKind kind = parse_kind(o.kind);
  Report r;
  r.command = "crit set";
  r.parameters = {{"weight", to_string(mu)}, {"kind", lkind_name(kind)}};
  Widths w = widths(mu, kind);
  CritInterval ci = crit_set(mu, kind);
  r.columns = {"abelian_width", "cuspidal_width", "crit_set", "points"};
  r.rows.push_back({w.abelian.to_string(), std::to_string(w.cuspidal),
                    ci.to_string(), std::to_string(ci.size())});
  return r;
}

Report crit_product_cmd(const Options& o) {
  Parabolic tag = parse_parabolic(o.parabolic);
  PureWeight mu = parse_weight(o.weight, tag);
  Report r;
  r.command = "crit product";
  r.parameters = {{"weight", to_string(mu)},
                  {"parabolic", parabolic_name(tag)}};
  r.columns = {"factor", "crit_set"};
  for (LKind kind : parabolic_factors(tag))
    r.rows.push_back({lkind_name(kind), crit_set(mu, kind).to_string()});
  r.rows.push_back({"product", crit_set_product(mu, tag).to_string()});
  return r;
}

Report crit_poe_cmd(const Options& o) {
  Parabolic tag = parse_parabolic(o.parabolic);
  PureWeight mu = parse_weight(o.weight, tag);
  PoeResult poe = poe_check(mu, tag);
  Report r;
  r.command = "crit poe";
  r.parameters = {{"weight", to_string(mu)},
                  {"parabolic", parabolic_name(tag)},
                  {"critical_at_k", b2s(poe.critical_at_k)},
                  {"critical_at_k_plus_1", b2s(poe.critical_at_k_plus_1)}};
  r.status = poe.pair_critical ? ReportStatus::Pass : ReportStatus::Fail;
  r.columns = {"inequality", "lo", "value", "hi", "holds"};
  for (const PoeInequality& iq : poe.inequalities)
    r.rows.push_back({iq.label, std::to_string(iq.lo), std::to_string(iq.value),
                      std::to_string(iq.hi), b2s(iq.holds)});
  return r;
}

Report crit_twists_cmd(const Options& o) {
  Parabolic tag = parse_parabolic(o.parabolic);
  PureWeight mu = parse_weight(o.weight, tag);
  TateWindow tw = tate_traversal_bounds(mu, tag);
  Report r;
  r.command = "crit twists";
  r.parameters = {{"weight", to_string(mu)},
                  {"parabolic", parabolic_name(tag)}};
  r.columns = {"lo", "hi", "count"};
  if (tw.empty)
    r.rows.push_back({"EMPTY", "EMPTY", "0"});
  else
    r.rows.push_back({std::to_string(tw.lo), std::to_string(tw.hi),
                      std::to_string(tw.size())});
  return r;
}

// ---------------------------------------------------------------------
// verify subcommands

Report verify_comblemma_cmd(const Options& o) {
  Parabolic tag = parse_parabolic(o.parabolic);
  auto range = o.pw_range.empty() ? std::pair<long long, long long>{-30, 10}
                                  : parse_range(o.pw_range);
  long long window = o.window;
  LemmaReport rep = verify_lemma(tag, range.first, range.second, window);
  Report r;
  r.command = "verify comblemma";
  r.parameters = {{"parabolic", parabolic_name(tag)},
                  {"pw", std::to_string(range.first) + ".." +
                             std::to_string(range.second)},
                  {"window", std::to_string(window)}};
  r.status = rep.disagreements.empty() ? ReportStatus::Pass : ReportStatus::Fail;
  r.columns = {"metric", "value"};
  r.rows.push_back({"points_checked", std::to_string(rep.points_checked)});
  r.rows.push_back({"disagreements", std::to_string(rep.disagreements.size())});
  r.rows.push_back(
      {"derived_family_mismatches", std::to_string(rep.derived_family_mismatches)});
  r.rows.push_back(
      {"printed_family_mismatches", std::to_string(rep.printed_family_mismatches)});
  r.rows.push_back(
      {"printed_family_matches", std::to_string(rep.printed_family_matches)});
  r.counterexample_columns = {"pw", "a", "b", "statement1", "statement3"};
  for (const LemmaDisagreement& d : rep.disagreements)
    r.counterexamples.push_back({std::to_string(d.pw), std::to_string(d.a),
                                 std::to_string(d.b), b2s(d.statement1),
                                 b2s(d.statement3)});
  return r;
}

Report verify_coverage_cmd(const Options& o) {
  Parabolic tag = parse_parabolic(o.parabolic);
  std::vector<long long> pws = o.pw_range.empty()
                                   ? std::vector<long long>{-12, -7, -5, -3, 0, 3}
                                   : parse_int_list(o.pw_range, ',');
  Report r;
  r.command = "verify coverage";
  r.parameters = {{"parabolic", parabolic_name(tag)},
                  {"window", std::to_string(o.window)}};
  r.columns = {"pw", "crit_points", "twist_points", "crit_only", "twist_only"};
  bool ok = true;
  r.counterexample_columns = {"pw", "side", "a", "b"};
  for (long long pw : pws) {
    CoverageReport rep = coverage_report(pw, tag, o.window);
    ok = ok && rep.symmetric_difference_empty();
    r.rows.push_back({std::to_string(pw), std::to_string(rep.crit_count),
                      std::to_string(rep.twist_count),
                      std::to_string(rep.crit_only.size()),
                      std::to_string(rep.twist_only.size())});
    for (const LatticePoint& p : rep.crit_only)
      r.counterexamples.push_back({std::to_string(pw), "crit-only",
                                   std::to_string(p.a), std::to_string(p.b)});
    for (const LatticePoint& p : rep.twist_only)
      r.counterexamples.push_back({std::to_string(pw), "twist-only",
                                   std::to_string(p.a), std::to_string(p.b)});
  }
  // the uncovered sliver between adjacent regions, translated to the
  // origin, must carry no lattice points
  auto sliver = lattice_free_check(
      {RationalPoint{Rational(0), Rational(0)},
       RationalPoint{Rational(0), Rational(1)},
       RationalPoint{Rational(1, 2), Rational(-1, 2)}});
  r.rows.push_back({"sliver", "-", "-", sliver.lattice_free ? "free" : "hit",
                    std::to_string(sliver.vertex_lattice_points.size())});
  ok = ok && sliver.lattice_free;
  r.status = ok ? ReportStatus::Pass : ReportStatus::Fail;
  return r;
}

Report verify_tables_cmd(const Options& o) {
  Report r;
  r.command = "verify tables";
  r.parameters = {{"grid", std::to_string(o.grid)}};
  r.columns = {"check", "mismatches"};
  long long bad_inverse = 0;
  {
    auto rows = weyl_table_order();
    const auto& ref = inverse_action_rows();
    for (size_t i = 0; i < 12; ++i) {
      WeylElement wi = inverse(rows[i]);
      if (rows[i].name() != ref[i].name || rows[i].length != ref[i].length ||
          !(wi.apply(simple_root(SimpleRoot::Alpha)) == ref[i].inv_alpha) ||
          !(wi.apply(simple_root(SimpleRoot::Beta)) == ref[i].inv_beta))
        ++bad_inverse;
    }
  }
  r.rows.push_back({"inverse_action", std::to_string(bad_inverse)});

  long long bad_twisted = 0;
  static const long long kPws[5] = {-12, -6, -5, 0, 3};
  for (Parabolic tag : {Parabolic::PBeta, Parabolic::PAlpha}) {
    const auto& ref = twisted_action_rows(tag);
    std::vector<WeylElement> reps = kostant_reps(tag);
    Basis basis = parabolic_basis(tag);
    for (size_t i = 0; i < 6; ++i) {
      WeylElement wi = inverse(reps[i]);
      for (long long a = -o.grid; a <= o.grid; ++a)
        for (long long b = -o.grid; b <= o.grid; ++b) {
          WeightCoords d = dot_action(wi, WeightCoords::ints(basis, a, b));
          if (d.u != Rational(ref[i].eta[0].eval(a, b, 0)) ||
              d.v != Rational(ref[i].eta[1].eval(a, b, 0))) {
            ++bad_twisted;
            continue;
          }
          for (long long pw : kPws) {
            WeightCoords db = dot_action(
                wi, WeightCoords::ints(basis, pw - b, pw - a));
            if (db.u != Rational(ref[i].etabar[0].eval(a, b, pw)) ||
                db.v != Rational(ref[i].etabar[1].eval(a, b, pw)))
              ++bad_twisted;
          }
        }
    }
  }
  r.rows.push_back({"twisted_action", std::to_string(bad_twisted)});
  r.status = (bad_inverse + bad_twisted) == 0 ? ReportStatus::Pass
                                              : ReportStatus::Fail;
  return r;
}

Report verify_cocycle_cmd(const Options& o) {
  Parabolic tag = parse_parabolic(o.parabolic);
  Rng rng(o.seed);
  Report r;
  r.command = "verify cocycle";
  r.parameters = {{"parabolic", parabolic_name(tag)},
                  {"count", std::to_string(o.count)},
                  {"seed", std::to_string(o.seed)}};
  r.columns = {"checked", "failures"};
  r.counterexample_columns = {"weight", "chain", "combined"};
  long long failures = 0;
  for (long long i = 0; i < o.count; ++i) {
    PureWeight mu = random_chain_weight(rng, tag);
    CocycleVerification v = verify_cocycle_identity(mu, tag);
    if (!v.equal) {
      ++failures;
      r.counterexamples.push_back({to_string(mu), v.chain_product.to_string(),
                                   v.combined.to_string()});
    }
  }
  r.rows.push_back({std::to_string(o.count), std::to_string(failures)});
  r.status = failures == 0 ? ReportStatus::Pass : ReportStatus::Fail;
  return r;
}

Report verify_involution_cmd(const Options& o) {
  Parabolic tag = parse_parabolic(o.parabolic);
  Rng rng(o.seed);
  long long shift = tag == Parabolic::PBeta ? -5 : -3;
  Basis basis = parabolic_basis(tag);
  Report r;
  r.command = "verify involution";
  r.parameters = {{"parabolic", parabolic_name(tag)},
                  {"count", std::to_string(o.count)},
                  {"seed", std::to_string(o.seed)}};
  long long failures = 0;
  std::vector<WeylElement> reps = kostant_reps(tag);
  for (const WeylElement& w : reps) {
    WeylElement wp = prime_involution(w, tag);
    if (!(prime_involution(wp, tag) == w)) ++failures;
    if (w.length + wp.length != 5) ++failures;
    for (long long i = 0; i < o.count; ++i) {
      // random G-dominant integral weight in the parabolic's basis
      WeightCoords lam = [&] {
        if (basis == Basis::TBeta) {
          long long d = rng.range(0, 12);
          long long c = d + rng.range(0, d);
          return WeightCoords::ints(basis, c, d);
        }
        long long b = rng.range(0, 12);
        long long a = b + rng.range(0, 12);
        return WeightCoords::ints(basis, a, b);
      }();
      WeightCoords lhs = convert(dot_action(wp, lam), basis);
      WeightCoords mu = convert(dot_action(w, lam), basis);
      WeightCoords rhs(basis, -mu.v + Rational(shift),
                       -mu.u + Rational(shift));
      if (!(lhs == rhs)) ++failures;
    }
  }
  // balanced(w) == balanced(w') over all 36 pairs
  for (const WeylElement& w1 : reps)
    for (const WeylElement& w2 : reps) {
      KostantPair p{w1, w2};
      KostantPair pp{prime_involution(w1, tag), prime_involution(w2, tag)};
      if (p.balanced() != pp.balanced()) ++failures;
    }
  r.columns = {"checked", "failures"};
  r.rows.push_back(
      {std::to_string(reps.size() * (2 + o.count) + 36), std::to_string(failures)});
  r.status = failures == 0 ? ReportStatus::Pass : ReportStatus::Fail;
  return r;
}

// ---------------------------------------------------------------------
// regions / arch

Report regions_emit_cmd(const Options& o) {
  Parabolic tag = parse_parabolic(o.parabolic);
  std::vector<long long> pws = parse_int_list(o.pw_range, ',');
  if (pws.size() != 1) throw std::domain_error("--pw takes a single value");
  long long pw = pws[0];
  std::vector<RegionSystem> regs = o.which == "twisted"
                                       ? twisted_regions(pw, tag)
                                       : critical_regions(pw, tag);
  Report r;
  r.command = "regions emit";
  r.parameters = {{"parabolic", parabolic_name(tag)},
                  {"pw", std::to_string(pw)},
                  {"which", o.which}};
  if (!o.points) {
    r.columns = {"region", "constraints"};
    for (const RegionSystem& reg : regs) {
      std::string c;
      for (size_t i = 0; i < reg.constraints.size(); ++i)
        c += (i ? " & " : "") + reg.constraints[i].to_string();
      r.rows.push_back({reg.name, c});
    }
  } else {
    r.columns = {"region", "a", "b"};
    for (const RegionSystem& reg : regs)
      for (long long a = -o.window; a <= o.window; ++a)
        for (long long b = -o.window; b <= o.window; ++b)
          if (reg.contains(a, b, pw))
            r.rows.push_back({reg.name, std::to_string(a), std::to_string(b)});
  }
  return r;
}

Report arch_chain_cmd(const Options& o) {
  Parabolic tag = parse_parabolic(o.parabolic);
  PureWeight mu = parse_weight(o.weight, tag);
  if (mu.pairs.size() != 1)
    throw std::domain_error("arch chain expects a single place");
  CocycleChain chain = cocycle_chain(mu, tag);
  Report r;
  r.command = "arch chain";
  r.parameters = {{"weight", to_string(mu)},
                  {"parabolic", parabolic_name(tag)}};
  r.columns = {"step", "reflection", "factor", "exponents", "ratio"};
  for (size_t i = 0; i < chain.steps.size(); ++i) {
    const ChainStep& st = chain.steps[i];
    r.rows.push_back(
        {std::to_string(i + 1),
         st.reflection == SimpleRoot::Alpha ? "alpha" : "beta",
         st.factor_sym.to_string(), format_pair(st.factor_char),
         st.ratio.to_string()});
  }
  r.rows.push_back({"final", "-",
                    chain.final_sym[0].to_string() + " x " +
                        chain.final_sym[1].to_string(),
                    format_pair(chain.final_pair[0]) + " x " +
                        format_pair(chain.final_pair[1]),
                    chain.product.to_string()});
  return r;
}

Report arch_ratio_cmd(const Options& o) {
  Parabolic tag = parse_parabolic(o.parabolic);
  PureWeight mu = parse_weight(o.weight, tag);
  HalfInt m = o.m.empty() ? *parabolic_data(tag).evaluation_point
                          : parse_half_int(o.m);
  Report r;
  r.command = "arch ratio";
  r.parameters = {{"weight", to_string(mu)},
                  {"parabolic", parabolic_name(tag)},
                  {"m", m.to_string()}};
  r.columns = {"combined_ratio"};
  r.rows.push_back({combined_ratio(mu, tag, m).to_string()});
  return r;
}

Report arch_verify_cmd(const Options& o) {
  Parabolic tag = parse_parabolic(o.parabolic);
  PureWeight mu = parse_weight(o.weight, tag);
  CocycleVerification v = verify_cocycle_identity(mu, tag);
  Report r;
  r.command = "arch verify";
  r.parameters = {{"weight", to_string(mu)},
                  {"parabolic", parabolic_name(tag)}};
  r.status = v.equal ? ReportStatus::Pass : ReportStatus::Fail;
  r.columns = {"chain_product", "combined_ratio", "equal"};
  r.rows.push_back(
      {v.chain_product.to_string(), v.combined.to_string(), b2s(v.equal)});
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::string invocation;
  for (int i = 1; i < argc; ++i)
    invocation += std::string(i > 1 ? " " : "") + argv[i];

  CLI::App app{"exact G2 root/Weyl combinatorics and critical-set tools"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "output format: tsv or json")
      ->capture_default_str();

  std::function<Report()> action;

  auto* table = app.add_subcommand("table", "reproduce the reference tables");
  table->require_subcommand(1);
  table->add_subcommand("weyl", "inverse Weyl action on the simple roots")
      ->callback([&] { action = table_weyl; });
  table->add_subcommand("roots", "positive roots")->callback([&] {
    action = table_roots;
  });
  auto* tp = table->add_subcommand("parabolic", "parabolic data");
  tp->add_option("--parabolic", o.parabolic)->required();
  tp->callback([&] {
    action = [&] { return table_parabolic(parse_parabolic(o.parabolic, true)); };
  });
  auto* tt = table->add_subcommand("twisted", "twisted Kostant action");
  tt->add_option("--parabolic", o.parabolic)->required();
  tt->callback([&] {
    action = [&] { return table_twisted(parse_parabolic(o.parabolic)); };
  });
  auto* tr = table->add_subcommand("r7", "standard representation blocks");
  tr->add_option("--parabolic", o.parabolic)->required();
  tr->callback([&] {
    action = [&] { return table_r7(parse_parabolic(o.parabolic)); };
  });

  auto* crit = app.add_subcommand("crit", "critical sets");
  crit->require_subcommand(1);
  auto* cs = crit->add_subcommand("set", "critical set of one factor");
  cs->add_option("--weight", o.weight)->required();
  cs->add_option("--kind", o.kind)->required();
  cs->add_option("--parabolic", o.parabolic);
  cs->callback([&] { action = [&] { return crit_set_cmd(o); }; });
  auto* cp = crit->add_subcommand("product", "critical set of the product");
  cp->add_option("--weight", o.weight)->required();
  cp->add_option("--parabolic", o.parabolic)->required();
  cp->callback([&] { action = [&] { return crit_product_cmd(o); }; });
  auto* cpo = crit->add_subcommand("poe", "evaluation-point criticality");
  cpo->add_option("--weight", o.weight)->required();
  cpo->add_option("--parabolic", o.parabolic)->required();
  cpo->callback([&] { action = [&] { return crit_poe_cmd(o); }; });
  auto* ct = crit->add_subcommand("twists", "admissible Tate twists");
  ct->add_option("--weight", o.weight)->required();
  ct->add_option("--parabolic", o.parabolic)->required();
  ct->callback([&] { action = [&] { return crit_twists_cmd(o); }; });

  auto* verify = app.add_subcommand("verify", "verification runs");
  verify->require_subcommand(1);
  auto* vc = verify->add_subcommand("comblemma", "combinatorial lemma scan");
  vc->add_option("--parabolic", o.parabolic)->required();
  vc->add_option("--pw", o.pw_range, "purity weight range lo..hi");
  vc->add_option("--window", o.window);
  vc->callback([&] { action = [&] { return verify_comblemma_cmd(o); }; });
  auto* vcov = verify->add_subcommand("coverage", "region coverage scan");
  vcov->add_option("--parabolic", o.parabolic)->required();
  vcov->add_option("--pw", o.pw_range, "comma-separated purity weights");
  vcov->add_option("--window", o.window);
  vcov->callback([&] { action = [&] { return verify_coverage_cmd(o); }; });
  auto* vt = verify->add_subcommand("tables", "table reproduction");
  vt->add_option("--grid", o.grid);
  vt->callback([&] { action = [&] { return verify_tables_cmd(o); }; });
  auto* vco = verify->add_subcommand("cocycle", "rank-one cocycle identity");
  vco->add_option("--parabolic", o.parabolic)->required();
  vco->add_option("--count", o.count);
  vco->add_option("--seed", o.seed);
  vco->callback([&] { action = [&] { return verify_cocycle_cmd(o); }; });
  auto* vi = verify->add_subcommand("involution", "prime involution suite");
  vi->add_option("--parabolic", o.parabolic)->required();
  vi->add_option("--count", o.count);
  vi->add_option("--seed", o.seed);
  vi->callback([&] { action = [&] { return verify_involution_cmd(o); }; });

  auto* regions = app.add_subcommand("regions", "region systems");
  auto* re = regions->add_subcommand("emit", "emit region systems or points");
  re->add_option("--parabolic", o.parabolic)->required();
  re->add_option("--pw", o.pw_range)->required();
  re->add_option("--which", o.which, "crit or twisted");
  re->add_option("--window", o.window);
  re->add_flag("--points", o.points, "emit lattice points");
  re->callback([&] { action = [&] { return regions_emit_cmd(o); }; });
  regions->require_subcommand(1);

  auto* arch = app.add_subcommand("arch", "archimedean factor arithmetic");
  arch->require_subcommand(1);
  auto* ac = arch->add_subcommand("chain", "rank-one cocycle chain");
  ac->add_option("--weight", o.weight)->required();
  ac->add_option("--parabolic", o.parabolic)->required();
  ac->callback([&] { action = [&] { return arch_chain_cmd(o); }; });
  auto* ar = arch->add_subcommand("ratio", "combined archimedean ratio");
  ar->add_option("--weight", o.weight)->required();
  ar->add_option("--parabolic", o.parabolic)->required();
  ar->add_option("--m", o.m, "half-integer evaluation point");
  ar->callback([&] { action = [&] { return arch_ratio_cmd(o); }; });
  auto* av = arch->add_subcommand("verify", "cocycle identity check");
  av->add_option("--weight", o.weight)->required();
  av->add_option("--parabolic", o.parabolic)->required();
  av->callback([&] { action = [&] { return arch_verify_cmd(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    Report report = action();
    report.parameters.insert(report.parameters.begin(),
                             {"argv", invocation});
    std::string out = emit(report, format_of(o));
    fwrite(out.data(), 1, out.size(), stdout);
    return report.status == ReportStatus::Pass ? kExitPass : kExitFail;
  } catch (const g2::DegenerateError& e) {
    Report report;
    report.command = invocation;
    report.parameters = {{"argv", invocation}};
    report.status = ReportStatus::Degenerate;
    report.columns = {"error"};
    report.rows = {{e.what()}};
    std::string out = emit(report, format_of(o));
    fwrite(out.data(), 1, out.size(), stdout);
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
