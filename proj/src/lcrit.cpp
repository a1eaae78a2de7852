#include "g2/lcrit.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2 {

namespace {

long long iabs(long long v) { return v < 0 ? -v : v; }

// The absolute-value lists under the minima defining the cuspidal widths,
// for one embedding (a, b) at purity weight pw. Each entry is the gap
// |alpha_i - beta_i| between conjugate cuspidal parameters of the
// transferred weight, except Omega which keeps the classical |a+b-pw|
// (half the parameter gap).
std::vector<long long> cuspidal_abs_values(long long a, long long b,
                                           long long pw, LKind kind) {
  switch (kind) {
    case LKind::Ad3:
      return {iabs(4 * b - 2 * a - pw - 3), iabs(2 * b - pw - 1),
              iabs(2 * a - pw + 1), iabs(4 * a - 2 * b - pw + 3)};
    case LKind::Omega:
      return {iabs(a + b - pw)};
    case LKind::Std:
      return {iabs(2 * b - pw - 1), iabs(2 * a - pw + 1)};
    default:
      return {iabs(2 * a + 4 * b - 3 * pw - 1),
              iabs(4 * a + 2 * b - 3 * pw + 1)};
  }
}

// Kinds whose width enters Gamma arguments and interval bounds halved.
bool halved(LKind kind) { return kind != LKind::Omega; }

}  // namespace

int lkind_scale(LKind kind) {
  switch (kind) {
    case LKind::Ad3: return 1;
    case LKind::Omega: return 2;
    case LKind::Std: return 1;
    default: return 3;
  }
}

int lkind_purity_scale(LKind kind) {
  switch (kind) {
    case LKind::Ad3: return 1;
    case LKind::Omega: return 2;
    case LKind::Std: return 1;
    default: return 3;
  }
}

std::vector<LKind> parabolic_factors(Parabolic tag) {
  if (tag == Parabolic::PBeta) return {LKind::Ad3, LKind::Omega};
  if (tag == Parabolic::PAlpha)
    return {LKind::Std, LKind::Omega, LKind::StdTwist};
  throw std::domain_error("parabolic_factors: maximal parabolic required");
}

CritInterval CritInterval::make(HalfInt lo, HalfInt hi, Lattice lat) {
  CritInterval c;
  c.lattice = lat;
  if (lo > hi) return c;
  c.empty = false;
  c.lo = lo;
  c.hi = hi;
  return c;
}

bool CritInterval::contains(HalfInt s) const {
  if (empty || s < lo || s > hi) return false;
  bool s_integer = s.is_integer();
  return lattice == Lattice::Integers ? s_integer : !s_integer;
}

bool CritInterval::contains_real(HalfInt s) const {
  return !empty && lo <= s && s <= hi;
}

long long CritInterval::size() const {
  return empty ? 0 : (hi - lo).twice() / 2 + 1;
}

std::vector<HalfInt> CritInterval::points() const {
  std::vector<HalfInt> pts;
  if (empty) return pts;
  for (HalfInt s = lo; s <= hi; s = s + HalfInt(1)) pts.push_back(s);
  return pts;
}

bool CritInterval::operator==(const CritInterval& o) const {
  if (empty != o.empty) return false;
  if (empty) return true;
  return lo == o.lo && hi == o.hi && lattice == o.lattice;
}

std::string CritInterval::to_string() const {
  if (empty) return "EMPTY";
  return "[" + lo.to_string() + "," + hi.to_string() + "]" +
         (lattice == Lattice::Integers ? "@Z" : "@Z+1/2");
}

TransferredWeight transfer_weight(const GLPair& eta, long long pw, LKind kind) {
  TransferredWeight t;
  long long a = eta.a, b = eta.b;
  switch (kind) {
    case LKind::Ad3:
      t.entries = {2 * a - b, a, b, 2 * b - a};
      t.pw = pw;
      break;
    case LKind::Omega:
      t.entries = {a + b};
      t.pw = 2 * pw;
      break;
    case LKind::Std:
      t.entries = {a, b};
      t.pw = pw;
      break;
    default:
      t.entries = {2 * a + b, a + 2 * b};
      t.pw = 3 * pw;
      break;
  }
  return t;
}

std::vector<HalfInt> gamma_arguments_pair(const PlacePair& pair, long long pw,
                                          LKind kind) {
  long long ps = lkind_purity_scale(kind);
  std::vector<HalfInt> out;
  for (long long v : cuspidal_abs_values(pair.eta.a, pair.eta.b, pw, kind)) {
    if (halved(kind))
      out.push_back(HalfInt::from_twice(-ps * pw + v));
    else
      out.push_back(HalfInt::from_twice(-ps * pw + 2 * v));
  }
  return out;
}

std::vector<HalfInt> gamma_arguments(const PureWeight& mu, LKind kind) {
  std::vector<HalfInt> out;
  for (const PlacePair& p : mu.pairs) {
    auto one = gamma_arguments_pair(p, mu.pw, kind);
    out.insert(out.end(), one.begin(), one.end());
  }
  return out;
}

std::vector<HalfInt> gamma_arguments_dual(const PureWeight& mu, LKind kind) {
  // dual offset d = c + (purity scale) * pw per factor
  std::vector<HalfInt> out = gamma_arguments(mu, kind);
  long long shift = lkind_purity_scale(kind) * mu.pw;
  for (HalfInt& c : out) c = c + HalfInt(shift);
  return out;
}

Widths widths(const PureWeight& mu, LKind kind) {
  Widths w;
  w.abelian = HalfInt::from_twice(lkind_purity_scale(kind) * mu.pw);
  long long best = -1;
  for (const PlacePair& p : mu.pairs) {
    for (long long v :
         cuspidal_abs_values(p.eta.a, p.eta.b, mu.pw, kind))
      if (best < 0 || v < best) best = v;
    for (long long v :
         cuspidal_abs_values(p.etabar.a, p.etabar.b, mu.pw, kind))
      if (best < 0 || v < best) best = v;
  }
  w.cuspidal = best;
  return w;
}

Lattice lkind_lattice(LKind kind, long long pw) {
  (void)pw;
  return kind == LKind::Omega ? Lattice::Integers : Lattice::HalfOdd;
}

CritInterval crit_set(const PureWeight& mu, LKind kind) {
  Widths w = widths(mu, kind);
  HalfInt span = halved(kind) ? HalfInt::from_twice(w.cuspidal)
                              : HalfInt(w.cuspidal);
  HalfInt lo = HalfInt(1) + w.abelian - span;
  HalfInt hi = w.abelian + span;
  return CritInterval::make(lo, hi, lkind_lattice(kind, mu.pw));
}

CritInterval crit_set_product(const PureWeight& mu, Parabolic tag) {
  Rational lo(-1), hi(1);
  bool first = true;
  for (LKind kind : parabolic_factors(tag)) {
    CritInterval ci = crit_set(mu, kind);
    if (ci.empty) return CritInterval::make(HalfInt(1), HalfInt(0), Lattice::HalfOdd);
    Rational j(lkind_scale(kind));
    Rational l = ci.lo.to_rational() / j;
    Rational h = ci.hi.to_rational() / j;
    if (first || l > lo) lo = l;
    if (first || h < hi) hi = h;
    first = false;
  }
  return CritInterval::make(ceil_to_half_odd(lo), floor_to_half_odd(hi),
                            Lattice::HalfOdd);
}

bool crit_oracle(const PureWeight& mu, LKind kind, HalfInt s0) {
  Lattice lat = lkind_lattice(kind, mu.pw);
  if ((lat == Lattice::Integers) != s0.is_integer())
    throw std::domain_error("crit_oracle: s0 is not on the factor's lattice");
  for (HalfInt c : gamma_arguments(mu, kind)) {
    HalfInt arg = s0 + c;
    if (arg.is_integer() && arg.as_integer() <= 0) return false;
  }
  for (HalfInt d : gamma_arguments_dual(mu, kind)) {
    HalfInt arg = HalfInt(1) - s0 + d;
    if (arg.is_integer() && arg.as_integer() <= 0) return false;
  }
  return true;
}

PoeResult poe_check(const PureWeight& mu, Parabolic tag) {
  ParabolicData pd = parabolic_data(tag);
  HalfInt k = *pd.evaluation_point;
  PoeResult res;
  res.critical_at_k = true;
  res.critical_at_k_plus_1 = true;

  int idx = 0;
  for (LKind kind : parabolic_factors(tag)) {
    ++idx;
    int j = lkind_scale(kind);
    CritInterval ci = crit_set(mu, kind);
    HalfInt jk = k * j;
    bool at_k = ci.contains_real(jk);
    bool at_k1 = ci.contains_real(jk + HalfInt(1));
    res.critical_at_k = res.critical_at_k && at_k;
    res.critical_at_k_plus_1 = res.critical_at_k_plus_1 && at_k1;

    // Equivalent pw window: jk and jk+1 in [1+a-span, a+span] rewritten
    // as bounds on (purity scale) * pw; reported in whole units of that
    // multiple so everything stays integral.
    Widths w = widths(mu, kind);
    long long span2 = halved(kind) ? w.cuspidal : 2 * w.cuspidal;
    long long jk2 = jk.twice();
    // jk >= 1 + a - span and jk+1 <= a + span, i.e.
    // jk2 + 2 - span2 <= ps*pw <= jk2 - 2 + span2 in doubled units.
    long long ps = lkind_purity_scale(kind);
    PoeInequality ineq;
    ineq.label = "l" + std::to_string(idx) + "-window";
    ineq.lo = jk2 + 2 - span2;
    ineq.hi = jk2 - 2 + span2;
    ineq.value = ps * mu.pw;
    if (ineq.lo % ps == 0 && ineq.hi % ps == 0) {
      ineq.lo /= ps;
      ineq.hi /= ps;
      ineq.value = mu.pw;
    } else {
      ineq.label += "*" + std::to_string(ps);
    }
    ineq.holds = ineq.lo <= ineq.value && ineq.value <= ineq.hi;
    res.inequalities.push_back(ineq);

    PoeInequality thr;
    thr.label = "l" + std::to_string(idx) + ">=" +
                (halved(kind) ? "2" : "1");
    thr.lo = halved(kind) ? 2 : 1;
    thr.value = w.cuspidal;
    thr.hi = w.cuspidal >= thr.lo ? w.cuspidal : thr.lo;
    thr.holds = w.cuspidal >= thr.lo;
    res.inequalities.push_back(thr);
  }
  res.pair_critical = res.critical_at_k && res.critical_at_k_plus_1;
  return res;
}

DominanceCase dominance_case(const PureWeight& mu, Parabolic tag) {
  std::vector<long long> ell;
  for (LKind kind : parabolic_factors(tag))
    ell.push_back(widths(mu, kind).cuspidal);
  size_t best = 0;
  for (size_t i = 1; i < ell.size(); ++i)
    if (ell[i] < ell[best]) best = i;
  switch (best) {
    case 0: return DominanceCase::L1Min;
    case 1: return DominanceCase::L2Min;
    default: return DominanceCase::L3Min;
  }
}

TateWindow tate_traversal_bounds(const PureWeight& mu, Parabolic tag) {
  // poe_check(tate_twist(mu, t)) demands, per factor,
  //   jk2-1-span2 <= ps*(pw+2t) <= jk2-2+span2
  // with span independent of t; intersect the integer t-windows.
  ParabolicData pd = parabolic_data(tag);
  long long k2 = pd.evaluation_point->twice();
  bool any = false;
  Rational lo, hi;
  for (LKind kind : parabolic_factors(tag)) {
    Widths w = widths(mu, kind);
    long long span2 = halved(kind) ? w.cuspidal : 2 * w.cuspidal;
    long long ps = lkind_purity_scale(kind);
    long long j = lkind_scale(kind);
    long long jk2 = j * k2;
    // ps*pw + 2*ps*t in [jk2+2-span2, jk2-2+span2]
    Rational l = Rational(jk2 + 2 - span2 - ps * mu.pw, 2 * ps);
    Rational h = Rational(jk2 - 2 + span2 - ps * mu.pw, 2 * ps);
    if (!any || l > lo) lo = l;
    if (!any || h < hi) hi = h;
    any = true;
    if (w.cuspidal < (halved(kind) ? 2 : 1)) return TateWindow{};
  }
  TateWindow t;
  long long tlo = lo.ceil_ll();
  long long thi = hi.floor_ll();
  if (tlo > thi) return t;
  t.empty = false;
  t.lo = tlo;
  t.hi = thi;
  return t;
}

bool unitary_axis_check(const PureWeight& mu, Parabolic tag) {
  if (tag == Parabolic::PBeta) return mu.pw <= -5;
  if (tag == Parabolic::PAlpha) return mu.pw <= -3;
  throw std::domain_error("unitary_axis_check: maximal parabolic required");
}

std::string lkind_name(LKind kind) {
  switch (kind) {
    case LKind::Ad3: return "ad3";
    case LKind::Omega: return "omega";
    case LKind::Std: return "std";
    default: return "stdtwist";
  }
}

}  // namespace g2
