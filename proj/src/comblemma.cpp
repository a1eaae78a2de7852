#include "g2/comblemma.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2 {

namespace {

long long iabs(long long v) { return v < 0 ? -v : v; }
long long imax3(long long a, long long b, long long c) {
  return std::max(a, std::max(b, c));
}

// mu = ((a,b),(pw-b,pw-a)); requires a >= b.
PureWeight lattice_mu(long long a, long long b, long long pw, Parabolic tag) {
  return make_pure_weight_single({a, b}, {pw - b, pw - a},
                                 parabolic_basis(tag));
}

void append_dominance(RegionSystem& r) {
  for (const AffineForm& f : r.constraints)
    if (f.ca == 1 && f.cb == -1 && f.cw == 0 && f.c0 == 0) return;
  r.constraints.push_back({1, -1, 0, 0});
}

// The ten transcribed critical-region boxes for P_beta, one branch per
// regime (pw <= -5 / pw >= -5); both branches agree at pw = -5.
std::vector<RegionSystem> beta_critical_regions(long long pw) {
  const bool left = pw <= -5;
  std::vector<RegionSystem> out;
  auto add = [&](const char* name, AffineForm f1, AffineForm f2) {
    RegionSystem r;
    r.name = name;
    r.constraints = {f1, f2};
    append_dominance(r);
    out.push_back(std::move(r));
  };
  if (left) {
    add("(1)", {1, -1, 0, 0}, {-1, 2, 0, 0});
    add("(2)", {1, -2, 1, 3}, {-1, 3, -1, -2});
    add("(3)", {0, 1, 0, 1}, {1, -3, 1, 2});
    add("(4)", {1, 3, -2, -1}, {0, -1, 1, 2});
    add("(5)", {1, 1, 0, 4}, {-1, -3, 2, 1});
    add("(6)", {3, 1, -2, 1}, {-1, -1, 2, 4});
    add("(7)", {1, 0, 0, 2}, {-3, -1, 2, -1});
    add("(8)", {3, -1, -1, 2}, {-1, 0, 1, 1});
    add("(9)", {-3, 1, 1, -2}, {2, -1, 0, 3});
    add("(10)", {-2, 1, 1, 0}, {1, -1, 0, 0});
  } else {
    add("(1)", {1, -1, 0, 0}, {-1, 2, -1, -5});
    add("(2)", {1, -2, 0, -2}, {-1, 3, -1, -2});
    add("(3)", {0, 1, -1, -4}, {1, -3, 1, 2});
    add("(4)", {1, 3, -2, -1}, {0, -1, 0, -3});
    add("(5)", {1, 1, -2, -6}, {-1, -3, 2, 1});
    add("(6)", {3, 1, -2, 1}, {-1, -1, 0, -6});
    add("(7)", {1, 0, -1, -3}, {-3, -1, 2, -1});
    add("(8)", {3, -1, -1, 2}, {-1, 0, 0, -4});
    add("(9)", {-3, 1, 1, -2}, {2, -1, -1, -2});
    add("(10)", {-2, 1, 0, -5}, {1, -1, 0, 0});
  }
  return out;
}

// Width threshold of the pair-criticality window, per factor, at pw.
// Ad3/Std enter halved into the window, Omega with its classical width.
struct AlphaThresholds {
  long long t1, t2, t3;
};
AlphaThresholds alpha_thresholds(long long pw) {
  return {imax3(pw + 5, -1 - pw, 2), imax3(pw + 4, -2 - pw, 1),
          imax3(3 * pw + 11, -3 * pw - 7, 2)};
}

// P_alpha critical regions: sign cells of the five width forms
//   F1 = 2b-pw-1, F2 = 2a-pw+1        (threshold t1)
//   F3 = a+b-pw                        (threshold t2)
//   F4 = 2a+4b-3pw-1, F5 = 4a+2b-3pw+1 (threshold t3)
// On the dominant half plane F1 <= F3 <= F2 and F4 <= F5, so the usable
// sign patterns are the monotone ones along each chain.
std::vector<RegionSystem> alpha_critical_regions(long long pw) {
  AlphaThresholds t = alpha_thresholds(pw);
  const AffineForm f1{0, 2, -1, -1}, f2{2, 0, -1, 1}, f3{1, 1, -1, 0},
      f4{2, 4, -3, -1}, f5{4, 2, -3, 1};
  auto signed_form = [&](const AffineForm& f, int sign, long long thr) {
    // sign*f - thr >= 0
    AffineForm g;
    g.ca = sign * f.ca;
    g.cb = sign * f.cb;
    g.cw = sign * f.cw;
    g.c0 = sign * f.c0 - thr;
    return g;
  };

  // monotone sign patterns along F1 <= F3 <= F2
  static const int kChain3[4][3] = {
      {-1, -1, -1}, {-1, -1, +1}, {-1, +1, +1}, {+1, +1, +1}};
  static const int kChain2[3][2] = {{-1, -1}, {-1, +1}, {+1, +1}};

  std::vector<RegionSystem> out;
  int idx = 0;
  for (const auto& c3 : kChain3) {
    for (const auto& c2 : kChain2) {
      RegionSystem r;
      r.name = "(a" + std::to_string(++idx) + ")";
      r.constraints.push_back(signed_form(f1, c3[0], t.t1));
      r.constraints.push_back(signed_form(f3, c3[1], t.t2));
      r.constraints.push_back(signed_form(f2, c3[2], t.t1));
      r.constraints.push_back(signed_form(f4, c2[0], t.t3));
      r.constraints.push_back(signed_form(f5, c2[1], t.t3));
      append_dominance(r);
      out.push_back(std::move(r));
    }
  }
  return out;
}

// Affine map (a, b) -> dot(inverse(w), weight(a, b)) in the parabolic's
// basis, as integer coefficients (u = ca*a + cb*b + c0 per component).
struct AffineMap2 {
  long long ca[2], cb[2], c0[2];
};

AffineMap2 inverse_dot_map(const WeylElement& w, Parabolic tag) {
  Basis basis = parabolic_basis(tag);
  WeylElement wi = inverse(w);
  auto at = [&](long long a, long long b) {
    WeightCoords r = dot_action(wi, WeightCoords::ints(basis, a, b));
    return std::array<long long, 2>{r.u.num_ll(), r.v.num_ll()};
  };
  auto base = at(0, 0), ea = at(1, 0), eb = at(0, 1);
  AffineMap2 m;
  for (int i = 0; i < 2; ++i) {
    m.c0[i] = base[i];
    m.ca[i] = ea[i] - base[i];
    m.cb[i] = eb[i] - base[i];
  }
  return m;
}

// G-dominance of a basis pair (u, v) as two affine forms.
void dominance_forms(Basis basis, const AffineMap2& m,
                     std::vector<AffineForm>& out, bool conjugate) {
  // conjugate: the map is applied at (pw-b, pw-a) instead of (a, b)
  auto push = [&](long long cu, long long cv) {
    // cu*u + cv*v >= 0 with (u, v) the image components
    AffineForm f;
    long long ca = cu * m.ca[0] + cv * m.ca[1];
    long long cb = cu * m.cb[0] + cv * m.cb[1];
    long long c0 = cu * m.c0[0] + cv * m.c0[1];
    if (!conjugate) {
      f = {ca, cb, 0, c0};
    } else {
      // substitute a -> pw-b, b -> pw-a
      f = {-cb, -ca, ca + cb, c0};
    }
    out.push_back(f);
  };
  if (basis == Basis::TBeta) {
    push(-1, 2);  // 2d - c >= 0
    push(1, -1);  // c - d >= 0
  } else {
    push(1, -1);  // a' - b' >= 0
    push(0, 1);   // b' >= 0
  }
}

}  // namespace

std::string AffineForm::to_string() const {
  std::string s;
  auto term = [&](long long c, const char* sym) {
    if (c == 0) return;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c > 0 ? "+" : "-";
    }
    long long m = iabs(c);
    if (m != 1 || !*sym) s += std::to_string(m);
    s += sym;
  };
  term(ca, "a");
  term(cb, "b");
  term(cw, "w");
  term(c0, "");
  if (s.empty()) s = "0";
  return s + ">=0";
}

std::vector<RegionSystem> critical_regions(long long pw, Parabolic tag) {
  if (tag == Parabolic::PBeta) return beta_critical_regions(pw);
  if (tag == Parabolic::PAlpha) return alpha_critical_regions(pw);
  throw std::domain_error("critical_regions: maximal parabolic required");
}

std::vector<RegionSystem> twisted_regions(long long pw, Parabolic tag) {
  (void)pw;
  if (tag == Parabolic::B)
    throw std::domain_error("twisted_regions: maximal parabolic required");
  static const int kShapes[6][2] = {{0, 5}, {1, 4}, {2, 3},
                                    {3, 2}, {4, 1}, {5, 0}};
  static const char* kNames[6] = {"(I)", "(II)", "(III)",
                                  "(IV)", "(V)", "(VI)"};
  std::vector<WeylElement> reps = kostant_reps(tag);
  std::vector<RegionSystem> out;
  for (int i = 0; i < 6; ++i) {
    RegionSystem r;
    r.name = kNames[i];
    AffineMap2 me = inverse_dot_map(reps[static_cast<size_t>(kShapes[i][0])], tag);
    AffineMap2 mb = inverse_dot_map(reps[static_cast<size_t>(kShapes[i][1])], tag);
    dominance_forms(parabolic_basis(tag), me, r.constraints, false);
    dominance_forms(parabolic_basis(tag), mb, r.constraints, true);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RegionSystem> twisted_regions_transcribed_beta(long long pw) {
  const bool left = pw <= -5;
  std::vector<RegionSystem> out;
  auto add = [&](const char* name, AffineForm f1, AffineForm f2) {
    RegionSystem r;
    r.name = name;
    r.constraints = {f1, f2};
    out.push_back(std::move(r));
  };
  if (left) {
    add("(I)", {1, -1, 0, 0}, {-1, 2, 0, 0});
    add("(II)", {0, 1, 0, 1}, {1, -2, 1, 3});
    add("(III)", {1, 1, 0, 4}, {0, -1, 1, 2});
    add("(IV)", {1, 0, 0, 2}, {-1, -1, 2, 4});
    add("(V)", {-1, 0, 1, 1}, {2, -1, 0, 3});
    add("(VI)", {-2, 1, 1, 0}, {1, -1, 0, 0});
  } else {
    add("(I)", {1, -1, 0, 0}, {-1, 2, -1, -5});
    add("(II)", {0, 1, -1, -4}, {1, -2, 0, -2});
    add("(III)", {1, 1, -2, -6}, {0, -1, 0, -3});
    add("(IV)", {1, 0, -1, -3}, {-1, -1, 0, -6});
    add("(V)", {-1, 0, 0, -4}, {2, -1, -1, -2});
    add("(VI)", {-2, 1, 0, -5}, {1, -1, 0, 0});
  }
  return out;
}

bool statement_one(long long a, long long b, long long pw, Parabolic tag) {
  if (a < b) return false;
  return poe_check(lattice_mu(a, b, pw, tag), tag).pair_critical;
}

bool statement_three(long long a, long long b, long long pw, Parabolic tag) {
  if (a < b) return false;
  return find_balanced(lattice_mu(a, b, pw, tag), tag).has_value();
}

CoverageReport coverage_report(long long pw, Parabolic tag, long long window) {
  if (window < 1) throw std::domain_error("coverage_report: window >= 1");
  std::vector<RegionSystem> crit = critical_regions(pw, tag);
  std::vector<RegionSystem> twist = twisted_regions(pw, tag);
  CoverageReport rep;
  for (long long a = -window; a <= window; ++a) {
    for (long long b = -window; b <= window; ++b) {
      bool in_crit = false, in_twist = false;
      for (const RegionSystem& r : crit)
        if (r.contains(a, b, pw)) {
          in_crit = true;
          break;
        }
      for (const RegionSystem& r : twist)
        if (r.contains(a, b, pw)) {
          in_twist = true;
          break;
        }
      if (in_crit) ++rep.crit_count;
      if (in_twist) ++rep.twist_count;
      if (in_crit && !in_twist) rep.crit_only.push_back({a, b});
      if (in_twist && !in_crit) rep.twist_only.push_back({a, b});
    }
  }
  return rep;
}

LatticeFreeResult lattice_free_check(const std::array<RationalPoint, 3>& v) {
  auto cross = [](const RationalPoint& o, const RationalPoint& p,
                  const RationalPoint& q) {
    return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
  };
  Rational orient = cross(v[0], v[1], v[2]);
  if (orient.is_zero())
    throw std::domain_error("lattice_free_check: degenerate triangle");
  bool pos = orient > Rational(0);

  Rational xs_lo = v[0].x, xs_hi = v[0].x, ys_lo = v[0].y, ys_hi = v[0].y;
  for (int i = 1; i < 3; ++i) {
    xs_lo = std::min(xs_lo, v[i].x);
    xs_hi = std::max(xs_hi, v[i].x);
    ys_lo = std::min(ys_lo, v[i].y);
    ys_hi = std::max(ys_hi, v[i].y);
  }

  LatticeFreeResult res;
  res.lattice_free = true;
  for (long long x = xs_lo.ceil_ll(); x <= xs_hi.floor_ll(); ++x) {
    for (long long y = ys_lo.ceil_ll(); y <= ys_hi.floor_ll(); ++y) {
      RationalPoint p{Rational(x), Rational(y)};
      Rational s0 = cross(v[0], v[1], p);
      Rational s1 = cross(v[1], v[2], p);
      Rational s2 = cross(v[2], v[0], p);
      bool inside =
          pos ? (s0 >= Rational(0) && s1 >= Rational(0) && s2 >= Rational(0))
              : (s0 <= Rational(0) && s1 <= Rational(0) && s2 <= Rational(0));
      if (!inside) continue;
      bool is_vertex = false;
      for (int i = 0; i < 3; ++i)
        if (v[i].x == p.x && v[i].y == p.y) is_vertex = true;
      if (is_vertex) {
        res.vertex_lattice_points.push_back({x, y});
      } else {
        res.lattice_free = false;
        if (!res.witness) res.witness = LatticePoint{x, y};
      }
    }
  }
  return res;
}

bool derived_family(long long a, long long b, long long pw, Parabolic tag) {
  if (a < b) return false;
  PureWeight mu = lattice_mu(a, b, pw, tag);
  if (tag == Parabolic::PBeta) {
    long long l1 = widths(mu, LKind::Ad3).cuspidal;
    long long l2 = widths(mu, LKind::Omega).cuspidal;
    return l1 >= 2 && l2 >= 1 && -3 - l1 <= pw && pw <= -7 + l1 &&
           -4 - l2 <= pw && pw <= -6 + l2;
  }
  long long l1 = widths(mu, LKind::Std).cuspidal;
  long long l2 = widths(mu, LKind::Omega).cuspidal;
  long long l3 = widths(mu, LKind::StdTwist).cuspidal;
  return l1 >= 2 && l2 >= 1 && l3 >= 2 && -1 - l1 <= pw && pw <= -5 + l1 &&
         -2 - l2 <= pw && pw <= -4 + l2 && -7 - l3 <= 3 * pw &&
         3 * pw <= -11 + l3;
}

bool printed_family(long long a, long long b, long long pw, Parabolic tag) {
  if (a < b) return false;
  PureWeight mu = lattice_mu(a, b, pw, tag);
  if (tag == Parabolic::PBeta) {
    long long l1 = widths(mu, LKind::Ad3).cuspidal;
    long long l2 = widths(mu, LKind::Omega).cuspidal;
    return l1 >= 2 && l2 >= 1 && 7 - l1 <= pw && pw <= 3 + l1 &&
           6 - l2 <= pw && pw <= 4 + l2;
  }
  // P_alpha as printed: same shape but with the single-coefficient
  // width of the twisted factor.
  long long l1 = widths(mu, LKind::Std).cuspidal;
  long long l2 = widths(mu, LKind::Omega).cuspidal;
  long long l3p = std::min(iabs(a + 2 * b - 3 * pw - 1),
                           iabs(2 * a + b - 3 * pw + 1));
  for (const PlacePair& p : mu.pairs) {
    l3p = std::min(l3p, std::min(iabs(p.etabar.a + 2 * p.etabar.b - 3 * pw - 1),
                                 iabs(2 * p.etabar.a + p.etabar.b - 3 * pw + 1)));
  }
  return l1 >= 2 && l2 >= 1 && l3p >= 2 && -1 - l1 <= pw && pw <= -5 + l1 &&
         -2 - l2 <= pw && pw <= -4 + l2 && -7 - l3p <= 3 * pw &&
         3 * pw <= -11 + l3p;
}

LemmaReport verify_lemma(Parabolic tag, long long pw_lo, long long pw_hi,
                         long long window) {
  if (pw_lo > pw_hi || window < 1)
    throw std::domain_error("verify_lemma: empty range");
  LemmaReport rep;
  rep.tag = tag;
  rep.pw_lo = pw_lo;
  rep.pw_hi = pw_hi;
  rep.window = window;
  for (long long pw = pw_lo; pw <= pw_hi; ++pw) {
    for (long long a = -window; a <= window; ++a) {
      for (long long b = -window; b <= a; ++b) {
        ++rep.points_checked;
        bool s1 = statement_one(a, b, pw, tag);
        bool s3 = statement_three(a, b, pw, tag);
        if (s1 != s3)
          rep.disagreements.push_back({pw, a, b, s1, s3});
        if (derived_family(a, b, pw, tag) != s1) ++rep.derived_family_mismatches;
        if (printed_family(a, b, pw, tag) != s1)
          ++rep.printed_family_mismatches;
        else
          ++rep.printed_family_matches;
      }
    }
  }
  return rep;
}

}  // namespace g2
