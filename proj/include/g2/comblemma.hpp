#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2/kostant.hpp"
#include "g2/lcrit.hpp"
#include "g2/purity.hpp"
#include "g2/rational.hpp"

namespace g2 {

// ca*a + cb*b + cw*pw + c0 >= 0
struct AffineForm {
  long long ca = 0, cb = 0, cw = 0, c0 = 0;

  long long eval(long long a, long long b, long long pw) const {
    return ca * a + cb * b + cw * pw + c0;
  }
  std::string to_string() const;
};

struct RegionSystem {
  std::string name;
  std::vector<AffineForm> constraints;

  bool contains(long long a, long long b, long long pw) const {
    for (const AffineForm& f : constraints)
      if (f.eval(a, b, pw) < 0) return false;
    return true;
  }
  bool on_boundary(long long a, long long b, long long pw) const {
    if (!contains(a, b, pw)) return false;
    for (const AffineForm& f : constraints)
      if (f.eval(a, b, pw) == 0) return true;
    return false;
  }
};

struct LatticePoint {
  long long a = 0;
  long long b = 0;
  bool operator==(const LatticePoint& o) const { return a == o.a && b == o.b; }
  bool operator<(const LatticePoint& o) const {
    return a != o.a ? a < o.a : b < o.b;
  }
};

struct CoverageReport {
  long long crit_count = 0;
  long long twist_count = 0;
  std::vector<LatticePoint> crit_only;   // in some critical region only
  std::vector<LatticePoint> twist_only;  // in some twisted region only
  bool symmetric_difference_empty() const {
    return crit_only.empty() && twist_only.empty();
  }
};

struct RationalPoint {
  Rational x;
  Rational y;
};

struct LatticeFreeResult {
  bool lattice_free = false;
  std::optional<LatticePoint> witness;
  std::vector<LatticePoint> vertex_lattice_points;
};

struct LemmaDisagreement {
  long long pw = 0;
  long long a = 0;
  long long b = 0;
  bool statement1 = false;  // poe_check
  bool statement3 = false;  // find_balanced present
};

struct LemmaReport {
  Parabolic tag;
  long long pw_lo = 0, pw_hi = 0, window = 0;
  long long points_checked = 0;
  std::vector<LemmaDisagreement> disagreements;
  // empirical status of the two printed inequality families
  long long derived_family_mismatches = 0;   // vs statement (1)
  long long printed_family_mismatches = 0;   // lemma-as-printed vs (1)
  long long printed_family_matches = 0;
};

/// Critical-region systems at pw: the ten transcribed systems for
/// P_beta; the sign-cell decomposition derived from the width thresholds
/// for P_alpha.
std::vector<RegionSystem> critical_regions(long long pw, Parabolic tag);

/// One dominance system per balanced shape (I)..(VI), derived from the
/// twisted action; valid for every pw without regime branches.
std::vector<RegionSystem> twisted_regions(long long pw, Parabolic tag);

/// Transcribed two-branch twisted systems for P_beta (regime pw <= -5
/// first); used to check the derived systems against the printed ones.
std::vector<RegionSystem> twisted_regions_transcribed_beta(long long pw);

/// Statement (1) of the combinatorial lemma at a lattice point: the
/// evaluation-point pair criticality of mu = ((a,b),(pw-b,pw-a)).
bool statement_one(long long a, long long b, long long pw, Parabolic tag);

/// Statement (3): a balanced representative with G-dominant twist exists.
bool statement_three(long long a, long long b, long long pw, Parabolic tag);

/// Lattice coverage of critical vs twisted regions in |a|,|b| <= window.
CoverageReport coverage_report(long long pw, Parabolic tag, long long window);

/// No lattice point lies in the closed triangle except listed vertices.
LatticeFreeResult lattice_free_check(const std::array<RationalPoint, 3>& v);

/// Pointwise equivalence scan of statements (1) and (3) over pure
/// lattice weights, with the empirical report on the printed families.
LemmaReport verify_lemma(Parabolic tag, long long pw_lo, long long pw_hi,
                         long long window);

/// The inequality family of the lemma as printed (sign-flipped for
/// P_beta relative to the derivation).
bool printed_family(long long a, long long b, long long pw, Parabolic tag);
/// The family derived in the critical-set computation.
bool derived_family(long long a, long long b, long long pw, Parabolic tag);

}  // namespace g2
