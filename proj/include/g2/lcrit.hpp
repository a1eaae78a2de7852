#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2/purity.hpp"
#include "g2/rational.hpp"
#include "g2/rootsys.hpp"

namespace g2 {

// The L-function factors appearing in the two constant terms.
//   Ad3      adjoint-cube factor of P_beta        (argument scale 1)
//   Omega    central-character Hecke factor       (argument scale 2)
//   Std      standard GL2 factor of P_alpha       (argument scale 1)
//   StdTwist standard factor twisted by omega     (argument scale 3)
enum class LKind { Ad3, Omega, Std, StdTwist };

enum class Lattice { Integers, HalfOdd };

/// s-multiplier of the factor inside the product L(j s, .).
int lkind_scale(LKind kind);
/// Multiplier of pw in the factor's own purity weight (1, 2, 1, 3).
int lkind_purity_scale(LKind kind);
/// Factors of the constant-term product for a maximal parabolic.
std::vector<LKind> parabolic_factors(Parabolic tag);

// Closed interval of lattice points, step 1 on the stated lattice.
struct CritInterval {
  bool empty = true;
  HalfInt lo;
  HalfInt hi;
  Lattice lattice = Lattice::HalfOdd;

  static CritInterval make(HalfInt lo, HalfInt hi, Lattice lat);
  bool contains(HalfInt s) const;
  /// Bounds test only, ignoring the lattice constraint.
  bool contains_real(HalfInt s) const;
  long long size() const;
  std::vector<HalfInt> points() const;
  bool operator==(const CritInterval& o) const;
  std::string to_string() const;
};

struct Widths {
  HalfInt abelian;       // a_j, a function of pw only
  long long cuspidal = 0;  // l_j, min over all embeddings
};

struct TransferredWeight {
  std::vector<long long> entries;
  long long pw = 0;
};

// jk is compared against a window derived from one factor; one row per
// double inequality plus one per width threshold.
struct PoeInequality {
  std::string label;
  long long lo = 0;
  long long value = 0;
  long long hi = 0;
  bool holds = false;
};

struct PoeResult {
  bool critical_at_k = false;
  bool critical_at_k_plus_1 = false;
  bool pair_critical = false;  // both of the above
  std::vector<PoeInequality> inequalities;
};

enum class DominanceCase { L1Min, L2Min, L3Min };

struct TateWindow {
  bool empty = true;
  long long lo = 0;
  long long hi = 0;
  long long size() const { return empty ? 0 : hi - lo + 1; }
};

/// Highest weight of the transferred representation for one pair.
TransferredWeight transfer_weight(const GLPair& eta, long long pw, LKind kind);

/// Gamma-argument offsets: L_oo(s, kind) is a product of factors with
/// arguments s + c over all places; returns the c for one pair.
std::vector<HalfInt> gamma_arguments_pair(const PlacePair& pair, long long pw,
                                          LKind kind);
/// Offsets for every pair of mu, concatenated in place order.
std::vector<HalfInt> gamma_arguments(const PureWeight& mu, LKind kind);
/// Offsets of the dual-side factors (the 1-s counterpart).
std::vector<HalfInt> gamma_arguments_dual(const PureWeight& mu, LKind kind);

Widths widths(const PureWeight& mu, LKind kind);

/// Closed-form critical set of L(s, kind) on the kind's own lattice.
CritInterval crit_set(const PureWeight& mu, LKind kind);

/// Lattice of the kind's critical points (depends on pw for StdTwist).
Lattice lkind_lattice(LKind kind, long long pw);

/// Critical set of the constant-term product: s0 on the half-odd lattice
/// with j*s0 inside every factor's critical window (real bounds).
CritInterval crit_set_product(const PureWeight& mu, Parabolic tag);

/// Is s0 pole-free for the factor and its functional-equation dual?
/// s0 must lie on the kind's lattice.
bool crit_oracle(const PureWeight& mu, LKind kind, HalfInt s0);

/// Criticality of the evaluation point k and of the shifted arguments
/// jk+1, factor by factor, with the derived pw-window report.
PoeResult poe_check(const PureWeight& mu, Parabolic tag);

/// Index of the minimal cuspidal width (ties toward the smaller index).
DominanceCase dominance_case(const PureWeight& mu, Parabolic tag);

/// All integer twists t for which poe_check(tate_twist(mu, t)) passes;
/// always a contiguous interval (possibly empty).
TateWindow tate_traversal_bounds(const PureWeight& mu, Parabolic tag);

/// pw <= -5 for P_beta, pw <= -3 for P_alpha.
bool unitary_axis_check(const PureWeight& mu, Parabolic tag);

std::string lkind_name(LKind kind);

}  // namespace g2
