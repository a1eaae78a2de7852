#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2/purity.hpp"
#include "g2/rootsys.hpp"
#include "g2/weights.hpp"

namespace g2 {

// Kostant representatives at one archimedean place: the component acting
// on the eta-embedding weight and the one acting on the conjugate.
struct KostantPair {
  WeylElement eta;
  WeylElement etabar;

  int total_length() const { return eta.length + etabar.length; }
  bool balanced() const { return total_length() == 5; }
};

struct BalancedResult {
  std::vector<KostantPair> pairs;  // one per place
  // lambda components per place: the eta and etabar dominant weights.
  std::vector<std::array<WeightCoords, 2>> lambda;
};

struct WeightIdentityResult {
  std::vector<std::array<WeightCoords, 2>> lhs;  // w'.lambda per place
  std::vector<std::array<WeightCoords, 2>> rhs;  // dual-Tate-twisted mu
  bool equal = false;
};

struct DegreeWindow {
  long long bottom_degree = 0;   // b_2^F = r
  long long top_degree = 0;      // t_2^F = 3r - 1
  long long total_length = 0;    // sum of pair lengths over all places
  long long q_min = 0;
  long long q_max = 0;
};

/// Minimal coset representatives, computed from the defining positivity
/// condition w^{-1}(Levi simple root) > 0, ordered by length.
std::vector<WeylElement> kostant_reps(Parabolic tag);

/// Longest element of W^P (length 5).
const WeylElement& longest_kostant_rep(Parabolic tag);

/// w -> w0 * w with w0 the longest element of W^P; an involution on W^P
/// exchanging lengths l and 5 - l.
WeylElement prime_involution(const WeylElement& w, Parabolic tag);

/// Checks w'.lambda = dual_twist(w.lambda) Tate-twisted by -5 (P_beta)
/// or -3 (P_alpha), where mu = w.lambda must be pure.
WeightIdentityResult wprime_weight_identity(
    const std::vector<std::array<WeightCoords, 2>>& lambda,
    const std::vector<KostantPair>& pairs, Parabolic tag);

/// First balanced pair (per place, in the fixed shape order
/// (5,0),(0,5),(4,1),(1,4),(3,2),(2,3)) whose inverse dot action makes
/// every component G-dominant; absent when no shape works at some place.
std::optional<BalancedResult> find_balanced(const PureWeight& mu,
                                            Parabolic tag);

/// Degree window [l(w)+r, l(w)+3r-1] for the pair replicated at r places.
DegreeWindow degree_window(const KostantPair& pair, Parabolic tag, int r);

/// Koszul sign of reordering wedge blocks of the given lengths by perm;
/// perm[i] is the source index of the block placed at slot i.
int epsilon_sign(const std::vector<long long>& block_lengths,
                 const std::vector<size_t>& perm);

/// Basis used to read GL2 pairs of this parabolic as G-weights.
Basis parabolic_basis(Parabolic tag);

/// GL2 pair of a place read as a weight in the parabolic's basis.
WeightCoords pair_weight(const GLPair& p, Parabolic tag);

}  // namespace g2
