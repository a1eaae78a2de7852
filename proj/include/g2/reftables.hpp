#pragma once

#include <array>
#include <string>

#include "g2/rootsys.hpp"

namespace g2 {

// Reference row of the inverse Weyl action on the simple roots.
struct InverseActionRow {
  int length;
  const char* name;
  RootVector inv_alpha;
  RootVector inv_beta;
};

/// The twelve reference rows in table order.
const std::array<InverseActionRow, 12>& inverse_action_rows();

// Affine component ca*a + cb*b + cw*w + c0 of a twisted-action formula.
struct AffineEntry {
  long long ca = 0, cb = 0, cw = 0, c0 = 0;
  long long eval(long long a, long long b, long long w) const {
    return ca * a + cb * b + cw * w + c0;
  }
  std::string to_string() const;
};

// One row of the twisted-action table: w^{-1}.(a, b) and the same
// representative acting on the conjugate coordinates (w-b, w-a).
struct TwistedActionRow {
  int length;
  const char* name;
  AffineEntry eta[2];
  AffineEntry etabar[2];
};

/// Six reference rows per maximal parabolic, ordered by length; frozen
/// affine formulas guarding the Weyl-word and coordinate conventions.
const std::array<TwistedActionRow, 6>& twisted_action_rows(Parabolic tag);

}  // namespace g2
