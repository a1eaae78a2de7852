#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2/rational.hpp"

namespace g2 {

enum class SimpleRoot { Alpha, Beta };
enum class Parabolic { B, PAlpha, PBeta };

// Integer vector x*alpha + y*beta in the simple-root basis of G2.
// alpha is the short root, beta the long root. Doubles as a weight vector.
struct RootVector {
  long long x = 0;
  long long y = 0;

  bool operator==(const RootVector& o) const { return x == o.x && y == o.y; }
  bool operator!=(const RootVector& o) const { return !(*this == o); }
  bool operator<(const RootVector& o) const {
    return x != o.x ? x < o.x : y < o.y;
  }
  RootVector operator+(const RootVector& o) const { return {x + o.x, y + o.y}; }
  RootVector operator-() const { return {-x, -y}; }
};

// Rational vector in the same basis, for rho-shifts and reflections of
// non-lattice points.
struct RootVectorQ {
  Rational x;
  Rational y;

  RootVectorQ() = default;
  RootVectorQ(Rational xx, Rational yy) : x(xx), y(yy) {}
  RootVectorQ(const RootVector& v) : x(v.x), y(v.y) {}

  bool operator==(const RootVectorQ& o) const { return x == o.x && y == o.y; }
  RootVectorQ operator+(const RootVectorQ& o) const {
    return {x + o.x, y + o.y};
  }
  RootVectorQ operator-(const RootVectorQ& o) const {
    return {x - o.x, y - o.y};
  }
};

// 2x2 integer matrix acting on root coordinates, columns = images of the
// basis vectors.
struct Mat2 {
  long long a00 = 1, a01 = 0, a10 = 0, a11 = 1;

  bool operator==(const Mat2& o) const {
    return a00 == o.a00 && a01 == o.a01 && a10 == o.a10 && a11 == o.a11;
  }
  RootVector apply(const RootVector& v) const {
    return {a00 * v.x + a01 * v.y, a10 * v.x + a11 * v.y};
  }
  RootVectorQ apply(const RootVectorQ& v) const {
    return {Rational(a00) * v.x + Rational(a01) * v.y,
            Rational(a10) * v.x + Rational(a11) * v.y};
  }
  Mat2 operator*(const Mat2& o) const {
    return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
            a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
  }
};

// A Weyl group element: canonical reduced word (rightmost letter acts
// first) together with its matrix on the root lattice.
struct WeylElement {
  std::vector<SimpleRoot> word;
  Mat2 matrix;
  int length = 0;

  bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  RootVector apply(const RootVector& v) const { return matrix.apply(v); }
  RootVectorQ apply(const RootVectorQ& v) const { return matrix.apply(v); }

  // "1", "w_αβα", ..., "w_G" for the longest element.
  std::string name() const;
};

struct ParabolicData {
  Parabolic tag;
  std::optional<RootVector> levi_simple_root;
  std::vector<RootVector> unipotent_roots;
  RootVectorQ rho_p;
  std::optional<RootVector> fundamental_weight;  // gamma_P
  std::optional<HalfInt> evaluation_point;       // k = -<rho_P, alpha_P^v>
  std::optional<int> modulus_exponent;
  std::optional<int> num_grading_pieces;  // m; unset for the Borel
  std::vector<std::vector<RootVector>> adjoint_grading;  // V_1..V_m
  std::vector<HalfInt> h_values;                         // h_1..h_m
};

// Weights of the 7-dimensional standard representation restricted to a
// Levi GL2-torus, grouped into the named diagonal blocks.
struct R7Blocks {
  std::vector<std::pair<std::string, std::vector<std::pair<long long, long long>>>>
      blocks;
};

RootVector simple_root(SimpleRoot r);

/// The six positive roots, in the fixed order
/// alpha, beta, alpha+beta, 3alpha+2beta, 2alpha+beta, 3alpha+beta.
const std::array<RootVector, 6>& positive_roots();

bool is_root(const RootVector& v);

/// Symmetrized invariant form with B(alpha,alpha) = 2, B(beta,beta) = 6.
Rational bilinear_form(const RootVectorQ& v, const RootVectorQ& w);

/// <v, theta^vee> = 2 B(v,theta) / B(theta,theta). theta must be a root.
Rational pairing(const RootVectorQ& v, const RootVector& theta);

/// Reflection s_theta(v) = v - <v,theta^vee> theta.
RootVectorQ reflect(const RootVector& theta, const RootVectorQ& v);
RootVector reflect(const RootVector& theta, const RootVector& v);

/// All 12 Weyl elements with canonical reduced words, ordered
/// 1, w_a, w_b, w_ab, w_ba, w_aba, w_bab, w_abab, w_baba, w_ababa,
/// w_babab, w_G.
const std::vector<WeylElement>& weyl_group();

/// The same 12 elements in the row order of the inverse-action table:
/// 1, the beta-leading words by length, the alpha-leading words, w_G.
std::vector<WeylElement> weyl_table_order();

const WeylElement& weyl_identity();
const WeylElement& longest_element();

/// Lookup by matrix; throws if the matrix is not a Weyl action.
const WeylElement& weyl_from_matrix(const Mat2& m);

WeylElement inverse(const WeylElement& w);
/// compose(w1, w2) = w1 o w2 (w2 acts first).
WeylElement compose(const WeylElement& w1, const WeylElement& w2);

/// rho_G = half sum of positive roots = 5 alpha + 3 beta.
RootVector rho_g();

ParabolicData parabolic_data(Parabolic tag);

/// Weight exponents of the standard 7-dimensional representation under
/// the torus parametrization attached to the maximal parabolic.
R7Blocks r7_restriction(Parabolic tag);

std::string to_string(const RootVector& v);
std::string parabolic_name(Parabolic tag);

}  // namespace g2
