// Concrete representations as finite matrices: the orbit (shift)
// representation, the crossed-product symbol over a permutation, a truncated
// regular-representation oracle, and covariant-pair validators.
//
// Conventions. Truncated operators use point-major layout: coordinate
// (x, m) lives at index x*block_dim + m. The regular representation acts on
// C^X tensor l2(Z) with U the shift e_k -> e_{k+1} and pi_hat placing
// f . sigma^{-k} on slot k, so that U pi_hat(f) U* = pi_hat(f . sigma).
// Orbits are listed in cycle order and W below is the matching cyclic
// permutation matrix of sigma, acting on orbit coordinates as e_i -> e_{i-1}.

#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "semicross/algebra.hpp"
#include "semicross/dynsys.hpp"

namespace semicross {

/// Dense compression of an infinite-dimensional representation. block_dim is
/// M for shift representations and 2L+1 for the regular-representation
/// oracle; the matrix has n_points * block_dim rows.
struct TruncatedOperator {
  int n_points = 0;
  int block_dim = 0;
  Eigen::MatrixXcd mat;
};

/// Compression of sum_n S^n pi~(c_n) to C^X tensor C^M, where S is the
/// unilateral shift and pi~(c) = diag(c . phi^m). Block-diagonal over points:
/// the block of x is the weighted-shift polynomial with entries
/// B[m+n, m] = c_n(phi^m(x)). Requires a left element and M > max degree.
TruncatedOperator orbit_shift_rep(const FiniteSystem& sys, const Poly& f, int depth);

/// Mirror image for right elements: compression of sum_n pi~(c_n) (S*)^n,
/// with per-point entries B[m-n, m] = c_n(phi^{m-n}(x)). Equals the adjoint
/// of orbit_shift_rep(sharp(f)).
TruncatedOperator right_orbit_rep(const FiniteSystem& sys, const Poly& f, int depth);

/// Matrix-valued Laurent polynomial attached to one sigma-orbit.
struct OrbitSymbol {
  std::vector<int> points;               // orbit in cycle order
  std::map<int, Eigen::MatrixXcd> coeff; // z^n -> p x p matrix
  Eigen::MatrixXcd eval(Cplx z) const;
  int length() const { return static_cast<int>(points.size()); }
};

/// Symbol of a crossed-product element sum_n U^n pi_hat(f_n) over a
/// permutation system: one block per orbit, coefficient of z^n equal to
/// W^n D(f_n). Validated against regular_rep_oracle (see tests).
struct SymbolOperator {
  std::vector<OrbitSymbol> blocks;
};

SymbolOperator symbol_rep(const FiniteSystem& perm, const std::map<int, Fn>& laurent);

/// Right-sided variant, realizing sum_n pi_hat(f_n) U^n with coefficient of
/// z^n equal to D(f_n) W^n.
SymbolOperator symbol_rep_right(const FiniteSystem& perm, const std::map<int, Fn>& laurent);

/// Compression of sum_n U^n pi_hat(f_n) to C^X tensor span{e_k : |k| <= L}.
/// Block-diagonal over points with B[(k+n)+L, k+L] = f_n(sigma^{-k}(x)).
/// Norms are nondecreasing in L and converge to the crossed-product norm.
TruncatedOperator regular_rep_oracle(const FiniteSystem& perm, const std::map<int, Fn>& laurent,
                                     int window);

/// A candidate covariant pair: pi is given by its values on the canonical
/// idempotents (one projection per point of X, extended linearly), v is the
/// pair's operator. `inner` lists the coordinates on which the kind check is
/// evaluated (compressions of shifts satisfy their kind only away from the
/// truncation boundary); empty means all coordinates.
struct CovariantPair {
  int dim = 0;
  std::vector<Eigen::MatrixXcd> proj;
  Eigen::MatrixXcd v;
  Side side = Side::left;
  PairKind kind = PairKind::contractive;
  std::vector<int> inner;
};

struct PairReport {
  double projection_residual = 0.0;  // idempotent, self-adjoint, orthogonal
  double unitality_residual = 0.0;   // projections sum to the identity
  double covariance_residual = 0.0;  // pi(c) V = V pi(alpha(c)) or mirror
  double kind_residual = 0.0;        // V against its declared kind
  double tolerance = 1e-10;
  bool accepted = false;
  double max_residual() const;
};

PairReport validate_pair(const CovariantPair& pair, const FiniteSystem& sys);

/// The pair (pi~, S) of the orbit representation at the given truncation,
/// with the kind check restricted to the window m < depth - margin.
CovariantPair orbit_shift_pair(const FiniteSystem& sys, int depth, int margin);

/// The pair (pi_hat, U) of the regular representation at window L (right
/// covariant unitary); kind checks run on |k| <= L - margin.
CovariantPair regular_rep_pair(const FiniteSystem& perm, int window, int margin);

}  // namespace semicross
