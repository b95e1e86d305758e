// Spectral-norm kernels: banded block operators with implicit matvec and
// certified lower bounds via Golub-Kahan iteration. Every estimate returned
// by the iterative path is a Rayleigh quotient of the operator itself, hence
// a true lower bound regardless of how well the iteration converged.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace semicross {

/// Operator on C^(nu * block_dim) assembled from shifted diagonals.
/// A band (bi, bj, offset, vals) contributes entries
///   (bi*block_dim + m + offset, bj*block_dim + m) = vals[m]
/// for every column index m with both endpoints in range.
struct BandedBlockOperator {
  int nu = 1;
  int block_dim = 0;

  struct Band {
    int bi = 0;
    int bj = 0;
    int offset = 0;
    std::vector<std::complex<double>> vals;
  };
  std::vector<Band> bands;

  int dim() const { return nu * block_dim; }
  void apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;
  void apply_adjoint(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;
  Eigen::MatrixXcd dense() const;
};

struct LowerBoundResult {
  double value = 0.0;              // certified lower bound for the spectral norm
  Eigen::VectorXcd best_vector;    // attaining (approximately) the bound
  long matvecs = 0;
};

/// Golub-Kahan bidiagonalization from each seed (plus one deterministic
/// fallback seed when none are given), restarted on the best Ritz vector.
LowerBoundResult spectral_norm_lower(const BandedBlockOperator& op,
                                     const std::vector<Eigen::VectorXcd>& seeds,
                                     int iters_per_run, int restarts,
                                     unsigned rng_seed);

/// Exact (to LAPACK accuracy) spectral norm of a dense matrix.
double spectral_norm_dense(const Eigen::MatrixXcd& a);

}  // namespace semicross
