#include "semicross/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>

namespace semicross {

void BandedBlockOperator::apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const {
  y.setZero(dim());
  for (const Band& b : bands) {
    const int row0 = b.bi * block_dim + b.offset;
    const int col0 = b.bj * block_dim;
    const int m_lo = std::max(0, -b.offset);
    const int m_hi = std::min(block_dim, block_dim - b.offset);
    for (int m = m_lo; m < m_hi; ++m) y[row0 + m] += b.vals[static_cast<std::size_t>(m)] * x[col0 + m];
  }
}

void BandedBlockOperator::apply_adjoint(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const {
  y.setZero(dim());
  for (const Band& b : bands) {
    const int row0 = b.bi * block_dim + b.offset;
    const int col0 = b.bj * block_dim;
    const int m_lo = std::max(0, -b.offset);
    const int m_hi = std::min(block_dim, block_dim - b.offset);
    for (int m = m_lo; m < m_hi; ++m)
      y[col0 + m] += std::conj(b.vals[static_cast<std::size_t>(m)]) * x[row0 + m];
  }
}

Eigen::MatrixXcd BandedBlockOperator::dense() const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim(), dim());
  for (const Band& b : bands) {
    const int m_lo = std::max(0, -b.offset);
    const int m_hi = std::min(block_dim, block_dim - b.offset);
    for (int m = m_lo; m < m_hi; ++m)
      out(b.bi * block_dim + b.offset + m, b.bj * block_dim + m) += b.vals[static_cast<std::size_t>(m)];
  }
  return out;
}

namespace {

// One Golub-Kahan run; returns the best certified Rayleigh quotient and the
// right vector attaining it. V is kept for assembling the Ritz vector; the
// certificate at the end is a direct ||A v|| / ||v|| evaluation, so loss of
// orthogonality can only make the estimate worse, never invalid.
LowerBoundResult golub_kahan_run(const BandedBlockOperator& op, Eigen::VectorXcd v,
                                 int iters) {
  LowerBoundResult res;
  const int n = op.dim();
  iters = std::min(iters, n);
  double vn = v.norm();
  if (vn == 0.0) return res;
  v /= vn;

  Eigen::MatrixXcd V(n, iters);
  Eigen::VectorXd alpha(iters), beta(iters);
  Eigen::VectorXcd u(n), w(n);

  int k = 0;
  V.col(0) = v;
  op.apply(v, u);
  ++res.matvecs;
  alpha[0] = u.norm();
  if (alpha[0] > 0) u /= alpha[0];

  for (k = 1; k < iters; ++k) {
    op.apply_adjoint(u, w);
    ++res.matvecs;
    w -= alpha[k - 1] * V.col(k - 1);
    // full reorthogonalization against stored basis
    for (int j = 0; j < k; ++j) w -= V.col(j).dot(w) * V.col(j);
    beta[k - 1] = w.norm();
    if (beta[k - 1] < 1e-300) break;
    V.col(k) = w / beta[k - 1];

    op.apply(V.col(k), w);
    ++res.matvecs;
    w -= beta[k - 1] * u;
    alpha[k] = w.norm();
    if (alpha[k] < 1e-300) {
      ++k;
      break;
    }
    u = w / alpha[k];
  }

  // Largest singular triplet of the k x k lower-bidiagonal matrix.
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    B(i, i) = alpha[i];
    if (i + 1 < k) B(i, i + 1) = beta[i];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(B, Eigen::ComputeFullV);
  Eigen::VectorXd x = svd.matrixV().col(0);

  Eigen::VectorXcd ritz = V.leftCols(k) * x.cast<std::complex<double>>();
  const double rn = ritz.norm();
  if (rn == 0.0) return res;
  ritz /= rn;
  op.apply(ritz, w);
  ++res.matvecs;
  res.value = w.norm();
  res.best_vector = std::move(ritz);
  return res;
}

}  // namespace

LowerBoundResult spectral_norm_lower(const BandedBlockOperator& op,
                                     const std::vector<Eigen::VectorXcd>& seeds,
                                     int iters_per_run, int restarts, unsigned rng_seed) {
  LowerBoundResult best;
  const int n = op.dim();
  if (n == 0) return best;

  std::vector<Eigen::VectorXcd> starts = seeds;
  if (starts.empty()) {
    std::mt19937 rng(rng_seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::VectorXcd r(n);
    for (int i = 0; i < n; ++i) r[i] = std::complex<double>(dist(rng), dist(rng));
    starts.push_back(std::move(r));
  }

  for (const Eigen::VectorXcd& seed : starts) {
    Eigen::VectorXcd v = seed;
    if (v.size() != n) {
      Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(n);
      padded.head(std::min<long>(v.size(), n)) = v.head(std::min<long>(v.size(), n));
      v = std::move(padded);
    }
    for (int r = 0; r <= restarts; ++r) {
      LowerBoundResult run = golub_kahan_run(op, v, iters_per_run);
      best.matvecs += run.matvecs;
      if (run.best_vector.size() == 0) break;
      const double prev = best.value;
      if (run.value > best.value) {
        best.value = run.value;
        best.best_vector = run.best_vector;
      }
      if (run.value <= prev * (1.0 + 1e-13)) break;  // stalled
      v = run.best_vector;
    }
  }
  return best;
}

double spectral_norm_dense(const Eigen::MatrixXcd& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  if (a.rows() <= 96 && a.cols() <= 96) {
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(a).singularValues()(0);
  }
  // Largest eigenvalue of the Gram matrix; cheaper than a full SVD here.
  const bool tall = a.rows() >= a.cols();
  Eigen::MatrixXcd gram = tall ? Eigen::MatrixXcd(a.adjoint() * a) : Eigen::MatrixXcd(a * a.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
  return top > 0.0 ? std::sqrt(top) : 0.0;
}

}  // namespace semicross
