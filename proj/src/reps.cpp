#include "semicross/reps.hpp"

#include <algorithm>
#include <stdexcept>

#include "semicross/spectral.hpp"

namespace semicross {

namespace {

// sigma^m for any integer m over a permutation.
int apply_signed(const FiniteSystem& sys, const std::vector<int>& inverse, int x, int m) {
  if (m >= 0) return sys.apply_iter(x, m);
  for (int i = 0; i < -m; ++i) x = inverse[static_cast<std::size_t>(x)];
  return x;
}

std::vector<int> inverse_table(const FiniteSystem& sys) {
  std::vector<int> inv(static_cast<std::size_t>(sys.n));
  for (int x = 0; x < sys.n; ++x) inv[static_cast<std::size_t>(sys.apply(x))] = x;
  return inv;
}

void require_permutation(const FiniteSystem& sys, const char* what) {
  if (!sys.is_permutation()) throw std::invalid_argument(std::string(what) + " requires a permutation system");
}

}  // namespace

TruncatedOperator orbit_shift_rep(const FiniteSystem& sys, const Poly& f, int depth) {
  validate(sys);
  if (f.side != Side::left) throw std::invalid_argument("orbit_shift_rep expects a left element");
  if (f.sys != sys) throw std::invalid_argument("system mismatch");
  if (depth < std::max(1, f.max_degree() + 1))
    throw std::invalid_argument("depth must exceed the polynomial degree");

  TruncatedOperator op;
  op.n_points = sys.n;
  op.block_dim = depth;
  op.mat = Eigen::MatrixXcd::Zero(sys.n * depth, sys.n * depth);
  for (int x = 0; x < sys.n; ++x) {
    const int base = x * depth;
    for (const auto& [n, c] : f.coeffs)
      for (int m = 0; m + n < depth; ++m)
        op.mat(base + m + n, base + m) = c[static_cast<std::size_t>(sys.apply_iter(x, m))];
  }
  return op;
}

TruncatedOperator right_orbit_rep(const FiniteSystem& sys, const Poly& f, int depth) {
  validate(sys);
  if (f.side != Side::right) throw std::invalid_argument("right_orbit_rep expects a right element");
  if (f.sys != sys) throw std::invalid_argument("system mismatch");
  if (depth < std::max(1, f.max_degree() + 1))
    throw std::invalid_argument("depth must exceed the polynomial degree");

  TruncatedOperator op;
  op.n_points = sys.n;
  op.block_dim = depth;
  op.mat = Eigen::MatrixXcd::Zero(sys.n * depth, sys.n * depth);
  for (int x = 0; x < sys.n; ++x) {
    const int base = x * depth;
    for (const auto& [n, c] : f.coeffs)
      for (int m = n; m < depth; ++m)
        op.mat(base + m - n, base + m) = c[static_cast<std::size_t>(sys.apply_iter(x, m - n))];
  }
  return op;
}

Eigen::MatrixXcd OrbitSymbol::eval(Cplx z) const {
  const int p = length();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(p, p);
  for (const auto& [n, mat] : coeff) out += std::pow(z, n) * mat;
  return out;
}

namespace {

SymbolOperator symbol_rep_impl(const FiniteSystem& perm, const std::map<int, Fn>& laurent,
                               bool left_sided) {
  require_permutation(perm, "symbol_rep");
  const OrbitData data = orbit_data(perm);

  SymbolOperator sym;
  for (const Cycle& cyc : data.cycles) {
    OrbitSymbol block;
    block.points = cyc.points;
    const int p = cyc.length();

    // W: cyclic permutation matrix of sigma in orbit coordinates, e_i -> e_{i-1}.
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(p, p);
    for (int i = 0; i < p; ++i) w(((i - 1) % p + p) % p, i) = 1.0;

    for (const auto& [n, f] : laurent) {
      if (static_cast<int>(f.size()) != perm.n)
        throw std::invalid_argument("coefficient length does not match system size");
      Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(p, p);
      for (int i = 0; i < p; ++i) d(i, i) = f[static_cast<std::size_t>(cyc.points[static_cast<std::size_t>(i)])];
      Eigen::MatrixXcd wn = Eigen::MatrixXcd::Identity(p, p);
      const int steps = ((n % p) + p) % p;
      for (int s = 0; s < steps; ++s) wn = w * wn;
      block.coeff[n] = left_sided ? Eigen::MatrixXcd(wn * d) : Eigen::MatrixXcd(d * wn);
    }
    sym.blocks.push_back(std::move(block));
  }
  return sym;
}

}  // namespace

SymbolOperator symbol_rep(const FiniteSystem& perm, const std::map<int, Fn>& laurent) {
  return symbol_rep_impl(perm, laurent, true);
}

SymbolOperator symbol_rep_right(const FiniteSystem& perm, const std::map<int, Fn>& laurent) {
  return symbol_rep_impl(perm, laurent, false);
}

TruncatedOperator regular_rep_oracle(const FiniteSystem& perm, const std::map<int, Fn>& laurent,
                                     int window) {
  require_permutation(perm, "regular_rep_oracle");
  if (window < 0) throw std::invalid_argument("window must be nonnegative");
  const std::vector<int> inv = inverse_table(perm);
  const int width = 2 * window + 1;

  TruncatedOperator op;
  op.n_points = perm.n;
  op.block_dim = width;
  op.mat = Eigen::MatrixXcd::Zero(perm.n * width, perm.n * width);
  for (int x = 0; x < perm.n; ++x) {
    const int base = x * width;
    for (const auto& [n, f] : laurent) {
      if (static_cast<int>(f.size()) != perm.n)
        throw std::invalid_argument("coefficient length does not match system size");
      for (int k = -window; k <= window; ++k) {
        const int row = k + n;
        if (row < -window || row > window) continue;
        op.mat(base + row + window, base + k + window) =
            f[static_cast<std::size_t>(apply_signed(perm, inv, x, -k))];
      }
    }
  }
  return op;
}

double PairReport::max_residual() const {
  return std::max({projection_residual, unitality_residual, covariance_residual, kind_residual});
}

PairReport validate_pair(const CovariantPair& pair, const FiniteSystem& sys) {
  validate(sys);
  if (static_cast<int>(pair.proj.size()) != sys.n)
    throw std::invalid_argument("pair must provide one projection per point");
  for (const auto& p : pair.proj)
    if (p.rows() != pair.dim || p.cols() != pair.dim)
      throw std::invalid_argument("projection dimension mismatch");
  if (pair.v.rows() != pair.dim || pair.v.cols() != pair.dim)
    throw std::invalid_argument("operator dimension mismatch");

  PairReport report;

  for (int i = 0; i < sys.n; ++i) {
    const Eigen::MatrixXcd& p = pair.proj[static_cast<std::size_t>(i)];
    report.projection_residual = std::max(report.projection_residual, spectral_norm_dense(p * p - p));
    report.projection_residual =
        std::max(report.projection_residual, spectral_norm_dense(Eigen::MatrixXcd(p.adjoint() - p)));
    for (int j = i + 1; j < sys.n; ++j)
      report.projection_residual =
          std::max(report.projection_residual, spectral_norm_dense(p * pair.proj[static_cast<std::size_t>(j)]));
  }

  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(pair.dim, pair.dim);
  for (const auto& p : pair.proj) total += p;
  report.unitality_residual =
      spectral_norm_dense(Eigen::MatrixXcd(total - Eigen::MatrixXcd::Identity(pair.dim, pair.dim)));

  // alpha(chi_i) = sum of chi_j over phi(j) = i.
  for (int i = 0; i < sys.n; ++i) {
    Eigen::MatrixXcd alpha_i = Eigen::MatrixXcd::Zero(pair.dim, pair.dim);
    for (int j = 0; j < sys.n; ++j)
      if (sys.apply(j) == i) alpha_i += pair.proj[static_cast<std::size_t>(j)];
    const Eigen::MatrixXcd& p = pair.proj[static_cast<std::size_t>(i)];
    const Eigen::MatrixXcd resid = (pair.side == Side::left)
                                       ? Eigen::MatrixXcd(p * pair.v - pair.v * alpha_i)
                                       : Eigen::MatrixXcd(pair.v * p - alpha_i * pair.v);
    report.covariance_residual = std::max(report.covariance_residual, spectral_norm_dense(resid));
  }

  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(pair.dim, pair.dim);
  auto windowed = [&](const Eigen::MatrixXcd& r) {
    if (pair.inner.empty()) return spectral_norm_dense(r);
    const int w = static_cast<int>(pair.inner.size());
    Eigen::MatrixXcd c(w, w);
    for (int a = 0; a < w; ++a)
      for (int b = 0; b < w; ++b) c(a, b) = r(pair.inner[static_cast<std::size_t>(a)], pair.inner[static_cast<std::size_t>(b)]);
    return spectral_norm_dense(c);
  };

  switch (pair.kind) {
    case PairKind::contractive:
      report.kind_residual = std::max(0.0, spectral_norm_dense(pair.v) - 1.0);
      break;
    case PairKind::isometric:
      report.kind_residual = windowed(pair.v.adjoint() * pair.v - eye);
      break;
    case PairKind::co_isometric:
      report.kind_residual = windowed(pair.v * pair.v.adjoint() - eye);
      break;
    case PairKind::unitary:
      report.kind_residual = std::max(windowed(pair.v.adjoint() * pair.v - eye),
                                      windowed(pair.v * pair.v.adjoint() - eye));
      break;
  }

  report.accepted = report.max_residual() <= report.tolerance;
  return report;
}

CovariantPair orbit_shift_pair(const FiniteSystem& sys, int depth, int margin) {
  validate(sys);
  if (depth < 1 || margin < 0 || margin >= depth) throw std::invalid_argument("bad window");
  CovariantPair pair;
  pair.dim = sys.n * depth;
  pair.side = Side::left;
  pair.kind = PairKind::isometric;

  pair.proj.assign(static_cast<std::size_t>(sys.n), Eigen::MatrixXcd::Zero(pair.dim, pair.dim));
  pair.v = Eigen::MatrixXcd::Zero(pair.dim, pair.dim);
  for (int x = 0; x < sys.n; ++x) {
    const int base = x * depth;
    for (int m = 0; m < depth; ++m) {
      pair.proj[static_cast<std::size_t>(sys.apply_iter(x, m))](base + m, base + m) = 1.0;
      if (m + 1 < depth) pair.v(base + m + 1, base + m) = 1.0;
      if (m < depth - margin) pair.inner.push_back(base + m);
    }
  }
  return pair;
}

CovariantPair regular_rep_pair(const FiniteSystem& perm, int window, int margin) {
  require_permutation(perm, "regular_rep_pair");
  if (window < 0 || margin < 0 || margin > window) throw std::invalid_argument("bad window");
  const std::vector<int> inv = inverse_table(perm);
  const int width = 2 * window + 1;

  CovariantPair pair;
  pair.dim = perm.n * width;
  pair.side = Side::right;
  pair.kind = PairKind::unitary;
  pair.proj.assign(static_cast<std::size_t>(perm.n), Eigen::MatrixXcd::Zero(pair.dim, pair.dim));
  pair.v = Eigen::MatrixXcd::Zero(pair.dim, pair.dim);
  for (int x = 0; x < perm.n; ++x) {
    const int base = x * width;
    for (int k = -window; k <= window; ++k) {
      const int idx = base + k + window;
      pair.proj[static_cast<std::size_t>(apply_signed(perm, inv, x, -k))](idx, idx) = 1.0;
      if (k + 1 <= window) pair.v(idx + 1, idx) = 1.0;
      if (std::abs(k) <= window - margin) pair.inner.push_back(idx);
    }
  }
  return pair;
}

}  // namespace semicross
