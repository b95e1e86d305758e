#include "semicross/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>

#include "semicross/spectral.hpp"

namespace semicross {

namespace {

std::vector<int> inverse_table(const FiniteSystem& sys) {
  std::vector<int> inv(static_cast<std::size_t>(sys.n));
  for (int x = 0; x < sys.n; ++x) inv[static_cast<std::size_t>(sys.apply(x))] = x;
  return inv;
}

// f . sigma^m for any integer m (permutations only).
Fn compose_power(const FiniteSystem& perm, const Fn& f, int m) {
  const std::vector<int> inv = inverse_table(perm);
  Fn out(f.size());
  for (int x = 0; x < perm.n; ++x) {
    int y = x;
    if (m >= 0)
      y = perm.apply_iter(x, m);
    else
      for (int i = 0; i < -m; ++i) y = inv[static_cast<std::size_t>(y)];
    out[static_cast<std::size_t>(x)] = f[static_cast<std::size_t>(y)];
  }
  return out;
}

bool exactly_zero(const Fn& f) {
  return std::all_of(f.begin(), f.end(), [](const Cplx& v) { return v == Cplx(0.0); });
}

void require_permutation(const FiniteSystem& sys) {
  if (!sys.is_permutation())
    throw std::invalid_argument("crossed-product elements need a permutation system");
}

}  // namespace

int CrossedElement::max_abs_degree() const {
  int best = 0;
  for (const auto& [n, f] : coeffs) best = std::max(best, std::abs(n));
  return best;
}

CrossedElement crossed_zero(const FiniteSystem& perm) {
  require_permutation(perm);
  return CrossedElement{perm, {}};
}

CrossedElement crossed_monomial(const FiniteSystem& perm, int deg, Fn value) {
  require_permutation(perm);
  if (static_cast<int>(value.size()) != perm.n)
    throw std::invalid_argument("coefficient length does not match system size");
  CrossedElement e{perm, {}};
  if (!exactly_zero(value)) e.coeffs.emplace(deg, std::move(value));
  return e;
}

void canonicalize(CrossedElement& e) {
  for (auto it = e.coeffs.begin(); it != e.coeffs.end();)
    it = exactly_zero(it->second) ? e.coeffs.erase(it) : std::next(it);
}

CrossedElement ce_add(const CrossedElement& a, const CrossedElement& b) {
  if (a.sys != b.sys) throw std::invalid_argument("system mismatch");
  CrossedElement out = a;
  for (const auto& [n, f] : b.coeffs) {
    auto [it, inserted] = out.coeffs.emplace(n, f);
    if (!inserted)
      for (std::size_t i = 0; i < f.size(); ++i) it->second[i] += f[i];
  }
  canonicalize(out);
  return out;
}

CrossedElement ce_scale(Cplx lambda, const CrossedElement& a) {
  CrossedElement out = a;
  for (auto& [n, f] : out.coeffs)
    for (Cplx& v : f) v *= lambda;
  canonicalize(out);
  return out;
}

CrossedElement ce_sub(const CrossedElement& a, const CrossedElement& b) {
  return ce_add(a, ce_scale(Cplx(-1.0), b));
}

CrossedElement ce_mul(const CrossedElement& a, const CrossedElement& b) {
  if (a.sys != b.sys) throw std::invalid_argument("system mismatch");
  CrossedElement out = crossed_zero(a.sys);
  for (const auto& [n, f] : a.coeffs) {
    for (const auto& [m, g] : b.coeffs) {
      // pi(f) U^m = U^m pi(f . sigma^{-m}), from U pi(c) U* = pi(c . sigma)
      const Fn term = pointwise_mul(compose_power(a.sys, f, -m), g);
      auto [it, inserted] = out.coeffs.emplace(n + m, term);
      if (!inserted)
        for (std::size_t i = 0; i < term.size(); ++i) it->second[i] += term[i];
    }
  }
  canonicalize(out);
  return out;
}

CrossedElement ce_adjoint(const CrossedElement& a) {
  CrossedElement out = crossed_zero(a.sys);
  for (const auto& [n, f] : a.coeffs) out.coeffs[-n] = compose_power(a.sys, conj(f), n);
  canonicalize(out);
  return out;
}

Fn fourier_coeff(const CrossedElement& e, int n) {
  auto it = e.coeffs.find(n);
  return it != e.coeffs.end() ? it->second : Fn(static_cast<std::size_t>(e.sys.n), Cplx(0.0));
}

Fn cond_expectation(const CrossedElement& e) { return fourier_coeff(e, 0); }

CrossedElement fejer_sum(const CrossedElement& e, int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  CrossedElement out = crossed_zero(e.sys);
  for (const auto& [n, f] : e.coeffs) {
    if (std::abs(n) > order) continue;
    const double w = 1.0 - static_cast<double>(std::abs(n)) / (order + 1);
    Fn scaled(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) scaled[i] = w * f[i];
    out.coeffs.emplace(n, std::move(scaled));
  }
  canonicalize(out);
  return out;
}

CrossedElement partial_sum(const CrossedElement& e, int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  CrossedElement out = crossed_zero(e.sys);
  for (const auto& [n, f] : e.coeffs)
    if (std::abs(n) <= order) out.coeffs.emplace(n, f);
  return out;
}

CrossedElement envelope_element(const FiniteSystem& sys, const Poly& f) {
  const DirectLimit lim = direct_limit(sys);
  CrossedElement out = crossed_zero(lim.system);
  for (const auto& [n, c] : f.coeffs) {
    Fn restricted(lim.points.size());
    for (std::size_t i = 0; i < lim.points.size(); ++i)
      restricted[i] = c[static_cast<std::size_t>(lim.points[i])];
    if (!exactly_zero(restricted)) out.coeffs.emplace(n, std::move(restricted));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certified circle sup
// ---------------------------------------------------------------------------

namespace {

struct LaurentBlock {
  std::map<int, Eigen::MatrixXcd> coeff;
  double c1 = 0.0;  // bound on |d/dtheta A|
  double c2 = 0.0;  // bound on |d^2/dtheta^2 A|
  int dim = 0;

  double eval(double theta) const {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [n, c] : coeff) a += std::polar(1.0, n * theta) * c;
    return spectral_norm_dense(a);
  }
};

LaurentBlock make_block(const std::map<int, Eigen::MatrixXcd>& coeff, int dim) {
  LaurentBlock b;
  b.coeff = coeff;
  b.dim = dim;
  for (const auto& [n, c] : coeff) {
    const double nc = spectral_norm_dense(c);
    b.c1 += std::abs(n) * nc;
    b.c2 += static_cast<double>(n) * n * nc;
  }
  return b;
}

struct Interval {
  int block;
  double a, b;     // endpoints
  double va, vb;   // endpoint values
  double ub;       // certified upper bound on the interval
};

double interval_upper(const LaurentBlock& blk, double a, double b, double va, double vb) {
  const double h = b - a;
  // Each singular-value branch has curvature at most c2, and the sup is a
  // max of such branches, so the endpoint-parabola bound applies; the
  // Lipschitz bound covers the long intervals of the initial grid.
  const double second_order = blk.c2 * h * h / 8.0;
  const double first_order = blk.c1 * h / 2.0;
  return std::max(va, vb) + std::min(first_order, second_order);
}

NormResult sup_norm_circle(const std::vector<LaurentBlock>& blocks, double tol,
                           const NormOptions& opts) {
  NormResult res;
  if (blocks.empty()) {
    res.converged = true;
    return res;
  }

  auto cmp = [](const Interval& x, const Interval& y) { return x.ub < y.ub; };
  std::priority_queue<Interval, std::vector<Interval>, decltype(cmp)> queue(cmp);

  double lower = 0.0;
  long evals = 0;
  const double two_pi = 2.0 * std::numbers::pi;

  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const LaurentBlock& blk = blocks[bi];
    const int grid = std::max(8, opts.grid_start);
    std::vector<double> vals(static_cast<std::size_t>(grid));
    for (int g = 0; g < grid; ++g) {
      vals[static_cast<std::size_t>(g)] = blk.eval(two_pi * g / grid);
      ++evals;
      lower = std::max(lower, vals[static_cast<std::size_t>(g)]);
    }
    for (int g = 0; g < grid; ++g) {
      const double a = two_pi * g / grid;
      const double b = two_pi * (g + 1) / grid;
      const double va = vals[static_cast<std::size_t>(g)];
      const double vb = vals[static_cast<std::size_t>((g + 1) % grid)];
      queue.push(Interval{static_cast<int>(bi), a, b, va, vb,
                          interval_upper(blk, a, b, va, vb)});
    }
  }

  double upper = lower;
  while (!queue.empty()) {
    const Interval top = queue.top();
    upper = std::max(lower, top.ub);
    if (top.ub <= lower + tol) break;
    if (evals >= opts.max_symbol_evals) break;
    queue.pop();
    const LaurentBlock& blk = blocks[static_cast<std::size_t>(top.block)];
    const double mid = 0.5 * (top.a + top.b);
    const double vm = blk.eval(mid);
    ++evals;
    lower = std::max(lower, vm);
    queue.push(Interval{top.block, top.a, mid, top.va, vm, interval_upper(blk, top.a, mid, top.va, vm)});
    queue.push(Interval{top.block, mid, top.b, vm, top.vb, interval_upper(blk, mid, top.b, vm, top.vb)});
  }
  if (queue.empty()) upper = lower;

  res.value = lower;
  res.lower_bound = lower;
  res.upper_bound = std::max(lower, upper);
  res.converged = (res.upper_bound - res.lower_bound) <= tol;
  res.effort.grid_evals = evals;
  return res;
}

// The regular pair (pi_hat, U) here is right covariant, so a right element
// c (x) d_n lands on pi_hat(c) U^n while a left element d_n (x) c lands on
// (U*)^n pi_hat(c); the left envelope route therefore reflects degrees.
CrossedElement reflect(const CrossedElement& e) {
  CrossedElement out = crossed_zero(e.sys);
  for (const auto& [n, f] : e.coeffs) out.coeffs.emplace(-n, f);
  return out;
}

std::vector<LaurentBlock> blocks_from_symbol(const SymbolOperator& sym) {
  std::vector<LaurentBlock> blocks;
  blocks.reserve(sym.blocks.size());
  for (const OrbitSymbol& orb : sym.blocks) blocks.push_back(make_block(orb.coeff, orb.length()));
  return blocks;
}

NormResult symbol_norm_sided(const CrossedElement& e, Side side, double tol,
                             const NormOptions& opts) {
  require_permutation(e.sys);
  if (e.is_zero()) return NormResult{0.0, 0.0, 0.0, true, {}};
  const SymbolOperator sym =
      side == Side::left ? symbol_rep(e.sys, e.coeffs) : symbol_rep_right(e.sys, e.coeffs);
  return sup_norm_circle(blocks_from_symbol(sym), tol, opts);
}

}  // namespace

NormResult symbol_norm(const CrossedElement& e, double tol, const NormOptions& opts) {
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  return symbol_norm_sided(e, Side::left, tol, opts);
}

// ---------------------------------------------------------------------------
// Shift engines
// ---------------------------------------------------------------------------

namespace {

struct ShiftJob {
  int units = 0;
  std::vector<int> depth_hint;
  std::function<BandedBlockOperator(int unit, int depth)> build;
};

NormResult shift_engine(const ShiftJob& job, double upper, double tol, const NormOptions& opts) {
  NormResult res;
  res.upper_bound = upper;
  if (job.units == 0) {
    res.converged = true;
    return res;
  }

  std::vector<Eigen::VectorXcd> carry(static_cast<std::size_t>(job.units));
  std::vector<double> unit_best(static_cast<std::size_t>(job.units), 0.0);
  std::vector<double> history;
  double lower = 0.0;
  int depth = std::max(2, opts.start_depth);
  int round = 0;

  while (true) {
    double level = 0.0;
    for (int u = 0; u < job.units; ++u) {
      const int d = std::max(depth, job.depth_hint[static_cast<std::size_t>(u)]);
      const BandedBlockOperator op = job.build(u, d);
      std::vector<Eigen::VectorXcd> seeds;
      if (carry[static_cast<std::size_t>(u)].size() > 0) seeds.push_back(carry[static_cast<std::size_t>(u)]);
      const unsigned salt = opts.rng_seed + 977u * static_cast<unsigned>(u) + static_cast<unsigned>(depth);
      LowerBoundResult lb = spectral_norm_lower(op, seeds, opts.lanczos_iters, opts.lanczos_restarts, salt);
      // a fresh random start guards against a carried vector that went stale
      if (round < 2 || lb.value + 1e-12 < unit_best[static_cast<std::size_t>(u)]) {
        LowerBoundResult lb2 =
            spectral_norm_lower(op, {}, opts.lanczos_iters, opts.lanczos_restarts, salt ^ 0x9e3779b9u);
        if (lb2.value > lb.value) lb = std::move(lb2);
      }
      unit_best[static_cast<std::size_t>(u)] = std::max(unit_best[static_cast<std::size_t>(u)], lb.value);
      carry[static_cast<std::size_t>(u)] = lb.best_vector;
      level = std::max(level, lb.value);
    }
    lower = std::max(lower, level);
    history.push_back(lower);
    res.effort.depth = depth;
    ++round;

    const std::size_t k = history.size();
    const bool cauchy = k >= 3 && (history[k - 1] - history[k - 2]) < tol &&
                        (history[k - 2] - history[k - 3]) < tol;
    if (cauchy) break;
    if (2 * depth > opts.max_depth) break;
    depth *= 2;
  }

  res.lower_bound = lower;
  res.value = lower;
  // Richardson step under the observed geometric decay of the increments.
  if (history.size() >= 3) {
    const double d1 = history[history.size() - 1] - history[history.size() - 2];
    const double d0 = history[history.size() - 2] - history[history.size() - 3];
    if (d0 > 0.0 && d1 > 0.0) {
      const double r = d1 / d0;
      if (r > 0.05 && r < 0.7) res.value = lower + d1 * r / (1.0 - r);
    }
  }
  res.upper_bound = std::max(res.upper_bound, res.lower_bound);
  res.value = std::clamp(res.value, res.lower_bound, res.upper_bound);
  res.converged = (res.upper_bound - res.lower_bound) <= tol;
  return res;
}

std::vector<int> shift_depth_hints(const FiniteSystem& sys, int degree) {
  const OrbitData data = orbit_data(sys);
  std::vector<int> hints(static_cast<std::size_t>(sys.n));
  for (int x = 0; x < sys.n; ++x)
    hints[static_cast<std::size_t>(x)] =
        data.preperiod[static_cast<std::size_t>(x)] + 8 * data.period_of(x) * (degree + 1);
  return hints;
}

// Per-point weighted-shift block of a left element.
BandedBlockOperator left_block(const FiniteSystem& sys, const Poly& f, int x, int depth) {
  BandedBlockOperator op;
  op.nu = 1;
  op.block_dim = depth;
  for (const auto& [n, c] : f.coeffs) {
    BandedBlockOperator::Band band{0, 0, n, std::vector<Cplx>(static_cast<std::size_t>(depth))};
    int y = x;
    for (int m = 0; m < depth; ++m) {
      band.vals[static_cast<std::size_t>(m)] = c[static_cast<std::size_t>(y)];
      y = sys.apply(y);
    }
    op.bands.push_back(std::move(band));
  }
  return op;
}

// Per-point block of a right element: entry (m-n, m) = c_n(phi^{m-n}(x)).
BandedBlockOperator right_block(const FiniteSystem& sys, const Poly& f, int x, int depth) {
  BandedBlockOperator op;
  op.nu = 1;
  op.block_dim = depth;
  for (const auto& [n, c] : f.coeffs) {
    BandedBlockOperator::Band band{0, 0, -n, std::vector<Cplx>(static_cast<std::size_t>(depth))};
    int y = x;
    for (int m = n; m < depth; ++m) {
      band.vals[static_cast<std::size_t>(m)] = c[static_cast<std::size_t>(y)];
      y = sys.apply(y);
    }
    op.bands.push_back(std::move(band));
  }
  return op;
}

double symbol_upper_if_permutation(const FiniteSystem& sys, const Poly& f, Side route_side,
                                   double tol, const NormOptions& opts) {
  if (!sys.is_permutation()) return std::numeric_limits<double>::infinity();
  const CrossedElement e = envelope_element(sys, f);
  const NormResult s = route_side == Side::left
                           ? symbol_norm_sided(reflect(e), Side::left, 0.5 * tol, opts)
                           : symbol_norm_sided(e, Side::right, 0.5 * tol, opts);
  return s.upper_bound;
}

}  // namespace

NormResult shift_norm(const FiniteSystem& sys, const Poly& f, double tol, const NormOptions& opts) {
  validate(sys);
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  if (f.side != Side::left) throw std::invalid_argument("shift_norm expects a left element");
  if (f.is_zero()) return NormResult{0.0, 0.0, 0.0, true, {}};

  ShiftJob job;
  job.units = sys.n;
  job.depth_hint = shift_depth_hints(sys, f.max_degree());
  job.build = [&](int x, int depth) { return left_block(sys, f, x, depth); };

  const double upper = std::min(ell1_norm(f), symbol_upper_if_permutation(sys, f, Side::left, tol, opts));
  return shift_engine(job, upper, tol, opts);
}

NormResult right_shift_norm(const FiniteSystem& sys, const Poly& f, double tol,
                            const NormOptions& opts) {
  validate(sys);
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  if (f.side != Side::right) throw std::invalid_argument("right_shift_norm expects a right element");
  if (f.is_zero()) return NormResult{0.0, 0.0, 0.0, true, {}};

  ShiftJob job;
  job.units = sys.n;
  job.depth_hint = shift_depth_hints(sys, f.max_degree());
  job.build = [&](int x, int depth) { return right_block(sys, f, x, depth); };

  const double upper = std::min(ell1_norm(f), symbol_upper_if_permutation(sys, f, Side::right, tol, opts));
  return shift_engine(job, upper, tol, opts);
}

NormResult semicrossed_norm(const FiniteSystem& sys, const Poly& f, PairKind kind, double tol,
                            const NormOptions& opts) {
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  if (f.side == Side::left) {
    switch (kind) {
      case PairKind::contractive:
      case PairKind::isometric:
        return shift_norm(sys, f, tol, opts);
      case PairKind::co_isometric:
      case PairKind::unitary:
        return symbol_norm_sided(reflect(envelope_element(sys, f)), Side::left, tol, opts);
    }
  } else {
    switch (kind) {
      case PairKind::contractive:
      case PairKind::co_isometric:
        return right_shift_norm(sys, f, tol, opts);
      case PairKind::isometric:
      case PairKind::unitary:
        return symbol_norm_sided(envelope_element(sys, f), Side::right, tol, opts);
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Matrix level
// ---------------------------------------------------------------------------

namespace {

bool shift_route(Side side, PairKind kind) {
  return side == Side::left
             ? (kind == PairKind::contractive || kind == PairKind::isometric)
             : (kind == PairKind::contractive || kind == PairKind::co_isometric);
}

// l1 upper bound at matrix level: the norm of the entrywise-norm matrix.
double matrix_ell1_upper(const MatPoly& m) {
  Eigen::MatrixXcd bound(m.nu, m.nu);
  for (int i = 0; i < m.nu; ++i)
    for (int j = 0; j < m.nu; ++j) bound(i, j) = ell1_norm(m.at(i, j));
  return spectral_norm_dense(bound);
}

std::vector<LaurentBlock> matrix_symbol_blocks(const FiniteSystem& sys, const MatPoly& m) {
  const DirectLimit lim = direct_limit(sys);

  // Per-entry orbit symbols; all share the orbit decomposition of (E, sigma).
  std::vector<SymbolOperator> entry_syms;
  entry_syms.reserve(m.entries.size());
  for (const Poly& entry : m.entries) {
    const CrossedElement restricted = envelope_element(sys, entry);
    entry_syms.push_back(m.side == Side::left
                             ? symbol_rep(lim.system, reflect(restricted).coeffs)
                             : symbol_rep_right(lim.system, restricted.coeffs));
  }

  const std::size_t orbit_count = entry_syms.front().blocks.size();
  std::vector<LaurentBlock> blocks;
  for (std::size_t oi = 0; oi < orbit_count; ++oi) {
    const int p = entry_syms.front().blocks[oi].length();
    std::map<int, Eigen::MatrixXcd> coeff;
    for (int i = 0; i < m.nu; ++i) {
      for (int j = 0; j < m.nu; ++j) {
        const OrbitSymbol& orb = entry_syms[static_cast<std::size_t>(i * m.nu + j)].blocks[oi];
        for (const auto& [n, c] : orb.coeff) {
          auto [it, inserted] = coeff.try_emplace(n, Eigen::MatrixXcd::Zero(m.nu * p, m.nu * p));
          it->second.block(i * p, j * p, p, p) += c;
        }
      }
    }
    blocks.push_back(make_block(coeff, m.nu * p));
  }
  return blocks;
}

}  // namespace

NormResult matrix_norm(const FiniteSystem& sys, const MatPoly& m, PairKind kind, double tol,
                       const NormOptions& opts) {
  validate(sys);
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  if (m.nu <= 0) throw std::invalid_argument("matrix order must be positive");
  for (const Poly& entry : m.entries)
    if (entry.side != m.side || entry.sys != m.sys)
      throw std::invalid_argument("matrix entries must share one side and system");

  if (!shift_route(m.side, kind)) return sup_norm_circle(matrix_symbol_blocks(sys, m), tol, opts);

  int degree = 0;
  bool all_zero = true;
  for (const Poly& entry : m.entries) {
    degree = std::max(degree, entry.max_degree());
    all_zero = all_zero && entry.is_zero();
  }
  if (all_zero) return NormResult{0.0, 0.0, 0.0, true, {}};

  ShiftJob job;
  job.units = sys.n;
  job.depth_hint = shift_depth_hints(sys, degree);
  job.build = [&](int x, int depth) {
    BandedBlockOperator op;
    op.nu = m.nu;
    op.block_dim = depth;
    for (int i = 0; i < m.nu; ++i) {
      for (int j = 0; j < m.nu; ++j) {
        for (const auto& [n, c] : m.at(i, j).coeffs) {
          BandedBlockOperator::Band band{i, j, m.side == Side::left ? n : -n,
                                         std::vector<Cplx>(static_cast<std::size_t>(depth))};
          if (m.side == Side::left) {
            int y = x;
            for (int mm = 0; mm < depth; ++mm) {
              band.vals[static_cast<std::size_t>(mm)] = c[static_cast<std::size_t>(y)];
              y = sys.apply(y);
            }
          } else {
            int y = x;
            for (int mm = n; mm < depth; ++mm) {
              band.vals[static_cast<std::size_t>(mm)] = c[static_cast<std::size_t>(y)];
              y = sys.apply(y);
            }
          }
          op.bands.push_back(std::move(band));
        }
      }
    }
    return op;
  };

  double upper = matrix_ell1_upper(m);
  if (sys.is_permutation()) {
    const NormResult s = sup_norm_circle(matrix_symbol_blocks(sys, m), 0.5 * tol, opts);
    upper = std::min(upper, s.upper_bound);
  }
  return shift_engine(job, upper, tol, opts);
}

}  // namespace semicross
