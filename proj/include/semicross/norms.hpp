// Norm engines: convergent truncated-shift norms, certified sup-norms of
// crossed-product symbols, matrix-level norms, Fourier coefficients and
// Fejer sums.
//
// Every engine reports a bracket [lower_bound, upper_bound] containing the
// true norm. Lower bounds come from compressions (Rayleigh quotients of
// finite sections, nondecreasing in the depth); upper bounds come from the
// l1 norm, and from the certified circle sup when the symbol route applies.
// `converged` means the bracket closed to within the requested tolerance;
// `value` always lies inside the bracket.

#pragma once

#include <map>
#include <optional>

#include "semicross/algebra.hpp"
#include "semicross/reps.hpp"

namespace semicross {

struct NormOptions {
  int start_depth = 64;
  int max_depth = 1 << 14;
  int grid_start = 512;
  long max_symbol_evals = 400000;
  int lanczos_iters = 90;
  int lanczos_restarts = 2;
  unsigned rng_seed = 0x5eed;
};

struct NormEffort {
  int depth = 0;        // deepest shift compression used
  long grid_evals = 0;  // symbol evaluations on the circle
};

struct NormResult {
  double value = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  bool converged = false;
  NormEffort effort;
};

/// Element of the crossed product over a permutation system, with finite
/// Laurent support: sum_n U^n pi_hat(f_n).
struct CrossedElement {
  FiniteSystem sys;
  std::map<int, Fn> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int min_degree() const { return coeffs.empty() ? 0 : coeffs.begin()->first; }
  int max_degree() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }
  int max_abs_degree() const;
};

CrossedElement crossed_zero(const FiniteSystem& perm);
CrossedElement crossed_monomial(const FiniteSystem& perm, int deg, Fn value);
void canonicalize(CrossedElement& e);

CrossedElement ce_add(const CrossedElement& a, const CrossedElement& b);
CrossedElement ce_sub(const CrossedElement& a, const CrossedElement& b);
CrossedElement ce_scale(Cplx lambda, const CrossedElement& a);
/// (U^n pi(f)) (U^m pi(g)) = U^{n+m} pi((f . sigma^{-m}) g).
CrossedElement ce_mul(const CrossedElement& a, const CrossedElement& b);
/// (U^n pi(f))* = U^{-n} pi(conj(f) . sigma^{n}).
CrossedElement ce_adjoint(const CrossedElement& a);

/// Degree-n Fourier coefficient E_n.
Fn fourier_coeff(const CrossedElement& e, int n);
/// Conditional expectation onto the coefficient algebra: E_0.
Fn cond_expectation(const CrossedElement& e);
/// Cesaro mean with triangular weights 1 - |n|/(N+1) on |n| <= N.
CrossedElement fejer_sum(const CrossedElement& e, int order);
/// Plain partial Fourier sum over |n| <= N; recovers the element exactly
/// once N reaches the support.
CrossedElement partial_sum(const CrossedElement& e, int order);

/// Restriction of a polynomial to the eventual image, as an element of the
/// crossed product over the direct-limit permutation system. This is the
/// image of the element under the envelope route (the kernel of that route
/// is exactly the radical part).
CrossedElement envelope_element(const FiniteSystem& sys, const Poly& f);

/// Certified sup over the circle of the orbit symbols, reported per the
/// bracket contract above. Refines an initial uniform grid adaptively; an
/// interval with endpoint values v and length h cannot exceed
/// max(v) + min(C1 h/2, C2 h^2/8) with C1 = sum |n| ||C_n||,
/// C2 = sum n^2 ||C_n||.
NormResult symbol_norm(const CrossedElement& e, double tol, const NormOptions& opts = {});

/// Norm of the left shift representation: lower bounds from per-point
/// weighted-shift compressions at doubling depths (stopping when two
/// consecutive doublings move the value by less than tol), upper bound
/// min(l1, symbol bound when the system is a permutation).
NormResult shift_norm(const FiniteSystem& sys, const Poly& f, double tol,
                      const NormOptions& opts = {});

/// Mirror engine for right elements, built from sum_n pi~(c_n)(S*)^n.
NormResult right_shift_norm(const FiniteSystem& sys, const Poly& f, double tol,
                            const NormOptions& opts = {});

/// Norm of an element in the semicrossed product of the given pair kind.
/// Left contractive/isometric and right contractive/co-isometric go through
/// the shift engines; the remaining kinds factor through the crossed product
/// over the direct-limit system.
NormResult semicrossed_norm(const FiniteSystem& sys, const Poly& f, PairKind kind, double tol,
                            const NormOptions& opts = {});

/// Matrix-level norm with the same routing, blocks assembled before the
/// singular-value computation.
NormResult matrix_norm(const FiniteSystem& sys, const MatPoly& m, PairKind kind, double tol,
                       const NormOptions& opts = {});

}  // namespace semicross
