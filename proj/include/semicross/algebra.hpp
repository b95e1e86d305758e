// The l1 convolution algebras over a finite system, one per multiplication
// side, their matrix levels, and the sharp duality map.

#pragma once

#include <complex>
#include <map>
#include <vector>

#include "semicross/dynsys.hpp"

namespace semicross {

using Cplx = std::complex<double>;

/// A complex function on X, stored pointwise (length = system size).
using Fn = std::vector<Cplx>;

enum class Side { left, right };
enum class PairKind { contractive, isometric, co_isometric, unitary };

const char* to_string(Side side);
const char* to_string(PairKind kind);

/// Dual pairing of kinds under sharp: contractive and unitary are
/// self-dual, isometric and co-isometric swap.
PairKind dual_kind(PairKind kind);

double sup_norm(const Fn& f);
Fn conj(const Fn& f);
Fn pointwise_mul(const Fn& a, const Fn& b);
Fn ones(int n);

/// result(x) = f(phi^m(x)), the m-th power of the transpose action.
Fn alpha_power(const FiniteSystem& sys, const Fn& f, int m);

/// Finitely supported element of the convolution algebra, stored sparsely
/// by degree. Exact-zero coefficients are never kept. Left elements follow
/// the rule (d_n (x) c)(d_m (x) y) = d_{n+m} (x) (alpha^m(c) y); right
/// elements follow (c (x) d_n)(y (x) d_m) = (c alpha^n(y)) (x) d_{n+m}.
struct Poly {
  FiniteSystem sys;
  Side side = Side::left;
  std::map<int, Fn> coeffs;

  int max_degree() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }
  bool is_zero() const { return coeffs.empty(); }
  Fn coeff(int deg) const;
};

/// Drops exact-zero coefficients in place.
void canonicalize(Poly& p);

Poly zero_poly(const FiniteSystem& sys, Side side);
Poly unit_poly(const FiniteSystem& sys, Side side);
/// The single term in degree `deg` with coefficient `value`.
Poly monomial(const FiniteSystem& sys, Side side, int deg, Fn value);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly scale(Cplx lambda, const Poly& a);
Poly mul(const Poly& a, const Poly& b);

/// Sum over degrees of the sup norm of the coefficient.
double ell1_norm(const Poly& p);

/// The antilinear isometry (d_n (x) c)^# = c* (x) d_n between the two sides.
/// Involutive and anti-multiplicative: (F G)^# = G^# F^#.
Poly sharp(const Poly& p);

bool approx_equal(const Poly& a, const Poly& b, double tol = 1e-12);

/// Square grid of same-side polynomials over one system, row-major.
struct MatPoly {
  FiniteSystem sys;
  Side side = Side::left;
  int nu = 0;
  std::vector<Poly> entries;

  const Poly& at(int i, int j) const { return entries[static_cast<std::size_t>(i * nu + j)]; }
  Poly& at(int i, int j) { return entries[static_cast<std::size_t>(i * nu + j)]; }
};

MatPoly zero_mat(const FiniteSystem& sys, Side side, int nu);

/// Entrywise sharp followed by the transpose; the matrix-level duality map.
MatPoly sharp_mat(const MatPoly& m);

}  // namespace semicross
