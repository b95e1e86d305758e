#include "semicross/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace semicross {

const char* to_string(Side side) { return side == Side::left ? "left" : "right"; }

const char* to_string(PairKind kind) {
  switch (kind) {
    case PairKind::contractive: return "contractive";
    case PairKind::isometric: return "isometric";
    case PairKind::co_isometric: return "co-isometric";
    case PairKind::unitary: return "unitary";
  }
  return "?";
}

PairKind dual_kind(PairKind kind) {
  switch (kind) {
    case PairKind::isometric: return PairKind::co_isometric;
    case PairKind::co_isometric: return PairKind::isometric;
    default: return kind;
  }
}

double sup_norm(const Fn& f) {
  double best = 0.0;
  for (const Cplx& v : f) best = std::max(best, std::abs(v));
  return best;
}

Fn conj(const Fn& f) {
  Fn out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::conj(f[i]);
  return out;
}

Fn pointwise_mul(const Fn& a, const Fn& b) {
  Fn out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

Fn ones(int n) { return Fn(static_cast<std::size_t>(n), Cplx(1.0, 0.0)); }

Fn alpha_power(const FiniteSystem& sys, const Fn& f, int m) {
  if (static_cast<int>(f.size()) != sys.n)
    throw std::invalid_argument("function length does not match system size");
  if (m < 0) throw std::invalid_argument("alpha power must be nonnegative");
  Fn out(f.size());
  for (int x = 0; x < sys.n; ++x) out[static_cast<std::size_t>(x)] = f[static_cast<std::size_t>(sys.apply_iter(x, m))];
  return out;
}

Fn Poly::coeff(int deg) const {
  auto it = coeffs.find(deg);
  return it != coeffs.end() ? it->second : Fn(static_cast<std::size_t>(sys.n), Cplx(0.0));
}

namespace {

bool exactly_zero(const Fn& f) {
  return std::all_of(f.begin(), f.end(), [](const Cplx& v) { return v == Cplx(0.0); });
}

void check_compatible(const Poly& a, const Poly& b) {
  if (a.side != b.side) throw std::invalid_argument("side mismatch");
  if (a.sys != b.sys) throw std::invalid_argument("system mismatch");
}

}  // namespace

void canonicalize(Poly& p) {
  for (auto it = p.coeffs.begin(); it != p.coeffs.end();) {
    if (exactly_zero(it->second))
      it = p.coeffs.erase(it);
    else
      ++it;
  }
}

Poly zero_poly(const FiniteSystem& sys, Side side) { return Poly{sys, side, {}}; }

Poly unit_poly(const FiniteSystem& sys, Side side) {
  return monomial(sys, side, 0, ones(sys.n));
}

Poly monomial(const FiniteSystem& sys, Side side, int deg, Fn value) {
  if (deg < 0) throw std::invalid_argument("degree must be nonnegative");
  if (static_cast<int>(value.size()) != sys.n)
    throw std::invalid_argument("coefficient length does not match system size");
  Poly p{sys, side, {}};
  if (!exactly_zero(value)) p.coeffs.emplace(deg, std::move(value));
  return p;
}

Poly add(const Poly& a, const Poly& b) {
  check_compatible(a, b);
  Poly out = a;
  for (const auto& [deg, fn] : b.coeffs) {
    auto [it, inserted] = out.coeffs.emplace(deg, fn);
    if (!inserted)
      for (std::size_t i = 0; i < fn.size(); ++i) it->second[i] += fn[i];
  }
  canonicalize(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, scale(Cplx(-1.0), b)); }

Poly scale(Cplx lambda, const Poly& a) {
  Poly out = a;
  for (auto& [deg, fn] : out.coeffs)
    for (Cplx& v : fn) v *= lambda;
  canonicalize(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  check_compatible(a, b);
  Poly out = zero_poly(a.sys, a.side);
  for (const auto& [n, c] : a.coeffs) {
    for (const auto& [m, y] : b.coeffs) {
      // left: d_{n+m} (x) (alpha^m(c) y); right: (c alpha^n(y)) (x) d_{n+m}
      Fn term = (a.side == Side::left) ? pointwise_mul(alpha_power(a.sys, c, m), y)
                                       : pointwise_mul(c, alpha_power(a.sys, y, n));
      auto [it, inserted] = out.coeffs.emplace(n + m, term);
      if (!inserted)
        for (std::size_t i = 0; i < term.size(); ++i) it->second[i] += term[i];
    }
  }
  canonicalize(out);
  return out;
}

double ell1_norm(const Poly& p) {
  double total = 0.0;
  for (const auto& [deg, fn] : p.coeffs) total += sup_norm(fn);
  return total;
}

Poly sharp(const Poly& p) {
  Poly out{p.sys, p.side == Side::left ? Side::right : Side::left, {}};
  for (const auto& [deg, fn] : p.coeffs) out.coeffs.emplace(deg, conj(fn));
  return out;
}

bool approx_equal(const Poly& a, const Poly& b, double tol) {
  if (a.side != b.side || a.sys != b.sys) return false;
  const Poly diff = sub(a, b);
  for (const auto& [deg, fn] : diff.coeffs)
    if (sup_norm(fn) > tol) return false;
  return true;
}

MatPoly zero_mat(const FiniteSystem& sys, Side side, int nu) {
  MatPoly m{sys, side, nu, {}};
  m.entries.assign(static_cast<std::size_t>(nu) * static_cast<std::size_t>(nu), zero_poly(sys, side));
  return m;
}

MatPoly sharp_mat(const MatPoly& m) {
  MatPoly out = zero_mat(m.sys, m.side == Side::left ? Side::right : Side::left, m.nu);
  for (int i = 0; i < m.nu; ++i)
    for (int j = 0; j < m.nu; ++j) out.at(j, i) = sharp(m.at(i, j));
  return out;
}

}  // namespace semicross
