#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semicross/algebra.hpp"
#include "semicross/verify.hpp"

using namespace semicross;

namespace {
const Cplx I(0.0, 1.0);
}

TEST_CASE("alpha power") {
  const FiniteSystem collapse(2, {1, 1});
  CHECK(alpha_power(collapse, Fn{1.0, 0.0}, 0) == Fn{1.0, 0.0});
  CHECK(alpha_power(collapse, Fn{1.0, 0.0}, 1) == Fn{0.0, 0.0});

  const FiniteSystem cycle(3, {1, 2, 0});
  CHECK(alpha_power(cycle, Fn{1.0, 2.0, 3.0}, 2) == Fn{3.0, 1.0, 2.0});
}

TEST_CASE("multiplication follows the generator rules") {
  const FiniteSystem sys(2, {1, 1});

  SUBCASE("unit element") {
    std::mt19937_64 rng(7);
    for (Side side : {Side::left, Side::right}) {
      const Poly f = random_poly(rng, sys, side, 3);
      const Poly e = unit_poly(sys, side);
      CHECK(approx_equal(mul(e, f), f));
      CHECK(approx_equal(mul(f, e), f));
    }
  }

  SUBCASE("left rule at degree one") {
    const Fn c{Cplx(1.0, 1.0), Cplx(2.0)};
    const Fn y{Cplx(0.0), Cplx(0.0, 3.0)};
    const Poly prod = mul(monomial(sys, Side::left, 1, c), monomial(sys, Side::left, 1, y));
    REQUIRE(prod.coeffs.size() == 1);
    CHECK(prod.coeff(2) == pointwise_mul(alpha_power(sys, c, 1), y));
  }

  SUBCASE("right rule, worked example") {
    // (c (x) d_1) * (y (x) d_0) = (c alpha(y)) (x) d_1 with alpha(y) = (4,4)
    const Poly prod = mul(monomial(sys, Side::right, 1, Fn{1.0, 2.0}),
                          monomial(sys, Side::right, 0, Fn{3.0, 4.0}));
    REQUIRE(prod.coeffs.size() == 1);
    CHECK(prod.coeff(1) == Fn{Cplx(4.0), Cplx(8.0)});
  }

  SUBCASE("side mismatch throws") {
    CHECK_THROWS_AS(mul(unit_poly(sys, Side::left), unit_poly(sys, Side::right)),
                    std::invalid_argument);
  }
}

TEST_CASE("l1 norm") {
  const FiniteSystem sys(2, {1, 0});
  CHECK(ell1_norm(zero_poly(sys, Side::left)) == 0.0);
  CHECK(ell1_norm(unit_poly(FiniteSystem(3, {0, 1, 2}), Side::left)) == 1.0);

  Poly p = monomial(sys, Side::left, 0, Fn{Cplx(3.0), -4.0 * I});
  p = add(p, monomial(sys, Side::left, 2, Fn{Cplx(0.0), Cplx(1.0)}));
  CHECK(ell1_norm(p) == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("sharp duality map") {
  const FiniteSystem sys(2, {1, 1});
  const Fn c{Cplx(1.0, 2.0), Cplx(-3.0, 0.5)};

  SUBCASE("generator rule") {
    const Poly s = sharp(monomial(sys, Side::left, 1, c));
    CHECK(s.side == Side::right);
    REQUIRE(s.coeffs.size() == 1);
    CHECK(s.coeff(1) == conj(c));
  }

  SUBCASE("involution on random elements") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
      const Poly f = random_poly(rng, sys, Side::left, 4);
      CHECK(approx_equal(sharp(sharp(f)), f));
      CHECK(ell1_norm(sharp(f)) == doctest::Approx(ell1_norm(f)).epsilon(1e-14));
    }
  }

  SUBCASE("anti-multiplicative, worked example") {
    const Fn cc{Cplx(1.0, 1.0), Cplx(2.0)};
    const Fn yy{Cplx(0.0), Cplx(0.0, 3.0)};
    const Poly lhs = sharp(mul(monomial(sys, Side::left, 1, cc), monomial(sys, Side::left, 1, yy)));
    const Poly rhs = mul(monomial(sys, Side::right, 1, conj(yy)),
                         monomial(sys, Side::right, 1, conj(cc)));
    CHECK(approx_equal(lhs, rhs));
    REQUIRE(lhs.coeffs.size() == 1);
    CHECK(lhs.coeff(2) == Fn{Cplx(0.0), Cplx(0.0, -6.0)});
  }
}

TEST_CASE("representation is multiplicative on compressions") {
  // For analytic elements the compression of a product equals the product of
  // the compressions, which cross-checks mul against an independent model.
  std::mt19937_64 rng(23);
  for (const FiniteSystem& sys : {FiniteSystem(2, {1, 1}), FiniteSystem(3, {1, 2, 0})}) {
    for (int i = 0; i < 5; ++i) {
      const Poly f = random_poly(rng, sys, Side::left, 3);
      const Poly g = random_poly(rng, sys, Side::left, 3);
      const int depth = f.max_degree() + g.max_degree() + 4;
      const Eigen::MatrixXcd lhs = orbit_shift_rep(sys, mul(f, g), depth).mat;
      const Eigen::MatrixXcd rhs =
          orbit_shift_rep(sys, f, depth).mat * orbit_shift_rep(sys, g, depth).mat;
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("matrix sharp transposes") {
  const FiniteSystem sys(2, {1, 1});
  std::mt19937_64 rng(31);
  const MatPoly m = random_matpoly(rng, sys, Side::left, 2, 2);
  const MatPoly s = sharp_mat(m);
  CHECK(s.side == Side::right);
  CHECK(approx_equal(s.at(0, 1), sharp(m.at(1, 0))));
  const MatPoly back = sharp_mat(s);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(approx_equal(back.at(i, j), m.at(i, j)));
}
