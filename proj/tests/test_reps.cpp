#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semicross/norms.hpp"
#include "semicross/reps.hpp"
#include "semicross/verify.hpp"

using namespace semicross;

TEST_CASE("orbit shift representation") {
  SUBCASE("unit maps to the identity") {
    const FiniteSystem sys(3, {1, 2, 0});
    const TruncatedOperator op = orbit_shift_rep(sys, unit_poly(sys, Side::left), 4);
    CHECK((op.mat - Eigen::MatrixXcd::Identity(12, 12)).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("one-point shift is nilpotent") {
    const FiniteSystem pt(1, {0});
    const TruncatedOperator op = orbit_shift_rep(pt, monomial(pt, Side::left, 1, Fn{1.0}), 3);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
    expected(1, 0) = expected(2, 1) = 1.0;
    CHECK((op.mat - expected).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("orbit weights follow the forward orbit") {
    const FiniteSystem sys(2, {1, 1});
    const TruncatedOperator op =
        orbit_shift_rep(sys, monomial(sys, Side::left, 0, Fn{5.0, 1.0}), 4);
    Eigen::VectorXcd diag = op.mat.diagonal();
    CHECK(diag(0) == Cplx(5.0));
    for (int i = 1; i < 8; ++i) CHECK(diag(i) == Cplx(1.0));
    CHECK(op.mat.cwiseAbs().sum() == doctest::Approx(12.0));  // diagonal only
  }

  SUBCASE("depth guard") {
    const FiniteSystem pt(1, {0});
    CHECK_THROWS_AS(orbit_shift_rep(pt, monomial(pt, Side::left, 3, Fn{1.0}), 3),
                    std::invalid_argument);
  }
}

TEST_CASE("right orbit representation") {
  const FiniteSystem pt(1, {0});
  SUBCASE("unit") {
    const TruncatedOperator op = right_orbit_rep(pt, unit_poly(pt, Side::right), 3);
    CHECK((op.mat - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("adjoint shift") {
    const TruncatedOperator op = right_orbit_rep(pt, monomial(pt, Side::right, 1, Fn{1.0}), 3);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
    expected(0, 1) = expected(1, 2) = 1.0;
    CHECK((op.mat - expected).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("equals the adjoint of the sharp image") {
    std::mt19937_64 rng(41);
    for (const FiniteSystem& sys : {FiniteSystem(2, {1, 1}), FiniteSystem(3, {1, 2, 0})}) {
      for (int i = 0; i < 5; ++i) {
        const Poly f = random_poly(rng, sys, Side::right, 3);
        const int depth = f.max_degree() + 5;
        const Eigen::MatrixXcd a = right_orbit_rep(sys, f, depth).mat;
        const Eigen::MatrixXcd b = orbit_shift_rep(sys, sharp(f), depth).mat.adjoint();
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-14);
      }
    }
  }
}

TEST_CASE("symbol representation") {
  SUBCASE("one point gives scalar Laurent polynomials") {
    const FiniteSystem pt(1, {0});
    const SymbolOperator sym = symbol_rep(pt, {{0, Fn{1.0}}, {1, Fn{1.0}}});
    REQUIRE(sym.blocks.size() == 1);
    const Cplx z(0.3, 0.7);
    CHECK(std::abs(sym.blocks[0].eval(z)(0, 0) - (1.0 + z)) < 1e-15);
  }

  SUBCASE("two-cycle block") {
    const FiniteSystem swap(2, {1, 0});
    const SymbolOperator sym = symbol_rep(swap, {{0, Fn{1.0, -1.0}}, {1, Fn{1.0, 1.0}}});
    REQUIRE(sym.blocks.size() == 1);
    const Cplx z = std::polar(1.0, 1.1);
    Eigen::MatrixXcd w(2, 2);
    w << 0, 1, 1, 0;
    Eigen::MatrixXcd expected = Eigen::Vector2cd(1.0, -1.0).asDiagonal();
    expected += z * w * Eigen::Matrix2cd(Eigen::Vector2cd(1.0, 1.0).asDiagonal());
    CHECK((sym.blocks[0].eval(z) - expected).cwiseAbs().maxCoeff() < 1e-15);
  }

  SUBCASE("covariance: conjugation by U acts as composition with sigma") {
    std::mt19937_64 rng(43);
    for (const FiniteSystem& sys :
         {FiniteSystem(3, {1, 2, 0}), FiniteSystem(4, {1, 0, 3, 2}), FiniteSystem(4, {2, 3, 1, 0})}) {
      const Fn c = random_fn(rng, sys.n);
      const CrossedElement u = crossed_monomial(sys, 1, ones(sys.n));
      const CrossedElement conjugated = ce_mul(ce_mul(u, crossed_monomial(sys, 0, c)), ce_adjoint(u));
      const CrossedElement expected = crossed_monomial(sys, 0, alpha_power(sys, c, 1));
      const SymbolOperator a = symbol_rep(sys, conjugated.coeffs);
      const SymbolOperator b = symbol_rep(sys, expected.coeffs);
      for (int g = 0; g < 8; ++g) {
        const Cplx z = std::polar(1.0, 0.7 * g);
        for (std::size_t blk = 0; blk < a.blocks.size(); ++blk)
          CHECK((a.blocks[blk].eval(z) - b.blocks[blk].eval(z)).cwiseAbs().maxCoeff() < 1e-14);
      }
    }
  }

  SUBCASE("the symbol is multiplicative and *-preserving") {
    std::mt19937_64 rng(59);
    const FiniteSystem sys(4, {1, 2, 3, 0});
    for (int i = 0; i < 5; ++i) {
      const CrossedElement a = random_crossed(rng, sys, 2);
      const CrossedElement b = random_crossed(rng, sys, 2);
      const SymbolOperator sa = symbol_rep(sys, a.coeffs);
      const SymbolOperator sb = symbol_rep(sys, b.coeffs);
      const SymbolOperator sab = symbol_rep(sys, ce_mul(a, b).coeffs);
      const SymbolOperator sas = symbol_rep(sys, ce_adjoint(a).coeffs);
      for (int g = 0; g < 6; ++g) {
        const Cplx z = std::polar(1.0, 0.9 * g + 0.2);
        for (std::size_t blk = 0; blk < sa.blocks.size(); ++blk) {
          const Eigen::MatrixXcd prod = sa.blocks[blk].eval(z) * sb.blocks[blk].eval(z);
          CHECK((sab.blocks[blk].eval(z) - prod).cwiseAbs().maxCoeff() < 1e-12);
          const Eigen::MatrixXcd adj = sa.blocks[blk].eval(z).adjoint();
          CHECK((sas.blocks[blk].eval(z) - adj).cwiseAbs().maxCoeff() < 1e-12);
        }
      }
    }
  }

  SUBCASE("permutation guard") {
    CHECK_THROWS_AS(symbol_rep(FiniteSystem(2, {1, 1}), {{0, Fn{1.0, 1.0}}}),
                    std::invalid_argument);
  }
}

TEST_CASE("regular representation oracle") {
  SUBCASE("unit coefficient gives the identity") {
    const FiniteSystem sys(2, {1, 0});
    const TruncatedOperator op = regular_rep_oracle(sys, {{0, ones(2)}}, 2);
    CHECK((op.mat - Eigen::MatrixXcd::Identity(10, 10)).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("one point, first power, window one") {
    const FiniteSystem pt(1, {0});
    const TruncatedOperator op = regular_rep_oracle(pt, {{1, Fn{1.0}}}, 1);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
    expected(1, 0) = expected(2, 1) = 1.0;
    CHECK((op.mat - expected).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("window compressions are monotone") {
    std::mt19937_64 rng(47);
    const FiniteSystem sys(3, {1, 2, 0});
    const CrossedElement e = random_crossed(rng, sys, 3);
    double prev = 0.0;
    for (int window : {2, 4, 8, 16}) {
      const double v = test::dense_sigma_max(regular_rep_oracle(sys, e.coeffs, window).mat);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("shift compressions are monotone in depth") {
  std::mt19937_64 rng(53);
  const FiniteSystem sys(4, {1, 2, 3, 3});
  const Poly f = random_poly(rng, sys, Side::left, 3);
  double prev = 0.0;
  for (int depth = f.max_degree() + 1; depth <= f.max_degree() + 17; depth += 4) {
    const double v = test::dense_sigma_max(orbit_shift_rep(sys, f, depth).mat);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("pair validation") {
  SUBCASE("orbit-shift pair: exact covariance, boundary-only isometry defect") {
    const FiniteSystem sys(3, {1, 2, 2});
    CovariantPair pair = orbit_shift_pair(sys, 8, 2);
    const PairReport rep = validate_pair(pair, sys);
    CHECK(rep.covariance_residual <= 1e-14);
    CHECK(rep.projection_residual <= 1e-14);
    CHECK(rep.unitality_residual <= 1e-14);
    CHECK(rep.accepted);

    // without the inner window the truncation boundary breaks isometry
    pair.inner.clear();
    const PairReport full = validate_pair(pair, sys);
    CHECK(full.kind_residual == doctest::Approx(1.0));
    CHECK_FALSE(full.accepted);
  }

  SUBCASE("regular-rep pair is unitary inside the window") {
    const FiniteSystem sys(3, {1, 2, 0});
    const PairReport rep = validate_pair(regular_rep_pair(sys, 5, 1), sys);
    CHECK(rep.accepted);
    CHECK(rep.covariance_residual <= 1e-14);
  }

  SUBCASE("broken covariance is caught") {
    const FiniteSystem sys(3, {1, 2, 0});
    CovariantPair pair = orbit_shift_pair(sys, 6, 2);
    std::swap(pair.proj[0], pair.proj[1]);  // misaligns pi against phi
    const PairReport rep = validate_pair(pair, sys);
    CHECK(rep.covariance_residual > 0.5);
    CHECK_FALSE(rep.accepted);
  }

  SUBCASE("dimension mismatch throws") {
    const FiniteSystem sys(2, {1, 0});
    CovariantPair pair = orbit_shift_pair(sys, 4, 1);
    pair.proj.pop_back();
    CHECK_THROWS_AS(validate_pair(pair, sys), std::invalid_argument);
  }
}
