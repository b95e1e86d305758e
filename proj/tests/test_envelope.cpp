#include <doctest.h>

#include <random>

#include "semicross/envelope.hpp"
#include "semicross/verify.hpp"

using namespace semicross;

TEST_CASE("envelope descriptors follow the theorem table") {
  SUBCASE("injective: every side and kind names the same crossed product") {
    const FiniteSystem sys(3, {1, 2, 0});
    for (Side side : {Side::left, Side::right}) {
      for (PairKind kind : {PairKind::contractive, PairKind::isometric, PairKind::co_isometric,
                            PairKind::unitary}) {
        const EnvelopeDescriptor d = envelope_of(sys, side, kind);
        CHECK(d.shape == EnvelopeShape::crossed_product);
        CHECK(d.injective);
        CHECK(d.permutation_system == sys);
        CHECK(d.label == "crossed product M_3(C(T))");
      }
    }
  }

  SUBCASE("non-injective left contractive is a full corner over the tail") {
    const EnvelopeDescriptor d = envelope_of(FiniteSystem(2, {1, 1}), Side::left, PairKind::contractive);
    CHECK(d.shape == EnvelopeShape::full_corner);
    CHECK_FALSE(d.injective);
    CHECK(d.tail.base == FiniteSystem(2, {1, 1}));
    CHECK(d.tail.tail_count() == 1);
    CHECK(!d.projection.empty());
  }

  SUBCASE("non-injective left unitary collapses to the eventual image") {
    const EnvelopeDescriptor d = envelope_of(FiniteSystem(2, {1, 1}), Side::left, PairKind::unitary);
    CHECK(d.shape == EnvelopeShape::crossed_product);
    CHECK(d.permutation_system == FiniteSystem(1, {0}));
    CHECK(d.label == "crossed product C(T)");
  }

  SUBCASE("right side mirrors the pairing") {
    const FiniteSystem sys(4, {1, 2, 3, 3});
    CHECK(envelope_of(sys, Side::right, PairKind::contractive).shape == EnvelopeShape::full_corner);
    CHECK(envelope_of(sys, Side::right, PairKind::co_isometric).shape == EnvelopeShape::full_corner);
    CHECK(envelope_of(sys, Side::right, PairKind::isometric).shape == EnvelopeShape::crossed_product);
    CHECK(envelope_of(sys, Side::right, PairKind::unitary).shape == EnvelopeShape::crossed_product);
  }
}

TEST_CASE("fourier invariant ideals of permutations") {
  CHECK(fourier_invariant_ideals(FiniteSystem(3, {1, 2, 0})).empty());

  const auto id2 = fourier_invariant_ideals(FiniteSystem(2, {0, 1}));
  REQUIRE(id2.size() == 2);
  CHECK(id2[0].subset.points() == std::vector<int>{0});
  CHECK(id2[1].subset.points() == std::vector<int>{1});

  const auto mixed = fourier_invariant_ideals(FiniteSystem(3, {1, 0, 2}));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].subset.points() == std::vector<int>{0, 1});
  CHECK(mixed[1].subset.points() == std::vector<int>{2});

  CHECK_THROWS_AS(fourier_invariant_ideals(FiniteSystem(2, {1, 1})), std::invalid_argument);
}

TEST_CASE("minimality report") {
  SUBCASE("3-cycle: all four conditions hold") {
    const MinimalityReport r = minimality_report(FiniteSystem(3, {1, 2, 0}));
    CHECK(r.base_minimal);
    CHECK(r.tail_minimal);
    CHECK(r.limit_bi_minimal);
    CHECK(r.fourier_ideals_empty);
    CHECK(r.all_agree);
    CHECK(r.injective);
    CHECK(r.witnesses.empty());
  }
  SUBCASE("collapse: all four fail, tail ideal named") {
    const MinimalityReport r = minimality_report(FiniteSystem(2, {1, 1}));
    CHECK_FALSE(r.base_minimal);
    CHECK_FALSE(r.tail_minimal);
    CHECK_FALSE(r.limit_bi_minimal);
    CHECK_FALSE(r.fourier_ideals_empty);
    CHECK(r.all_agree);
    CHECK(!r.tail_note.empty());
    REQUIRE(!r.witnesses.empty());
    CHECK(r.witnesses.front().description.find("tail") != std::string::npos);
  }
  SUBCASE("identity on two points: witnesses from bi-invariant subsets") {
    const MinimalityReport r = minimality_report(FiniteSystem(2, {0, 1}));
    CHECK_FALSE(r.base_minimal);
    CHECK(r.all_agree);
    REQUIRE(r.witnesses.size() == 2);
    CHECK(r.witnesses[0].subset.points() == std::vector<int>{0});
  }
}

TEST_CASE("simplicity report") {
  SUBCASE("one-point identity: evaluation kernel in C(T)") {
    const SimplicityReport r = simplicity_report(FiniteSystem(1, {0}));
    CHECK_FALSE(r.simple);
    CHECK(r.witness.kind == IdealWitness::Kind::symbol_evaluation);
    CHECK(r.witness.z0 == Cplx(1.0));
    CHECK(r.witness_validated);
    CHECK(r.validation_residual <= 1e-10);
  }
  SUBCASE("3-cycle: evaluation kernel on the orbit block") {
    const SimplicityReport r = simplicity_report(FiniteSystem(3, {1, 2, 0}));
    CHECK_FALSE(r.simple);
    CHECK(r.witness.kind == IdealWitness::Kind::symbol_evaluation);
    CHECK(r.witness_validated);
  }
  SUBCASE("identity on two points: invariant subset witness") {
    const SimplicityReport r = simplicity_report(FiniteSystem(2, {0, 1}));
    CHECK_FALSE(r.simple);
    CHECK(r.witness.kind == IdealWitness::Kind::invariant_subset);
    CHECK(r.witness.subset.points() == std::vector<int>{0});
    CHECK(r.witness_validated);
  }
}

TEST_CASE("corner consistency") {
  const double tol = 1e-6;
  SUBCASE("surjective maps are trivially consistent") {
    const FiniteSystem sys(3, {1, 2, 0});
    const Poly f = monomial(sys, Side::left, 1, Fn{1.0, Cplx(0, 1), -1.0});
    const CornerReport r = corner_consistency_check(sys, f, 2, tol);
    CHECK(r.consistent);
    CHECK(r.difference <= 1e-12);
  }
  SUBCASE("collapse with a dominant head weight") {
    const FiniteSystem sys(2, {1, 1});
    const Poly f = monomial(sys, Side::left, 0, Fn{5.0, 1.0});
    for (int k = 1; k <= 3; ++k) {
      const CornerReport r = corner_consistency_check(sys, f, k, tol);
      CHECK(r.consistent);
      CHECK(r.base_norm.value == doctest::Approx(5.0).epsilon(1e-6));
      CHECK(r.tail_norm.value == doctest::Approx(5.0).epsilon(1e-6));
    }
  }
  SUBCASE("random element over a longer funnel") {
    std::mt19937_64 rng(83);
    const FiniteSystem sys(4, {1, 2, 3, 3});
    const Poly f = random_poly(rng, sys, Side::left, 3);
    const CornerReport r = corner_consistency_check(sys, f, 2, tol);
    CHECK(r.consistent);
    CHECK(r.difference <= 2e-6);
  }
}

TEST_CASE("zero extension") {
  const FiniteSystem sys(2, {1, 1});
  const TailSystem tail = add_tail(sys, 2);
  const Poly f = monomial(sys, Side::left, 1, Fn{Cplx(1, 2), Cplx(3)});
  const Poly ext = zero_extend(tail, f);
  CHECK(ext.sys == tail.combined);
  CHECK(ext.coeff(1) == Fn{Cplx(1, 2), Cplx(3), Cplx(0), Cplx(0)});
  CHECK_THROWS_AS(zero_extend(tail, monomial(tail.combined, Side::left, 0, ones(4))),
                  std::invalid_argument);
}
