#include <doctest.h>

#include <random>

#include "semicross/io.hpp"
#include "semicross/verify.hpp"

using namespace semicross;

TEST_CASE("system literals") {
  const Json j = Json::parse(R"({"n": 3, "phi": [1, 2, 0]})");
  const FiniteSystem sys = system_from_json(j);
  CHECK(sys == FiniteSystem(3, {1, 2, 0}));
  CHECK(system_from_json(to_json(sys)) == sys);

  CHECK_THROWS_WITH_AS(system_from_json(Json::parse(R"({"phi": [0]})")),
                       doctest::Contains("'n'"), ParseError);
  CHECK_THROWS_WITH_AS(system_from_json(Json::parse(R"({"n": 2})")),
                       doctest::Contains("'phi'"), ParseError);
  CHECK_THROWS_AS(system_from_json(Json::parse(R"({"n": 2, "phi": [0, 5]})")), ParseError);
}

TEST_CASE("poly literals") {
  const FiniteSystem sys(2, {1, 1});
  const Json j = Json::parse(
      R"({"side": "left", "coeffs": [{"deg": 0, "values": [[1, 0], [0, -2]]},
                                     {"deg": 2, "values": [[0.5, 0], [0, 0]]}]})");
  const Poly p = poly_from_json(j, sys);
  CHECK(p.side == Side::left);
  CHECK(p.coeff(0) == Fn{Cplx(1, 0), Cplx(0, -2)});
  CHECK(p.coeff(2) == Fn{Cplx(0.5), Cplx(0)});
  CHECK(approx_equal(poly_from_json(to_json(p), sys), p, 0.0));

  CHECK_THROWS_WITH_AS(poly_from_json(Json::parse(R"({"coeffs": []})"), sys),
                       doctest::Contains("'side'"), ParseError);
  CHECK_THROWS_WITH_AS(
      poly_from_json(Json::parse(R"({"side": "left", "coeffs": [{"deg": -1, "values": []}]})"), sys),
      doctest::Contains("'deg'"), ParseError);
  CHECK_THROWS_WITH_AS(
      poly_from_json(Json::parse(R"({"side": "left", "coeffs": [{"deg": 0, "values": [[1,0]]}]})"),
                     sys),
      doctest::Contains("'values'"), ParseError);
}

TEST_CASE("crossed-element literals allow negative degrees") {
  const FiniteSystem sys(2, {1, 0});
  const Json j = Json::parse(R"({"coeffs": [{"deg": -1, "values": [[1, 0], [2, 0]]}]})");
  const CrossedElement e = crossed_from_json(j, sys);
  CHECK(e.min_degree() == -1);
  const CrossedElement round = crossed_from_json(to_json(e), sys);
  CHECK(symbol_norm(ce_sub(e, round), 1e-10).value == 0.0);
}

TEST_CASE("tail serialization carries labels") {
  const TailSystem tail = add_tail(FiniteSystem(2, {1, 1}), 2);
  const Json j = to_json(tail);
  CHECK(j["tail_depth"] == 2);
  CHECK(j["labels"][2] == "0:-1");
  CHECK(j["labels"][3] == "0:-2");
}

TEST_CASE("report serialization shape") {
  const FiniteSystem sys(2, {1, 1});
  const Json m = to_json(minimality_report(sys));
  CHECK(m.contains("base_minimal"));
  CHECK(m["all_agree"] == true);
  const Json s = to_json(simplicity_report(sys));
  CHECK(s["verdict"] == "non_simple");
  const Json d = to_json(envelope_of(sys, Side::left, PairKind::contractive));
  CHECK(d["shape"] == "full_corner");
  CHECK(d.contains("projection"));
}

TEST_CASE("random literal roundtrips") {
  std::mt19937_64 rng(97);
  const FiniteSystem sys(4, {1, 2, 3, 3});
  for (int i = 0; i < 10; ++i) {
    const Poly p = random_poly(rng, sys, i % 2 ? Side::left : Side::right, 4);
    CHECK(approx_equal(poly_from_json(to_json(p), sys), p, 0.0));
  }
  const MatPoly m = random_matpoly(rng, sys, Side::right, 2, 2);
  const MatPoly m2 = matpoly_from_json(to_json(m), sys);
  for (std::size_t k = 0; k < m.entries.size(); ++k)
    CHECK(approx_equal(m2.entries[k], m.entries[k], 0.0));
}
