#include <doctest.h>

#include "cmreal/io.hpp"
#include "cmreal/random.hpp"

using namespace cmreal;

TEST_CASE("scalar and matrix round trips") {
  Rng rng(83);
  for (int k = 0; k < 20; ++k) {
    Gq a = random_gq(rng, true);
    CHECK(gq_from_json(parse_json_text(to_json(a).dump())) == a);
    CMPair p = random_pair(rng, 1 + k % 4, k % 2 == 1);
    CMPair q = cmpair_from_json(parse_json_text(to_json(p).dump()));
    CHECK(q.X == p.X);
    CHECK(q.Z == p.Z);
  }
  CHECK(gq_from_json(Json("1/2-3i")) == Gq(Rational(1, 2), Rational(-3)));
  CHECK(gq_from_json(Json(4)) == Gq(4));
}

TEST_CASE("chart, space and partition round trips") {
  CMChart c{{Gq(1), Gq(-1)}, {Gq::i(), Gq::frac(2, 3)}};
  CMChart c2 = cmchart_from_json(parse_json_text(to_json(c).dump()));
  CHECK(c2.lambda == c.lambda);
  CHECK(c2.alpha == c.alpha);

  QuasiExpSpace s{{Gq(0), Gq(Rational(1), Rational(1))}, {{PolyQ({Gq(1), Gq(0), Gq(1)})}, {PolyQ({Gq::i(), Gq(1)})}}};
  Json js = to_json(s);
  QuasiExpSpace s2 = quasi_exp_from_json(parse_json_text(js.dump()));
  CHECK(to_json(s2) == js);

  Partition lam = make_partition({3, 1});
  CHECK(partition_from_json(to_json(lam)).parts == lam.parts);
}

TEST_CASE("malformed input reports a location") {
  try {
    parse_json_text("{\"X\": [1, 2,, 3]}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("byte 13") != std::string::npos);
  }
  try {
    cmpair_from_json(parse_json_text(R"({"X": {"re": [["1", "x"]]}, "Z": {"re": [["0"]]}})"));
    FAIL("expected a schema error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("/X/re/0/1") != std::string::npos);
  }
  CHECK_THROWS_AS(partition_from_json(parse_json_text(R"({"parts": [1, 2]})")), ParseError);
  CHECK_THROWS_AS(cmpair_from_json(parse_json_text(R"({"X": {"re": [["0","0"],["0","0"]]}, "Z": {"re": [["0","0"],["0","0"]]}})")),
                  NotCMPairError);
}

TEST_CASE("Dunkl export keys") {
  Json j = to_json(build_dunkl_rep({Gq(1), Gq(2), Gq(3)}, {Gq(0), Gq(0), Gq(0)}));
  for (const char* key : {"x1", "x3", "y2", "s12", "s13", "s23"}) CHECK(j.contains(key));
  CHECK(j["x1"]["n"] == 6);
}
