#include <catch2/catch.hpp>

#include <frameforge/constructions.hpp>
#include <frameforge/json_io.hpp>

using namespace frameforge;

TEST_CASE("space descriptors round trip") {
  SECTION("plain lp") {
    const NormedSpace s = NormedSpace::lp(3, 1.5);
    const Json j = space_to_json(s);
    CHECK(j["dim"] == 3);
    CHECK(j["norm"]["kind"] == "lp");
    CHECK(j["norm"]["p"] == 1.5);
    CHECK_FALSE(j.contains("weights"));
    CHECK(space_from_json(j) == s);
  }
  SECTION("p = inf serializes as the string \"inf\"") {
    const Json j = space_to_json(NormedSpace::linf(2));
    CHECK(j["norm"]["p"] == "inf");
    CHECK(space_from_json(j).p() == kInfinity);
  }
  SECTION("weights survive") {
    Eigen::VectorXd w(2);
    w << 0.5, 2.0;
    const NormedSpace s = NormedSpace::weighted_lp(1.0, w);
    CHECK(space_from_json(space_to_json(s)) == s);
  }
  SECTION("malformed descriptors are rejected") {
    CHECK_THROWS_AS(space_from_json(Json{{"dim", 2}}), InvalidArgumentError);
    CHECK_THROWS_AS(
        space_from_json(Json{{"dim", 2}, {"norm", Json{{"kind", "taxicab"}, {"p", 1}}}}),
        InvalidArgumentError);
    CHECK_THROWS_AS(
        space_from_json(Json{{"dim", 2}, {"norm", Json{{"kind", "lp"}, {"p", "infinity"}}}}),
        InvalidArgumentError);
  }
}

TEST_CASE("paire descriptors round trip") {
  Rng rng(101);
  std::vector<PaireTerm> terms;
  for (int k = 0; k < 3; ++k)
    terms.push_back({rng.gaussian_vector(2), rng.gaussian_vector(2)});
  Paire paire(NormedSpace::lp(2, 2.0), terms);
  const Paire back = paire_from_json(paire_to_json(paire));
  REQUIRE(back.size() == paire.size());
  for (Eigen::Index n = 0; n < paire.size(); ++n) {
    CHECK((back.term(n).a - paire.term(n).a).norm() == 0.0);
    CHECK((back.term(n).b_star - paire.term(n).b_star).norm() == 0.0);
  }
}

TEST_CASE("padding metadata round trips") {
  std::vector<DirectSumComponent> comps;
  comps.push_back({canonical_l1(2), 1.0});
  comps.push_back({canonical_l1(1), 1.0});
  const Paire sum = direct_sum_frames(comps);
  const Json j = paire_to_json(sum);
  REQUIRE(j.contains("padded_terms"));
  CHECK(j["padded_terms"] == Json::array({4}));
  const Paire back = paire_from_json(j);
  CHECK(back.is_padded(3));
  CHECK_FALSE(back.is_padded(0));
}

TEST_CASE("paire parsing validates the shape") {
  CHECK_THROWS_AS(paire_from_json(Json::parse(R"({"space": {"dim": 1}})")),
                  InvalidArgumentError);
  CHECK_THROWS_AS(paire_from_json(Json::parse(
                      R"({"space": {"dim": 1, "norm": {"kind": "lp", "p": 1}},
                          "terms": [{"a": [1]}]})")),
                  InvalidArgumentError);
  // terms of the wrong length do not fit the space
  CHECK_THROWS_AS(paire_from_json(Json::parse(
                      R"({"space": {"dim": 2, "norm": {"kind": "lp", "p": 1}},
                          "terms": [{"a": [1], "b_star": [1]}]})")),
                  DimensionMismatchError);
}

TEST_CASE("serialization is deterministic") {
  const Paire paire = mercedes_frame().paire;
  CHECK(paire_to_json(paire).dump() == paire_to_json(paire).dump());
  const auto cert = besselian_constant(paire, BesselianMethod::bounds);
  CHECK(certificate_to_json(cert).dump() == certificate_to_json(cert).dump());
}
