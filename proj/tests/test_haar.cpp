#include <catch2/catch.hpp>

#include <frameforge/haar.hpp>

#include "oracles.hpp"

using namespace frameforge;

TEST_CASE("haar level 0 is the constant function") {
  const auto h = haar_paire(0);
  CHECK(h.n == 1);
  REQUIRE(h.paire.size() == 1);
  CHECK(h.paire.term(0).a[0] == 1.0);
  CHECK(h.paire.term(0).b_star[0] == 1.0);
  CHECK(check_schauder_frame(h.paire, 1e-12).pass);
  CHECK(besselian_constant(h.paire, BesselianMethod::exact).constant.value() ==
        Approx(1.0).margin(1e-12));
}

TEST_CASE("haar level 1 splits into mean and difference") {
  const auto h = haar_paire(1);
  CHECK(h.n == 2);
  CHECK((h.paire.term(0).a - Eigen::Vector2d(1.0, 1.0)).norm() == 0.0);
  CHECK((h.paire.term(1).a - Eigen::Vector2d(1.0, -1.0)).norm() == 0.0);
  // both vectors are L1-normalized against the 1/N weights
  CHECK(h.space.norm(h.paire.term(0).a) == Approx(1.0).margin(1e-15));
  CHECK(h.space.norm(h.paire.term(1).a) == Approx(1.0).margin(1e-15));
}

TEST_CASE("haar vectors are L1-normalized at every level") {
  for (int level = 0; level <= 4; ++level) {
    const auto h = haar_paire(level);
    for (const PaireTerm& t : h.paire.terms())
      CHECK(h.space.norm(t.a) == Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("haar reconstruction is exact through level 4") {
  for (int level = 0; level <= 4; ++level) {
    const auto h = haar_paire(level);
    const auto report = check_schauder_frame(h.paire, 1e-10);
    CHECK(report.pass);
    CHECK(report.proven);
  }
}

TEST_CASE("haar level cap raises") {
  CHECK_THROWS_AS(haar_paire(5), LevelTooLargeError);
  CHECK_THROWS_AS(haar_paire(-1), InvalidArgumentError);
  CHECK_NOTHROW(haar_paire(5, 6));
}

TEST_CASE("growth study rows through level 3") {
  const auto rows = besselian_growth_study(3);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].besselian_exact == Approx(1.0).margin(1e-12));
  for (const auto& r : rows) {
    CHECK(r.n == (Eigen::Index{1} << r.level));
    CHECK(r.frame_constant == Approx(1.0).margin(1e-9));  // Haar is monotone in L1
    CHECK(r.nuclearity_sum >= static_cast<double>(r.n) - 1e-9);
  }
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].besselian_exact >= rows[i - 1].besselian_exact - 1e-10);
}

TEST_CASE("haar besselian constants match the brute-force oracle up to level 2") {
  for (int level = 0; level <= 2; ++level) {
    const auto h = haar_paire(level);
    const double exact =
        besselian_constant(h.paire, BesselianMethod::exact).constant.value();
    CHECK(exact == Approx(oracles::brute_force_besselian(h.paire)).margin(1e-10));
  }
}

TEST_CASE("growth csv has the documented shape") {
  const auto rows = besselian_growth_study(1);
  const std::string csv = growth_csv(rows);
  CHECK(csv.rfind("level,N,besselian_exact,frame_constant,nuclearity_sum\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + two levels
}
