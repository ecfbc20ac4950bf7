#include <catch2/catch.hpp>

#include <frameforge/constructions.hpp>
#include <frameforge/operator_norms.hpp>
#include <frameforge/paire.hpp>

#include "oracles.hpp"

using namespace frameforge;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

/// Two copies of the vector (1) against the halving functional (1/2) on R.
Paire doubled_half_paire() {
  std::vector<PaireTerm> terms(2, PaireTerm{vec({1.0}), vec({0.5})});
  return Paire(NormedSpace::l2(1), terms);
}

}  // namespace

TEST_CASE("partial sums truncate coordinates on canonical frames") {
  const Paire p = canonical_l1(3);
  const Vector x = vec({1.0, -2.0, 3.0});
  CHECK((p.partial_sum(2, x) - vec({1.0, -2.0, 0.0})).norm() == 0.0);
  CHECK((p.partial_sum(3, x) - x).norm() == 0.0);
  CHECK(p.partial_sum(1, Vector::Zero(3)).norm() == 0.0);
  CHECK_THROWS_AS(p.partial_sum(0, x), InvalidArgumentError);
  CHECK_THROWS_AS(p.partial_sum(4, x), InvalidArgumentError);
}

TEST_CASE("partial sums on an overcomplete pair") {
  const Paire p = doubled_half_paire();
  CHECK(p.partial_sum(1, vec({1.0}))[0] == Approx(0.5).margin(0));
  CHECK(p.partial_sum(2, vec({1.0}))[0] == Approx(1.0).margin(0));
}

TEST_CASE("partial sums are linear") {
  Rng rng(99);
  const Paire p = canonical_lp(2.0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const Vector x = rng.gaussian_vector(4);
    const Vector y = rng.gaussian_vector(4);
    const double a = rng.uniform(-2.0, 2.0);
    const double b = rng.uniform(-2.0, 2.0);
    const Eigen::Index n = 1 + trial % 4;
    const Vector lhs = p.partial_sum(n, a * x + b * y);
    const Vector rhs = a * p.partial_sum(n, x) + b * p.partial_sum(n, y);
    CHECK((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
  }
}

TEST_CASE("reconstruction check on canonical frames") {
  for (double p : {1.0, 1.5, 2.0, 4.0, kInfinity}) {
    const Paire paire = identity_paire(NormedSpace::lp(4, p));
    const auto report = check_schauder_frame(paire);
    CHECK(report.pass);
    CHECK(report.proven);
    CHECK(report.max_final_residual == 0.0);
  }
}

TEST_CASE("a cancelling paire is not a Schauder frame") {
  std::vector<PaireTerm> terms;
  terms.push_back({vec({1.0}), vec({1.0})});
  terms.push_back({vec({1.0}), vec({-1.0})});
  const Paire p(NormedSpace::l1(1), terms);  // S_2(x) = x - x = 0
  const auto report = check_schauder_frame(p);
  CHECK_FALSE(report.pass);
}

TEST_CASE("basis frames reconstruct exactly") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index dim = 2 + trial % 3;
    std::vector<Vector> basis;
    for (Eigen::Index i = 0; i < dim; ++i) basis.push_back(rng.gaussian_vector(dim));
    const auto built = basis_frame(NormedSpace::lp(dim, trial % 2 ? 1.0 : 2.0), basis);
    CHECK(check_schauder_frame(built.paire, 1e-8).pass);
  }
}

TEST_CASE("frame constant of canonical frames is one") {
  CHECK(frame_constant(canonical_lp(2.0, 4), ConstantMethod::exact).value() ==
        Approx(1.0).margin(1e-12));
  CHECK(frame_constant(canonical_l1(5), ConstantMethod::exact).value() ==
        Approx(1.0).margin(1e-12));
  CHECK(frame_constant(canonical_c0(4), ConstantMethod::exact).value() ==
        Approx(1.0).margin(1e-12));
}

TEST_CASE("frame constant sees the interior partial sums") {
  const Paire p = doubled_half_paire();
  // ||S_1|| = 1/2 while ||S_2|| = 1.
  CHECK(operator_norm_exact(p.partial_sum_matrix(1), p.space()) == Approx(0.5).margin(0));
  CHECK(frame_constant(p, ConstantMethod::exact).value() == Approx(1.0).margin(1e-12));
}

TEST_CASE("exact frame constants need p in {1, 2, inf}") {
  CHECK_THROWS_AS(frame_constant(canonical_lp(3.0, 3), ConstantMethod::exact),
                  UnsupportedExactNormError);
}

TEST_CASE("weighted l2 operator norms match a metric power iteration") {
  Rng rng(301);
  for (int trial = 0; trial < 8; ++trial) {
    const Eigen::Index dim = 2 + trial % 2;
    Eigen::VectorXd w(dim);
    for (Eigen::Index i = 0; i < dim; ++i) w[i] = 0.3 + 2.5 * rng.uniform();
    const NormedSpace space(dim, 2.0, w);
    Eigen::MatrixXd M(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) M(i, j) = rng.normal();
    const double exact = operator_norm_exact(M, space);
    const double direct = oracles::weighted_l2_operator_norm_power(M, w);
    CHECK(direct == Approx(exact).epsilon(1e-6));
  }
}

TEST_CASE("sampled frame constant brackets the exact one") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index dim = 2 + trial % 2;
    std::vector<Vector> basis;
    for (Eigen::Index i = 0; i < dim; ++i) basis.push_back(rng.gaussian_vector(dim));
    const double ps[] = {1.0, 2.0, kInfinity};
    const NormedSpace space = NormedSpace::lp(dim, ps[trial % 3]);
    Paire paire = [&] {
      try {
        return basis_frame(space, basis).paire;
      } catch (const SingularBasisError&) {
        return identity_paire(space);
      }
    }();
    const double exact = frame_constant(paire, ConstantMethod::exact).value();
    FrameConstantOptions opt;
    opt.seed = 1000 + static_cast<std::uint64_t>(trial);
    const BoundPair sampled = frame_constant(paire, ConstantMethod::sampled, opt);
    CHECK(sampled.lower <= exact + 1e-9);
    CHECK(exact <= sampled.upper + 1e-9);
    CHECK(exact >= 1.0 - 1e-9);  // S_N is the identity here
  }
}

TEST_CASE("partial sums stay within the frame constant") {
  Rng rng(23);
  const Paire paire = canonical_l1(5);
  const double kf = frame_constant(paire, ConstantMethod::exact).value();
  for (int trial = 0; trial < 50; ++trial) {
    const Vector x = rng.gaussian_vector(5);
    for (Eigen::Index n = 1; n <= paire.size(); ++n)
      CHECK(paire.space().norm(paire.partial_sum(n, x)) <=
            kf * paire.space().norm(x) + 1e-9);
  }
}

TEST_CASE("reconstruction report contains the decay sequences") {
  const Paire p = canonical_l1(3);
  const auto report = check_schauder_frame(p, {vec({1.0, -2.0, 3.0})}, 1e-9);
  REQUIRE(report.residuals.size() == 1);
  // ||x - S_n x||_1 over n: 5, 3, 0
  CHECK(report.residuals[0][0] == Approx(5.0).margin(0));
  CHECK(report.residuals[0][1] == Approx(3.0).margin(0));
  CHECK(report.residuals[0][2] == 0.0);
  CHECK_FALSE(report.proven);  // a single probe cannot span dim 3
}
