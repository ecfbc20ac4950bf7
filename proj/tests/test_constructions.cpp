#include <catch2/catch.hpp>

#include <frameforge/besselian.hpp>
#include <frameforge/constructions.hpp>

using namespace frameforge;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("basis_frame") {
  SECTION("the standard basis gives the canonical paire") {
    std::vector<Vector> basis = {vec({1.0, 0.0, 0.0}), vec({0.0, 1.0, 0.0}),
                                 vec({0.0, 0.0, 1.0})};
    const auto built = basis_frame(NormedSpace::l2(3), basis);
    CHECK(built.condition_number == Approx(1.0).margin(1e-12));
    const Paire canonical = canonical_lp(2.0, 3);
    for (Eigen::Index n = 0; n < 3; ++n) {
      CHECK((built.paire.term(n).a - canonical.term(n).a).norm() == 0.0);
      CHECK((built.paire.term(n).b_star - canonical.term(n).b_star).norm() <= 1e-14);
    }
  }
  SECTION("a sheared basis inverts to the expected dual functionals") {
    std::vector<Vector> basis = {vec({1.0, 0.0}), vec({1.0, 1.0})};
    const auto built = basis_frame(NormedSpace::l1(2), basis);
    CHECK((built.paire.term(0).b_star - vec({1.0, -1.0})).norm() <= 1e-14);
    CHECK((built.paire.term(1).b_star - vec({0.0, 1.0})).norm() <= 1e-14);
    CHECK(check_schauder_frame(built.paire).pass);
  }
  SECTION("near-singular bases are rejected with the condition number") {
    std::vector<Vector> basis = {vec({1.0, 0.0}), vec({1.0, 1e-14})};
    CHECK_THROWS_AS(basis_frame(NormedSpace::l2(2), basis), SingularBasisError);
  }
}

TEST_CASE("canonical frames live on the right spaces") {
  CHECK(canonical_l1(3).space().p() == 1.0);
  CHECK(canonical_lp(2.0, 4).space().p() == 2.0);
  CHECK(canonical_c0(2).space().p() == kInfinity);
  const Paire p = canonical_l1(3);
  for (Eigen::Index n = 0; n < 3; ++n) {
    const PaireTerm& t = p.term(n);
    CHECK(t.a[n] == 1.0);
    CHECK((t.a - t.b_star).norm() == 0.0);
  }
}

TEST_CASE("hilbert_frame_to_schauder") {
  SECTION("orthonormal input is its own dual") {
    std::vector<Vector> onb = {vec({1.0, 0.0}), vec({0.0, 1.0})};
    const auto res = hilbert_frame_to_schauder(onb, NormedSpace::l2(2));
    CHECK(res.alpha == Approx(1.0).margin(1e-12));
    CHECK(res.beta == Approx(1.0).margin(1e-12));
    CHECK((res.frame_operator - Eigen::MatrixXd::Identity(2, 2)).norm() <= 1e-12);
    for (std::size_t n = 0; n < onb.size(); ++n)
      CHECK((res.dual_vectors[n] - onb[n]).norm() <= 1e-12);
  }
  SECTION("the Mercedes frame is tight at 3/2") {
    const auto res = mercedes_frame();
    CHECK((res.frame_operator - 1.5 * Eigen::MatrixXd::Identity(2, 2)).lpNorm<Eigen::Infinity>() <=
          1e-12);
    CHECK(res.alpha == Approx(1.5).margin(1e-12));
    CHECK(res.beta == Approx(1.5).margin(1e-12));
    const auto xs = mercedes_vectors();
    for (std::size_t n = 0; n < xs.size(); ++n)
      CHECK((res.dual_vectors[n] - (2.0 / 3.0) * xs[n]).lpNorm<Eigen::Infinity>() <= 1e-12);
    CHECK(check_schauder_frame(res.paire, 1e-10).pass);
  }
  SECTION("rank-deficient families are not frames") {
    CHECK_THROWS_AS(
        hilbert_frame_to_schauder({vec({1.0, 0.0}), vec({1.0, 0.0})}, NormedSpace::l2(2)),
        NotAFrameError);
  }
  SECTION("frame inequality holds on random probes") {
    Rng rng(3);
    std::vector<Vector> xs;
    for (int k = 0; k < 5; ++k) xs.push_back(rng.gaussian_vector(3));
    const auto res = hilbert_frame_to_schauder(xs, NormedSpace::l2(3));
    for (int trial = 0; trial < 100; ++trial) {
      const Vector x = rng.gaussian_vector(3);
      double energy = 0.0;
      for (const Vector& v : xs) energy += v.dot(x) * v.dot(x);
      const double n2 = x.squaredNorm();
      CHECK(energy >= res.alpha * n2 - 1e-9);
      CHECK(energy <= res.beta * n2 + 1e-9);
    }
    CHECK(check_schauder_frame(res.paire, 1e-10).pass);
    // Cauchy-Schwarz certifies the construction as besselian.
    std::vector<Vector> duals = res.dual_vectors;
    const double bound = cauchy_schwarz_besselian_bound(xs, duals, NormedSpace::l2(3));
    const auto cert = besselian_constant(res.paire, BesselianMethod::bounds);
    CHECK(cert.constant.lower <= bound + 1e-9);
  }
}

TEST_CASE("restrict_frame") {
  SECTION("coordinate restriction of the canonical l1 paire") {
    const Paire p = canonical_l1(2);
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(2, 2);
    P(0, 0) = 1.0;
    Eigen::MatrixXd V(2, 1);
    V << 1.0, 0.0;
    const Paire sub = restrict_frame(p, P, V);
    REQUIRE(sub.size() == 2);
    CHECK(sub.space().dim() == 1);
    CHECK(sub.term(0).a[0] == 1.0);
    CHECK(sub.term(0).b_star[0] == 1.0);
    // the second term vanishes entirely: P e_2 = 0 and e_2* restricted to
    // span(e_1) is the zero functional
    CHECK(sub.term(1).a[0] == 0.0);
    CHECK(sub.term(1).b_star[0] == 0.0);
    CHECK(check_schauder_frame(sub).pass);
  }
  SECTION("the identity projector returns the original paire") {
    const Paire p = canonical_l1(3);
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(3, 3);
    const Paire same = restrict_frame(p, I, I);
    for (Eigen::Index n = 0; n < p.size(); ++n) {
      CHECK((same.term(n).a - p.term(n).a).norm() <= 1e-14);
      CHECK((same.term(n).b_star - p.term(n).b_star).norm() <= 1e-14);
    }
    CHECK(same.space().weights() == p.space().weights());
  }
  SECTION("Mercedes restricted to the first axis reconstructs") {
    const Paire m = mercedes_frame().paire;
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(2, 2);
    P(0, 0) = 1.0;
    Eigen::MatrixXd V(2, 1);
    V << 1.0, 0.0;
    const Paire sub = restrict_frame(m, P, V);
    REQUIRE(sub.size() == 3);
    CHECK(check_schauder_frame(sub, 1e-10).pass);
    // components 1, -1/2, -1/2 with duals scaled by 2/3
    CHECK(sub.term(1).a[0] == Approx(-0.5).margin(1e-14));
    CHECK(sub.term(1).b_star[0] == Approx(-1.0 / 3.0).epsilon(1e-12));
  }
  SECTION("error paths") {
    const Paire p = canonical_l1(2);
    Eigen::MatrixXd notP(2, 2);
    notP << 1.0, 1.0, 0.0, 1.0;  // not idempotent
    Eigen::MatrixXd V(2, 1);
    V << 1.0, 0.0;
    CHECK_THROWS_AS(restrict_frame(p, notP, V), NotIdempotentError);
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(2, 2);
    P(0, 0) = 1.0;
    Eigen::MatrixXd wrongV(2, 1);
    wrongV << 0.0, 1.0;  // not fixed by P
    CHECK_THROWS_AS(restrict_frame(p, P, wrongV), RangeMismatchError);
  }
  SECTION("coordinate projectors do not increase the besselian constant") {
    const Paire p = canonical_l1(3);
    const double full = besselian_constant(p, BesselianMethod::exact).constant.value();
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(3, 3);
    P(0, 0) = P(1, 1) = 1.0;
    Eigen::MatrixXd V = Eigen::MatrixXd::Zero(3, 2);
    V(0, 0) = V(1, 1) = 1.0;
    const Paire sub = restrict_frame(p, P, V);
    const double restricted = besselian_constant(sub, BesselianMethod::exact).constant.value();
    // ||P|| = 1 on l1 for coordinate projectors, so L cannot grow
    CHECK(restricted <= full + 1e-10);
  }
}

TEST_CASE("direct_sum_frames") {
  SECTION("l1(2) + l1(1): four terms with one zero pad") {
    std::vector<DirectSumComponent> comps;
    comps.push_back({canonical_l1(2), 1.0});
    comps.push_back({canonical_l1(1), 1.0});
    const Paire sum = direct_sum_frames(comps);
    REQUIRE(sum.size() == 4);
    CHECK(sum.space().dim() == 3);
    CHECK(sum.space().p() == 1.0);
    REQUIRE(!sum.padding().empty());
    CHECK(sum.is_padded(3));
    CHECK_FALSE(sum.is_padded(0));
    CHECK(sum.term(3).a.norm() == 0.0);
    CHECK(check_schauder_frame(sum).pass);
    CHECK(besselian_constant(sum, BesselianMethod::exact).constant.value() ==
          Approx(1.0).margin(1e-10));
  }
  SECTION("two copies of R interleave into canonical l1(2)") {
    std::vector<DirectSumComponent> comps;
    comps.push_back({canonical_l1(1), 1.0});
    comps.push_back({canonical_l1(1), 1.0});
    const Paire sum = direct_sum_frames(comps);
    const Paire expected = canonical_l1(2);
    REQUIRE(sum.size() == 2);
    for (Eigen::Index n = 0; n < 2; ++n) {
      CHECK((sum.term(n).a - expected.term(n).a).norm() == 0.0);
      CHECK((sum.term(n).b_star - expected.term(n).b_star).norm() == 0.0);
    }
    CHECK(sum.padding().empty());
  }
  SECTION("a single component keeps its terms, scaled norm") {
    std::vector<DirectSumComponent> comps;
    comps.push_back({canonical_lp(2.0, 3), 2.0});
    const Paire same = direct_sum_frames(comps);
    REQUIRE(same.size() == 3);
    const Vector x = vec({1.0, 2.0, -1.0});
    CHECK(same.space().norm(x) == Approx(2.0 * canonical_lp(2.0, 3).space().norm(x)).epsilon(1e-12));
    CHECK(check_schauder_frame(same).pass);
  }
  SECTION("besselian constant is at most the sum of component constants") {
    std::vector<DirectSumComponent> comps;
    comps.push_back({canonical_l1(2), 1.0});
    comps.push_back({canonical_l1(2), 1.0});
    const Paire sum = direct_sum_frames(comps);
    double component_total = 0.0;
    for (const auto& c : comps)  // block projectors have norm 1 on the l1 sum
      component_total += besselian_constant(c.paire, BesselianMethod::exact).constant.value();
    const double whole = besselian_constant(sum, BesselianMethod::exact).constant.value();
    CHECK(whole <= component_total + 1e-10);
  }
  SECTION("error paths") {
    CHECK_THROWS_AS(direct_sum_frames({}), InvalidArgumentError);
    std::vector<DirectSumComponent> comps;
    comps.push_back({canonical_lp(2.0, 2), 1.0});
    comps.push_back({canonical_l1(1), 1.0});
    CHECK_THROWS_AS(direct_sum_frames(comps), UnsupportedProductNormError);
  }
  SECTION("component weights scale the block norms") {
    std::vector<DirectSumComponent> comps;
    comps.push_back({canonical_l1(1), 2.0});
    comps.push_back({canonical_l1(1), 1.0});
    const Paire sum = direct_sum_frames(comps);
    CHECK(sum.space().norm(vec({1.0, 0.0})) == Approx(2.0).margin(0));
    CHECK(sum.space().norm(vec({0.0, 1.0})) == Approx(1.0).margin(0));
    CHECK(check_schauder_frame(sum).pass);
  }
}
