#include <doctest.h>

#include <cmath>
#include <random>

#include "iml/oracles.hpp"

using namespace iml;

TEST_CASE("kappa oracle examples") {
  const auto disc = *oracle_tag_for(unit_disc());
  CHECK(oracle_kappa(disc, CPoint{0.5}, CVector{1.0}).value == doctest::Approx(4.0 / 3.0));
  CHECK(oracle_kappa(disc, CPoint{0.5}, CVector{1.0}).kind == BoundKind::OracleExact);

  const auto ball = *oracle_tag_for(euclidean_ball(2));
  CHECK(oracle_kappa(ball, CPoint(2), CVector{3.0, 4.0}).value == doctest::Approx(5.0));

  const auto poly = *oracle_tag_for(polydisc({1.0, 2.0}));
  CHECK(oracle_kappa(poly, CPoint(2), CVector{1.0, 2.0}).value == doctest::Approx(1.0));

  const MinkowskiFunctional h = MinkowskiFunctional::max_geo(2.0);
  const auto bal = *oracle_tag_for(balanced(h));
  const CVector X{0.3, cplx{0.0, 0.7}};
  CHECK(oracle_kappa(bal, CPoint(2), X).value == doctest::Approx(h(X)));
  CHECK_THROWS(oracle_kappa(bal, CPoint{0.1, 0.0}, X));
}

TEST_CASE("lempert oracle examples") {
  const auto disc = *oracle_tag_for(unit_disc());
  CHECK(oracle_lempert(disc, CPoint{0.0}, CPoint{0.5}).value == doctest::Approx(0.5));
  CHECK(oracle_lempert(disc, CPoint{0.5}, CPoint{-0.5}).value == doctest::Approx(0.8));

  const auto poly = *oracle_tag_for(polydisc({1.0, 1.0}));
  CHECK(oracle_lempert(poly, CPoint(2), CPoint{0.3, 0.6}).value == doctest::Approx(0.6));

  const auto bal = *oracle_tag_for(balanced(MinkowskiFunctional::max_geo(2.0)));
  CHECK(oracle_lempert(bal, CPoint(2), CPoint{0.2, 0.2}).value == doctest::Approx(0.4));

  const auto ball = *oracle_tag_for(euclidean_ball(2));
  CHECK(oracle_lempert(ball, CPoint(2), CPoint{0.3, 0.4}).value == doctest::Approx(0.5));
  CHECK_THROWS_AS(oracle_lempert(ball, CPoint(2), CPoint{1.0, 1.0}), OutsideDomain);
}

TEST_CASE("no oracle for example3 or products") {
  CHECK_FALSE(oracle_tag_for(example3(Example3Params::with_defaults(20, 10))).has_value());
  CHECK_FALSE(oracle_tag_for(product(unit_disc(), unit_disc())).has_value());
}

TEST_CASE("ball oracle is invariant under automorphisms and matches the disc slice") {
  const auto ball = *oracle_tag_for(euclidean_ball(2));
  const auto disc = *oracle_tag_for(unit_disc());
  // On the slice C x {0} the ball metric restricted to horizontal vectors is Poincare.
  for (double x : {0.0, 0.3, 0.7}) {
    CHECK(oracle_kappa(ball, CPoint{x, 0.0}, CVector{1.0, 0.0}).value ==
          doctest::Approx(oracle_kappa(disc, CPoint{x}, CVector{1.0}).value));
    CHECK(oracle_lempert(ball, CPoint{x, 0.0}, CPoint{-0.2, 0.0}).value ==
          doctest::Approx(oracle_lempert(disc, CPoint{x}, CPoint{-0.2}).value));
  }
  // Unitary invariance.
  const CPoint z{0.3, cplx{0.1, 0.2}};
  const CPoint w{-0.1, 0.5};
  auto rot = [](const CPoint& p) { return CPoint{p[1], -p[0]}; };
  CHECK(oracle_lempert(ball, rot(z), rot(w)).value == doctest::Approx(oracle_lempert(ball, z, w).value));
}

TEST_CASE("lempert quotients converge to kappa") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  const DomainDescriptor descs[] = {unit_disc(), polydisc({1.0, 0.7}), euclidean_ball(3)};
  for (const auto& d : descs) {
    const auto tag = *oracle_tag_for(d);
    const std::size_t n = make_model_domain(d).dimension();
    for (int i = 0; i < 10; ++i) {
      CPoint z(n);
      CVector X(n);
      for (std::size_t j = 0; j < n; ++j) {
        z[j] = cplx{g(rng), g(rng)} * 0.15;
        X[j] = cplx{g(rng), g(rng)};
      }
      const double kappa = oracle_kappa(tag, z, X).value;
      for (double t : {1e-2, 1e-3}) {
        const double q = oracle_lempert(tag, z, z + cplx{t, 0.0} * X).value / t;
        CHECK(q == doctest::Approx(kappa).epsilon(30 * t * (1.0 + norm(X))));
      }
    }
  }
}
