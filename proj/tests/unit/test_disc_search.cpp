#include <doctest.h>

#include <cmath>

#include "iml/disc_search.hpp"
#include "iml/oracles.hpp"

using namespace iml;

TEST_CASE("lempert_upper on the unit disc approaches the Moebius distance") {
  const DomainModel disc = make_model_domain(unit_disc());
  const MetricEstimate est = lempert_upper(disc, CPoint{0.0}, CPoint{0.5});
  CHECK(est.kind == BoundKind::UpperBound);
  CHECK(est.value >= 0.5 - 1e-9);
  CHECK(est.value <= 0.5 * 1.02);
  REQUIRE(est.cert.has_value());
  CHECK(est.cert->min_margin >= 1e-3);
  const auto& f = std::get<AnalyticDisc>(est.witness);
  CHECK(f(0.0) == CPoint{0.0});
  // The witness reaches w at alpha = value * rho.
  CHECK(std::abs(f(est.value * 0.995)[0] - cplx{0.5, 0.0}) < 1e-9);
}

TEST_CASE("constant disc and invalid inputs") {
  const DomainModel disc = make_model_domain(unit_disc());
  CHECK(lempert_upper(disc, CPoint{0.3}, CPoint{0.3}).value == 0.0);
  CHECK_THROWS_AS(lempert_upper(disc, CPoint{0.3}, CPoint{1.3}), OutsideDomain);
  CHECK_THROWS_AS(kobayashi_royden_upper(disc, CPoint{2.0}, CVector{1.0}), OutsideDomain);
  SearchConfig bad;
  bad.rho = 1.5;
  CHECK_THROWS(lempert_upper(disc, CPoint{0.0}, CPoint{0.5}, bad));
}

TEST_CASE("lempert_tanh") {
  MetricEstimate e;
  e.value = 0.0;
  CHECK(lempert_tanh(e) == 0.0);
  e.value = 0.5;
  CHECK(lempert_tanh(e) == doctest::Approx(0.5493).epsilon(1e-4));
  e.value = 0.9;
  CHECK(lempert_tanh(e) == doctest::Approx(1.4722).epsilon(1e-4));
  e.value = 1.0;
  CHECK_THROWS(lempert_tanh(e));
}

TEST_CASE("balanced domain at 0: linear disc is feasible") {
  const MinkowskiFunctional h = MinkowskiFunctional::max_geo(2.0);
  const DomainModel dom = make_model_domain(balanced(h));
  const CPoint w{0.2, 0.2};
  const MetricEstimate est = lempert_upper(dom, CPoint(2), w);
  CHECK(est.value <= h(as_vector(w)) * 1.01 + 1e-3);
}

TEST_CASE("kobayashi_royden_upper examples") {
  const DomainModel disc = make_model_domain(unit_disc());
  const double k0 = kobayashi_royden_upper(disc, CPoint{0.0}, CVector{1.0}).value;
  CHECK(k0 >= 1.0 - 1e-9);
  CHECK(k0 <= 1.02);
  CHECK(kobayashi_royden_upper(disc, CPoint{0.4}, CVector(1)).value == 0.0);

  const DomainModel poly = make_model_domain(polydisc({1.0, 1.0}));
  const double k = kobayashi_royden_upper(poly, CPoint(2), CVector{1.0, 2.0}).value;
  CHECK(k >= 2.0 - 1e-9);
  CHECK(k <= 2.0 * 1.02);
}

TEST_CASE("kappa homogeneity is exact") {
  const DomainModel ball = make_model_domain(euclidean_ball(2));
  const CPoint z{0.2, cplx{0.0, 0.1}};
  const CVector X{1.0, cplx{0.5, -0.3}};
  SearchConfig cfg;
  cfg.degree = 2;
  const double base = kobayashi_royden_upper(ball, z, X, cfg).value;
  for (cplx lambda : {cplx{2.0, 0.0}, cplx{0.0, -0.5}, cplx{-3.0, 4.0}}) {
    const double v = kobayashi_royden_upper(ball, z, lambda * X, cfg).value;
    CHECK(v == doctest::Approx(std::abs(lambda) * base).epsilon(1e-12));
  }
}

TEST_CASE("upper bounds never undercut the oracle") {
  const DomainDescriptor d = euclidean_ball(2);
  const DomainModel ball = make_model_domain(d);
  const OracleDomainTag tag = *oracle_tag_for(d);
  SearchConfig cfg;
  cfg.degree = 2;
  const CPoint z{0.3, 0.1};
  const CPoint w{-0.2, cplx{0.0, 0.4}};
  CHECK(lempert_upper(ball, z, w, cfg).value >= oracle_lempert(tag, z, w).value - 1e-9);
  const CVector X{1.0, 1.0};
  CHECK(kobayashi_royden_upper(ball, z, X, cfg).value >= oracle_kappa(tag, z, X).value - 1e-9);
}

TEST_CASE("inclusion monotonicity: polydisc estimate <= ball estimate") {
  SearchConfig cfg;
  cfg.degree = 2;
  const CPoint z{0.1, 0.2};
  const CVector X{1.0, 0.5};
  const double in_ball = kobayashi_royden_upper(make_model_domain(euclidean_ball(2)), z, X, cfg).value;
  const double in_poly = kobayashi_royden_upper(make_model_domain(polydisc({1.0, 1.0})), z, X, cfg).value;
  CHECK(in_poly <= in_ball * (1.0 + 1e-3));
}

TEST_CASE("higher degree never hurts") {
  const DomainModel disc = make_model_domain(unit_disc());
  SearchConfig lo;
  lo.degree = 1;
  SearchConfig hi;
  hi.degree = 4;
  const CPoint z{0.5};
  const CVector X{1.0};
  CHECK(kobayashi_royden_upper(disc, z, X, hi).value <= kobayashi_royden_upper(disc, z, X, lo).value + 1e-12);
}

TEST_CASE("certify_disc reports the sampled minimum margin") {
  const DomainModel disc = make_model_domain(unit_disc());
  const AnalyticDisc f{CPoint{0.0}, {CVector{0.5}}};
  const ContainmentCert c = certify_disc(disc, f, 1.0, 64);
  CHECK(c.min_margin == doctest::Approx(0.5));
  CHECK(c.boundary_samples == 64);
}
