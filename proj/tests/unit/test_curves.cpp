#include <doctest.h>

#include <cmath>

#include "iml/curves.hpp"
#include "iml/oracles.hpp"

using namespace iml;

TEST_CASE("distance length of a Euclidean segment is additive") {
  const ParametricCurve seg = ParametricCurve::segment(CPoint{0.0}, CPoint{1.0});
  const DistanceFn euclid = [](const CPoint& a, const CPoint& b) { return norm(b - a); };
  for (int P : {1, 2, 4, 8}) CHECK(length_by_distance(euclid, seg, P) == doctest::Approx(1.0));
  const LengthLadder l = length_ladder(euclid, seg, 8);
  CHECK(l.partitions == std::vector<int>{1, 2, 4, 8});
  CHECK(l.supremum == doctest::Approx(1.0));
  CHECK_THROWS(length_by_distance(euclid, seg, 0));
}

TEST_CASE("constant curve has zero length") {
  const ParametricCurve c = ParametricCurve::segment(CPoint{0.3}, CPoint{0.3});
  const auto disc = *oracle_tag_for(unit_disc());
  const LempertFn lem = lempert_oracle_fn(disc);
  CHECK(length_by_distance([&](const CPoint& a, const CPoint& b) { return std::atanh(lem(a, b)); }, c, 4) == 0.0);
  CHECK(length_by_metric(kappa_oracle_fn(disc), c, 16) == 0.0);
}

TEST_CASE("Poincare length of [0, 1/2] is atanh(1/2)") {
  const auto disc = *oracle_tag_for(unit_disc());
  const ParametricCurve seg = ParametricCurve::segment(CPoint{0.0}, CPoint{0.5});
  const double exact = std::atanh(0.5);
  const double l64 = length_by_metric(kappa_oracle_fn(disc), seg, 65);
  const double l128 = length_by_metric(kappa_oracle_fn(disc), seg, 129);
  CHECK(l64 == doctest::Approx(exact).epsilon(1e-3));
  CHECK(std::abs(l64 - l128) < 1e-3);
  // Distance lengths are nondecreasing in P for a true distance and equal it on geodesics.
  const LempertFn lem = lempert_oracle_fn(disc);
  const LengthLadder lad = length_ladder([&](const CPoint& a, const CPoint& b) { return std::atanh(lem(a, b)); }, seg, 16);
  for (std::size_t i = 1; i < lad.lengths.size(); ++i) CHECK(lad.lengths[i] >= lad.lengths[i - 1] - 1e-12);
  CHECK(lad.supremum == doctest::Approx(exact));
}

TEST_CASE("Euclidean length of gamma is 1/2; zero metric gives 0") {
  const ParametricCurve g = ParametricCurve::example3_gamma();
  CHECK(g.map(1.0) == CPoint{cplx{0.0, 0.5}, 0.5});
  const MetricFn euclid = [](const CPoint&, const CVector& X) { return norm(X); };
  CHECK(length_by_metric(euclid, g, 8) == doctest::Approx(0.5));
  CHECK(length_by_metric([](const CPoint&, const CVector&) { return 0.0; }, g, 8) == 0.0);
  ParametricCurve fd{g.map, {}};
  CHECK(norm(fd.velocity(0.5) - g.velocity(0.5)) < 1e-8);
}

TEST_CASE("Example 3 chain experiment") {
  const Example3Domain dom(Example3Params::with_defaults(100, 20));
  Example3ChainConfig cfg;
  cfg.boundary_samples = 256;
  CHECK(example3_chain_experiment(dom, 0.4, 0.4, cfg).total == 0.0);
  CHECK_THROWS(example3_chain_experiment(dom, -0.1, 0.4, cfg));

  const Example3ChainReport r = example3_chain_experiment(dom, 0.0, 1.0, cfg);
  REQUIRE(r.hops.size() == 5u);
  CHECK(r.chain.points.front() == CPoint{0.0, 0.5});
  CHECK(r.chain.points.back() == CPoint{cplx{0.0, 0.5}, 0.5});
  double sum = 0.0;
  for (const ChainHop& h : r.hops) {
    CHECK(h.cert.min_margin >= cfg.margin_eps);
    CHECK(h.cost == doctest::Approx(std::atanh(h.lempert_bound)));
    sum += h.cost;
    if (h.label != "hop") CHECK(h.cost < 1e-5);
  }
  CHECK(r.total == doctest::Approx(sum));
  CHECK(r.total < 0.2);
}

TEST_CASE("transport along C x {0} costs almost nothing") {
  const Example3Domain dom(Example3Params::with_defaults(50, 10));
  Example3ChainConfig cfg;
  cfg.boundary_samples = 64;
  const auto lines = singular_lines(dom.params());
  const CPoint a{lines[0].first_coordinate, 0.0};
  const CPoint b{lines[5].first_coordinate, 0.0};
  const Example3ChainReport r = example3_chain_between(dom, a, b, cfg);
  CHECK(r.total < 1e-5);
}
