#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "iml/complex_types.hpp"
#include "iml/domain.hpp"
#include "iml/minkowski.hpp"

using namespace iml;

TEST_CASE("tuples reject bad sizes and non-finite entries") {
  CHECK_THROWS(CPoint(0));
  CHECK_THROWS(CPoint(kMaxDimension + 1));
  const cplx bad[] = {cplx{std::numeric_limits<double>::quiet_NaN(), 0.0}};
  CHECK_THROWS(CPoint(std::span<const cplx>(bad)));
  CHECK(CVector(3).is_zero());
}

TEST_CASE("affine arithmetic and hermitian product") {
  const CPoint a{1.0, cplx{0.0, 1.0}};
  const CPoint b{2.0, 0.0};
  const CVector d = b - a;
  CHECK(a + d == b);
  CHECK(norm_sq(d) == doctest::Approx(2.0));
  CHECK(std::abs(hermitian(d, d) - cplx{2.0, 0.0}) < 1e-15);
}

TEST_CASE("canonical direction removes scale and phase") {
  const CVector X{cplx{0.0, 3.0}, cplx{4.0, 0.0}};
  double scale = 0.0;
  cplx phase;
  const CVector u = canonical_direction(X, &scale, &phase);
  CHECK(scale == doctest::Approx(5.0));
  CHECK(norm(u) == doctest::Approx(1.0));
  CHECK(u[1].imag() == doctest::Approx(0.0));
  CHECK(u[1].real() > 0.0);
  const CVector back = cplx{scale, 0.0} * phase * u;
  CHECK(norm(back - X) < 1e-12);
}

TEST_CASE("make_model_domain examples") {
  const DomainModel disc = make_model_domain(unit_disc());
  CHECK(disc.dimension() == 1);
  CHECK(disc.contains(CPoint{0.5}));
  CHECK_FALSE(disc.contains(CPoint{1.5}));

  const DomainModel ball = make_model_domain(balanced(MinkowskiFunctional::euclidean(2)));
  CHECK(ball.contains(CPoint{0.6, 0.7}));

  const DomainModel poly = make_model_domain(polydisc({1.0, 1.0}));
  CHECK(poly.contains(CPoint{0.9, cplx{0.0, -0.9}}));
  CHECK_FALSE(poly.contains(CPoint{1.1, 0.0}));

  CHECK_THROWS_AS(make_model_domain(polydisc({1.0, -1.0})), DomainError);
  CHECK_THROWS_AS(make_model_domain(DomainDescriptor{descriptor::Balanced{}}), DomainError);
}

TEST_CASE("product domain uses the smaller margin") {
  const DomainModel p = make_model_domain(product(unit_disc(), euclidean_ball(2, 2.0)));
  CHECK(p.dimension() == 3);
  CHECK(p.contains(CPoint{0.5, 1.0, 1.0}));
  CHECK_FALSE(p.contains(CPoint{0.5, 1.5, 1.5}));
  CHECK(p.margin(CPoint{0.9, 0.0, 0.0}) == doctest::Approx(0.1));
}

TEST_CASE("balanced membership examples") {
  CHECK(balanced_membership(MinkowskiFunctional::max_modulus(2), CPoint{0.5, 0.99}));
  CHECK(balanced_membership(MinkowskiFunctional::max_geo(2.0), CPoint{0.9, 0.1}));
  CHECK(MinkowskiFunctional::max_geo(2.0)(CVector{0.9, 0.1}) == doctest::Approx(0.9));
  for (const char* g : {"euclid", "max", "l1", "max-geo", "geo", "half"})
    CHECK(balanced_membership(make_minkowski(g), CPoint(2)));
  CHECK_THROWS(balanced_membership(MinkowskiFunctional::max_modulus(2), CPoint(3)));
  CHECK_THROWS(make_minkowski("nope"));
}

TEST_CASE("gauges are absolutely homogeneous and vanish at 0") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (const char* name : {"euclid", "max", "l1", "max-geo", "geo", "half"}) {
    const MinkowskiFunctional h = make_minkowski(name);
    CHECK(h(CVector(2)) == 0.0);
    for (int i = 0; i < 50; ++i) {
      const CVector X{cplx{g(rng), g(rng)}, cplx{g(rng), g(rng)}};
      const cplx lambda{g(rng), g(rng)};
      CHECK(h(lambda * X) == doctest::Approx(std::abs(lambda) * h(X)).epsilon(1e-12));
    }
  }
}

TEST_CASE("margin sign matches membership; balanced domains are complete") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const DomainDescriptor descs[] = {polydisc({1.0, 0.5}), euclidean_ball(2),
                                    balanced(MinkowskiFunctional::max_geo(2.0)),
                                    balanced(MinkowskiFunctional::half_power())};
  for (const auto& d : descs) {
    const DomainModel dom = make_model_domain(d);
    int inside = 0;
    for (int i = 0; i < 1000; ++i) {
      const CPoint z{cplx{u(rng), u(rng)}, cplx{u(rng), u(rng)}};
      const double m = dom.margin(z);
      CHECK((m > 0.0) == dom.contains(z));
      if (m <= 0.0) continue;
      ++inside;
      // Perturbations well below the margin keep membership (all margins here are 1-Lipschitz
      // up to the gauge constant, so use a generous factor).
      const CVector e{cplx{u(rng), u(rng)}, cplx{u(rng), u(rng)}};
      CHECK(dom.contains(z + e * cplx{0.1 * m / (4.0 * norm(e)), 0.0}));
      if (std::holds_alternative<descriptor::Balanced>(d.spec)) {
        const cplx lambda = std::polar(unit(rng), 6.28 * unit(rng));
        CHECK(dom.contains(as_point(lambda * as_vector(z))));
      }
    }
    CHECK(inside > 0);
  }
}
