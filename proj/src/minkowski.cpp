#include "iml/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace iml {

MinkowskiFunctional::MinkowskiFunctional(std::string name, std::size_t dimension, Profile profile,
                                         bool reinhardt, std::vector<double> params)
    : name_(std::move(name)),
      dimension_(dimension),
      profile_(std::move(profile)),
      reinhardt_(reinhardt),
      params_(std::move(params)) {
  if (dimension_ == 0 || dimension_ > kMaxDimension)
    throw std::invalid_argument("gauge dimension out of range");
  if (!profile_) throw std::invalid_argument("gauge profile missing");
}

double MinkowskiFunctional::operator()(const CVector& X) const {
  if (X.size() != dimension_) throw std::invalid_argument("gauge dimension mismatch");
  double scale = 0.0;
  const CVector dir = canonical_direction(X, &scale);
  if (scale == 0.0) return 0.0;
  return scale * profile_(dir);
}

MinkowskiFunctional MinkowskiFunctional::euclidean(std::size_t n) {
  return {"euclid", n, [](const CVector& x) { return norm(x); }, true};
}

MinkowskiFunctional MinkowskiFunctional::max_modulus(std::size_t n) {
  return {"max", n,
          [](const CVector& x) {
            double m = 0.0;
            for (const cplx& c : x) m = std::max(m, std::abs(c));
            return m;
          },
          true};
}

MinkowskiFunctional MinkowskiFunctional::l1(std::size_t n) {
  return {"l1", n,
          [](const CVector& x) {
            double s = 0.0;
            for (const cplx& c : x) s += std::abs(c);
            return s;
          },
          true};
}

MinkowskiFunctional MinkowskiFunctional::max_geo(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("max-geo constant must be positive");
  return {"max-geo", 2,
          [c](const CVector& x) {
            const double a = std::abs(x[0]);
            const double b = std::abs(x[1]);
            return std::max({a, b, c * std::sqrt(a * b)});
          },
          true, {c}};
}

MinkowskiFunctional MinkowskiFunctional::geometric_mean() {
  return {"geo", 2, [](const CVector& x) { return std::sqrt(std::abs(x[0]) * std::abs(x[1])); },
          true};
}

MinkowskiFunctional MinkowskiFunctional::half_power() {
  return {"half", 2,
          [](const CVector& x) {
            const double s = std::sqrt(std::abs(x[0])) + std::sqrt(std::abs(x[1]));
            return s * s;
          },
          true};
}

MinkowskiFunctional make_minkowski(const std::string& name, std::size_t dimension, double c) {
  if (name == "euclid") return MinkowskiFunctional::euclidean(dimension);
  if (name == "max") return MinkowskiFunctional::max_modulus(dimension);
  if (name == "l1") return MinkowskiFunctional::l1(dimension);
  const bool two_dim_only = name == "max-geo" || name == "geo" || name == "half";
  if (two_dim_only && dimension != 2)
    throw std::invalid_argument("gauge '" + name + "' is defined on C^2 only");
  if (name == "max-geo") return MinkowskiFunctional::max_geo(c);
  if (name == "geo") return MinkowskiFunctional::geometric_mean();
  if (name == "half") return MinkowskiFunctional::half_power();
  throw std::invalid_argument("unknown gauge '" + name + "'");
}

bool balanced_membership(const MinkowskiFunctional& h, const CPoint& z) {
  if (z.size() != h.dimension()) throw std::invalid_argument("dimension mismatch");
  return h(as_vector(z)) < 1.0;
}

}  // namespace iml
