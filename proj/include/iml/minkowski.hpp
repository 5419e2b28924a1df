#pragma once

#include <functional>
#include <string>
#include <vector>

#include "iml/complex_types.hpp"

namespace iml {

/// Minkowski functional (gauge) of a balanced domain {h < 1}.
///
/// The raw profile is only ever evaluated on canonical unit directions (see
/// canonical_direction) and the result is rescaled by ||X||, so h(lambda X) =
/// |lambda| h(X) holds by construction and h(0) = 0.
class MinkowskiFunctional {
 public:
  using Profile = std::function<double(const CVector&)>;

  MinkowskiFunctional(std::string name, std::size_t dimension, Profile profile,
                      bool reinhardt, std::vector<double> params = {});

  double operator()(const CVector& X) const;

  const std::string& name() const { return name_; }
  std::size_t dimension() const { return dimension_; }
  /// True when h depends on the moduli |X_i| only.
  bool reinhardt() const { return reinhardt_; }
  const std::vector<double>& params() const { return params_; }

  static MinkowskiFunctional euclidean(std::size_t n);
  static MinkowskiFunctional max_modulus(std::size_t n);
  static MinkowskiFunctional l1(std::size_t n);
  /// max(|X1|, |X2|, c * sqrt(|X1||X2|)) on C^2.
  static MinkowskiFunctional max_geo(double c = 2.0);
  /// sqrt(|X1||X2|) on C^2; its zero set contains both axes.
  static MinkowskiFunctional geometric_mean();
  /// (sqrt|X1| + sqrt|X2|)^2 on C^2.
  static MinkowskiFunctional half_power();

 private:
  std::string name_;
  std::size_t dimension_;
  Profile profile_;
  bool reinhardt_;
  std::vector<double> params_;
};

/// Named gauges accepted by configuration files: euclid, max, l1, max-geo, geo, half.
MinkowskiFunctional make_minkowski(const std::string& name, std::size_t dimension = 2,
                                   double c = 2.0);

/// h(z) < 1.
bool balanced_membership(const MinkowskiFunctional& h, const CPoint& z);

}  // namespace iml
