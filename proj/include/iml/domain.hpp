#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "iml/complex_types.hpp"
#include "iml/example_domains.hpp"
#include "iml/minkowski.hpp"

namespace iml {

/// Raised when a domain descriptor cannot be instantiated.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation receives a point outside its domain.
class OutsideDomain : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DomainDescriptor;

namespace descriptor {
struct UnitDisc {};
struct Polydisc {
  std::vector<double> radii;
};
struct EuclideanBall {
  std::size_t dimension = 2;
  double radius = 1.0;
};
struct Balanced {
  std::optional<MinkowskiFunctional> h;
};
struct Product {
  std::shared_ptr<const DomainDescriptor> first;
  std::shared_ptr<const DomainDescriptor> second;
};
struct Example3 {
  Example3Params params = Example3Params::with_defaults();
};
}  // namespace descriptor

struct DomainDescriptor {
  std::variant<descriptor::UnitDisc, descriptor::Polydisc, descriptor::EuclideanBall,
               descriptor::Balanced, descriptor::Product, descriptor::Example3>
      spec;

  /// Short human-readable tag, e.g. "polydisc(1,1)".
  std::string tag() const;
};

/// A domain in C^n given by a continuous margin function: margin > 0 exactly on the domain.
class DomainModel {
 public:
  using Margin = std::function<double(const CPoint&)>;

  DomainModel(std::size_t dimension, Margin margin, DomainDescriptor descriptor);

  std::size_t dimension() const { return dimension_; }
  double margin(const CPoint& z) const;
  bool contains(const CPoint& z) const { return margin(z) > 0.0; }
  const DomainDescriptor& descriptor() const { return descriptor_; }

 private:
  std::size_t dimension_;
  Margin margin_;
  DomainDescriptor descriptor_;
};

DomainModel make_model_domain(const DomainDescriptor& desc);

// Convenience constructors.
DomainDescriptor unit_disc();
DomainDescriptor polydisc(std::vector<double> radii);
DomainDescriptor euclidean_ball(std::size_t dimension = 2, double radius = 1.0);
DomainDescriptor balanced(MinkowskiFunctional h);
DomainDescriptor product(DomainDescriptor first, DomainDescriptor second);
DomainDescriptor example3(Example3Params params = Example3Params::with_defaults());

}  // namespace iml
