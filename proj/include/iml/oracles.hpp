#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iml/domain.hpp"
#include "iml/estimate.hpp"

namespace iml {

/// Model domains with closed-form Kobayashi-Royden metric and Lempert function.
struct OracleDomainTag {
  enum class Kind { UnitDisc, Polydisc, EuclideanBall, BalancedAtOrigin };

  Kind kind = Kind::UnitDisc;
  std::vector<double> radii;  // polydisc
  std::size_t dimension = 1;
  double radius = 1.0;        // ball
  std::optional<MinkowskiFunctional> h;

  std::string name() const;
};

/// The oracle matching a descriptor, if any. Balanced descriptors map to BalancedAtOrigin.
std::optional<OracleDomainTag> oracle_tag_for(const DomainDescriptor& desc);

/// kappa at (z; X). Disc: |X|/(1-|z|^2). Polydisc: max_i |X_i| r_i/(r_i^2-|z_i|^2).
/// Ball: the usual formula (reduces to ||X|| at 0). Balanced at origin: h(X), z = 0 only.
MetricEstimate oracle_kappa(const OracleDomainTag& tag, const CPoint& z, const CVector& X);

/// Lempert function k~*(z, w). Disc: Moebius distance. Polydisc: max of componentwise Moebius
/// distances. Ball: sqrt(1 - (1-|z|^2)(1-|w|^2)/|1-<w,z>|^2) after scaling. Balanced: h(w), z = 0.
MetricEstimate oracle_lempert(const OracleDomainTag& tag, const CPoint& z, const CPoint& w);

MetricFn kappa_oracle_fn(const OracleDomainTag& tag);
LempertFn lempert_oracle_fn(const OracleDomainTag& tag);

}  // namespace iml
