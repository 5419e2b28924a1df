#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "iml/complex_types.hpp"

namespace iml {

/// Polynomial map zeta -> center + sum_k coeffs[k-1] zeta^k from the unit disc into C^n.
struct AnalyticDisc {
  CPoint center;
  std::vector<CVector> coeffs;

  std::size_t degree() const { return coeffs.size(); }
  CPoint operator()(cplx zeta) const;
  /// f'(0), i.e. the first coefficient (zero vector for the constant disc).
  CVector derivative_at_origin() const;
};

/// Sampled containment certificate: margin(f(radius e^{i theta_s})) >= min_margin
/// for S equi-spaced angles.
struct ContainmentCert {
  int boundary_samples = 0;
  double radius = 0.0;
  double min_margin = 0.0;
};

/// m parts X_1..X_m with sum X; the last part is stored as the residual.
struct Decomposition {
  std::vector<CVector> parts;
};

/// z_0 = z, ..., z_m = w.
struct Chain {
  std::vector<CPoint> points;
};

enum class BoundKind { UpperBound, OracleExact };

std::string to_string(BoundKind kind);

struct MetricEstimate {
  double value = 0.0;
  BoundKind kind = BoundKind::UpperBound;
  /// Analytic disc, decomposition, chain, or the name of the closed-form oracle.
  std::variant<std::monostate, AnalyticDisc, Decomposition, Chain, std::string> witness;
  std::optional<ContainmentCert> cert;
  std::string diagnostic;

  std::string witness_summary() const;
};

/// kappa(z; X).
using MetricFn = std::function<double(const CPoint&, const CVector&)>;
/// Lempert function value k~*(z, w) in [0, 1).
using LempertFn = std::function<double(const CPoint&, const CPoint&)>;
/// A pseudodistance-like two-point value such as k~ = atanh(k~*) or k^(m).
using DistanceFn = std::function<double(const CPoint&, const CPoint&)>;

}  // namespace iml
