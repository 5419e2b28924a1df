#pragma once

#include <cstdint>

#include "iml/domain.hpp"
#include "iml/estimate.hpp"

namespace iml {

struct SearchConfig {
  /// Highest polynomial degree; degrees 1..degree are searched in order.
  int degree = 4;
  int restarts = 8;
  /// Containment is sampled on |zeta| = rho; reported values are alpha / rho.
  double rho = 0.995;
  int boundary_samples = 256;
  double margin_eps = 1e-3;
  /// Objective evaluations per local simplex run.
  int max_iters = 1500;
  std::uint64_t seed = 1;
  /// Relative width at which the alpha bisection stops.
  double bisection_tol = 1e-4;

  void validate() const;
};

/// Minimum of margin(disc(radius e^{i theta_s})) over `samples` equi-spaced angles.
ContainmentCert certify_disc(const DomainModel& dom, const AnalyticDisc& disc, double radius,
                             int samples);

/// Upper bound for the Lempert function k~*(z, w): smallest |alpha| found with a certified
/// polynomial disc f(0) = z, f(alpha) = w. The witness is that disc, containment holds on
/// |zeta| = cfg.rho and the value is |alpha| / rho. Returns the vacuous bound 1 with a
/// diagnostic when no disc is certified.
MetricEstimate lempert_upper(const DomainModel& dom, const CPoint& z, const CPoint& w,
                             const SearchConfig& cfg = {});

/// atanh of a Lempert-function estimate.
double lempert_tanh(const MetricEstimate& est);

/// Upper bound for the Kobayashi-Royden metric kappa(z; X): smallest |alpha| found with a
/// certified disc f(0) = z and alpha f'(0) = X. The search runs on the canonical direction
/// of X and is rescaled, so the result is absolutely homogeneous in X.
MetricEstimate kobayashi_royden_upper(const DomainModel& dom, const CPoint& z, const CVector& X,
                                      const SearchConfig& cfg = {});

/// kobayashi_royden_upper as a plain metric evaluator.
MetricFn kappa_search_fn(const DomainModel& dom, const SearchConfig& cfg);
/// lempert_upper as a plain Lempert-function evaluator (values in [0, 1]).
LempertFn lempert_search_fn(const DomainModel& dom, const SearchConfig& cfg);

}  // namespace iml
