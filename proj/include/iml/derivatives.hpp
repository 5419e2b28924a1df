#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iml/disc_search.hpp"
#include "iml/domain.hpp"
#include "iml/estimate.hpp"
#include "iml/higher_metrics.hpp"

namespace iml {

/// Nested sampling radii rho_i = rho0 * factor^i, i = 0..levels-1.
struct ShrinkSchedule {
  double rho0 = 0.1;
  int levels = 6;
  double factor = 0.5;
  int samples_per_level = 64;
  std::uint64_t seed = 1;
  /// Resampling attempts per sample before giving up on the neighbourhood.
  int retry_cap = 200;

  void validate() const;
  double radius(int level) const;
};

struct LevelStats {
  double radius = 0.0;
  double max_quotient = 0.0;
  double min_quotient = 0.0;
  int samples = 0;
};

struct QuotientTrace {
  std::vector<LevelStats> levels;
  /// Last-level max / min; these are what the checks compare against.
  double upper = 0.0;
  double lower = 0.0;
  /// Two-level Richardson extrapolants (first-order error model), reported as evidence.
  double upper_extrapolated = 0.0;
  double lower_extrapolated = 0.0;
};

/// Difference-quotient estimator of the limsup / liminf of kmap(w, w + tY) / |t| as
/// (t, w, Y) -> (0, z, X).
///
/// At level i it draws w in the ball of radius rho_i around z, Y with ||Y - X|| <= rho_i ||X||,
/// and complex t with |t| ||X|| in [rho_i / 2, rho_i] (log-uniform modulus, uniform angle).
/// Perturbations are drawn in the canonical frame of X, so the trace for lambda X is |lambda|
/// times the trace for X.
QuotientTrace derivative_estimate(const DomainModel& dom, const DistanceFn& kmap, const CPoint& z,
                                  const CVector& X, const ShrinkSchedule& sched);

/// liminf of metric(z'; X') as (z', X') -> (z, X), sampled on the same shrinking neighbourhoods.
/// `upper` / `lower` of the returned trace hold the per-level max / min of the metric itself.
QuotientTrace metric_neighbourhood_trace(const DomainModel& dom, const MetricFn& metric,
                                         const CPoint& z, const CVector& X,
                                         const ShrinkSchedule& sched);

/// Hyperbolicity indicator: last-level minimum of metric near (z, X).
double underline_kappa(const DomainModel& dom, const CPoint& z, const CVector& X,
                       const ShrinkSchedule& sched, const MetricFn& metric);

/// Everything a verification experiment needs about one domain.
struct MetricSuite {
  std::string name;
  DomainModel domain;
  /// kappa(z; X).
  MetricFn kappa;
  /// k~*(a, b), the base of the chain functions k^(m).
  LempertFn lempert;
};

/// Closed-form suite for disc, polydisc and ball. For balanced domains kappa is h at the origin
/// and the Lempert base is the translated origin proxy k~*(a, b) ~ h(b - a), meaningful only
/// for a near 0.
MetricSuite oracle_suite(const DomainDescriptor& desc);

/// Balanced domain with Lempert base: the exact value h(b) when a = 0, otherwise the certified
/// linear-disc upper bound (degree-1 lempert_upper).
MetricSuite balanced_linear_disc_suite(const MinkowskiFunctional& h, const SearchConfig& cfg = {});

struct CheckConfig {
  ShrinkSchedule schedule;
  DecompositionConfig decomposition;
  /// Chain search inside the quotients; max_evals = 0 evaluates seed chains only.
  ChainConfig chain{.restarts = 0, .max_evals = 0};
  double rel_tol = 0.02;
  double abs_tol = 1e-3;
};

struct CheckRow {
  std::string check;
  std::string domain;
  CPoint z;
  CVector X;
  int m = 1;
  double lhs = 0.0;    // kappa^(m)(z; X)
  double upper = 0.0;  // last-level max quotient of k^(m)
  double lower = 0.0;  // last-level min quotient of k^(m)
  double tol = 0.0;
  bool pass = false;
  QuotientTrace trace;
};

/// k^(m) as a two-point evaluator for quotients near (z, X). Chains are seeded with the straight
/// segment, the coordinate split of b - a and the optimal decomposition of X transported to
/// b - a; `parts` is that decomposition.
DistanceFn chain_distance(const MetricSuite& suite, int m, const std::vector<CVector>& parts,
                          const ChainConfig& cfg);

/// lhs = kappa^(m)(z; X), rhs = upper quotient limit of k^(m); passes iff
/// lhs >= rhs - (rel_tol * lhs + abs_tol).
CheckRow prop2_check(const MetricSuite& suite, const CPoint& z, const CVector& X, int m,
                     const CheckConfig& cfg = {});

/// Passes iff both quotient limits of k^(m) are within rel_tol * kappa^(m) + abs_tol of
/// kappa^(m)(z; X).
CheckRow theorem1_check(const MetricSuite& suite, const CPoint& z, const CVector& X, int m,
                        const CheckConfig& cfg = {.rel_tol = 0.03, .abs_tol = 0.0});

}  // namespace iml
