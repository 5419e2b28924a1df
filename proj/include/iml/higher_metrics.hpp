#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "iml/domain.hpp"
#include "iml/estimate.hpp"
#include "iml/minkowski.hpp"

namespace iml {

struct DecompositionConfig {
  int restarts = 16;
  /// Objective evaluations per local search.
  int max_evals = 3000;
  std::uint64_t seed = 1;
};

/// kappa^(1..max_m)(z; X) computed as a ladder. Level m minimises sum_j metric(z; X_j) over
/// decompositions X = X_1 + ... + X_m and is seeded with the level m-1 optimum padded by a
/// zero part, so the returned values are nonincreasing in m. Level 1 is metric(z; X).
std::vector<MetricEstimate> kappa_ladder(const MetricFn& metric, const CPoint& z, const CVector& X,
                                         int max_m, const DecompositionConfig& cfg = {});

/// Upper bound for the m-th Kobayashi metric kappa^(m)(z; X).
MetricEstimate mth_kobayashi(const MetricFn& metric, const CPoint& z, const CVector& X, int m,
                             const DecompositionConfig& cfg = {});

/// kappa^(2n-1), which equals the Kobayashi-Buseman metric in dimension n.
MetricEstimate kobayashi_buseman(const MetricFn& metric, const CPoint& z, const CVector& X,
                                 std::size_t n, const DecompositionConfig& cfg = {});

/// Gauge of the convex hull of a complete Reinhardt domain {h < 1} in C^2.
///
/// The modulus shadow {(x, y) >= 0 : h(x, y) < 1} is star-shaped with boundary radius
/// 1 / h(cos t, sin t); it is sampled at `hull_points` angles, reflected into all four
/// quadrants and convexified. Directions where h vanishes are recession directions.
class HullFunctional {
 public:
  explicit HullFunctional(MinkowskiFunctional h, int hull_points = 2048);

  double operator()(const CVector& X) const;
  const MinkowskiFunctional& base() const { return base_; }

 private:
  struct Edge {
    double nx, ny, offset;  // n . p <= offset on the hull
  };
  MinkowskiFunctional base_;
  bool whole_plane_ = false;
  bool x_unbounded_ = false;
  bool y_unbounded_ = false;
  double x_extent_ = 0.0;
  double y_extent_ = 0.0;
  std::vector<Edge> edges_;
};

double hull_functional(const MinkowskiFunctional& h, const CVector& X, int hull_points = 2048);

struct ChainConfig {
  int restarts = 4;
  /// Objective evaluations per local search; 0 evaluates the seed chains only.
  int max_evals = 2000;
  /// Intermediate points must keep at least this margin.
  double margin_eps = 1e-3;
  std::uint64_t seed = 1;
  /// Largest chain length tried by kobayashi_distance.
  int max_m = 8;
};

/// k^(1..max_m)(z, w): level m minimises sum_j atanh(base(z_{j-1}, z_j)) over chains of m steps.
/// Seeds: the straight segment (as a chain of repeated points), the caller's chains (padded
/// by repeating w), the previous level's optimum, and random perturbations. Nonincreasing in m.
std::vector<MetricEstimate> lempert_ladder(const DomainModel& dom, const CPoint& z, const CPoint& w,
                                           int max_m, const LempertFn& base,
                                           const ChainConfig& cfg = {},
                                           std::span<const Chain> seeds = {});

/// Upper bound for the m-th Lempert function k^(m)(z, w).
MetricEstimate mth_lempert(const DomainModel& dom, const CPoint& z, const CPoint& w, int m,
                           const LempertFn& base, const ChainConfig& cfg = {},
                           std::span<const Chain> seeds = {});

struct DistanceResult {
  MetricEstimate estimate;
  /// Smallest m whose k^(m) already equals the reported minimum.
  int stabilizing_m = 1;
  std::vector<double> ladder;
};

/// min over m <= cfg.max_m of k^(m)(z, w), an upper bound for the Kobayashi pseudodistance.
DistanceResult kobayashi_distance(const DomainModel& dom, const CPoint& z, const CPoint& w,
                                  const LempertFn& base, const ChainConfig& cfg = {},
                                  std::span<const Chain> seeds = {});

/// Cost sum_j atanh(base(z_{j-1}, z_j)) of a chain; +infinity if some step has base >= 1.
double chain_cost(const Chain& chain, const LempertFn& base);

}  // namespace iml
