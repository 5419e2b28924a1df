#pragma once

#include <functional>
#include <string>
#include <vector>

#include "iml/estimate.hpp"
#include "iml/example_domains.hpp"

namespace iml {

struct ParametricCurve {
  std::function<CPoint(double)> map;
  /// Optional; a central difference of `map` is used when empty.
  std::function<CVector(double)> derivative;

  CVector velocity(double t) const;

  static ParametricCurve segment(const CPoint& a, const CPoint& b);
  /// t -> (t i / 2, 1 / 2).
  static ParametricCurve example3_gamma();
};

/// sum_{i=1..P} d(gamma((i-1)/P), gamma(i/P)).
double length_by_distance(const DistanceFn& d, const ParametricCurve& gamma, int partitions);

struct LengthLadder {
  std::vector<int> partitions;
  std::vector<double> lengths;
  /// Largest value on the ladder (the sup over partitions is approximated from below).
  double supremum = 0.0;
};

/// Distance-length at P = 1, 2, 4, ..., max_partitions.
LengthLadder length_ladder(const DistanceFn& d, const ParametricCurve& gamma, int max_partitions);

/// Composite trapezoid rule for int_0^1 metric(gamma(t); gamma'(t)) dt with Q nodes.
double length_by_metric(const MetricFn& metric, const ParametricCurve& gamma, int quadrature_points);

struct Example3ChainConfig {
  int boundary_samples = 512;
  double margin_eps = 1e-3;
  /// Radius of the discs lying inside the singular lines and C x {0}.
  double wide_radius = 1e6;
  /// Hop discs stay within |z1| <= 5, where truncation only shrinks the domain.
  double max_hop_radius = 4.0;
  int bisection_steps = 40;
};

struct ChainHop {
  std::string label;
  CPoint from;
  CPoint to;
  /// Certified k~* upper bound |alpha| of this leg.
  double lempert_bound = 0.0;
  /// atanh(lempert_bound).
  double cost = 0.0;
  AnalyticDisc disc;
  ContainmentCert cert;
};

struct Example3ChainReport {
  double t0 = 0.0;
  double t1 = 0.0;
  int J = 0;
  int K = 0;
  std::vector<ChainHop> hops;
  /// Upper bound for k(gamma(t0), gamma(t1)); also an upper bound for k^(m) with m = hops.size().
  double total = 0.0;
  Chain chain;
};

/// Explicit chain a -> nearest singular line -> C x {0} -> nearest singular line of b -> b.
/// Legs of zero length cost nothing.
Example3ChainReport example3_chain_between(const Example3Domain& dom, const CPoint& a,
                                           const CPoint& b, const Example3ChainConfig& cfg = {});

/// Explicit chain gamma(t0) -> singular line -> C x {0} -> singular line -> gamma(t1).
/// Throws std::runtime_error if no hop disc can be certified.
Example3ChainReport example3_chain_experiment(const Example3Domain& dom, double t0, double t1,
                                              const Example3ChainConfig& cfg = {});

}  // namespace iml
