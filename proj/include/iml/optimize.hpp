#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace iml {

/// Objective over R^d. May return +infinity for infeasible points.
using Objective = std::function<double(std::span<const double>)>;

struct SimplexOptions {
  int max_evals = 2000;
  double initial_step = 0.1;
  /// Stop once the simplex diameter falls below this.
  double x_tol = 1e-10;
  /// Stop once the spread of simplex values falls below this.
  double f_tol = 1e-12;
  /// Stop as soon as a value at or below this target is seen.
  std::optional<double> target;
};

struct SimplexResult {
  std::vector<double> x;
  double f = 0.0;
  int evals = 0;
};

/// Nelder-Mead with dimension-adaptive coefficients. Never returns a point worse than x0.
SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, const SimplexOptions& opts);

/// Repeats nelder_mead from its own best point (fresh simplex) until a round stops improving.
/// Recovers from collapsed simplices at kinks of max-type objectives.
SimplexResult polish(const Objective& f, std::vector<double> x0, const SimplexOptions& opts,
                     int max_rounds = 6);

/// Derives an independent stream seed from (seed, stream).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

using Rng = std::mt19937_64;

}  // namespace iml
