#include "iml/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace iml {

SimplexResult nelder_mead(const Objective& f, std::vector<double> x0, const SimplexOptions& opts) {
  const std::size_t n = x0.size();
  SimplexResult best{x0, f(x0), 1};
  if (n == 0 || (opts.target && best.f <= *opts.target)) return best;

  const double dn = static_cast<double>(n);
  const double reflect = 1.0;
  const double expand = 1.0 + 2.0 / dn;
  const double contract = 0.75 - 1.0 / (2.0 * dn);
  const double shrink = n > 1 ? 1.0 - 1.0 / dn : 0.5;

  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  vals[0] = best.f;
  int evals = 1;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };
  for (std::size_t i = 0; i < n; ++i) {
    pts[i + 1][i] += opts.initial_step;
    vals[i + 1] = eval(pts[i + 1]);
  }

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto point_along = [&](double coef, const std::vector<double>& worst, std::vector<double>& out) {
    for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + coef * (centroid[j] - worst[j]);
  };

  while (evals < opts.max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t lo = order.front();
    const std::size_t hi = order.back();
    const std::size_t second = order[n - 1];

    if (opts.target && vals[lo] <= *opts.target) break;
    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j) diameter = std::max(diameter, std::abs(pts[i][j] - pts[lo][j]));
    const double spread = vals[hi] - vals[lo];
    if (diameter < opts.x_tol || (std::isfinite(spread) && spread < opts.f_tol)) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != hi)
        for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j] / dn;

    point_along(reflect, pts[hi], trial);
    const double fr = eval(trial);
    if (fr < vals[lo]) {
      point_along(expand, pts[hi], trial2);
      const double fe = eval(trial2);
      if (fe < fr) {
        pts[hi] = trial2;
        vals[hi] = fe;
      } else {
        pts[hi] = trial;
        vals[hi] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[hi] = trial;
      vals[hi] = fr;
      continue;
    }
    // Outside or inside contraction.
    const bool outside = fr < vals[hi];
    point_along(outside ? contract : -contract, pts[hi], trial2);
    const double fc = eval(trial2);
    if (fc < (outside ? fr : vals[hi])) {
      pts[hi] = trial2;
      vals[hi] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == lo) continue;
      for (std::size_t j = 0; j < n; ++j) pts[i][j] = pts[lo][j] + shrink * (pts[i][j] - pts[lo][j]);
      vals[i] = eval(pts[i]);
    }
  }

  const auto it = std::min_element(vals.begin(), vals.end());
  const std::size_t k = static_cast<std::size_t>(it - vals.begin());
  if (vals[k] < best.f) {
    best.x = pts[k];
    best.f = vals[k];
  }
  best.evals = evals;
  return best;
}

SimplexResult polish(const Objective& f, std::vector<double> x0, const SimplexOptions& opts,
                     int max_rounds) {
  SimplexOptions round = opts;
  SimplexResult best = nelder_mead(f, std::move(x0), round);
  int total = best.evals;
  for (int r = 1; r < max_rounds && total < opts.max_evals; ++r) {
    if (opts.target && best.f <= *opts.target) break;
    round.initial_step = std::max(round.initial_step * 0.25, 1e-9);
    round.max_evals = opts.max_evals - total;
    SimplexResult next = nelder_mead(f, best.x, round);
    total += next.evals;
    const bool improved = next.f < best.f - 1e-15 * (1.0 + std::abs(best.f));
    if (next.f < best.f) best = std::move(next);
    if (!improved) break;
  }
  best.evals = total;
  return best;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined word.
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + stream + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace iml
