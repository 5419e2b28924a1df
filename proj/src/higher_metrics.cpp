#include "iml/higher_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "iml/optimize.hpp"

namespace iml {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void write_vector(const CVector& v, std::vector<double>& x, std::size_t at) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    x[at + 2 * i] = v[i].real();
    x[at + 2 * i + 1] = v[i].imag();
  }
}

template <class T>
T read_tuple(std::span<const double> x, std::size_t at, std::size_t n) {
  T v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = cplx{x[at + 2 * i], x[at + 2 * i + 1]};
  return v;
}

std::vector<CVector> parts_from(std::span<const double> x, const CVector& X, int m) {
  const std::size_t n = X.size();
  std::vector<CVector> parts;
  parts.reserve(m);
  CVector rest = X;
  for (int j = 0; j + 1 < m; ++j) {
    parts.push_back(read_tuple<CVector>(x, 2 * n * j, n));
    rest = rest - parts.back();
  }
  parts.push_back(rest);
  return parts;
}

}  // namespace

std::vector<MetricEstimate> kappa_ladder(const MetricFn& metric, const CPoint& z, const CVector& X,
                                         int max_m, const DecompositionConfig& cfg) {
  if (max_m < 1) throw std::invalid_argument("kappa ladder: m must be >= 1");
  const std::size_t n = X.size();
  std::vector<MetricEstimate> ladder;
  ladder.reserve(max_m);

  MetricEstimate first;
  first.value = metric(z, X);
  first.kind = BoundKind::UpperBound;
  first.witness = Decomposition{{X}};
  ladder.push_back(first);

  const double xnorm = norm(X);
  for (int m = 2; m <= max_m; ++m) {
    const MetricEstimate& prev = ladder.back();
    const auto& prev_parts = std::get<Decomposition>(prev.witness).parts;

    MetricEstimate est = prev;
    Decomposition padded{prev_parts};
    padded.parts.push_back(CVector(n));
    est.witness = padded;

    if (xnorm > 0.0) {
      const std::size_t dim = 2 * n * static_cast<std::size_t>(m - 1);
      auto objective = [&](std::span<const double> x) {
        double s = 0.0;
        for (const CVector& p : parts_from(x, X, m)) s += metric(z, p);
        return std::isnan(s) ? kInf : s;
      };

      std::vector<std::vector<double>> starts;
      {
        std::vector<double> x(dim, 0.0);
        for (int j = 0; j + 1 < m; ++j) write_vector(prev_parts[j], x, 2 * n * j);
        starts.push_back(std::move(x));
      }
      {
        std::vector<double> x(dim, 0.0);
        for (int j = 0; j + 1 < m; ++j) write_vector(X / cplx{double(m), 0.0}, x, 2 * n * j);
        starts.push_back(std::move(x));
      }
      {
        // Axis-aligned split: part j carries coordinate j; the residual takes the rest.
        std::vector<double> x(dim, 0.0);
        for (int j = 0; j + 1 < m && static_cast<std::size_t>(j) < n; ++j) {
          CVector e(n);
          e[j] = X[j];
          write_vector(e, x, 2 * n * j);
        }
        starts.push_back(std::move(x));
      }

      Rng rng(stream_seed(cfg.seed, static_cast<std::uint64_t>(m)));
      std::normal_distribution<double> gauss(0.0, 1.0);
      const double step = 0.25 * xnorm / m;
      for (int r = 0; r < cfg.restarts; ++r) {
        std::vector<double> start;
        if (static_cast<std::size_t>(r) < starts.size()) {
          start = starts[r];
        } else {
          start = starts[static_cast<std::size_t>(r) % starts.size()];
          for (double& v : start) v += xnorm * gauss(rng) / m;
        }
        SimplexOptions opts;
        opts.max_evals = cfg.max_evals;
        opts.initial_step = step;
        opts.x_tol = 1e-12 * (1.0 + xnorm);
        const SimplexResult res = polish(objective, std::move(start), opts);
        if (res.f < est.value) {
          est.value = res.f;
          est.witness = Decomposition{parts_from(res.x, X, m)};
        }
      }
    }
    ladder.push_back(std::move(est));
  }
  return ladder;
}

MetricEstimate mth_kobayashi(const MetricFn& metric, const CPoint& z, const CVector& X, int m,
                             const DecompositionConfig& cfg) {
  if (m < 1) throw std::invalid_argument("mth_kobayashi: m must be >= 1");
  return kappa_ladder(metric, z, X, m, cfg).back();
}

MetricEstimate kobayashi_buseman(const MetricFn& metric, const CPoint& z, const CVector& X,
                                 std::size_t n, const DecompositionConfig& cfg) {
  if (n < 1) throw std::invalid_argument("kobayashi_buseman: dimension must be >= 1");
  MetricEstimate est = mth_kobayashi(metric, z, X, static_cast<int>(2 * n - 1), cfg);
  est.diagnostic = "kobayashi-buseman (m = " + std::to_string(2 * n - 1) + ")";
  return est;
}

HullFunctional::HullFunctional(MinkowskiFunctional h, int hull_points) : base_(std::move(h)) {
  if (base_.dimension() != 2) throw std::invalid_argument("hull functional: dimension must be 2");
  if (hull_points < 8) throw std::invalid_argument("hull functional: need at least 8 hull points");
  if (!base_.reinhardt()) throw std::invalid_argument("hull functional: h must be Reinhardt");
  // Spot-check that h ignores the phases of the coordinates.
  for (int s = 1; s <= 5; ++s) {
    const double a = 0.3 * s;
    const double b = 1.7 - 0.25 * s;
    const double h0 = base_(CVector{a, b});
    const double h1 = base_(CVector{std::polar(a, 0.7 * s), std::polar(b, -1.3 * s)});
    if (std::abs(h0 - h1) > 1e-9 * (1.0 + h0))
      throw std::invalid_argument("hull functional: h must be Reinhardt");
  }

  const int N = hull_points;
  std::vector<std::pair<double, double>> pts;
  pts.reserve(4 * static_cast<std::size_t>(N));
  bool interior_unbounded = false;
  for (int s = 0; s < N; ++s) {
    const double t = 0.5 * std::numbers::pi * s / (N - 1);
    const double c = s == N - 1 ? 0.0 : std::cos(t);
    const double sn = s == 0 ? 0.0 : std::sin(t);
    const double hv = base_(CVector{c, sn});
    if (!(hv > 1e-300)) {
      if (s == 0)
        x_unbounded_ = true;
      else if (s == N - 1)
        y_unbounded_ = true;
      else
        interior_unbounded = true;
      continue;
    }
    const double x = c / hv;
    const double y = sn / hv;
    x_extent_ = std::max(x_extent_, x);
    y_extent_ = std::max(y_extent_, y);
    for (double sx : {1.0, -1.0})
      for (double sy : {1.0, -1.0}) pts.emplace_back(sx * x, sy * y);
  }
  // A complete Reinhardt shadow with an unbounded interior ray contains both axes.
  whole_plane_ = interior_unbounded || (x_unbounded_ && y_unbounded_);
  if (whole_plane_ || x_unbounded_ || y_unbounded_) return;

  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto cross = [](const auto& o, const auto& a, const auto& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<double, double>> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    const double nx = b.second - a.second;
    const double ny = -(b.first - a.first);
    const double offset = nx * a.first + ny * a.second;
    if (offset > 0.0) edges_.push_back({nx, ny, offset});
  }
}

double HullFunctional::operator()(const CVector& X) const {
  if (X.size() != 2) throw std::invalid_argument("hull functional: dimension must be 2");
  if (whole_plane_) return 0.0;
  const double x = std::abs(X[0]);
  const double y = std::abs(X[1]);
  if (x_unbounded_) return y / y_extent_;
  if (y_unbounded_) return x / x_extent_;
  double g = 0.0;
  for (const Edge& e : edges_) g = std::max(g, (e.nx * x + e.ny * y) / e.offset);
  return g;
}

double hull_functional(const MinkowskiFunctional& h, const CVector& X, int hull_points) {
  return HullFunctional(h, hull_points)(X);
}

double chain_cost(const Chain& chain, const LempertFn& base) {
  double s = 0.0;
  for (std::size_t j = 1; j < chain.points.size(); ++j) {
    const CPoint& a = chain.points[j - 1];
    const CPoint& b = chain.points[j];
    if (a == b) continue;
    const double v = base(a, b);
    if (!(v < 1.0)) return kInf;
    s += std::atanh(v);
  }
  return s;
}

std::vector<MetricEstimate> lempert_ladder(const DomainModel& dom, const CPoint& z, const CPoint& w,
                                           int max_m, const LempertFn& base, const ChainConfig& cfg,
                                           std::span<const Chain> seeds) {
  if (max_m < 1) throw std::invalid_argument("lempert ladder: m must be >= 1");
  if (!dom.contains(z) || !dom.contains(w)) throw OutsideDomain("chain endpoints must lie in the domain");
  const std::size_t n = z.size();
  const CVector delta = w - z;

  auto padded = [&](const Chain& c, int m) {
    Chain out = c;
    while (out.points.size() < static_cast<std::size_t>(m) + 1) out.points.push_back(w);
    return out;
  };
  auto usable = [&](const Chain& c, int m) {
    if (c.points.empty() || c.points.size() > static_cast<std::size_t>(m) + 1) return false;
    if (!(c.points.front() == z) || !(c.points.back() == w)) return false;
    for (std::size_t j = 1; j + 1 < c.points.size(); ++j)
      if (!(dom.margin(c.points[j]) >= cfg.margin_eps)) return false;
    return true;
  };

  std::vector<MetricEstimate> ladder;
  for (int m = 1; m <= max_m; ++m) {
    MetricEstimate est;
    est.kind = BoundKind::UpperBound;
    if (m == 1) {
      Chain straight{{z, w}};
      est.value = chain_cost(straight, base);
      est.witness = straight;
    } else {
      est = ladder.back();
      est.witness = padded(std::get<Chain>(est.witness), m);
    }
    for (const Chain& s : seeds) {
      if (!usable(s, m)) continue;
      Chain c = padded(s, m);
      const double v = chain_cost(c, base);
      if (v < est.value) {
        est.value = v;
        est.witness = std::move(c);
      }
    }

    if (m >= 2 && cfg.max_evals > 0 && !(z == w)) {
      const std::size_t dim = 2 * n * static_cast<std::size_t>(m - 1);
      auto chain_from = [&](std::span<const double> x) {
        Chain c;
        c.points.reserve(m + 1);
        c.points.push_back(z);
        for (int j = 0; j + 1 < m; ++j) c.points.push_back(read_tuple<CPoint>(x, 2 * n * j, n));
        c.points.push_back(w);
        return c;
      };
      auto objective = [&](std::span<const double> x) {
        const Chain c = chain_from(x);
        for (int j = 1; j < m; ++j)
          if (!(dom.margin(c.points[j]) >= cfg.margin_eps)) return kInf;
        const double v = chain_cost(c, base);
        return std::isnan(v) ? kInf : v;
      };
      auto to_x = [&](const Chain& c) {
        std::vector<double> x(dim);
        for (int j = 0; j + 1 < m; ++j) write_vector(as_vector(c.points[j + 1]), x, 2 * n * j);
        return x;
      };

      std::vector<std::vector<double>> starts;
      {
        Chain line;
        for (int j = 0; j <= m; ++j) line.points.push_back(z + cplx{double(j) / m, 0.0} * delta);
        line.points.back() = w;
        starts.push_back(to_x(line));
      }
      starts.push_back(to_x(std::get<Chain>(est.witness)));

      Rng rng(stream_seed(cfg.seed, static_cast<std::uint64_t>(m)));
      std::normal_distribution<double> gauss(0.0, 1.0);
      const double scale = std::max(norm(delta), 1e-6);
      for (int r = 0; r < cfg.restarts; ++r) {
        std::vector<double> start = starts[static_cast<std::size_t>(r) % starts.size()];
        if (static_cast<std::size_t>(r) >= starts.size())
          for (double& v : start) v += 0.2 * scale * gauss(rng) / m;
        SimplexOptions opts;
        opts.max_evals = cfg.max_evals;
        opts.initial_step = 0.2 * scale / m;
        const SimplexResult res = nelder_mead(objective, std::move(start), opts);
        if (res.f < est.value) {
          est.value = res.f;
          est.witness = chain_from(res.x);
        }
      }
    }
    ladder.push_back(std::move(est));
  }
  return ladder;
}

MetricEstimate mth_lempert(const DomainModel& dom, const CPoint& z, const CPoint& w, int m,
                           const LempertFn& base, const ChainConfig& cfg,
                           std::span<const Chain> seeds) {
  if (m < 1) throw std::invalid_argument("mth_lempert: m must be >= 1");
  return lempert_ladder(dom, z, w, m, base, cfg, seeds).back();
}

DistanceResult kobayashi_distance(const DomainModel& dom, const CPoint& z, const CPoint& w,
                                  const LempertFn& base, const ChainConfig& cfg,
                                  std::span<const Chain> seeds) {
  const auto ladder = lempert_ladder(dom, z, w, cfg.max_m, base, cfg, seeds);
  DistanceResult out;
  out.estimate = ladder.back();
  for (const MetricEstimate& e : ladder) out.ladder.push_back(e.value);
  const double final_value = out.estimate.value;
  for (std::size_t i = 0; i < ladder.size(); ++i)
    if (ladder[i].value <= final_value) {
      out.stabilizing_m = static_cast<int>(i) + 1;
      break;
    }
  return out;
}

}  // namespace iml
