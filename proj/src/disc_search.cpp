#include "iml/disc_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "iml/optimize.hpp"

namespace iml {

void SearchConfig::validate() const {
  if (degree < 1) throw std::invalid_argument("search: degree must be >= 1");
  if (restarts < 1) throw std::invalid_argument("search: restarts must be >= 1");
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("search: rho must lie in (0, 1)");
  if (boundary_samples < 8) throw std::invalid_argument("search: boundary_samples must be >= 8");
  if (!(margin_eps > 0.0)) throw std::invalid_argument("search: margin_eps must be positive");
  if (max_iters < 1) throw std::invalid_argument("search: max_iters must be >= 1");
  if (!(bisection_tol > 0.0 && bisection_tol < 1.0))
    throw std::invalid_argument("search: bisection_tol must lie in (0, 1)");
}

ContainmentCert certify_disc(const DomainModel& dom, const AnalyticDisc& disc, double radius,
                             int samples) {
  double m = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    const double theta = 2.0 * std::numbers::pi * s / samples;
    m = std::min(m, dom.margin(disc(std::polar(radius, theta))));
  }
  return {samples, radius, m};
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Smallest |alpha| with a certified polynomial disc, for one of two interpolation problems:
//   Lempert: f(0) = center, f(alpha) = center + target
//   Kappa:   f(0) = center, alpha f'(0) = target
// alpha is taken real and positive (rotate the disc otherwise). c_1 is eliminated by the
// interpolation constraint; c_2..c_d are free and chosen to maximise the sampled margin.
class DiscSearch {
 public:
  enum class Mode { Lempert, Kappa };

  struct Outcome {
    bool found = false;
    double alpha = 0.0;
    std::vector<CVector> coeffs;
    double min_margin = -kInf;
  };

  DiscSearch(const DomainModel& dom, CPoint center, CVector target, Mode mode,
             const SearchConfig& cfg)
      : dom_(dom),
        center_(center),
        target_(target),
        mode_(mode),
        cfg_(cfg),
        n_(center.size()),
        center_margin_(dom.margin(center)) {
    const int S = cfg.boundary_samples;
    const int D = cfg.degree;
    powers_.resize(static_cast<std::size_t>(S) * D);
    for (int s = 0; s < S; ++s) {
      const cplx zeta = std::polar(cfg.rho, 2.0 * std::numbers::pi * s / S);
      cplx p{1.0, 0.0};
      for (int k = 0; k < D; ++k) {
        p *= zeta;
        powers_[static_cast<std::size_t>(s) * D + k] = p;
      }
    }
  }

  Outcome run() {
    Outcome best;
    std::vector<double> best_x;
    double lo = 0.0;  // largest alpha known infeasible at the current degree
    const double floor = mode_ == Mode::Kappa ? 1e-12 : 1e-15;

    for (int d = 1; d <= cfg_.degree; ++d) {
      std::vector<double> warm(free_dim(d), 0.0);
      std::copy(best_x.begin(), best_x.end(), warm.begin());

      auto accept = [&](double alpha, Probe&& p) {
        best.found = true;
        best.alpha = alpha;
        best.min_margin = p.margin;
        best.coeffs = build(d, alpha, p.x);
        warm = std::move(p.x);
        best_x = warm;
      };

      if (!best.found) {
        if (mode_ == Mode::Lempert) {
          const double a = cfg_.rho * (1.0 - 1e-9);
          Probe p = probe(d, a, warm);
          if (!p.feasible) continue;
          accept(a, std::move(p));
        } else {
          bool ok = false;
          for (double a = 1.0; a < 1e15; a *= 2.0) {
            Probe p = probe(d, a, warm);
            if (p.feasible) {
              accept(a, std::move(p));
              ok = true;
              break;
            }
            lo = a;
          }
          if (!ok) continue;
        }
      } else if (lo > 0.0) {
        Probe p = probe(d, lo, warm);
        if (p.feasible) {
          accept(lo, std::move(p));
          lo = 0.0;
        }
      }

      // Walk down geometrically until an infeasible alpha brackets the optimum.
      while (lo == 0.0) {
        const double a = best.alpha / 2.0;
        if (a < floor) break;
        Probe p = probe(d, a, warm);
        if (p.feasible)
          accept(a, std::move(p));
        else
          lo = a;
      }
      if (lo == 0.0) break;  // already at the floor; nothing smaller to find

      while (best.alpha - lo > cfg_.bisection_tol * best.alpha) {
        const double mid = 0.5 * (lo + best.alpha);
        Probe p = probe(d, mid, warm);
        if (p.feasible)
          accept(mid, std::move(p));
        else
          lo = mid;
      }
    }
    return best;
  }

 private:
  struct Probe {
    bool feasible = false;
    std::vector<double> x;
    double margin = -kInf;
  };

  std::size_t free_dim(int d) const { return 2 * n_ * static_cast<std::size_t>(d - 1); }

  std::vector<CVector> build(int d, double alpha, std::span<const double> x) const {
    std::vector<CVector> c(static_cast<std::size_t>(d), CVector(n_));
    for (int k = 2; k <= d; ++k)
      for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t at = 2 * (n_ * static_cast<std::size_t>(k - 2) + i);
        c[k - 1][i] = cplx{x[at], x[at + 1]};
      }
    if (mode_ == Mode::Kappa) {
      c[0] = target_ / cplx{alpha, 0.0};
    } else {
      CVector rest = target_;
      double ak = alpha;
      for (int k = 2; k <= d; ++k) {
        ak *= alpha;
        rest = rest - cplx{ak, 0.0} * c[k - 1];
      }
      c[0] = rest / cplx{alpha, 0.0};
    }
    return c;
  }

  double min_margin(const std::vector<CVector>& c) const {
    const int S = cfg_.boundary_samples;
    const int D = cfg_.degree;
    const std::size_t d = c.size();
    double m = kInf;
    CPoint p(n_);
    for (int s = 0; s < S; ++s) {
      const cplx* pw = &powers_[static_cast<std::size_t>(s) * D];
      for (std::size_t i = 0; i < n_; ++i) {
        cplx acc = center_[i];
        for (std::size_t k = 0; k < d; ++k) acc += c[k][i] * pw[k];
        p[i] = acc;
      }
      const double mm = dom_.margin(p);
      if (std::isnan(mm)) return -kInf;
      m = std::min(m, mm);
    }
    return m;
  }

  Probe probe(int d, double alpha, const std::vector<double>& warm) {
    const std::uint64_t stream = probes_++;
    const std::size_t dim = free_dim(d);
    auto objective = [&](std::span<const double> x) { return -min_margin(build(d, alpha, x)); };

    Probe best;
    if (dim == 0) {
      best.margin = -objective({});
      best.feasible = best.margin >= cfg_.margin_eps;
      return best;
    }

    const double c1_scale = norm(build(d, alpha, warm)[0]);
    const double step = std::clamp(0.25 * c1_scale, 1e-4, 4.0);
    SimplexOptions opts;
    opts.max_evals = cfg_.max_iters;
    opts.initial_step = step;
    opts.target = -cfg_.margin_eps;

    Rng rng(stream_seed(cfg_.seed, stream));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int r = 0; r < cfg_.restarts; ++r) {
      std::vector<double> start = warm;
      if (r > 0)
        for (double& v : start) v += 0.5 * step * gauss(rng);
      SimplexResult res = nelder_mead(objective, std::move(start), opts);
      if (-res.f > best.margin) {
        best.margin = -res.f;
        best.x = std::move(res.x);
      }
      if (best.margin >= cfg_.margin_eps) {
        best.feasible = true;
        return best;
      }
      // Clearly infeasible: further restarts would not close the gap.
      if (best.margin < -0.25 * std::max(center_margin_, cfg_.margin_eps)) break;
    }
    return best;
  }

  const DomainModel& dom_;
  CPoint center_;
  CVector target_;
  Mode mode_;
  SearchConfig cfg_;
  std::size_t n_;
  double center_margin_;
  std::vector<cplx> powers_;
  std::uint64_t probes_ = 0;
};

// Canonical directions are snapped to a 2^-40 lattice so that X and lambda X reach the
// optimizer as bit-identical inputs.
CVector snap(const CVector& v) {
  CVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = cplx{std::ldexp(std::round(std::ldexp(v[i].real(), 40)), -40),
                  std::ldexp(std::round(std::ldexp(v[i].imag(), 40)), -40)};
  return out;
}

void require_inside(const DomainModel& dom, const CPoint& p, const char* what) {
  if (p.size() != dom.dimension()) throw std::invalid_argument("point dimension does not match domain");
  if (!dom.contains(p)) throw OutsideDomain(std::string(what) + " lies outside the domain");
}

}  // namespace

MetricEstimate lempert_upper(const DomainModel& dom, const CPoint& z, const CPoint& w,
                             const SearchConfig& cfg) {
  cfg.validate();
  require_inside(dom, z, "z");
  require_inside(dom, w, "w");
  MetricEstimate est;
  est.kind = BoundKind::UpperBound;
  if (z == w) {
    est.value = 0.0;
    est.witness = AnalyticDisc{z, {}};
    return est;
  }
  DiscSearch search(dom, z, w - z, DiscSearch::Mode::Lempert, cfg);
  const DiscSearch::Outcome out = search.run();
  if (!out.found) {
    est.value = 1.0;
    est.diagnostic = "no certified disc found for alpha < rho; returning the vacuous bound";
    return est;
  }
  est.value = out.alpha / cfg.rho;
  est.witness = AnalyticDisc{z, out.coeffs};
  est.cert = ContainmentCert{cfg.boundary_samples, cfg.rho, out.min_margin};
  return est;
}

double lempert_tanh(const MetricEstimate& est) {
  if (!(est.value >= 0.0 && est.value < 1.0))
    throw std::domain_error("lempert_tanh: value must lie in [0, 1)");
  return std::atanh(est.value);
}

MetricEstimate kobayashi_royden_upper(const DomainModel& dom, const CPoint& z, const CVector& X,
                                      const SearchConfig& cfg) {
  cfg.validate();
  require_inside(dom, z, "z");
  if (X.size() != dom.dimension()) throw std::invalid_argument("vector dimension does not match domain");
  MetricEstimate est;
  est.kind = BoundKind::UpperBound;
  if (X.is_zero()) {
    est.value = 0.0;
    est.witness = AnalyticDisc{z, {}};
    return est;
  }
  double scale = 0.0;
  cplx phase;
  const CVector dir = snap(canonical_direction(X, &scale, &phase));
  DiscSearch search(dom, z, dir, DiscSearch::Mode::Kappa, cfg);
  const DiscSearch::Outcome out = search.run();
  if (!out.found) {
    est.value = std::numeric_limits<double>::infinity();
    est.diagnostic = "no certified disc found; z is closer to the boundary than margin_eps";
    return est;
  }
  est.value = scale * out.alpha / cfg.rho;
  // f(phase * zeta) has derivative phase * dir / alpha at 0, so (scale * alpha) f'(0) = X.
  AnalyticDisc disc{z, out.coeffs};
  cplx pk = phase;
  for (CVector& c : disc.coeffs) {
    c = pk * c;
    pk *= phase;
  }
  est.witness = std::move(disc);
  est.cert = ContainmentCert{cfg.boundary_samples, cfg.rho, out.min_margin};
  return est;
}

MetricFn kappa_search_fn(const DomainModel& dom, const SearchConfig& cfg) {
  return [dom, cfg](const CPoint& z, const CVector& X) {
    return kobayashi_royden_upper(dom, z, X, cfg).value;
  };
}

LempertFn lempert_search_fn(const DomainModel& dom, const SearchConfig& cfg) {
  return [dom, cfg](const CPoint& z, const CPoint& w) { return lempert_upper(dom, z, w, cfg).value; };
}

}  // namespace iml
