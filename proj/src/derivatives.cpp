#include "iml/derivatives.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "iml/optimize.hpp"
#include "iml/oracles.hpp"

namespace iml {

void ShrinkSchedule::validate() const {
  if (!(rho0 > 0.0)) throw std::invalid_argument("schedule: rho0 must be positive");
  if (levels < 2) throw std::invalid_argument("schedule: need at least two levels");
  if (!(factor > 0.0 && factor < 1.0)) throw std::invalid_argument("schedule: factor must lie in (0, 1)");
  if (samples_per_level < 8) throw std::invalid_argument("schedule: need at least 8 samples per level");
  if (retry_cap < 1) throw std::invalid_argument("schedule: retry_cap must be >= 1");
}

double ShrinkSchedule::radius(int level) const { return rho0 * std::pow(factor, level); }

namespace {

// Uniform point of the unit ball of C^n = R^{2n}.
CVector ball_sample(std::size_t n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  CVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = cplx{gauss(rng), gauss(rng)};
  const double len = norm(v);
  const double r = std::pow(unif(rng), 1.0 / (2.0 * n));
  return len > 0.0 ? v * cplx{r / len, 0.0} : v;
}

struct Sample {
  CPoint w;
  CVector Y;
  cplx t;
};

// Draws samples_per_level admissible triples for one level, in a fixed order.
std::vector<Sample> draw_level(const DomainModel& dom, const CPoint& z, const CVector& X, double rho,
                               const ShrinkSchedule& sched, int level, bool need_step) {
  const std::size_t n = z.size();
  double scale = 0.0;
  cplx phase;
  canonical_direction(X, &scale, &phase);
  Rng rng(stream_seed(sched.seed, static_cast<std::uint64_t>(level)));
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  std::vector<Sample> out;
  out.reserve(sched.samples_per_level);
  for (int s = 0; s < sched.samples_per_level; ++s) {
    bool ok = false;
    for (int attempt = 0; attempt < sched.retry_cap && !ok; ++attempt) {
      const CPoint w = z + cplx{rho, 0.0} * ball_sample(n, rng);
      const CVector Y = X + cplx{rho * scale, 0.0} * phase * ball_sample(n, rng);
      const double r = rho * std::pow(0.5, unif(rng));
      const double theta = 2.0 * std::numbers::pi * unif(rng);
      const double tmod = scale > 0.0 ? r / scale : r;
      const cplx t = std::polar(tmod, theta) * std::conj(phase);
      if (!dom.contains(w)) continue;
      if (need_step && !dom.contains(w + t * Y)) continue;
      out.push_back({w, Y, t});
      ok = true;
    }
    if (!ok) throw std::runtime_error("derivative sampling left the domain; shrink rho0");
  }
  return out;
}

void finish(QuotientTrace& tr, const ShrinkSchedule& sched) {
  const LevelStats& last = tr.levels.back();
  const LevelStats& prev = tr.levels[tr.levels.size() - 2];
  const double f = sched.factor;
  tr.upper = last.max_quotient;
  tr.lower = last.min_quotient;
  tr.upper_extrapolated = (last.max_quotient - f * prev.max_quotient) / (1.0 - f);
  tr.lower_extrapolated = (last.min_quotient - f * prev.min_quotient) / (1.0 - f);
}

void require_sizes(const DomainModel& dom, const CPoint& z, const CVector& X) {
  if (z.size() != dom.dimension() || X.size() != dom.dimension())
    throw std::invalid_argument("dimension mismatch");
  if (!dom.contains(z)) throw OutsideDomain("z lies outside the domain");
}

}  // namespace

QuotientTrace derivative_estimate(const DomainModel& dom, const DistanceFn& kmap, const CPoint& z,
                                  const CVector& X, const ShrinkSchedule& sched) {
  sched.validate();
  require_sizes(dom, z, X);
  QuotientTrace tr;
  for (int level = 0; level < sched.levels; ++level) {
    const double rho = sched.radius(level);
    LevelStats st{rho, 0.0, std::numeric_limits<double>::infinity(), 0};
    for (const Sample& s : draw_level(dom, z, X, rho, sched, level, true)) {
      const double q = kmap(s.w, s.w + s.t * s.Y) / std::abs(s.t);
      if (std::isnan(q)) throw std::runtime_error("derivative: evaluator returned NaN");
      st.max_quotient = std::max(st.max_quotient, q);
      st.min_quotient = std::min(st.min_quotient, q);
      ++st.samples;
    }
    tr.levels.push_back(st);
  }
  finish(tr, sched);
  return tr;
}

QuotientTrace metric_neighbourhood_trace(const DomainModel& dom, const MetricFn& metric,
                                         const CPoint& z, const CVector& X,
                                         const ShrinkSchedule& sched) {
  sched.validate();
  require_sizes(dom, z, X);
  QuotientTrace tr;
  for (int level = 0; level < sched.levels; ++level) {
    const double rho = sched.radius(level);
    LevelStats st{rho, 0.0, std::numeric_limits<double>::infinity(), 0};
    for (const Sample& s : draw_level(dom, z, X, rho, sched, level, false)) {
      const double v = metric(s.w, s.Y);
      st.max_quotient = std::max(st.max_quotient, v);
      st.min_quotient = std::min(st.min_quotient, v);
      ++st.samples;
    }
    tr.levels.push_back(st);
  }
  finish(tr, sched);
  return tr;
}

double underline_kappa(const DomainModel& dom, const CPoint& z, const CVector& X,
                       const ShrinkSchedule& sched, const MetricFn& metric) {
  return std::max(0.0, metric_neighbourhood_trace(dom, metric, z, X, sched).lower);
}

MetricSuite oracle_suite(const DomainDescriptor& desc) {
  const auto tag = oracle_tag_for(desc);
  if (!tag) throw DomainError("no closed-form oracle for " + desc.tag());
  MetricSuite suite{tag->name(), make_model_domain(desc), kappa_oracle_fn(*tag), {}};
  if (tag->kind == OracleDomainTag::Kind::BalancedAtOrigin) {
    const MinkowskiFunctional h = *tag->h;
    suite.name += "-proxy";
    suite.lempert = [h](const CPoint& a, const CPoint& b) { return h(b - a); };
  } else {
    suite.lempert = lempert_oracle_fn(*tag);
  }
  return suite;
}

MetricSuite balanced_linear_disc_suite(const MinkowskiFunctional& h, const SearchConfig& cfg) {
  SearchConfig linear = cfg;
  linear.degree = 1;
  DomainModel dom = make_model_domain(balanced(h));
  const OracleDomainTag tag = *oracle_tag_for(dom.descriptor());
  MetricSuite suite{"balanced(" + h.name() + ")-linear-disc", dom, kappa_oracle_fn(tag), {}};
  suite.lempert = [dom, h, linear](const CPoint& a, const CPoint& b) {
    if (a.is_zero()) return h(as_vector(b));
    return lempert_upper(dom, a, b, linear).value;
  };
  return suite;
}

DistanceFn chain_distance(const MetricSuite& suite, int m, const std::vector<CVector>& parts,
                          const ChainConfig& cfg) {
  if (m < 1) throw std::invalid_argument("chain_distance: m must be >= 1");
  CVector X;
  if (!parts.empty()) {
    X = parts.front();
    for (std::size_t j = 1; j < parts.size(); ++j) X = X + parts[j];
  }
  return [suite, m, parts, X, cfg](const CPoint& a, const CPoint& b) {
    if (a == b) return 0.0;
    if (m == 1) return chain_cost(Chain{{a, b}}, suite.lempert);
    const std::size_t n = a.size();
    const CVector d = b - a;
    std::vector<Chain> seeds;

    Chain axis{{a}};
    CPoint p = a;
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i] == cplx{}) continue;
      if (axis.points.size() == static_cast<std::size_t>(m)) break;
      p[i] = b[i];
      axis.points.push_back(p);
    }
    if (!(axis.points.back() == b)) axis.points.push_back(b);
    seeds.push_back(std::move(axis));

    const double x2 = X.size() ? norm_sq(X) : 0.0;
    if (parts.size() >= 2 && parts.size() <= static_cast<std::size_t>(m) && x2 > 0.0) {
      const cplx s = hermitian(d, X) / x2;
      const CVector E = d - s * X;
      Chain transported{{a}};
      CPoint q = a;
      for (const CVector& part : parts) {
        q = q + (s * part + E / cplx{double(parts.size()), 0.0});
        transported.points.push_back(q);
      }
      transported.points.back() = b;
      seeds.push_back(std::move(transported));
    }
    return lempert_ladder(suite.domain, a, b, m, suite.lempert, cfg, seeds).back().value;
  };
}

namespace {

CheckRow run_check(const char* name, const MetricSuite& suite, const CPoint& z, const CVector& X,
                   int m, const CheckConfig& cfg) {
  CheckRow row;
  row.check = name;
  row.domain = suite.name;
  row.z = z;
  row.X = X;
  row.m = m;
  const auto ladder = kappa_ladder(suite.kappa, z, X, m, cfg.decomposition);
  row.lhs = ladder.back().value;
  const auto& parts = std::get<Decomposition>(ladder.back().witness).parts;
  row.trace = derivative_estimate(suite.domain, chain_distance(suite, m, parts, cfg.chain), z, X,
                                  cfg.schedule);
  row.upper = row.trace.upper;
  row.lower = row.trace.lower;
  row.tol = cfg.rel_tol * row.lhs + cfg.abs_tol;
  return row;
}

}  // namespace

CheckRow prop2_check(const MetricSuite& suite, const CPoint& z, const CVector& X, int m,
                     const CheckConfig& cfg) {
  CheckRow row = run_check("prop2", suite, z, X, m, cfg);
  row.pass = row.lhs >= row.upper - row.tol;
  return row;
}

CheckRow theorem1_check(const MetricSuite& suite, const CPoint& z, const CVector& X, int m,
                        const CheckConfig& cfg) {
  CheckRow row = run_check("theorem1", suite, z, X, m, cfg);
  row.pass = std::abs(row.lhs - row.upper) <= row.tol && std::abs(row.lhs - row.lower) <= row.tol;
  return row;
}

}  // namespace iml
