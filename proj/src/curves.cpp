#include "iml/curves.hpp"

#include <cmath>
#include <stdexcept>

#include "iml/disc_search.hpp"
#include "iml/domain.hpp"
#include "iml/parallel.hpp"

namespace iml {

CVector ParametricCurve::velocity(double t) const {
  if (derivative) return derivative(t);
  const double h = 1e-6;
  const double a = std::max(0.0, t - h);
  const double b = std::min(1.0, t + h);
  return (map(b) - map(a)) / cplx{b - a, 0.0};
}

ParametricCurve ParametricCurve::segment(const CPoint& a, const CPoint& b) {
  const CVector d = b - a;
  return {[a, d](double t) { return a + cplx{t, 0.0} * d; }, [d](double) { return d; }};
}

ParametricCurve ParametricCurve::example3_gamma() {
  return {[](double t) { return CPoint{cplx{0.0, t / 2.0}, cplx{0.5, 0.0}}; },
          [](double) { return CVector{cplx{0.0, 0.5}, cplx{}}; }};
}

double length_by_distance(const DistanceFn& d, const ParametricCurve& gamma, int partitions) {
  if (partitions < 1) throw std::invalid_argument("length_by_distance: need at least one partition");
  std::vector<double> pieces(static_cast<std::size_t>(partitions));
  parallel_for(pieces.size(), [&](std::size_t i) {
    const double a = double(i) / partitions;
    const double b = double(i + 1) / partitions;
    pieces[i] = d(gamma.map(a), gamma.map(b));
  });
  double sum = 0.0;
  for (double p : pieces) sum += p;
  return sum;
}

LengthLadder length_ladder(const DistanceFn& d, const ParametricCurve& gamma, int max_partitions) {
  if (max_partitions < 1) throw std::invalid_argument("length_ladder: need at least one partition");
  LengthLadder out;
  for (int P = 1; P <= max_partitions; P *= 2) {
    out.partitions.push_back(P);
    out.lengths.push_back(length_by_distance(d, gamma, P));
    out.supremum = std::max(out.supremum, out.lengths.back());
  }
  return out;
}

double length_by_metric(const MetricFn& metric, const ParametricCurve& gamma, int quadrature_points) {
  if (quadrature_points < 2) throw std::invalid_argument("length_by_metric: need at least two nodes");
  const std::size_t Q = static_cast<std::size_t>(quadrature_points);
  std::vector<double> f(Q);
  parallel_for(Q, [&](std::size_t i) {
    const double t = double(i) / double(Q - 1);
    f[i] = metric(gamma.map(t), gamma.velocity(t));
  });
  double sum = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < Q; ++i) sum += f[i];
  return sum / double(Q - 1);
}

namespace {

// Leg a -> b along the complex line a + zeta * R * (b - a)/|b - a|; |alpha| = |b - a| / R.
ChainHop straight_leg(const DomainModel& dom, std::string label, const CPoint& a, const CPoint& b,
                      double R, int samples) {
  ChainHop hop;
  hop.label = std::move(label);
  hop.from = a;
  hop.to = b;
  const CVector d = b - a;
  const double len = norm(d);
  if (len == 0.0) {
    hop.disc = AnalyticDisc{a, {}};
    hop.cert = certify_disc(dom, hop.disc, 1.0, 8);
    return hop;
  }
  hop.disc = AnalyticDisc{a, {d * cplx{R / len, 0.0}}};
  hop.cert = certify_disc(dom, hop.disc, 1.0, samples);
  hop.lempert_bound = len / R;
  hop.cost = std::atanh(hop.lempert_bound);
  return hop;
}

// Widest certified hop radius in (len, cap], by doubling then bisection.
double widest_hop_radius(const DomainModel& dom, const CPoint& a, const CPoint& b,
                         const Example3ChainConfig& cfg) {
  const CVector d = b - a;
  const double len = norm(d);
  auto ok = [&](double R) {
    const AnalyticDisc disc{a, {d * cplx{R / len, 0.0}}};
    return certify_disc(dom, disc, 1.0, cfg.boundary_samples).min_margin >= cfg.margin_eps;
  };
  double lo = len * 1.0001;
  if (lo > cfg.max_hop_radius || !ok(lo))
    throw std::runtime_error("example3: no singular line within hop radius; increase J");
  double hi = std::min(2.0 * lo, cfg.max_hop_radius);
  while (hi < cfg.max_hop_radius && ok(hi)) {
    lo = hi;
    hi = std::min(2.0 * hi, cfg.max_hop_radius);
  }
  if (hi == lo || ok(hi)) return hi;
  for (int s = 0; s < cfg.bisection_steps; ++s) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

Example3ChainReport example3_chain_between(const Example3Domain& dom, const CPoint& a,
                                           const CPoint& b, const Example3ChainConfig& cfg) {
  const Example3Params& params = dom.params();
  const DomainModel model = make_model_domain(example3(params));

  Example3ChainReport rep;
  rep.J = params.J;
  rep.K = params.K;
  rep.chain.points = {a};
  if (a == b) {
    rep.chain.points.push_back(b);
    return rep;
  }
  if (!model.contains(a) || !model.contains(b)) throw OutsideDomain("example3: endpoint outside domain");

  const cplx c0 = nearest_singular_line(params, a[0]).first_coordinate;
  const cplx c1 = nearest_singular_line(params, b[0]).first_coordinate;
  const CPoint p1{c0, a[1]};
  const CPoint p2{c0, cplx{}};
  const CPoint p3{c1, cplx{}};
  const CPoint p4{c1, b[1]};

  // The two hops are independent and dominate the cost.
  double R[2] = {0.0, 0.0};
  const CPoint from[2] = {a, b};
  const CPoint to[2] = {p1, p4};
  parallel_for(2, [&](std::size_t i) {
    if (!(from[i] == to[i])) R[i] = widest_hop_radius(model, from[i], to[i], cfg);
  });

  const double W = cfg.wide_radius;
  rep.hops.push_back(straight_leg(model, "hop", a, p1, R[0], cfg.boundary_samples));
  rep.hops.push_back(straight_leg(model, "descend", p1, p2, W, cfg.boundary_samples));
  rep.hops.push_back(straight_leg(model, "transport", p2, p3, W, cfg.boundary_samples));
  rep.hops.push_back(straight_leg(model, "ascend", p3, p4, W, cfg.boundary_samples));
  // k~* is symmetric, so the last hop reuses a disc centred at b.
  ChainHop last = straight_leg(model, "hop", b, p4, R[1], cfg.boundary_samples);
  std::swap(last.from, last.to);
  rep.hops.push_back(std::move(last));

  for (const ChainHop& h : rep.hops) {
    if (h.cert.min_margin < cfg.margin_eps)
      throw std::runtime_error("example3: containment certification failed on leg " + h.label);
    rep.total += h.cost;
    rep.chain.points.push_back(h.to);
  }
  return rep;
}

Example3ChainReport example3_chain_experiment(const Example3Domain& dom, double t0, double t1,
                                              const Example3ChainConfig& cfg) {
  if (!(t0 >= 0.0 && t0 <= 1.0 && t1 >= 0.0 && t1 <= 1.0))
    throw std::invalid_argument("example3: t0 and t1 must lie in [0, 1]");
  const ParametricCurve gamma = ParametricCurve::example3_gamma();
  Example3ChainReport rep = example3_chain_between(dom, gamma.map(t0), gamma.map(t1), cfg);
  rep.t0 = t0;
  rep.t1 = t1;
  return rep;
}

}  // namespace iml
