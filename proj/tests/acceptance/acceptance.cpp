// Acceptance runner: one [PASS]/[FAIL] line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "iml/cli.hpp"
#include "iml/config.hpp"
#include "iml/curves.hpp"
#include "iml/derivatives.hpp"
#include "iml/disc_search.hpp"
#include "iml/example_domains.hpp"
#include "iml/higher_metrics.hpp"
#include "iml/oracles.hpp"

using namespace iml;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", n, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

cplx gauss(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng)};
}

CVector random_direction(std::mt19937_64& rng, std::size_t n) {
  CVector X(n);
  for (std::size_t j = 0; j < n; ++j) X[j] = gauss(rng);
  return X * cplx{1.0 / norm(X), 0.0};
}

// 1. Disc search against the Poincare metric.
void criterion1() {
  const auto t0 = Clock::now();
  const DomainModel disc = make_model_domain(unit_disc());
  const OracleDomainTag tag = *oracle_tag_for(unit_disc());
  SearchConfig cfg;
  cfg.degree = 8;
  cfg.restarts = 4;
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_above = 0.0, worst_below = 0.0;
  bool ok = true;
  for (int i = 0; i < 20; ++i) {
    const CPoint z{std::polar(0.6 * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng))};
    const CVector X{std::polar(0.5 + 1.5 * u(rng), 2.0 * std::numbers::pi * u(rng))};
    const double est = kobayashi_royden_upper(disc, z, X, cfg).value;
    const double exact = oracle_kappa(tag, z, X).value;
    const double rel = est / exact - 1.0;
    worst_above = std::max(worst_above, rel);
    worst_below = std::min(worst_below, rel);
    ok = ok && rel <= 0.02 && rel >= -1e-6;
  }
  const double secs = seconds_since(t0);
  report(1, ok && secs <= 60.0,
         fmt("disc search vs Poincare, 20 inputs, max excess %.3f%%, min %.2e, %.1f s", 100 * worst_above,
             worst_below, secs));
}

Report run_verify(const std::string& which) {
  ExperimentConfig cfg;
  return execute("verify " + which, cfg);
}

// 2. theorem1 battery: both quotient limits against kappa.
void criterion2() {
  const Report r = run_verify("theorem1");
  bool ok = r.all_pass && !r.rows.empty();
  double worst = 0.0;
  for (const Json& row : r.rows) {
    const double lhs = row["lhs"].get<double>();
    for (const char* k : {"upper", "lower"}) {
      const double rel = std::abs(row[k].get<double>() - lhs) / lhs;
      worst = std::max(worst, rel);
      ok = ok && rel <= 0.03;
    }
  }
  report(2, ok, fmt("%zu rows on disc, polydisc, ball; worst relative gap %.3f%%", r.rows.size(), 100 * worst));
}

// 3. prop2 battery: kappa^(m) dominates the upper quotient of k^(m), m = 1, 2, 3.
void criterion3() {
  const Report r = run_verify("prop2");
  int violations = 0;
  for (const Json& row : r.rows)
    if (!row["pass"].get<bool>()) ++violations;
  report(3, r.all_pass && r.rows.size() >= 750,
         fmt("%zu rows over 5 domains, m in {1,2,3}; %d violations", r.rows.size(), violations));
}

// 4. kappa^(3) = kappa^(4) = kappa^(5) at n = 2 and the nested ladder.
void criterion4() {
  struct Case {
    const char* name;
    MinkowskiFunctional h;
  };
  const Case cases[] = {{"euclid", MinkowskiFunctional::euclidean(2)},
                        {"max-geo", MinkowskiFunctional::max_geo(2.0)},
                        {"half", MinkowskiFunctional::half_power()}};
  std::mt19937_64 rng(404);
  bool ok = true;
  double worst = 0.0;
  for (const Case& c : cases) {
    const OracleDomainTag tag = *oracle_tag_for(balanced(c.h));
    const MetricFn metric = kappa_oracle_fn(tag);
    for (int i = 0; i < 100; ++i) {
      const CVector X = random_direction(rng, 2);
      DecompositionConfig cfg;
      cfg.seed = 1000 + i;
      const auto ladder = kappa_ladder(metric, CPoint(2), X, 5, cfg);
      for (std::size_t m = 1; m < ladder.size(); ++m) ok = ok && ladder[m].value <= ladder[m - 1].value;
      const double spread = std::max({ladder[2].value, ladder[3].value, ladder[4].value}) -
                            std::min({ladder[2].value, ladder[3].value, ladder[4].value});
      worst = std::max(worst, spread);
      ok = ok && spread <= 1e-3;
    }
  }
  report(4, ok, fmt("100 directions x {euclid, max-geo, half}; max spread of kappa^(3..5) %.2e", worst));
}

// 5. Hull identity.
void criterion5() {
  const MinkowskiFunctional mg = MinkowskiFunctional::max_geo(2.0);
  const CVector one{1.0, 1.0};
  const double hull = hull_functional(mg, one);
  const double k3 = mth_kobayashi(kappa_oracle_fn(*oracle_tag_for(balanced(mg))), CPoint(2), one, 3).value;
  bool ok = std::abs(k3 - 1.6) <= 0.08 && std::abs(hull - 1.6) <= 0.08 && std::abs(k3 - hull) <= 0.05 * hull;

  const MinkowskiFunctional geo = MinkowskiFunctional::geometric_mean();
  const MetricFn gk = kappa_oracle_fn(*oracle_tag_for(balanced(geo)));
  std::mt19937_64 rng(505);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const CVector X = random_direction(rng, 2) * cplx{2.0, 0.0};
    worst = std::max(worst, mth_kobayashi(gk, CPoint(2), X, 2).value);
  }
  ok = ok && worst <= 1e-3;
  report(5, ok,
         fmt("max-geo: kappa^(3)(0;(1,1)) = %.4f, hull gauge %.4f; geo: max kappa^(2) over 50 X = %.2e", k3,
             hull, worst));
}

// 6. Upper quotient limit of k~ at 0 equals h on balanced domains.
void criterion6() {
  struct Case {
    const char* name;
    MinkowskiFunctional h;
  };
  const Case cases[] = {{"max-geo", MinkowskiFunctional::max_geo(2.0)},
                        {"half", MinkowskiFunctional::half_power()}};
  std::mt19937_64 rng(606);
  bool ok = true;
  double worst = 0.0;
  for (const Case& c : cases) {
    const MetricSuite s = balanced_linear_disc_suite(c.h);
    const DistanceFn kt = chain_distance(s, 1, {}, ChainConfig{.restarts = 0, .max_evals = 0});
    for (int i = 0; i < 6; ++i) {
      const CVector X = random_direction(rng, 2);
      ShrinkSchedule sch;
      sch.seed = 60 + i;
      const QuotientTrace tr = derivative_estimate(s.domain, kt, CPoint(2), X, sch);
      const double hx = c.h(X);
      const double rel = std::abs(tr.upper - hx) / hx;
      worst = std::max(worst, rel);
      ok = ok && rel <= 0.05;
    }
  }
  report(6, ok, fmt("max-geo and half, 6 directions each; worst |upper - h| / h = %.3f%%", 100 * worst));
}

// 7. Example 3 construction.
void criterion7() {
  const Example3Domain dom(Example3Params::with_defaults());
  const Example3Params& p = dom.params();
  std::mt19937_64 rng(707);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  // For |z1| <= 5 every argument of u has modulus <= 3, so each discarded term
  // log(|mu - 1/k| / 4) / k^2 is <= 0: the truncated psi bounds the exact psi from above.
  double psi_max = 0.0;
  bool one_sided = true;
  for (int i = 0; i < 10000; ++i) {
    // Uniform in the unit ball of C^2.
    CVector g = random_direction(rng, 2);
    const CPoint z = as_point(g * cplx{std::pow(u(rng), 0.25), 0.0});
    one_sided = one_sided && std::abs(z[0]) <= 5.0;
    psi_max = std::max(psi_max, eval_psi(z, dom));
  }
  bool zeros = true;
  for (int i = 0; i < 200; ++i) {
    const cplx z1 = std::polar(5.0 * u(rng), 2.0 * std::numbers::pi * u(rng));
    zeros = zeros && eval_psi(CPoint{z1, 0.0}, dom) == 0.0;
  }
  const auto lines = singular_lines(p);
  for (std::size_t i = 0; i < lines.size(); i += 37)
    zeros = zeros && eval_psi(CPoint{lines[i].first_coordinate, gauss(rng) * 3.0}, dom) == 0.0;
  const double u0 = eval_u(0.0, p.K);
  const double ut = u_tail_bound(0.0, p.K);
  const bool u_ok = std::abs(u0 + 3.218) <= ut + 5e-4;
  report(7, one_sided && psi_max < 1.0 && zeros && u_ok,
         fmt("max truncated psi (an upper bound) on 1e4 ball samples %.4f; zeros on C x {0} and %zu lines: %s; "
             "u(0) = %.5f, tail bound %.2e",
             psi_max, lines.size(), zeros ? "yes" : "no", u0, ut));
}

// 8. Example 3 chains along gamma.
void criterion8() {
  const auto t0 = Clock::now();
  std::vector<double> totals;
  for (int J : {20, 40, 60}) {
    const Example3Domain dom(Example3Params::with_defaults(200, J));
    totals.push_back(example3_chain_experiment(dom, 0.0, 1.0, {}).total);
  }
  const double secs = seconds_since(t0);
  const bool ok = totals[2] <= 0.1 && totals[0] > totals[1] && totals[1] > totals[2] && secs <= 300.0;
  report(8, ok,
         fmt("k(gamma(0), gamma(1)) upper bounds J=20: %.5f, J=40: %.5f, J=60: %.5f; %.1f s", totals[0],
             totals[1], totals[2], secs));
}

std::string verify_output(const char* threads) {
  ::setenv("IML_THREADS", threads, 1);
  const char* argv[] = {"iml", "verify", "all", "--seed", "3", "--format", "json"};
  std::ostringstream out, err;
  const int code = run(7, argv, out, err);
  return std::to_string(code) + "\n" + out.str();
}

// 9. Determinism across runs and worker counts.
void criterion9() {
  const std::string a = verify_output("1");
  const std::string b = verify_output("4");
  const std::string c = verify_output("4");
  ::unsetenv("IML_THREADS");
  report(9, a == b && b == c && a.size() > 1000,
         fmt("verify all --seed 3 with 1, 4, 4 workers: %zu bytes, identical: %s", a.size(),
             a == b && b == c ? "yes" : "no"));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> all = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                  criterion6, criterion7, criterion8, criterion9};
  for (std::size_t i = 0; i < all.size(); ++i) {
    try {
      all[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), false, std::string("exception: ") + e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, all.size());
  return failures == 0 ? 0 : 1;
}
