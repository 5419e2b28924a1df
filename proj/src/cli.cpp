#include "iml/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "iml/curves.hpp"
#include "iml/derivatives.hpp"
#include "iml/disc_search.hpp"
#include "iml/higher_metrics.hpp"
#include "iml/optimize.hpp"
#include "iml/oracles.hpp"
#include "iml/parallel.hpp"

namespace iml {

namespace {

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

template <class T>
T tuple_arg(const ExperimentConfig& cfg, const std::string& key, std::size_t n, T fallback) {
  const std::string& text = cfg.get(key);
  if (text.empty()) return fallback;
  const std::vector<cplx> v = parse_complex_list(text);
  if (v.size() != n)
    throw ConfigError("--" + key + " has " + std::to_string(v.size()) + " entries; the domain has dimension " +
                      std::to_string(n));
  return T(std::span<const cplx>(v));
}

CVector unit_vector(std::size_t n) {
  CVector e(n);
  e[0] = 1.0;
  return e;
}

// Metric and Lempert evaluators for a domain, choosing closed forms where they apply.
struct Evaluators {
  DomainDescriptor desc;
  DomainModel dom;
  std::optional<OracleDomainTag> tag;
  std::string method;
  SearchConfig search;

  bool use_oracle(const CPoint& z) const {
    if (method == "search" || !tag) return false;
    if (tag->kind == OracleDomainTag::Kind::BalancedAtOrigin && !z.is_zero()) return false;
    return true;
  }

  MetricEstimate kappa(const CPoint& z, const CVector& X) const {
    if (use_oracle(z)) return oracle_kappa(*tag, z, X);
    if (method == "oracle") throw DomainError("no closed-form metric for " + desc.tag() + " at this point");
    return kobayashi_royden_upper(dom, z, X, search);
  }

  MetricEstimate lempert(const CPoint& z, const CPoint& w) const {
    if (use_oracle(z)) return oracle_lempert(*tag, z, w);
    if (method == "oracle") throw DomainError("no closed-form Lempert function for " + desc.tag());
    return lempert_upper(dom, z, w, search);
  }

  MetricFn kappa_fn() const {
    return [this](const CPoint& z, const CVector& X) { return kappa(z, X).value; };
  }
  LempertFn lempert_fn() const {
    return [this](const CPoint& z, const CPoint& w) { return lempert(z, w).value; };
  }
};

Evaluators make_evaluators(const ExperimentConfig& cfg) {
  const std::string method = cfg.get("method");
  if (method != "auto" && method != "oracle" && method != "search")
    throw ConfigError("method must be auto, oracle or search");
  DomainDescriptor desc = cfg.domain();
  DomainModel dom = make_model_domain(desc);
  return {desc, dom, oracle_tag_for(desc), method, cfg.search()};
}

Json base_row(const Evaluators& ev) {
  Json row;
  row["domain"] = ev.desc.tag();
  return row;
}

Report cmd_metric(const ExperimentConfig& cfg) {
  const Evaluators ev = make_evaluators(cfg);
  const std::size_t n = ev.dom.dimension();
  const CPoint z = tuple_arg(cfg, "z", n, CPoint(n));
  const CVector X = tuple_arg(cfg, "X", n, unit_vector(n));
  Json row = base_row(ev);
  row["z"] = to_string(z);
  row["X"] = to_string(X);
  put_estimate(row, ev.kappa(z, X));
  return {"metric", {row}};
}

Report cmd_lempert(const ExperimentConfig& cfg) {
  const Evaluators ev = make_evaluators(cfg);
  const std::size_t n = ev.dom.dimension();
  const CPoint z = tuple_arg(cfg, "z", n, CPoint(n));
  CPoint w0(n);
  w0[0] = 0.5;
  const CPoint w = tuple_arg(cfg, "w", n, w0);
  const MetricEstimate est = ev.lempert(z, w);
  Json row = base_row(ev);
  row["z"] = to_string(z);
  row["w"] = to_string(w);
  row["distance"] = number(est.value < 1.0 ? std::atanh(est.value) : INFINITY);
  put_estimate(row, est);
  return {"lempert", {row}};
}

Report cmd_higher(const ExperimentConfig& cfg) {
  const Evaluators ev = make_evaluators(cfg);
  const std::size_t n = ev.dom.dimension();
  const int m = cfg.get_int("m");
  if (m < 1) throw ConfigError("--m must be >= 1");
  const CPoint z = tuple_arg(cfg, "z", n, CPoint(n));
  Report rep{"higher", {}};
  if (cfg.get("w").empty()) {
    const CVector X = tuple_arg(cfg, "X", n, unit_vector(n));
    const auto ladder = kappa_ladder(ev.kappa_fn(), z, X, m, cfg.decomposition());
    for (std::size_t j = 0; j < ladder.size(); ++j) {
      Json row = base_row(ev);
      row["quantity"] = "kappa^(m)";
      row["z"] = to_string(z);
      row["input"] = to_string(X);
      row["m"] = static_cast<int>(j + 1);
      put_estimate(row, ladder[j]);
      rep.rows.push_back(row);
    }
  } else {
    const CPoint w = tuple_arg(cfg, "w", n, CPoint(n));
    const auto ladder = lempert_ladder(ev.dom, z, w, m, ev.lempert_fn(), cfg.chain());
    for (std::size_t j = 0; j < ladder.size(); ++j) {
      Json row = base_row(ev);
      row["quantity"] = "k^(m)";
      row["z"] = to_string(z);
      row["input"] = to_string(w);
      row["m"] = static_cast<int>(j + 1);
      put_estimate(row, ladder[j]);
      rep.rows.push_back(row);
    }
  }
  return rep;
}

const MinkowskiFunctional& balanced_gauge(const DomainDescriptor& desc) {
  const auto* b = std::get_if<descriptor::Balanced>(&desc.spec);
  if (!b || !b->h) throw DomainError("this command needs a balanced domain, e.g. balanced:max-geo:2");
  return *b->h;
}

Report cmd_hull(const ExperimentConfig& cfg) {
  const Evaluators ev = make_evaluators(cfg);
  const MinkowskiFunctional& h = balanced_gauge(ev.desc);
  const CVector X = tuple_arg(cfg, "X", 2, CVector{1.0, 1.0});
  const HullFunctional hull(h, cfg.get_int("hull.points"));
  const CPoint origin(2);
  const MetricEstimate kb = kobayashi_buseman(kappa_oracle_fn(*ev.tag), origin, X, 2, cfg.decomposition());
  Json row = base_row(ev);
  row["X"] = to_string(X);
  row["h"] = number(h(X));
  row["hull_gauge"] = number(hull(X));
  row["kappa_hat"] = number(kb.value);
  row["witness_summary"] = kb.witness_summary();
  row["witness"] = witness_json(kb);
  return {"hull", {row}};
}

MetricSuite suite_for(const Evaluators& ev) {
  if (ev.method != "search" && ev.tag) return oracle_suite(ev.desc);
  if (ev.method == "oracle") throw DomainError("no closed-form oracle for " + ev.desc.tag());
  return {ev.desc.tag() + "-search", ev.dom, kappa_search_fn(ev.dom, ev.search),
          lempert_search_fn(ev.dom, ev.search)};
}

CheckConfig check_config(const ExperimentConfig& cfg, bool theorem1) {
  CheckConfig c;
  c.schedule = cfg.schedule();
  c.decomposition = cfg.decomposition();
  c.chain.seed = cfg.get_u64("seed");
  c.chain.margin_eps = cfg.get_double("chain.margin_eps");
  c.rel_tol = cfg.get_double(theorem1 ? "verify.theorem1_rel_tol" : "verify.rel_tol");
  c.abs_tol = theorem1 ? 0.0 : cfg.get_double("verify.abs_tol");
  return c;
}

Report cmd_derivative(const ExperimentConfig& cfg) {
  const Evaluators ev = make_evaluators(cfg);
  const std::size_t n = ev.dom.dimension();
  const int m = cfg.get_int("m");
  if (m < 1) throw ConfigError("--m must be >= 1");
  const CPoint z = tuple_arg(cfg, "z", n, CPoint(n));
  const CVector X = tuple_arg(cfg, "X", n, unit_vector(n));
  const MetricSuite suite = suite_for(ev);
  const CheckConfig cc = check_config(cfg, false);
  const auto ladder = kappa_ladder(suite.kappa, z, X, m, cc.decomposition);
  const auto& parts = std::get<Decomposition>(ladder.back().witness).parts;
  const QuotientTrace tr =
      derivative_estimate(suite.domain, chain_distance(suite, m, parts, cc.chain), z, X, cc.schedule);

  Report rep{"derivative", {}};
  auto row_for = [&](const std::string& level, double radius, double hi, double lo, int samples) {
    Json row;
    row["domain"] = suite.name;
    row["z"] = to_string(z);
    row["X"] = to_string(X);
    row["m"] = m;
    row["level"] = level;
    row["radius"] = number(radius);
    row["upper"] = number(hi);
    row["lower"] = number(lo);
    row["samples"] = samples;
    row["kappa_m"] = number(ladder.back().value);
    return row;
  };
  for (std::size_t i = 0; i < tr.levels.size(); ++i) {
    const LevelStats& l = tr.levels[i];
    rep.rows.push_back(row_for(std::to_string(i), l.radius, l.max_quotient, l.min_quotient, l.samples));
  }
  const LevelStats& last = tr.levels.back();
  rep.rows.push_back(row_for("last", last.radius, tr.upper, tr.lower, last.samples));
  Json ex = row_for("extrapolated", 0.0, tr.upper_extrapolated, tr.lower_extrapolated, 0);
  ex["trace"] = trace_json(tr);
  rep.rows.push_back(ex);
  return rep;
}

// Random verification input: z well inside the domain, X with norm in [0.5, 2].
std::pair<CPoint, CVector> random_input(const OracleDomainTag& tag, std::size_t n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto gaussian = [&] {
    CVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = cplx{gauss(rng), gauss(rng)};
    return v;
  };
  CVector X = gaussian();
  X = X * cplx{(0.5 + 1.5 * unif(rng)) / norm(X), 0.0};
  CPoint z(n);
  switch (tag.kind) {
    case OracleDomainTag::Kind::UnitDisc:
    case OracleDomainTag::Kind::EuclideanBall: {
      const CVector d = gaussian();
      const double r = 0.6 * tag.radius * std::pow(unif(rng), 1.0 / (2.0 * n));
      z = as_point(d * cplx{r / norm(d), 0.0});
      break;
    }
    case OracleDomainTag::Kind::Polydisc:
      for (std::size_t i = 0; i < n; ++i)
        z[i] = std::polar(0.6 * tag.radii[i] * std::sqrt(unif(rng)), 2.0 * std::numbers::pi * unif(rng));
      break;
    case OracleDomainTag::Kind::BalancedAtOrigin:
      break;
  }
  return {z, X};
}

struct CheckTask {
  std::size_t suite;
  CPoint z;
  CVector X;
  int m;
  bool theorem1;
};

void run_battery(const ExperimentConfig& cfg, bool theorem1, Report& rep) {
  const std::string which = theorem1 ? "theorem1" : "prop2";
  const std::vector<std::string> specs = split_list(cfg.get("verify." + which + "_domains"), ';');
  std::vector<int> ms;
  for (double m : cfg.get_list("verify." + which + "_m")) ms.push_back(static_cast<int>(m));
  const int count = cfg.get_int(theorem1 ? "verify.samples" : "verify.directions");
  const std::uint64_t seed = cfg.get_u64("seed");
  const CheckConfig cc = check_config(cfg, theorem1);

  std::vector<MetricSuite> suites;
  std::vector<CheckTask> tasks;
  for (const std::string& spec : specs) {
    const DomainDescriptor desc = parse_domain_spec(spec, cfg.get_int("example3.K"), cfg.get_int("example3.J"));
    const auto tag = oracle_tag_for(desc);
    if (!tag) throw DomainError("verify needs an oracle domain; got " + spec);
    if (theorem1 && tag->kind == OracleDomainTag::Kind::BalancedAtOrigin)
      throw DomainError("theorem1 needs a domain with a continuous oracle metric; got " + spec);
    suites.push_back(oracle_suite(desc));
    const std::size_t n = suites.back().domain.dimension();
    const bool fixed = !cfg.get("X").empty();
    for (int m : ms) {
      if (m < 1) throw ConfigError("m must be >= 1");
      Rng rng(stream_seed(seed, 7919 * suites.size() + static_cast<std::uint64_t>(m)));
      for (int i = 0; i < (fixed ? 1 : count); ++i) {
        auto [z, X] = random_input(*tag, n, rng);
        if (fixed) {
          z = tuple_arg(cfg, "z", n, z);
          X = tuple_arg(cfg, "X", n, X);
        }
        tasks.push_back({suites.size() - 1, z, X, m, theorem1});
      }
    }
  }

  std::vector<CheckRow> rows(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    const CheckTask& t = tasks[i];
    rows[i] = t.theorem1 ? theorem1_check(suites[t.suite], t.z, t.X, t.m, cc)
                         : prop2_check(suites[t.suite], t.z, t.X, t.m, cc);
  });
  for (const CheckRow& r : rows) {
    rep.rows.push_back(check_row_json(r));
    rep.all_pass = rep.all_pass && r.pass;
  }
}

Report cmd_verify(const std::string& which, const ExperimentConfig& cfg) {
  Report rep{"verify " + which, {}};
  if (which == "prop2" || which == "all") run_battery(cfg, false, rep);
  if (which == "theorem1" || which == "all") run_battery(cfg, true, rep);
  if (which != "prop2" && which != "theorem1" && which != "all")
    throw ConfigError("verify expects prop2, theorem1 or all");
  return rep;
}

Example3Domain example3_domain(const ExperimentConfig& cfg) {
  try {
    return Example3Domain(Example3Params::with_defaults(cfg.get_int("example3.K"), cfg.get_int("example3.J")));
  } catch (const std::invalid_argument& e) {
    throw DomainError(e.what());
  }
}

Report cmd_example3(const ExperimentConfig& cfg) {
  const Example3Domain dom = example3_domain(cfg);
  const double t0 = cfg.get_double("example3.t0");
  const double t1 = cfg.get_double("example3.t1");
  if (!(t0 >= 0.0 && t0 <= 1.0 && t1 >= 0.0 && t1 <= 1.0)) throw ConfigError("t0 and t1 must lie in [0, 1]");
  const Example3ChainReport r = example3_chain_experiment(dom, t0, t1, cfg.example3_chain());

  Report rep{"example3", {}};
  auto row_for = [&](int leg, const std::string& label) {
    Json row;
    row["K"] = r.K;
    row["J"] = r.J;
    row["t0"] = number(t0);
    row["t1"] = number(t1);
    row["leg"] = leg;
    row["label"] = label;
    return row;
  };
  for (std::size_t i = 0; i < r.hops.size(); ++i) {
    const ChainHop& h = r.hops[i];
    Json row = row_for(static_cast<int>(i + 1), h.label);
    row["from"] = to_string(h.from);
    row["to"] = to_string(h.to);
    row["lempert_bound"] = number(h.lempert_bound);
    row["cost"] = number(h.cost);
    row["cert_radius"] = number(h.cert.radius);
    row["cert_samples"] = h.cert.boundary_samples;
    row["cert_min_margin"] = number(h.cert.min_margin);
    rep.rows.push_back(row);
  }
  Json total = row_for(0, "total");
  total["from"] = to_string(r.chain.points.front());
  total["to"] = to_string(r.chain.points.back());
  total["lempert_bound"] = "";
  total["cost"] = number(r.total);
  total["cert_radius"] = "";
  total["cert_samples"] = "";
  total["cert_min_margin"] = "";
  rep.rows.push_back(total);
  return rep;
}

Report cmd_example3_lines(const ExperimentConfig& cfg) {
  const Example3Domain dom = example3_domain(cfg);
  Report rep{"example3-lines", {}};
  for (const SingularLine& l : singular_lines(dom.params())) {
    Json row;
    row["j"] = l.j;
    row["k"] = l.k;
    row["re"] = number(l.first_coordinate.real());
    row["im"] = number(l.first_coordinate.imag());
    rep.rows.push_back(row);
  }
  return rep;
}

Report cmd_curve_length(const ExperimentConfig& cfg) {
  const Evaluators ev = make_evaluators(cfg);
  const std::size_t n = ev.dom.dimension();
  const bool e3 = std::holds_alternative<descriptor::Example3>(ev.desc.spec);
  ParametricCurve gamma;
  std::string curve;
  DistanceFn dist;
  if (e3) {
    gamma = ParametricCurve::example3_gamma();
    curve = "gamma(t) = (t i/2, 1/2)";
    const auto dom = std::make_shared<Example3Domain>(example3_domain(cfg));
    const Example3ChainConfig cc = cfg.example3_chain();
    dist = [dom, cc](const CPoint& a, const CPoint& b) { return example3_chain_between(*dom, a, b, cc).total; };
  } else {
    CPoint w0(n);
    w0[0] = 0.5;
    const CPoint a = tuple_arg(cfg, "z", n, CPoint(n));
    const CPoint b = tuple_arg(cfg, "w", n, w0);
    gamma = ParametricCurve::segment(a, b);
    curve = "segment " + to_string(a) + " -> " + to_string(b);
    dist = [&ev](const CPoint& p, const CPoint& q) {
      const double v = ev.lempert(p, q).value;
      return v < 1.0 ? std::atanh(v) : INFINITY;
    };
  }
  Report rep{"curve-length", {}};
  auto row_for = [&](const std::string& quantity, int nodes, double value) {
    Json row = base_row(ev);
    row["curve"] = curve;
    row["quantity"] = quantity;
    row["nodes"] = nodes;
    row["value"] = number(value);
    return row;
  };
  const LengthLadder ladder = length_ladder(dist, gamma, cfg.get_int("curve.partitions"));
  for (std::size_t i = 0; i < ladder.partitions.size(); ++i)
    rep.rows.push_back(row_for("distance_length", ladder.partitions[i], ladder.lengths[i]));
  const int Q = cfg.get_int("curve.quadrature");
  if (Q > 0) rep.rows.push_back(row_for("metric_length", Q, length_by_metric(ev.kappa_fn(), gamma, Q)));
  return rep;
}

}  // namespace

Report execute(const std::string& command, const ExperimentConfig& cfg) {
  if (command == "metric") return cmd_metric(cfg);
  if (command == "lempert") return cmd_lempert(cfg);
  if (command == "higher") return cmd_higher(cfg);
  if (command == "hull") return cmd_hull(cfg);
  if (command == "derivative") return cmd_derivative(cfg);
  if (command.rfind("verify", 0) == 0) {
    const std::string which = command.size() > 7 ? command.substr(7) : "all";
    return cmd_verify(which, cfg);
  }
  if (command == "example3") return cmd_example3(cfg);
  if (command == "example3-lines") return cmd_example3_lines(cfg);
  if (command == "curve-length") return cmd_curve_length(cfg);
  throw ConfigError("unknown command '" + command + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant metrics of complex domains: numerical upper bounds and identity checks"};
  app.name("iml");
  std::string config_path;
  bool print_defaults = false;
  std::vector<std::string> sets;
  app.add_option("--config", config_path, "Configuration file (key = value lines)");
  app.add_flag("--print-defaults", print_defaults, "Print every configuration key with its default");
  app.add_option("--set", sets, "Override a configuration key: key=value (repeatable)");
  app.require_subcommand(0, 1);

  // Flag values land here and are applied over the config file after parsing.
  struct Bound {
    CLI::Option* opt;
    std::string key;
    CLI::App* sub;
  };
  std::vector<Bound> bound;
  std::map<std::string, std::string> slots;
  auto flag = [&](CLI::App* sub, const std::string& name, const std::string& key, const std::string& help) {
    CLI::Option* o = sub->add_option(name, slots[sub->get_name() + key], help);
    bound.push_back({o, key, sub});
    return o;
  };
  auto common = [&](CLI::App* sub) {
    flag(sub, "--domain", "domain", "unit-disc | polydisc[:r,..] | ball[:n[:r]] | balanced:<gauge>[:c] | example3");
    flag(sub, "--z", "z", "Base point, comma-separated complex numbers");
    flag(sub, "--X", "X", "Tangent vector");
    flag(sub, "--w", "w", "Second point");
    flag(sub, "--m", "m", "Order m of the higher metric / chain length");
    flag(sub, "--seed", "seed", "Random seed");
    flag(sub, "--method", "method", "auto | oracle | search");
    flag(sub, "--out", "out", "Output path, - for stdout");
    flag(sub, "--format", "format", "csv | json")->check(CLI::IsMember({"csv", "json"}));
  };

  std::map<CLI::App*, std::string> names;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"metric", "Kobayashi-Royden metric kappa(z; X)"},
           {"lempert", "Lempert function k~*(z, w) and k~ = atanh k~*"},
           {"higher", "Ladder kappa^(1..m)(z; X), or k^(1..m)(z, w) when --w is given"},
           {"hull", "Convex-hull gauge of a balanced domain against kappa^(3)(0; X)"},
           {"derivative", "Difference-quotient trace of k^(m) at (z, X)"},
           {"example3", "Certified chain along gamma in the Example 3 domain"},
           {"example3-lines", "First coordinates of the singular lines contained in the Example 3 domain"},
           {"curve-length", "Distance and metric lengths of a curve"}}) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    names[sub] = name;
    if (name == "example3" || name == "example3-lines" || name == "curve-length") {
      flag(sub, "--J", "example3.J", "Number of r_j terms");
      flag(sub, "--K", "example3.K", "Number of u terms");
    }
    if (name == "example3") {
      flag(sub, "--t0", "example3.t0", "Start parameter in [0, 1]");
      flag(sub, "--t1", "example3.t1", "End parameter in [0, 1]");
    }
  }
  std::string which = "all";
  CLI::App* verify = app.add_subcommand("verify", "Quotient checks: prop2 (kappa^(m) >= upper quotient of k^(m)) and theorem1 (quotients equal kappa)");
  common(verify);
  verify->add_option("which", which, "prop2 | theorem1 | all")->check(CLI::IsMember({"prop2", "theorem1", "all"}));
  names[verify] = "verify";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  ExperimentConfig cfg;
  std::string command;
  try {
    if (!config_path.empty()) cfg.load_file(config_path);
    for (const std::string& s : sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + s + "'");
      cfg.set(s.substr(0, eq), s.substr(eq + 1));
    }
    for (const Bound& b : bound)
      if (b.opt->count() > 0) cfg.set(b.key, b.opt->as<std::string>());
    for (const Bound& b : bound) {
      if (b.sub != verify || b.opt->count() == 0) continue;
      const std::string& key = b.key;
      {
        if (key == "domain") {
          cfg.set("verify.prop2_domains", cfg.get("domain"));
          cfg.set("verify.theorem1_domains", cfg.get("domain"));
        }
        if (key == "m") {
          cfg.set("verify.prop2_m", cfg.get("m"));
          cfg.set("verify.theorem1_m", cfg.get("m"));
        }
      }
    }
    if (print_defaults) {
      out << ExperimentConfig().dump();
      return 0;
    }
    for (const auto& [sub, name] : names)
      if (sub->parsed()) command = name == "verify" ? "verify " + which : name;
    if (command.empty()) {
      err << app.help();
      return 2;
    }
    const std::string format = cfg.get("format");
    if (format != "csv" && format != "json") throw ConfigError("format must be csv or json");
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Report rep = execute(command, cfg);
    const std::string text = cfg.get("format") == "json" ? to_json(rep) : to_csv(rep);
    const std::string path = cfg.get("out");
    if (path == "-" || path.empty()) {
      out << text;
    } else {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write '" + path + "'");
      f << text;
    }
    if (!rep.all_pass) {
      err << "some checks failed\n";
      return 1;
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const OutsideDomain& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace iml
