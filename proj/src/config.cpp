#include "iml/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace iml {

namespace {

const std::map<std::string, std::string>& defaults() {
  static const std::map<std::string, std::string> d = {
      {"domain", "unit-disc"},
      {"method", "auto"},
      {"z", ""},
      {"X", ""},
      {"w", ""},
      {"m", "1"},
      {"seed", "1"},
      {"out", "-"},
      {"format", "csv"},
      {"search.degree", "4"},
      {"search.restarts", "8"},
      {"search.rho", "0.995"},
      {"search.boundary_samples", "256"},
      {"search.margin_eps", "0.001"},
      {"search.max_iters", "1500"},
      {"search.bisection_tol", "0.0001"},
      {"schedule.rho0", "0.1"},
      {"schedule.levels", "6"},
      {"schedule.factor", "0.5"},
      {"schedule.samples", "64"},
      {"schedule.retry_cap", "200"},
      {"decomposition.restarts", "16"},
      {"decomposition.max_evals", "3000"},
      {"chain.restarts", "4"},
      {"chain.max_evals", "2000"},
      {"chain.margin_eps", "0.001"},
      {"chain.max_m", "8"},
      {"verify.samples", "20"},
      {"verify.directions", "50"},
      {"verify.rel_tol", "0.02"},
      {"verify.abs_tol", "0.001"},
      {"verify.theorem1_rel_tol", "0.03"},
      {"verify.theorem1_domains", "unit-disc;polydisc:1,1;ball:2"},
      {"verify.prop2_domains", "unit-disc;polydisc:1,1;ball:2;balanced:max-geo:2;balanced:geo"},
      {"verify.theorem1_m", "1"},
      {"verify.prop2_m", "1,2,3"},
      {"example3.K", "200"},
      {"example3.J", "60"},
      {"example3.t0", "0"},
      {"example3.t1", "1"},
      {"example3.boundary_samples", "512"},
      {"example3.margin_eps", "0.001"},
      {"example3.wide_radius", "1e6"},
      {"example3.max_hop_radius", "4"},
      {"hull.points", "2048"},
      {"curve.partitions", "8"},
      {"curve.quadrature", "65"},
  };
  return d;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s) {
  const std::string t = trim(s);
  if (t.size() >= 2 && t.front() == '"' && t.back() == '"') return t.substr(1, t.size() - 2);
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') return trim(t.substr(1, t.size() - 2));
  return t;
}

double to_double(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw ConfigError("cannot parse number '" + s + "' for " + what);
  return v;
}

long long to_integer(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw ConfigError("cannot parse integer '" + s + "' for " + what);
  return v;
}

bool is_number_text(const std::string& s) {
  const std::string t = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  return !t.empty() && ec == std::errc{} && ptr == t.data() + t.size();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

// Splits "a = 1, b = "x, y", c = [1, 2]" at top-level commas.
std::vector<std::string> split_record(const std::string& body) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  bool quoted = false;
  for (char c : body) {
    if (c == '"') quoted = !quoted;
    if (!quoted && (c == '[' || c == '{')) ++depth;
    if (!quoted && (c == ']' || c == '}')) --depth;
    if (c == ',' && depth == 0 && !quoted) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

std::string domain_record_to_spec(const std::map<std::string, std::string>& rec) {
  auto get = [&](const std::string& k, const std::string& dflt) {
    const auto it = rec.find(k);
    return it == rec.end() ? dflt : it->second;
  };
  const std::string kind = get("kind", "");
  if (kind.empty()) throw ConfigError("domain record needs a kind");
  if (kind == "polydisc") return "polydisc:" + get("radii", "1,1");
  if (kind == "ball" || kind == "euclidean-ball")
    return "ball:" + get("dimension", "2") + ":" + get("radius", "1");
  if (kind == "balanced") return "balanced:" + get("h", "euclid") + ":" + get("c", "2");
  if (kind == "product") return "product:" + get("first", "unit-disc") + "*" + get("second", "unit-disc");
  return kind;
}

}  // namespace

ExperimentConfig::ExperimentConfig() : values_(defaults()) {}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown configuration key '" + key + "'");
  // Numeric keys stay numeric: the embedded default fixes the type.
  const std::string& current = it->second;
  if (is_number_text(current)) to_double(value, key);
  it->second = value;
}

const std::string& ExperimentConfig::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown configuration key '" + key + "'");
  return it->second;
}

double ExperimentConfig::get_double(const std::string& key) const { return to_double(get(key), key); }

int ExperimentConfig::get_int(const std::string& key) const {
  return static_cast<int>(to_integer(get(key), key));
}

std::uint64_t ExperimentConfig::get_u64(const std::string& key) const {
  const long long v = to_integer(get(key), key);
  if (v < 0) throw ConfigError(key + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

std::vector<double> ExperimentConfig::get_list(const std::string& key) const {
  std::vector<double> out;
  for (const std::string& part : split(get(key), ',')) out.push_back(to_double(part, key));
  return out;
}

void ExperimentConfig::load_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // Strip comments outside quotes.
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line.resize(i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + ": empty key");
    if (!section.empty()) key = section + "." + key;

    if (!value.empty() && value.front() == '{') {
      if (value.back() != '}') throw ConfigError(where + ": unterminated record");
      std::map<std::string, std::string> rec;
      for (const std::string& field : split_record(value.substr(1, value.size() - 2))) {
        const auto feq = field.find('=');
        if (feq == std::string::npos) throw ConfigError(where + ": record fields need '='");
        rec[trim(field.substr(0, feq))] = unquote(field.substr(feq + 1));
      }
      try {
        if (key == "domain")
          set(key, domain_record_to_spec(rec));
        else
          for (const auto& [k, v] : rec) set(key + "." + k, v);
      } catch (const ConfigError& e) {
        throw ConfigError(where + ": " + e.what());
      }
      continue;
    }
    try {
      set(key, unquote(value));
    } catch (const ConfigError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
}

void ExperimentConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  load_text(ss.str());
}

std::string ExperimentConfig::dump() const {
  std::string out;
  for (const auto& [k, v] : values_) {
    const bool quote = v.empty() || v.find_first_of(",;# ") != std::string::npos;
    out += k + " = " + (quote ? "\"" + v + "\"" : v) + "\n";
  }
  return out;
}

DomainDescriptor ExperimentConfig::domain() const {
  int K = 0;
  int J = 0;
  try {
    K = get_int("example3.K");
    J = get_int("example3.J");
  } catch (const ConfigError& e) {
    throw DomainError(e.what());
  }
  return parse_domain_spec(get("domain"), K, J);
}

SearchConfig ExperimentConfig::search() const {
  SearchConfig c;
  c.degree = get_int("search.degree");
  c.restarts = get_int("search.restarts");
  c.rho = get_double("search.rho");
  c.boundary_samples = get_int("search.boundary_samples");
  c.margin_eps = get_double("search.margin_eps");
  c.max_iters = get_int("search.max_iters");
  c.bisection_tol = get_double("search.bisection_tol");
  c.seed = get_u64("seed");
  return c;
}

ShrinkSchedule ExperimentConfig::schedule() const {
  ShrinkSchedule s;
  s.rho0 = get_double("schedule.rho0");
  s.levels = get_int("schedule.levels");
  s.factor = get_double("schedule.factor");
  s.samples_per_level = get_int("schedule.samples");
  s.retry_cap = get_int("schedule.retry_cap");
  s.seed = get_u64("seed");
  return s;
}

DecompositionConfig ExperimentConfig::decomposition() const {
  DecompositionConfig d;
  d.restarts = get_int("decomposition.restarts");
  d.max_evals = get_int("decomposition.max_evals");
  d.seed = get_u64("seed");
  return d;
}

ChainConfig ExperimentConfig::chain() const {
  ChainConfig c;
  c.restarts = get_int("chain.restarts");
  c.max_evals = get_int("chain.max_evals");
  c.margin_eps = get_double("chain.margin_eps");
  c.max_m = get_int("chain.max_m");
  c.seed = get_u64("seed");
  return c;
}

Example3ChainConfig ExperimentConfig::example3_chain() const {
  Example3ChainConfig c;
  c.boundary_samples = get_int("example3.boundary_samples");
  c.margin_eps = get_double("example3.margin_eps");
  c.wide_radius = get_double("example3.wide_radius");
  c.max_hop_radius = get_double("example3.max_hop_radius");
  return c;
}

DomainDescriptor parse_domain_spec(const std::string& spec, int K, int J) {
  const std::string s = trim(spec);
  const auto colon = s.find(':');
  const std::string kind = s.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
  try {
    if (kind == "unit-disc" || kind == "disc") {
      if (!rest.empty()) throw DomainError("unit-disc takes no parameters");
      return unit_disc();
    }
    if (kind == "polydisc") {
      std::vector<double> radii;
      for (const std::string& r : split(rest.empty() ? "1,1" : rest, ','))
        radii.push_back(to_double(r, "polydisc radius"));
      for (double r : radii)
        if (!(r > 0.0)) throw DomainError("polydisc radii must be positive");
      if (radii.empty() || radii.size() > kMaxDimension) throw DomainError("polydisc dimension out of range");
      return polydisc(radii);
    }
    if (kind == "ball" || kind == "euclidean-ball") {
      const auto parts = rest.empty() ? std::vector<std::string>{} : split(rest, ':');
      const long long dim = parts.empty() ? 2 : to_integer(parts[0], "ball dimension");
      const double radius = parts.size() > 1 ? to_double(parts[1], "ball radius") : 1.0;
      if (dim < 1 || dim > static_cast<long long>(kMaxDimension)) throw DomainError("ball dimension out of range");
      if (!(radius > 0.0)) throw DomainError("ball radius must be positive");
      return euclidean_ball(static_cast<std::size_t>(dim), radius);
    }
    if (kind == "balanced") {
      const auto parts = split(rest, ':');
      if (parts.empty() || parts[0].empty()) throw DomainError("balanced needs a gauge name");
      const double c = parts.size() > 1 ? to_double(parts[1], "gauge constant") : 2.0;
      return balanced(make_minkowski(parts[0], 2, c));
    }
    if (kind == "example3") return example3(Example3Params::with_defaults(K, J));
    if (kind == "product") {
      const auto star = rest.find('*');
      if (star == std::string::npos) throw DomainError("product needs 'first*second'");
      return product(parse_domain_spec(rest.substr(0, star), K, J),
                     parse_domain_spec(rest.substr(star + 1), K, J));
    }
  } catch (const ConfigError& e) {
    throw DomainError(e.what());
  } catch (const DomainError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw DomainError(e.what());
  }
  throw DomainError("unknown domain '" + s + "'");
}

cplx parse_complex(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t') t += c;
  if (t.empty()) throw ConfigError("empty complex number");
  if (t.back() != 'i' && t.back() != 'j') return {to_double(t, "complex number"), 0.0};
  t.pop_back();
  // Split at the last sign that is not an exponent sign or the leading sign.
  std::size_t cut = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  const std::string re = cut == std::string::npos ? "" : t.substr(0, cut);
  std::string im = cut == std::string::npos ? t : t.substr(cut);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  if (im.front() == '+') im.erase(0, 1);
  return {re.empty() ? 0.0 : to_double(re, "complex number"), to_double(im, "complex number")};
}

std::vector<cplx> parse_complex_list(const std::string& text) {
  std::vector<cplx> out;
  for (const std::string& part : split(unquote(text), ',')) out.push_back(parse_complex(part));
  return out;
}

}  // namespace iml
