#include "iml/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace iml {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json number(double x) {
  if (!std::isfinite(x)) return format_number(x);
  return std::strtod(format_number(x).c_str(), nullptr);
}

Json trace_json(const QuotientTrace& trace) {
  Json levels = Json::array();
  for (const LevelStats& l : trace.levels)
    levels.push_back({{"radius", number(l.radius)},
                      {"max", number(l.max_quotient)},
                      {"min", number(l.min_quotient)},
                      {"samples", l.samples}});
  return {{"levels", levels},
          {"upper", number(trace.upper)},
          {"lower", number(trace.lower)},
          {"upper_extrapolated", number(trace.upper_extrapolated)},
          {"lower_extrapolated", number(trace.lower_extrapolated)}};
}

namespace {

template <class Tag>
Json tuple_json(const CTuple<Tag>& x) {
  return to_string(x);
}

}  // namespace

Json witness_json(const MetricEstimate& est) {
  struct Visitor {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(const AnalyticDisc& d) const {
      Json c = Json::array();
      for (const CVector& v : d.coeffs) c.push_back(tuple_json(v));
      return {{"type", "disc"}, {"center", tuple_json(d.center)}, {"coefficients", c}};
    }
    Json operator()(const Decomposition& d) const {
      Json p = Json::array();
      for (const CVector& v : d.parts) p.push_back(tuple_json(v));
      return {{"type", "decomposition"}, {"parts", p}};
    }
    Json operator()(const Chain& c) const {
      Json p = Json::array();
      for (const CPoint& v : c.points) p.push_back(tuple_json(v));
      return {{"type", "chain"}, {"points", p}};
    }
    Json operator()(const std::string& s) const { return {{"type", "oracle"}, {"name", s}}; }
  };
  return std::visit(Visitor{}, est.witness);
}

void put_estimate(Json& row, const MetricEstimate& est) {
  row["value"] = number(est.value);
  row["kind"] = to_string(est.kind);
  row["witness_summary"] = est.witness_summary();
  row["cert_min_margin"] = est.cert ? number(est.cert->min_margin) : Json("");
  row["diagnostic"] = est.diagnostic;
  row["witness"] = witness_json(est);
}

Json check_row_json(const CheckRow& r) {
  Json row;
  row["check"] = r.check;
  row["domain"] = r.domain;
  row["z"] = to_string(r.z);
  row["X"] = to_string(r.X);
  row["m"] = r.m;
  row["lhs"] = number(r.lhs);
  row["upper"] = number(r.upper);
  row["lower"] = number(r.lower);
  row["upper_extrapolated"] = number(r.trace.upper_extrapolated);
  row["lower_extrapolated"] = number(r.trace.lower_extrapolated);
  row["tol"] = number(r.tol);
  row["pass"] = r.pass;
  row["trace"] = trace_json(r.trace);
  return row;
}

namespace {

std::string csv_cell(const Json& v) {
  std::string s;
  if (v.is_string())
    s = v.get<std::string>();
  else if (v.is_boolean())
    s = v.get<bool>() ? "true" : "false";
  else if (v.is_number_float())
    s = format_number(v.get<double>());
  else if (v.is_null())
    s = "";
  else
    s = v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string to_csv(const Report& report) {
  if (report.rows.empty()) return "";
  std::vector<std::string> cols;
  for (auto it = report.rows.front().begin(); it != report.rows.front().end(); ++it)
    if (!it.value().is_structured()) cols.push_back(it.key());
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += '\n';
  for (const Json& row : report.rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) out += ',';
      if (row.contains(cols[i])) out += csv_cell(row.at(cols[i]));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Report& report) {
  Json doc;
  doc["command"] = report.command;
  doc["all_pass"] = report.all_pass;
  doc["rows"] = report.rows;
  return doc.dump(2) + "\n";
}

}  // namespace iml
