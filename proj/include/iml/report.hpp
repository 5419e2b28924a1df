#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "iml/derivatives.hpp"
#include "iml/estimate.hpp"

namespace iml {

using Json = nlohmann::ordered_json;

/// Rows of one CLI run. Scalar fields become CSV columns; arrays and objects (traces,
/// witnesses) appear in JSON output only.
struct Report {
  std::string command;
  std::vector<Json> rows;
  /// False once any verify row fails.
  bool all_pass = true;
};

/// %.12g; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double x);
/// A double rounded to 12 significant digits (non-finite values become strings).
Json number(double x);

Json trace_json(const QuotientTrace& trace);
Json witness_json(const MetricEstimate& est);
/// Scalar summary of an estimate: value, bound kind, witness summary, certificate, diagnostic.
void put_estimate(Json& row, const MetricEstimate& est);
Json check_row_json(const CheckRow& row);

std::string to_csv(const Report& report);
std::string to_json(const Report& report);

}  // namespace iml
