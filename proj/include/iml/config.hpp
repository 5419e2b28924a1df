#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "iml/curves.hpp"
#include "iml/derivatives.hpp"
#include "iml/disc_search.hpp"
#include "iml/domain.hpp"
#include "iml/higher_metrics.hpp"

namespace iml {

/// Malformed configuration text, unknown key, or unparsable value.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat dotted-key configuration. Every key has an embedded default; unknown keys are errors.
///
/// File syntax, one entry per line:
///   key = value            # comment
///   [section]              # prefixes following keys with "section."
///   domain = { kind = "balanced", h = "max-geo", c = 2.0 }
/// A record value is flattened: `domain` records become a domain spec string, other records
/// set `key.field` entries.
class ExperimentConfig {
 public:
  ExperimentConfig();

  void set(const std::string& key, const std::string& value);
  const std::string& get(const std::string& key) const;
  double get_double(const std::string& key) const;
  int get_int(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  std::vector<double> get_list(const std::string& key) const;

  void load_text(const std::string& text);
  void load_file(const std::string& path);
  /// All keys in sorted order, in the file syntax.
  std::string dump() const;

  /// Domain from the `domain` spec string and the example3.* keys. Throws DomainError.
  DomainDescriptor domain() const;
  SearchConfig search() const;
  ShrinkSchedule schedule() const;
  DecompositionConfig decomposition() const;
  ChainConfig chain() const;
  Example3ChainConfig example3_chain() const;

 private:
  std::map<std::string, std::string> values_;
};

/// Domain spec strings:
///   unit-disc | polydisc[:r1,r2,...] | ball[:dim[:radius]] | balanced:<gauge>[:c]
///   example3 | product:<spec>*<spec>
/// Gauges: euclid, max, l1, max-geo, geo, half (all on C^2).
DomainDescriptor parse_domain_spec(const std::string& spec, int K = 200, int J = 60);

/// Comma-separated complex numbers such as "0.5,1-2i,i".
std::vector<cplx> parse_complex_list(const std::string& text);
cplx parse_complex(const std::string& text);

}  // namespace iml
