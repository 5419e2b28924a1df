#pragma once

#include <ostream>
#include <string>

#include "iml/config.hpp"
#include "iml/report.hpp"

namespace iml {

/// Runs one command ("metric", "lempert", "higher", "hull", "derivative", "verify prop2",
/// "verify theorem1", "verify all", "example3", "example3-lines", "curve-length").
/// Throws ConfigError, DomainError, OutsideDomain or std::runtime_error.
Report execute(const std::string& command, const ExperimentConfig& cfg);

/// Command-line entry point. Exit status: 0 success, 1 failed check or runtime failure,
/// 2 parse/config error, 3 domain error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace iml
