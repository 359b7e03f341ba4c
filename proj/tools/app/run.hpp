#pragma once

#include <ostream>
#include <string>

#include "config.hpp"
#include "report.hpp"

namespace polyharm::app {

struct RunOptions {
  unsigned threads = 1;
  bool timing = false;
};

/// Solve kinds, mean and decompose. Solver failures propagate as
/// polyharm::Error; bad expressions raise ConfigError.
RunReport run_solve(const RunConfig& config, const RunOptions& options);

/// Suites: identities, manufactured, exterior-duality, pizzetti, all.
/// Human-readable pass/fail lines go to `log`.
RunReport run_verify(const RunConfig& config, const RunOptions& options, std::ostream& log);

/// Quadrature nodes and weights as CSV.
std::string rule_dump(std::size_t n, int order);

}  // namespace polyharm::app
