#pragma once

// Run configuration for the polyharm tool: a single JSON document.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyharm::app {

/// Validation failure; field() names the offending config field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class Kind { Interior, Ball, Exterior, Mean, Decompose, Verify };
enum class Format { Csv, Json };

std::string to_string(Kind k);
std::string to_string(Format f);
Format parse_format(const std::string& s);

struct GridPoint {
  std::vector<double> x;
  double angle = 0.0;
};

struct RunConfig {
  Kind kind = Kind::Interior;
  std::size_t n = 2;
  int p = 1;
  std::vector<double> center;  ///< empty means the origin
  double radius = 1.0;
  int quadrature_order = 0;    ///< 0 means the per-dimension default
  std::vector<std::string> boundary;  ///< p expressions in z1..zn
  std::string field;                  ///< expression in x1..xn (mean, decompose)
  std::vector<GridPoint> grid;
  std::optional<std::string> output;
  Format format = Format::Json;
  double delta = 1e-3;
  std::string suite = "all";
  bool has_n = false;  ///< verify: restrict suites to this n
  bool has_p = false;  ///< verify: restrict suites to this p
};

/// Parses and validates a config document (JSON text).
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Re-checks invariants after command-line overrides.
void validate(const RunConfig& config);

/// Default quadrature order when the config leaves it unset.
int default_quadrature_order(std::size_t n);

}  // namespace polyharm::app
