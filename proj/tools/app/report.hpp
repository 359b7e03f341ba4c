#pragma once

// Run reports and their CSV/JSON serializations.

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"

namespace polyharm::app {

using ojson = nlohmann::ordered_json;

struct RunReport {
  ojson metadata = ojson::object();
  std::vector<ojson> results;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  bool verification_failed = false;
};

/// Compact JSON with fixed key order and doubles printed as %.17g.
std::string to_json_text(const ojson& value);
std::string format_number(double v);

void write_report(const RunReport& report, Format format, std::ostream& out);

/// Writes via a temporary file in the same directory followed by rename.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace polyharm::app
