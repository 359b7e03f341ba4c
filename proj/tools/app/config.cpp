#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace polyharm::app {

using nlohmann::json;

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Interior: return "interior";
    case Kind::Ball: return "ball";
    case Kind::Exterior: return "exterior";
    case Kind::Mean: return "mean";
    case Kind::Decompose: return "decompose";
    case Kind::Verify: return "verify";
  }
  return "?";
}

std::string to_string(Format f) { return f == Format::Csv ? "csv" : "json"; }

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw ConfigError("format", "expected \"csv\" or \"json\", got \"" + s + "\"");
}

int default_quadrature_order(std::size_t n) { return n == 2 ? 256 : 64; }

namespace {

Kind parse_kind(const std::string& s) {
  for (Kind k : {Kind::Interior, Kind::Ball, Kind::Exterior, Kind::Mean, Kind::Decompose,
                 Kind::Verify}) {
    if (to_string(k) == s) return k;
  }
  throw ConfigError("kind", "unknown problem kind \"" + s + "\"");
}

template <typename T>
T get(const json& j, const std::string& field) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(field, "wrong type");
  }
}

double finite(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(field, "not finite");
  return v;
}

std::vector<double> vec(const json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(finite(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<GridPoint> parse_grid(const json& g, std::size_t n) {
  if (!g.is_object()) throw ConfigError("grid", "expected an object");
  std::vector<GridPoint> out;
  if (g.contains("points")) {
    const json& pts = g["points"];
    if (!pts.is_array()) throw ConfigError("grid.points", "expected an array");
    std::vector<double> angles(pts.size(), 0.0);
    if (g.contains("angles")) {
      angles = vec(g["angles"], "grid.angles");
      if (angles.size() != pts.size()) {
        throw ConfigError("grid.angles", "expected one angle per point");
      }
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::string name = "grid.points[" + std::to_string(i) + "]";
      GridPoint gp{vec(pts[i], name), angles[i]};
      if (gp.x.size() != n) throw ConfigError(name, "expected " + std::to_string(n) + " coordinates");
      out.push_back(std::move(gp));
    }
  } else if (g.contains("cartesian")) {
    const json& c = g["cartesian"];
    if (!c.is_object()) throw ConfigError("grid.cartesian", "expected an object");
    for (const char* key : {"min", "max", "steps"}) {
      if (!c.contains(key)) throw ConfigError(std::string("grid.cartesian.") + key, "missing");
    }
    const auto lo = vec(c["min"], "grid.cartesian.min");
    const auto hi = vec(c["max"], "grid.cartesian.max");
    if (!c["steps"].is_array()) throw ConfigError("grid.cartesian.steps", "expected an array");
    std::vector<int> steps;
    for (const auto& s : c["steps"]) {
      if (!s.is_number_integer() || s.get<long>() < 1 || s.get<long>() > 100000) {
        throw ConfigError("grid.cartesian.steps", "expected positive integers");
      }
      steps.push_back(s.get<int>());
    }
    if (lo.size() != n || hi.size() != n || steps.size() != n) {
      throw ConfigError("grid.cartesian", "min, max and steps need " + std::to_string(n) + " entries");
    }
    const double angle = g.contains("angle") ? finite(g["angle"], "grid.angle") : 0.0;
    std::size_t total = 1;
    for (int s : steps) total *= static_cast<std::size_t>(s);
    if (total > 10000000) throw ConfigError("grid.cartesian.steps", "grid too large");
    std::vector<int> idx(n, 0);
    for (std::size_t t = 0; t < total; ++t) {
      GridPoint gp;
      gp.angle = angle;
      for (std::size_t j = 0; j < n; ++j) {
        const double frac = steps[j] == 1 ? 0.0 : static_cast<double>(idx[j]) / (steps[j] - 1);
        gp.x.push_back(lo[j] + (hi[j] - lo[j]) * frac);
      }
      out.push_back(std::move(gp));
      // last coordinate varies fastest
      for (std::size_t j = n; j-- > 0;) {
        if (++idx[j] < steps[j]) break;
        idx[j] = 0;
      }
    }
  } else {
    throw ConfigError("grid", "expected \"points\" or \"cartesian\"");
  }
  return out;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.n < 2) throw ConfigError("n", "dimension must be >= 2");
  if (c.n > 16) throw ConfigError("n", "dimension must be <= 16");
  if (c.p < 1 || c.p > 64) throw ConfigError("p", "order must be in 1..64");
  if (!(c.delta > 0.0 && c.delta < 0.5)) throw ConfigError("delta", "must lie in (0, 0.5)");
  if (c.quadrature_order < 0 || c.quadrature_order > 1000000) {
    throw ConfigError("quadrature_order", "must be a positive integer");
  }
  if (c.kind == Kind::Verify) return;
  if (!c.center.empty() && c.center.size() != c.n) {
    throw ConfigError("center", "expected " + std::to_string(c.n) + " coordinates");
  }
  if (!(c.radius > 0.0)) throw ConfigError("radius", "must be positive");
  const bool solve_kind = c.kind == Kind::Interior || c.kind == Kind::Ball || c.kind == Kind::Exterior;
  if (solve_kind && c.boundary.size() != static_cast<std::size_t>(c.p)) {
    throw ConfigError("boundary", "expected " + std::to_string(c.p) + " expressions (one per k), got " +
                                      std::to_string(c.boundary.size()));
  }
  if ((c.kind == Kind::Mean || c.kind == Kind::Decompose) && c.field.empty()) {
    throw ConfigError("field", "required for kind " + to_string(c.kind));
  }
  if (c.kind != Kind::Decompose && c.grid.empty()) throw ConfigError("grid", "must be nonempty");
  if (c.kind == Kind::Interior || c.kind == Kind::Exterior) {
    const bool unit = c.radius == 1.0 &&
                      std::all_of(c.center.begin(), c.center.end(), [](double v) { return v == 0.0; });
    if (!unit) throw ConfigError("center", "kind " + to_string(c.kind) + " is posed on the unit ball; use kind ball");
  }
  if (c.kind == Kind::Exterior || c.kind == Kind::Mean) {
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
      if (c.grid[i].angle != 0.0) {
        throw ConfigError("grid.angles", "kind " + to_string(c.kind) + " takes real points only");
      }
    }
  }
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  static const char* known[] = {"kind",     "n",      "p",      "center", "radius", "quadrature_order",
                                "boundary", "field",  "grid",   "output", "format", "delta",
                                "suite"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ConfigError(key, "unknown field");
  }

  RunConfig c;
  if (!j.contains("kind")) throw ConfigError("kind", "missing");
  c.kind = parse_kind(get<std::string>(j["kind"], "kind"));
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw ConfigError("n", "expected an integer");
    const long n = j["n"].get<long>();
    if (n < 2 || n > 16) throw ConfigError("n", "dimension must be in 2..16");
    c.n = static_cast<std::size_t>(n);
    c.has_n = true;
  } else if (c.kind != Kind::Verify) {
    throw ConfigError("n", "missing");
  }
  if (j.contains("p")) {
    if (!j["p"].is_number_integer()) throw ConfigError("p", "expected an integer");
    const long p = j["p"].get<long>();
    if (p < 1 || p > 64) throw ConfigError("p", "order must be in 1..64");
    c.p = static_cast<int>(p);
    c.has_p = true;
  } else if (c.kind != Kind::Verify) {
    throw ConfigError("p", "missing");
  }
  if (j.contains("center")) c.center = vec(j["center"], "center");
  if (j.contains("radius")) c.radius = finite(j["radius"], "radius");
  if (j.contains("quadrature_order")) {
    if (!j["quadrature_order"].is_number_integer() || j["quadrature_order"].get<long>() < 1) {
      throw ConfigError("quadrature_order", "must be a positive integer");
    }
    c.quadrature_order = static_cast<int>(std::min<long>(j["quadrature_order"].get<long>(), 1000001));
  }
  if (j.contains("boundary")) {
    if (!j["boundary"].is_array()) throw ConfigError("boundary", "expected an array of strings");
    for (std::size_t i = 0; i < j["boundary"].size(); ++i) {
      c.boundary.push_back(get<std::string>(j["boundary"][i], "boundary[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("field")) c.field = get<std::string>(j["field"], "field");
  if (j.contains("grid")) c.grid = parse_grid(j["grid"], c.n);
  if (j.contains("output")) c.output = get<std::string>(j["output"], "output");
  if (j.contains("format")) c.format = parse_format(get<std::string>(j["format"], "format"));
  if (j.contains("delta")) c.delta = finite(j["delta"], "delta");
  if (j.contains("suite")) c.suite = get<std::string>(j["suite"], "suite");
  validate(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace polyharm::app
