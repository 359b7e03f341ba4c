#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "config.hpp"
#include "polyharm/error.hpp"
#include "run.hpp"

namespace polyharm::app {

namespace {

unsigned resolve_threads(const std::optional<int>& flag) {
  if (flag) {
    if (*flag < 1 || *flag > 1024) throw ConfigError("threads", "must be in 1..1024");
    return static_cast<unsigned>(*flag);
  }
  if (const char* env = std::getenv("POLYHARM_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) {
      throw ConfigError("POLYHARM_THREADS", "must be an integer in 1..1024");
    }
    return static_cast<unsigned>(v);
  }
  return 1;
}

void emit(const RunReport& report, const RunConfig& c, std::ostream& out) {
  std::ostringstream text;
  write_report(report, c.format, text);
  if (c.output) {
    write_file_atomic(*c.output, text.str());
  } else {
    out << text.str();
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotated-sphere Dirichlet solver for polyharmonic functions", "polyharm"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> output;
  std::optional<std::string> format;
  std::optional<int> threads;
  std::optional<int> quad_order;
  std::optional<double> delta;
  std::optional<std::string> suite;
  std::optional<int> dim;
  std::optional<int> order_p;
  bool timing = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--output", output, "Output path (default: stdout)");
    sub->add_option("--format", format, "csv or json");
    sub->add_option("--threads", threads, "Worker threads (default: $POLYHARM_THREADS or 1)");
    sub->add_option("--quad-order", quad_order, "Quadrature order (overrides config)");
    sub->add_option("--delta", delta, "Boundary guard delta in (0, 0.5)");
    sub->add_flag("--timing", timing, "Record wall time in the metadata");
  };

  auto* solve = app.add_subcommand("solve", "Evaluate a configured problem on a grid");
  solve->add_option("--config", config_path, "JSON run configuration")->required();
  common(solve);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--config", config_path, "JSON run configuration (kind verify)");
  verify->add_option("--suite", suite, "identities | manufactured | exterior-duality | pizzetti | all");
  verify->add_option("--dim", dim, "Restrict suites to this dimension");
  verify->add_option("--p", order_p, "Restrict suites to this order p");
  common(verify);

  auto* dump = app.add_subcommand("rule-dump", "Write a sphere quadrature rule as CSV");
  dump->add_option("--dim", dim, "Dimension n >= 2")->required();
  dump->add_option("--quad-order", quad_order, "Quadrature order")->required();
  dump->add_option("--output", output, "Output path (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (dump->parsed()) {
      if (*dim < 2) throw ConfigError("dim", "dimension must be >= 2");
      if (*quad_order < 1) throw ConfigError("quad-order", "must be a positive integer");
      const std::string csv = rule_dump(static_cast<std::size_t>(*dim), *quad_order);
      if (output) {
        write_file_atomic(*output, csv);
      } else {
        out << csv;
      }
      return kOk;
    }

    RunConfig c;
    if (!config_path.empty()) {
      c = load_config(config_path);
    } else {
      c.kind = Kind::Verify;
    }
    if (verify->parsed() && c.kind != Kind::Verify) {
      throw ConfigError("kind", "verify expects kind \"verify\"");
    }
    if (solve->parsed() && c.kind == Kind::Verify) {
      throw ConfigError("kind", "use the verify subcommand for kind \"verify\"");
    }
    if (output) c.output = *output;
    if (format) c.format = parse_format(*format);
    if (quad_order) {
      if (*quad_order < 1) throw ConfigError("quad-order", "must be a positive integer");
      c.quadrature_order = *quad_order;
    }
    if (delta) c.delta = *delta;
    if (suite) c.suite = *suite;
    if (dim) {
      if (*dim < 2 || *dim > 16) throw ConfigError("dim", "dimension must be in 2..16");
      c.n = static_cast<std::size_t>(*dim);
      c.has_n = true;
    }
    if (order_p) {
      if (*order_p < 1 || *order_p > 64) throw ConfigError("p", "order must be in 1..64");
      c.p = *order_p;
      c.has_p = true;
    }
    validate(c);
    RunOptions options;
    options.threads = resolve_threads(threads);
    options.timing = timing;

    if (verify->parsed()) {
      const RunReport report = run_verify(c, options, err);
      emit(report, c, out);
      return report.verification_failed ? kVerifyFailed : kOk;
    }
    emit(run_solve(c, options), c, out);
    return kOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const polyharm::Error& e) {
    err << "solver error: " << e.what() << "\n";
    return kSolverError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kSolverError;
  }
}

}  // namespace polyharm::app
