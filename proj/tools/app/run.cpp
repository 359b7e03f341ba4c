#include "run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "polyharm/almansi.hpp"
#include "polyharm/dirichlet.hpp"
#include "polyharm/expr.hpp"
#include "polyharm/manufactured.hpp"

namespace polyharm::app {

namespace {

ojson config_echo(const RunConfig& c, int order) {
  ojson j = ojson::object();
  j["kind"] = to_string(c.kind);
  j["n"] = c.n;
  j["p"] = c.p;
  if (c.kind == Kind::Verify) {
    j["suite"] = c.suite;
  } else {
    std::vector<double> center = c.center.empty() ? std::vector<double>(c.n, 0.0) : c.center;
    j["center"] = center;
    j["radius"] = c.radius;
    if (!c.boundary.empty()) j["boundary"] = c.boundary;
    if (!c.field.empty()) j["field"] = c.field;
    j["grid_points"] = c.grid.size();
  }
  if (order > 0) j["quadrature_order"] = order;
  j["delta"] = c.delta;
  j["format"] = to_string(c.format);
  return j;
}

std::string num(double v) { return format_number(v); }

expr::Expr parse_field(const std::string& source, const std::string& field, std::size_t n,
                       char prefix) {
  try {
    return expr::parse(source, n, prefix);
  } catch (const expr::ParseError& e) {
    throw ConfigError(field, e.what());
  }
}

void add_point_record(RunReport& r, const std::vector<double>& x, double angle, Complex v) {
  ojson rec = ojson::object();
  rec["point"] = x;
  rec["angle"] = angle;
  rec["re"] = v.real();
  rec["im"] = v.imag();
  r.results.push_back(std::move(rec));
  std::vector<std::string> row;
  for (double c : x) row.push_back(num(c));
  row.push_back(num(angle));
  row.push_back(num(v.real()));
  row.push_back(num(v.imag()));
  r.csv_rows.push_back(std::move(row));
}

}  // namespace

RunReport run_solve(const RunConfig& c, const RunOptions& options) {
  if (c.kind == Kind::Verify) throw ConfigError("kind", "use the verify subcommand");
  validate(c);
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  const std::size_t n = c.n;

  if (c.kind == Kind::Decompose) {
    const auto e = parse_field(c.field, "field", n, 'x');
    MultiPoly P(n);
    try {
      P = expr::to_poly(e);
    } catch (const Error& err) {
      throw ConfigError("field", err.what());
    }
    const auto h = almansi_decompose(P, c.p);
    report.metadata["config"] = config_echo(c, 0);
    report.csv_header = {"k", "h"};
    for (std::size_t k = 0; k < h.size(); ++k) {
      const std::string src = expr::poly_to_source(h[k]);
      ojson rec = ojson::object();
      rec["k"] = k;
      rec["h"] = src;
      report.results.push_back(std::move(rec));
      report.csv_rows.push_back({std::to_string(k), src});
    }
  } else {
    ProblemSpec spec;
    spec.dim = n;
    spec.order = c.p;
    spec.center = c.center;
    spec.radius = c.radius;
    spec.quadrature_order = c.quadrature_order > 0 ? c.quadrature_order : default_quadrature_order(n);
    spec.validate();
    const QuadratureRule rule = make_rule(spec);
    SolveOptions so;
    so.delta = c.delta;
    so.threads = options.threads;

    report.metadata["config"] = config_echo(c, spec.quadrature_order);
    report.metadata["quadrature_order"] = spec.quadrature_order;
    report.metadata["quadrature_nodes"] = rule.size();
    report.metadata["omega_n"] = surface_area(n);
    for (std::size_t j = 0; j < n; ++j) report.csv_header.push_back("x" + std::to_string(j + 1));
    report.csv_header.insert(report.csv_header.end(), {"angle", "value_re", "value_im"});

    std::vector<Complex> values;
    if (c.kind == Kind::Mean) {
      const FieldFunction F = expr::to_field(parse_field(c.field, "field", n, 'x'));
      for (const auto& g : c.grid) values.push_back(rotated_mean(F, g.x, c.radius, c.p, rule));
    } else {
      BoundaryData data;
      for (std::size_t k = 0; k < c.boundary.size(); ++k) {
        data.functions.push_back(expr::to_field(
            parse_field(c.boundary[k], "boundary[" + std::to_string(k) + "]", n, 'z')));
      }
      if (c.kind == Kind::Exterior) {
        std::vector<std::vector<double>> pts;
        for (const auto& g : c.grid) pts.push_back(g.x);
        values = solve_exterior(spec, rule, data, pts, so);
      } else {
        const auto center = spec.center_or_origin();
        std::vector<RotatedPoint> pts;
        for (const auto& g : c.grid) {
          std::vector<double> offset = g.x;
          if (c.kind == Kind::Ball) {
            for (std::size_t j = 0; j < n; ++j) offset[j] -= center[j];
          }
          pts.emplace_back(g.angle, std::move(offset));
        }
        values = c.kind == Kind::Ball ? solve_ball(spec, rule, data, pts, so)
                                      : solve_interior(spec, rule, data, pts, so);
      }
    }
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
      add_point_record(report, c.grid[i].x, c.grid[i].angle, values[i]);
    }
  }

  if (options.timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    report.metadata["wall_time_s"] = dt.count();
  }
  return report;
}

// ---------------------------------------------------------------------------
// Verification suites

namespace {

struct Check {
  std::string suite;
  std::string name;
  double residual;
  double tolerance;
};

class Verifier {
 public:
  Verifier(const RunConfig& c, const RunOptions& o) : c_(c), o_(o) {}

  std::vector<Check> checks;

  std::vector<std::size_t> dims() const {
    return c_.has_n ? std::vector<std::size_t>{c_.n} : std::vector<std::size_t>{2, 3};
  }
  std::vector<int> orders(int max_p) const {
    if (c_.has_p) return {c_.p};
    std::vector<int> out;
    for (int p = 1; p <= max_p; ++p) out.push_back(p);
    return out;
  }
  int quad(std::size_t n, int n3_default) const {
    if (c_.quadrature_order > 0) return c_.quadrature_order;
    if (n == 2) return 256;
    return n == 3 ? n3_default : 32;
  }

  void add(const std::string& suite, const std::string& name, double residual, double tol) {
    checks.push_back({suite, name, residual, tol});
  }

  void identities() {
    for (int p : orders(8)) {
      double conc = 0.0;
      for (int k = 0; k < p; ++k) {
        const Complex t = std::polar(1.0, 2.0 * kPi * (p - k) / p);
        for (int l = 0; l < p; ++l) {
          const double expected = (k - l) % p == 0 ? p : 0.0;
          conc = std::max(conc, std::abs(coefficient_a(l, p, t) - expected));
        }
      }
      add("identities", "concentration p=" + std::to_string(p), conc, 1e-12);
      const AlmansiWeights A(p);
      double inv = 0.0;
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
          Complex s = 0.0;
          for (int m = 0; m < p; ++m) s += A.forward(i, m) * A.inverse(m, j);
          inv = std::max(inv, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
      }
      add("identities", "vandermonde_inverse p=" + std::to_string(p), inv, 1e-12);
    }
  }

  static std::vector<double> point_in_ball(std::size_t n, double r, std::mt19937_64& gen) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u;
    std::vector<double> v(n);
    double s = 0.0;
    for (auto& x : v) {
      x = g(gen);
      s += x * x;
    }
    const double rad = r * std::pow(u(gen), 1.0 / static_cast<double>(n));
    for (auto& x : v) x *= rad / std::sqrt(s);
    return v;
  }

  static std::vector<double> point_in_shell(std::size_t n, double lo, double hi, std::mt19937_64& gen) {
    auto v = point_in_ball(n, 1.0, gen);
    double s = 0.0;
    for (double x : v) s += x * x;
    const double r = std::uniform_real_distribution<double>(lo, hi)(gen);
    for (auto& x : v) x *= r / std::sqrt(s);
    return v;
  }

  SolveOptions solve_options() const {
    SolveOptions so;
    so.delta = c_.delta;
    so.threads = o_.threads;
    return so;
  }

  static std::string tag(std::size_t n, int p, int order) {
    return "n=" + std::to_string(n) + " p=" + std::to_string(p) + " order=" + std::to_string(order);
  }

  void manufactured() {
    for (std::size_t n : dims()) {
      const int order = quad(n, 128);
      for (int p : orders(3)) {
        std::mt19937_64 gen(1000 + 10 * n + p);
        const auto spec = ProblemSpec::unit(n, p, order);
        const auto rule = make_rule(spec);
        const MultiPoly u = almansi_compose(random_harmonic_stack(n, p, 4, gen));
        const auto data = rotated_traces(FieldFunction::from_poly(u), spec);
        std::vector<RotatedPoint> pts;
        for (int t = 0; t < 20; ++t) pts.push_back(RotatedPoint::real(point_in_ball(n, 0.9, gen)));
        for (int k = 0; k < p; ++k) pts.emplace_back(kPi * k / p, point_in_ball(n, 0.9, gen));
        const auto values = solve_interior(spec, rule, data, pts, solve_options());
        double err = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          err = std::max(err, std::abs(values[i] - poly_eval(u, pts[i].to_complex())));
        }
        add("manufactured", "interior " + tag(n, p, order), err, 1e-8);
        if (n == 2 && p == 2) {
          // u = 1 + |x|^2 x1, u(0.5, 0) = 1.125
          const MultiPoly v = MultiPoly::constant(2, 1.0) + MultiPoly::abs2(2) * MultiPoly::variable(2, 0);
          const auto d = rotated_traces(FieldFunction::from_poly(v), spec);
          const std::vector<RotatedPoint> at{RotatedPoint::real({0.5, 0.0})};
          add("manufactured", "biharmonic u(0.5,0)=1.125 " + tag(n, p, order),
              std::abs(solve_interior(spec, rule, d, at, solve_options())[0] - 1.125), 1e-8);
        }
      }
    }
  }

  void exterior_duality() {
    for (std::size_t n : dims()) {
      const int order = quad(n, 64);
      for (int p : orders(3)) {
        std::mt19937_64 gen(2000 + 10 * n + p);
        const auto spec = ProblemSpec::unit(n, p, order);
        const auto rule = make_rule(spec);
        const MultiPoly u = almansi_compose(random_harmonic_stack(n, p, 3, gen));
        const auto data = rotated_traces(FieldFunction::from_poly(u), spec);
        const auto so = solve_options();
        const FieldFunction interior(n, [&](const ComplexVec& z) {
          std::vector<double> base(n);
          for (std::size_t j = 0; j < n; ++j) base[j] = z[j].real();
          const std::vector<RotatedPoint> pt{RotatedPoint::real(base)};
          return solve_interior(spec, rule, data, pt, so)[0];
        });
        const auto kelvin = kelvin_transform(interior, p);
        std::vector<std::vector<double>> pts;
        for (int t = 0; t < 10; ++t) pts.push_back(point_in_shell(n, 1.2, 3.0, gen));
        const auto ext = solve_exterior(spec, rule, data, pts, so);
        double err = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          err = std::max(err, std::abs(ext[i] - kelvin(ComplexVec::from_real(pts[i]))));
        }
        add("exterior-duality", "kelvin " + tag(n, p, order), err, 1e-8);
      }
      if (n >= 3 && (!c_.has_p || c_.p == 1)) {
        // Constant data: u = |x|^{2-n}.
        std::mt19937_64 gen(3000 + n);
        const auto spec = ProblemSpec::unit(n, 1, order);
        BoundaryData ones;
        ones.functions.push_back(FieldFunction::constant(n, 1.0));
        std::vector<std::vector<double>> pts;
        for (int t = 0; t < 10; ++t) pts.push_back(point_in_shell(n, 1.2, 3.0, gen));
        const auto ext = solve_exterior(spec, ones, pts, solve_options());
        double err = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          double r2 = 0.0;
          for (double x : pts[i]) r2 += x * x;
          err = std::max(err, std::abs(ext[i] - std::pow(r2, (2.0 - n) / 2.0)));
        }
        add("exterior-duality", "constant data " + tag(n, 1, order), err, 1e-8);
      }
    }
  }

  void pizzetti() {
    for (std::size_t n : dims()) {
      const int order = quad(n, 64);
      const auto rule = unit_sphere_rule(n, order);
      for (int p : orders(3)) {
        std::mt19937_64 gen(4000 + 10 * n + p);
        std::uniform_real_distribution<double> coef(-1.0, 1.0);
        MultiPoly P(n);
        for (const auto& e : monomials_up_to(n, 6)) P += MultiPoly::monomial(e, Complex{coef(gen), coef(gen)});
        const auto a = point_in_ball(n, 1.0, gen);
        const double r = 0.5;
        add("pizzetti", "series " + tag(n, p, order),
            std::abs(rotated_mean(FieldFunction::from_poly(P), a, r, p, rule) -
                     pizzetti_mean_series(P, p, a, r)),
            1e-10);
        const MultiPoly u = almansi_compose(random_harmonic_stack(n, p, 4, gen));
        const FieldFunction F = FieldFunction::from_poly(u);
        add("pizzetti", "mean value " + tag(n, p, order),
            std::abs(rotated_mean(F, a, 0.8, p, rule) - F(ComplexVec::from_real(a))), 1e-8);
      }
    }
  }

 private:
  const RunConfig& c_;
  const RunOptions& o_;
};

}  // namespace

RunReport run_verify(const RunConfig& c, const RunOptions& options, std::ostream& log) {
  static const std::vector<std::string> suites = {"identities", "manufactured", "exterior-duality",
                                                  "pizzetti"};
  if (c.suite != "all" && std::find(suites.begin(), suites.end(), c.suite) == suites.end()) {
    throw ConfigError("suite", "unknown suite \"" + c.suite +
                                   "\" (expected identities, manufactured, exterior-duality, pizzetti or all)");
  }
  validate(c);
  const auto start = std::chrono::steady_clock::now();
  Verifier v(c, options);
  const auto want = [&](const char* s) { return c.suite == "all" || c.suite == s; };
  if (want("identities")) v.identities();
  if (want("manufactured")) v.manufactured();
  if (want("exterior-duality")) v.exterior_duality();
  if (want("pizzetti")) v.pizzetti();

  RunReport report;
  RunConfig echo = c;
  echo.kind = Kind::Verify;
  report.metadata["config"] = config_echo(echo, c.quadrature_order);
  report.csv_header = {"suite", "check", "residual", "tolerance", "status"};
  std::size_t failures = 0;
  for (const auto& ch : v.checks) {
    const bool pass = ch.residual <= ch.tolerance;
    if (!pass) ++failures;
    ojson rec = ojson::object();
    rec["suite"] = ch.suite;
    rec["check"] = ch.name;
    rec["residual"] = ch.residual;
    rec["tolerance"] = ch.tolerance;
    rec["passed"] = pass;
    report.results.push_back(std::move(rec));
    report.csv_rows.push_back({ch.suite, ch.name, num(ch.residual), num(ch.tolerance), pass ? "pass" : "FAIL"});
    char line[256];
    std::snprintf(line, sizeof line, "%-4s %-16s %-40s residual=%.3e tol=%.0e\n", pass ? "ok" : "FAIL",
                  ch.suite.c_str(), ch.name.c_str(), ch.residual, ch.tolerance);
    log << line;
  }
  report.metadata["checks"] = v.checks.size();
  report.metadata["failures"] = failures;
  report.verification_failed = failures > 0;
  if (options.timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    report.metadata["wall_time_s"] = dt.count();
  }
  return report;
}

std::string rule_dump(std::size_t n, int order) {
  std::ostringstream out;
  write_rule_csv(unit_sphere_rule(n, order), out);
  return out.str();
}

}  // namespace polyharm::app
