#include "polyharm/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "polyharm/error.hpp"
#include "polyharm/summation.hpp"

namespace polyharm {

namespace {

// Runs body(i) for i in [0, count), split into contiguous chunks.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Complex int_power(Complex base, int e) {
  Complex r{1.0, 0.0};
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// e^{k pi i / p}
Complex rotation(int k, int p) { return std::polar(1.0, kPi * k / p); }

void require_order_matches(const ProblemSpec& spec, const BoundaryData& data) {
  if (data.functions.size() != static_cast<std::size_t>(spec.order)) {
    throw DimensionError("boundary data has " + std::to_string(data.functions.size()) +
                         " functions, expected p = " + std::to_string(spec.order));
  }
  for (const auto& f : data.functions) {
    if (f.dim() != spec.dim) throw DimensionError("boundary data dimension mismatch");
  }
}

void require_rule_matches(const ProblemSpec& spec, const QuadratureRule& rule) {
  if (rule.dim() != spec.dim) throw DimensionError("quadrature rule dimension mismatch");
}

// table[k * N + i] = data_k(zeta_i)
std::vector<Complex> tabulate(const BoundaryData& data, const QuadratureRule& rule,
                              unsigned threads) {
  const std::size_t N = rule.size();
  std::vector<Complex> table(data.functions.size() * N);
  parallel_for(N, threads, [&](std::size_t i) {
    const ComplexVec zeta = ComplexVec::from_real(rule.node(i));
    for (std::size_t k = 0; k < data.functions.size(); ++k) table[k * N + i] = data.functions[k](zeta);
  });
  return table;
}

// Shared evaluation core for the ball B(a, r); the unit ball is a = 0, r = 1.
// y is the complex offset from the center, y2 its bilinear square.
Complex ball_value(const ProblemSpec& spec, const QuadratureRule& rule,
                   std::span<const Complex> table, std::span<const Complex> y, Complex y2,
                   std::vector<Complex>& terms) {
  const int p = spec.order;
  const std::size_t n = spec.dim;
  const std::size_t N = rule.size();
  const double r = spec.radius;
  const int nn = static_cast<int>(n);
  const double r2p = std::pow(r, 2.0 * p);
  const double scale = std::pow(r, 2.0 * p - nn);
  const Complex numerator = r2p - int_power(y2, p);
  std::vector<Complex> yk(n);
  terms.resize(static_cast<std::size_t>(p) * N);
  for (int k = 0; k < p; ++k) {
    const Complex back = std::conj(rotation(k, p));
    for (std::size_t j = 0; j < n; ++j) yk[j] = back * y[j];
    for (std::size_t i = 0; i < N; ++i) {
      const auto zeta = rule.node(i);
      Complex w{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) {
        const Complex d = yk[j] - r * zeta[j];
        w += d * d;
      }
      const Complex denom = scale * half_power(w, nn);
      terms[k * N + i] = rule.weight(i) * (numerator / denom) * table[k * N + i];
    }
  }
  return pairwise_sum(std::span<const Complex>(terms)) / (p * surface_area(n));
}

}  // namespace

ProblemSpec ProblemSpec::unit(std::size_t dim, int order, int quadrature_order) {
  ProblemSpec s;
  s.dim = dim;
  s.order = order;
  s.quadrature_order = quadrature_order;
  return s;
}

void ProblemSpec::validate() const {
  if (dim < 2) throw DomainError("ProblemSpec: dimension n must be >= 2");
  if (order < 1) throw DomainError("ProblemSpec: order p must be >= 1");
  if (!(radius > 0.0)) throw DomainError("ProblemSpec: radius must be positive");
  if (quadrature_order < 1) throw DomainError("ProblemSpec: quadrature_order must be >= 1");
  if (!center.empty() && center.size() != dim) {
    throw DimensionError("ProblemSpec: center has wrong dimension");
  }
}

std::vector<double> ProblemSpec::center_or_origin() const {
  return center.empty() ? std::vector<double>(dim, 0.0) : center;
}

bool ProblemSpec::is_unit_ball() const {
  return radius == 1.0 && std::all_of(center.begin(), center.end(),
                                      [](double v) { return v == 0.0; });
}

AlmansiWeights::AlmansiWeights(int p) : p_(p) {
  if (p < 1) throw DomainError("AlmansiWeights: order must be >= 1");
  roots_.reserve(static_cast<std::size_t>(p));
  for (int m = 0; m < p; ++m) roots_.push_back(std::polar(1.0, 2.0 * kPi * m / p));
}

Complex AlmansiWeights::forward(int k, int l) const {
  if (k < 0 || l < 0 || k >= p_ || l >= p_) throw DomainError("AlmansiWeights: index");
  return roots_[static_cast<std::size_t>((k * l) % p_)];
}

Complex AlmansiWeights::inverse(int k, int l) const {
  return std::conj(forward(k, l)) / static_cast<double>(p_);
}

Complex AlmansiWeights::determinant() const {
  Complex d{1.0, 0.0};
  for (int k = 0; k < p_; ++k) {
    for (int l = k + 1; l < p_; ++l) d *= roots_[l] - roots_[k];
  }
  return d;
}

Complex coefficient_a(int k, int p, Complex t) {
  if (p < 1) throw DomainError("coefficient_a: order must be >= 1");
  if (k < 0 || k >= p) throw DomainError("coefficient_a: index out of range");
  Complex sum{0.0, 0.0};
  Complex tj{1.0, 0.0};
  for (int j = 0; j < p; ++j) {
    sum += std::polar(1.0, 2.0 * kPi * ((static_cast<long>(j) * k) % p) / p) * tj;
    tj *= t;
  }
  return sum;
}

HarmonicStack vandermonde_convert(const HarmonicStack& stack, Conversion direction) {
  const int p = static_cast<int>(stack.components.size());
  if (p < 1) throw DimensionError("vandermonde_convert: empty stack");
  const std::size_t n = stack.components.front().dim();
  for (const auto& c : stack.components) {
    if (c.dim() != n) throw DimensionError("vandermonde_convert: dimension mismatch");
  }
  const AlmansiWeights A(p);
  std::vector<Complex> M(static_cast<std::size_t>(p * p));
  for (int k = 0; k < p; ++k) {
    for (int l = 0; l < p; ++l) {
      M[k * p + l] = direction == Conversion::HToG ? A.inverse(k, l) : A.forward(k, l);
    }
  }
  auto source = std::make_shared<const std::vector<FieldFunction>>(stack.components);
  auto matrix = std::make_shared<const std::vector<Complex>>(std::move(M));
  HarmonicStack out;
  for (int k = 0; k < p; ++k) {
    out.components.emplace_back(n, [source, matrix, k, p](const ComplexVec& z) {
      Complex s{0.0, 0.0};
      for (int l = 0; l < p; ++l) s += (*matrix)[k * p + l] * (*source)[l](z);
      return s;
    });
  }
  return out;
}

Complex rotated_poisson_kernel(const RotatedPoint& x, std::span<const double> zeta, int k,
                               const ProblemSpec& spec) {
  spec.validate();
  if (x.dim() != spec.dim || zeta.size() != spec.dim) {
    throw DimensionError("rotated_poisson_kernel: dimension mismatch");
  }
  if (k < 0 || k >= spec.order) throw DomainError("rotated_poisson_kernel: index out of range");
  if (!(x.base_norm() < 1.0)) {
    throw DomainError("rotated_poisson_kernel: point must lie strictly inside the unit ball");
  }
  const Complex numerator = 1.0 - int_power(x.square(), spec.order);
  const ComplexVec shifted =
      std::conj(rotation(k, spec.order)) * x.to_complex() - ComplexVec::from_real(zeta);
  return numerator / cnorm_pow(shifted, static_cast<int>(spec.dim));
}

QuadratureRule make_rule(const ProblemSpec& spec) {
  spec.validate();
  return unit_sphere_rule(spec.dim, spec.quadrature_order);
}

std::vector<Complex> solve_ball(const ProblemSpec& spec, const QuadratureRule& rule,
                                const BoundaryData& data, std::span<const RotatedPoint> points,
                                const SolveOptions& options) {
  spec.validate();
  require_rule_matches(spec, rule);
  require_order_matches(spec, data);
  if (options.enforce_guard && !(options.delta > 0.0 && options.delta < 1.0)) {
    throw DomainError("solve: delta must lie in (0, 1)");
  }
  const double limit = options.enforce_guard ? spec.radius * (1.0 - options.delta) : spec.radius;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != spec.dim) throw DimensionError("solve: point dimension mismatch");
    const double norm = points[i].base_norm();
    const bool ok = options.enforce_guard ? norm <= limit : norm < limit;
    if (!ok) {
      throw DomainError("solve: point " + std::to_string(i) + " has offset norm " +
                        std::to_string(norm) + ", limit " + std::to_string(limit) +
                        " (too close to the boundary)");
    }
  }

  const std::vector<Complex> table = tabulate(data, rule, options.threads);
  std::vector<Complex> out(points.size());
  parallel_for(points.size(), options.threads, [&](std::size_t i) {
    thread_local std::vector<Complex> terms;
    const ComplexVec y = points[i].to_complex();
    out[i] = ball_value(spec, rule, table, y.entries(), points[i].square(), terms);
  });
  return out;
}

std::vector<Complex> solve_ball(const ProblemSpec& spec, const BoundaryData& data,
                                std::span<const RotatedPoint> points,
                                const SolveOptions& options) {
  return solve_ball(spec, make_rule(spec), data, points, options);
}

std::vector<Complex> solve_interior(const ProblemSpec& spec, const QuadratureRule& rule,
                                    const BoundaryData& data,
                                    std::span<const RotatedPoint> points,
                                    const SolveOptions& options) {
  if (!spec.is_unit_ball()) {
    throw DomainError("solve_interior: problem must be posed on the unit ball (use solve_ball)");
  }
  return solve_ball(spec, rule, data, points, options);
}

std::vector<Complex> solve_interior(const ProblemSpec& spec, const BoundaryData& data,
                                    std::span<const RotatedPoint> points,
                                    const SolveOptions& options) {
  return solve_interior(spec, make_rule(spec), data, points, options);
}

std::vector<Complex> solve_exterior(const ProblemSpec& spec, const QuadratureRule& rule,
                                    const BoundaryData& data,
                                    std::span<const std::vector<double>> points,
                                    const SolveOptions& options) {
  spec.validate();
  if (!spec.is_unit_ball()) throw DomainError("solve_exterior: problem must use the unit ball");
  require_rule_matches(spec, rule);
  require_order_matches(spec, data);
  const double limit = options.enforce_guard ? 1.0 + options.delta : 1.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != spec.dim) throw DimensionError("solve: point dimension mismatch");
    double s = 0.0;
    for (double v : points[i]) s += v * v;
    const double norm = std::sqrt(s);
    const bool ok = options.enforce_guard ? norm >= limit : norm > limit;
    if (!ok) {
      throw DomainError("solve_exterior: point " + std::to_string(i) + " has norm " +
                        std::to_string(norm) + ", must be at least " + std::to_string(limit));
    }
  }

  const std::vector<Complex> table = tabulate(data, rule, options.threads);
  const int p = spec.order;
  const std::size_t n = spec.dim;
  const std::size_t N = rule.size();
  const double norm_factor = p * surface_area(n);
  std::vector<Complex> out(points.size());
  parallel_for(points.size(), options.threads, [&](std::size_t idx) {
    thread_local std::vector<Complex> terms;
    const auto& x = points[idx];
    double x2 = 0.0;
    for (double v : x) x2 += v * v;
    const double numerator = 1.0 - std::pow(x2, p);
    terms.resize(static_cast<std::size_t>(p) * N);
    for (int k = 0; k < p; ++k) {
      const Complex back = std::conj(rotation(k, p));
      for (std::size_t i = 0; i < N; ++i) {
        const auto zeta = rule.node(i);
        Complex w{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
          const Complex d = back * zeta[j] - x[j];
          w += d * d;
        }
        terms[k * N + i] =
            rule.weight(i) * (numerator / half_power(w, static_cast<int>(n))) * table[k * N + i];
      }
    }
    out[idx] = -pairwise_sum(std::span<const Complex>(terms)) / norm_factor;
  });
  return out;
}

std::vector<Complex> solve_exterior(const ProblemSpec& spec, const BoundaryData& data,
                                    std::span<const std::vector<double>> points,
                                    const SolveOptions& options) {
  return solve_exterior(spec, make_rule(spec), data, points, options);
}

Complex rotated_mean(const FieldFunction& F, std::span<const double> x, double r, int p,
                     const QuadratureRule& rule) {
  if (p < 1) throw DomainError("rotated_mean: order must be >= 1");
  if (!(r > 0.0)) throw DomainError("rotated_mean: radius must be positive");
  const std::size_t n = rule.dim();
  if (F.dim() != n || x.size() != n) throw DimensionError("rotated_mean: dimension mismatch");
  const std::size_t N = rule.size();
  std::vector<Complex> terms(static_cast<std::size_t>(p) * N);
  std::vector<Complex> arg(n);
  for (int k = 0; k < p; ++k) {
    const Complex e = rotation(k, p) * r;
    for (std::size_t i = 0; i < N; ++i) {
      const auto zeta = rule.node(i);
      for (std::size_t j = 0; j < n; ++j) arg[j] = x[j] + e * zeta[j];
      terms[k * N + i] = rule.weight(i) * F(ComplexVec(arg));
    }
  }
  return pairwise_sum(std::span<const Complex>(terms)) / (p * surface_area(n));
}

std::vector<std::vector<double>> sample_directions(std::size_t n, int count) {
  if (n < 2) throw DomainError("sample_directions: dimension must be >= 2");
  if (count < 1) throw DomainError("sample_directions: count must be >= 1");
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(count));
  if (n == 2) {
    for (int s = 0; s < count; ++s) {
      const double t = 2.0 * kPi * (s + 0.5) / count;
      out.push_back({std::cos(t), std::sin(t)});
    }
    return out;
  }
  // Box-Muller on mt19937_64 output; both are fully specified, unlike
  // std::normal_distribution.
  std::mt19937_64 gen(0x5eed5eedULL);
  auto uniform = [&gen] { return ((gen() >> 11) + 0.5) * 0x1.0p-53; };
  while (out.size() < static_cast<std::size_t>(count)) {
    std::vector<double> v(n);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      v[j] = std::sqrt(-2.0 * std::log(uniform())) * std::cos(2.0 * kPi * uniform());
      s += v[j] * v[j];
    }
    if (s < 1e-20) continue;
    const double inv = 1.0 / std::sqrt(s);
    for (auto& c : v) c *= inv;
    out.push_back(std::move(v));
  }
  return out;
}

ResidualReport boundary_residual(const ProblemSpec& spec, const QuadratureRule& rule,
                                 const BoundaryData& data, double rho, int samples,
                                 unsigned threads) {
  spec.validate();
  require_order_matches(spec, data);
  if (!(rho >= 0.0 && rho < 1.0)) throw DomainError("boundary_residual: rho must lie in [0, 1)");
  const auto dirs = sample_directions(spec.dim, samples);
  SolveOptions options;
  options.enforce_guard = false;
  options.threads = threads;
  ResidualReport report;
  for (int k = 0; k < spec.order; ++k) {
    const double angle = kPi * k / spec.order;
    std::vector<RotatedPoint> pts;
    pts.reserve(dirs.size());
    for (const auto& d : dirs) {
      std::vector<double> base(d.size());
      for (std::size_t j = 0; j < d.size(); ++j) base[j] = rho * spec.radius * d[j];
      pts.emplace_back(angle, std::move(base));
    }
    const auto values = solve_ball(spec, rule, data, pts, options);
    double worst = 0.0;
    for (std::size_t s = 0; s < dirs.size(); ++s) {
      const Complex target = data.functions[k](ComplexVec::from_real(dirs[s]));
      worst = std::max(worst, std::abs(values[s] - target));
    }
    report.per_k.push_back(worst);
    report.max = std::max(report.max, worst);
  }
  return report;
}

ResidualReport boundary_residual(const ProblemSpec& spec, const BoundaryData& data, double rho,
                                 int samples, unsigned threads) {
  return boundary_residual(spec, make_rule(spec), data, rho, samples, threads);
}

}  // namespace polyharm
