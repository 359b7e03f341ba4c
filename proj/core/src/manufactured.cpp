#include "polyharm/manufactured.hpp"

#include <cmath>

#include "polyharm/error.hpp"

namespace polyharm {

namespace {

double uniform(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

Complex random_complex(std::mt19937_64& gen) {
  return {uniform(gen, -1.0, 1.0), uniform(gen, -1.0, 1.0)};
}

std::vector<double> random_unit(std::size_t n, std::mt19937_64& gen) {
  std::vector<double> v(n);
  double s = 0.0;
  do {
    s = 0.0;
    for (auto& c : v) {
      c = uniform(gen, -1.0, 1.0);
      s += c * c;
    }
  } while (s < 1e-6 || s > 1.0);
  for (auto& c : v) c /= std::sqrt(s);
  return v;
}

// u + i v with u, v orthonormal, so that a.a = 0.
std::vector<Complex> isotropic(std::size_t n, std::mt19937_64& gen) {
  const auto u = random_unit(n, gen);
  auto v = random_unit(n, gen);
  double d = 0.0;
  for (std::size_t j = 0; j < n; ++j) d += u[j] * v[j];
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    v[j] -= d * u[j];
    s += v[j] * v[j];
  }
  for (auto& c : v) c /= std::sqrt(s);
  std::vector<Complex> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = {u[j], v[j]};
  return a;
}

}  // namespace

MultiPoly random_harmonic(std::size_t n, int max_degree, std::mt19937_64& gen) {
  if (n < 2) throw DomainError("random_harmonic: dimension must be >= 2");
  if (max_degree < 0) throw DomainError("random_harmonic: negative degree");
  MultiPoly h = MultiPoly::constant(n, random_complex(gen));
  for (std::size_t j = 0; j < n && max_degree >= 1; ++j) {
    h += MultiPoly::variable(n, j) * random_complex(gen);
  }
  for (int m = 2; m <= max_degree; ++m) {
    const auto a = isotropic(n, gen);
    MultiPoly linear(n);
    for (std::size_t j = 0; j < n; ++j) linear += MultiPoly::variable(n, j) * a[j];
    h += linear.pow(static_cast<unsigned>(m)) * random_complex(gen);
  }
  return h;
}

std::vector<MultiPoly> random_harmonic_stack(std::size_t n, int p, int max_degree,
                                             std::mt19937_64& gen) {
  if (p < 1) throw DomainError("random_harmonic_stack: order must be >= 1");
  std::vector<MultiPoly> stack;
  for (int k = 0; k < p; ++k) stack.push_back(random_harmonic(n, max_degree, gen));
  return stack;
}

BoundaryData rotated_traces(const FieldFunction& u, const ProblemSpec& spec) {
  spec.validate();
  if (u.dim() != spec.dim) throw DimensionError("rotated_traces: dimension mismatch");
  const auto center = spec.center_or_origin();
  BoundaryData data;
  for (int k = 0; k < spec.order; ++k) {
    const Complex e = std::polar(spec.radius, kPi * k / spec.order);
    data.functions.emplace_back(spec.dim, [u, center, e](const ComplexVec& zeta) {
      std::vector<Complex> x(center.size());
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = center[j] + e * zeta[j];
      return u(ComplexVec(std::move(x)));
    });
  }
  return data;
}

}  // namespace polyharm
