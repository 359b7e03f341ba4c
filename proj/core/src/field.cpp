#include "polyharm/field.hpp"

#include <cmath>
#include <memory>

#include "polyharm/error.hpp"

namespace polyharm {

FieldFunction::FieldFunction(std::size_t dim, Evaluator f) : dim_(dim), f_(std::move(f)) {
  if (dim_ == 0) throw DimensionError("FieldFunction: dimension must be >= 1");
  if (!f_) throw Error("FieldFunction: empty evaluator");
}

FieldFunction FieldFunction::from_poly(MultiPoly P) {
  const std::size_t n = P.dim();
  auto shared = std::make_shared<const MultiPoly>(std::move(P));
  return FieldFunction(n, [shared](const ComplexVec& z) { return poly_eval(*shared, z); });
}

FieldFunction FieldFunction::constant(std::size_t dim, Complex c) {
  return FieldFunction(dim, [c](const ComplexVec&) { return c; });
}

Complex FieldFunction::operator()(const ComplexVec& z) const {
  if (z.dim() != dim_) throw DimensionError("FieldFunction: dimension mismatch");
  return f_(z);
}

FieldFunction kelvin_transform(FieldFunction F, int p) {
  if (p < 1) throw DomainError("kelvin_transform: order must be >= 1");
  const std::size_t n = F.dim();
  const int exponent = 2 * p - static_cast<int>(n);
  return FieldFunction(n, [F = std::move(F), exponent](const ComplexVec& x) {
    const Complex w = x.square();
    if (w == Complex{0.0, 0.0}) {
      throw DomainError("kelvin_transform: evaluation at a point with |x| = 0");
    }
    return half_power(w, exponent) * F(x / w);
  });
}

double pochhammer(double a, int k) {
  if (k < 0) throw DomainError("pochhammer: negative count");
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= a + i;
  return r;
}

PizzettiTerm pizzetti_term(int j, int p, std::size_t n) {
  if (j < 0 || p < 1) throw DomainError("pizzetti_term: invalid index or order");
  const int pj = p * j;
  double factorial = 1.0;
  for (int i = 2; i <= pj; ++i) factorial *= i;
  const double denom =
      std::pow(4.0, pj) * pochhammer(static_cast<double>(n) / 2.0, pj) * factorial;
  return {j, 1.0 / denom};
}

Complex pizzetti_mean_series(const MultiPoly& P, int p, std::span<const double> x, double r) {
  if (p < 1) throw DomainError("pizzetti_mean_series: order must be >= 1");
  if (x.size() != P.dim()) throw DimensionError("pizzetti_mean_series: dimension mismatch");
  if (!(r > 0.0)) throw DomainError("pizzetti_mean_series: radius must be positive");
  const ComplexVec at = ComplexVec::from_real(x);
  Complex sum{0.0, 0.0};
  MultiPoly term = P;
  for (int j = 0; !term.is_zero(); ++j) {
    const double c = pizzetti_term(j, p, P.dim()).coefficient;
    sum += c * std::pow(r, 2.0 * p * j) * poly_eval(term, at);
    term = iterated_laplacian(term, p);
  }
  return sum;
}

}  // namespace polyharm
