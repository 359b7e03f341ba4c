#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "polyharm/complex_geometry.hpp"
#include "polyharm/multipoly.hpp"

namespace polyharm {

/// A pure complex-valued function on (part of) C^n. Evaluators must be
/// stateless: the solvers may call them from several threads.
class FieldFunction {
 public:
  using Evaluator = std::function<Complex(const ComplexVec&)>;

  FieldFunction(std::size_t dim, Evaluator f);

  static FieldFunction from_poly(MultiPoly P);
  static FieldFunction constant(std::size_t dim, Complex c);

  std::size_t dim() const { return dim_; }
  Complex operator()(const ComplexVec& z) const;

 private:
  std::size_t dim_;
  Evaluator f_;
};

/// Extended Kelvin transform K[F](x) = |x|^{2p-n} F(x / |x|^2), with
/// |x|^{2p-n} taken as the principal power of x.x. The result throws
/// DomainError when evaluated at a point with x.x == 0.
FieldFunction kelvin_transform(FieldFunction F, int p);

/// 1 / (4^{pj} (n/2)_{pj} (pj)!).
struct PizzettiTerm {
  int j;
  double coefficient;
};

/// Rising factorial (a)_k.
double pochhammer(double a, int k);

PizzettiTerm pizzetti_term(int j, int p, std::size_t n);

/// Finite Pizzetti sum sum_j Delta^{pj} P(x) r^{2pj} / (4^{pj} (n/2)_{pj} (pj)!)
/// for a polynomial P; the sum stops once Delta^{pj} P vanishes.
Complex pizzetti_mean_series(const MultiPoly& P, int p, std::span<const double> x, double r);

}  // namespace polyharm
