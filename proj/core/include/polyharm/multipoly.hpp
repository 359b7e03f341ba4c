#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "polyharm/complex_geometry.hpp"

namespace polyharm {

/// Exponent multi-index (one entry per variable).
using Exponent = std::vector<int>;

/// Sparse multivariate polynomial in x_1..x_n with complex coefficients.
/// Exact zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Complex>;

  explicit MultiPoly(std::size_t dim);
  MultiPoly(std::size_t dim, Terms terms);

  static MultiPoly constant(std::size_t dim, Complex c);
  /// The coordinate function x_j, 0-based index.
  static MultiPoly variable(std::size_t dim, std::size_t j);
  /// c * x^e.
  static MultiPoly monomial(Exponent e, Complex c = 1.0);
  /// |x|^2 = sum_j x_j^2.
  static MultiPoly abs2(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Coefficient of x^e (0 when absent).
  Complex coefficient(const Exponent& e) const;
  /// Largest coefficient modulus (0 for the zero polynomial).
  double max_abs_coefficient() const;

  /// Drop coefficients with modulus <= tol.
  MultiPoly chopped(double tol) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(Complex s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, Complex s) { return a *= s; }
  friend MultiPoly operator*(Complex s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(MultiPoly a) { return a *= -1.0; }

  /// Exact structural equality (same terms, same coefficients).
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  MultiPoly pow(unsigned e) const;

 private:
  void insert(const Exponent& e, Complex c);

  std::size_t dim_;
  Terms terms_;
};

/// max_e |a_e - b_e| over the union of supports.
double max_coefficient_difference(const MultiPoly& a, const MultiPoly& b);

/// Evaluates P at a complex point; this is the holomorphic extension of P.
Complex poly_eval(const MultiPoly& P, const ComplexVec& z);

/// Exact symbolic Laplacian sum_j d^2/dx_j^2.
MultiPoly laplacian(const MultiPoly& P);

/// Delta^k P.
MultiPoly iterated_laplacian(const MultiPoly& P, int k);

/// True iff Delta^p P vanishes. With tol > 0 coefficients of modulus
/// <= tol * max(1, max|coef(P)|, max|coef(Delta^p |P|)|) count as zero,
/// where |P| has the coefficient moduli of P.
bool is_polyharmonic(const MultiPoly& P, int p, double tol = 0.0);

/// All exponents of total degree <= max_degree in dim variables, graded order.
std::vector<Exponent> monomials_up_to(std::size_t dim, int max_degree);

}  // namespace polyharm
