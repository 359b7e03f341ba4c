#include "polyharm/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polyharm/error.hpp"

namespace polyharm {

MultiPoly::MultiPoly(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw DimensionError("MultiPoly: dimension must be >= 1");
}

MultiPoly::MultiPoly(std::size_t dim, Terms terms) : MultiPoly(dim) {
  for (const auto& [e, c] : terms) insert(e, c);
}

void MultiPoly::insert(const Exponent& e, Complex c) {
  if (e.size() != dim_) throw DimensionError("MultiPoly: exponent length differs from dim");
  if (std::any_of(e.begin(), e.end(), [](int v) { return v < 0; })) {
    throw DomainError("MultiPoly: negative exponent");
  }
  if (c == Complex{0.0, 0.0}) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == Complex{0.0, 0.0}) terms_.erase(it);
  }
}

MultiPoly MultiPoly::constant(std::size_t dim, Complex c) {
  MultiPoly p(dim);
  p.insert(Exponent(dim, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t dim, std::size_t j) {
  if (j >= dim) throw DomainError("MultiPoly::variable: index out of range");
  Exponent e(dim, 0);
  e[j] = 1;
  return monomial(std::move(e));
}

MultiPoly MultiPoly::monomial(Exponent e, Complex c) {
  MultiPoly p(e.size());
  p.insert(e, c);
  return p;
}

MultiPoly MultiPoly::abs2(std::size_t dim) {
  MultiPoly p(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Exponent e(dim, 0);
    e[j] = 2;
    p.insert(e, 1.0);
  }
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  }
  return d;
}

Complex MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

double MultiPoly::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

MultiPoly MultiPoly::chopped(double tol) const {
  MultiPoly r(dim_);
  for (const auto& [e, c] : terms_) {
    if (std::abs(c) > tol) r.terms_.emplace(e, c);
  }
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.dim_ != dim_) throw DimensionError("MultiPoly: dimension mismatch");
  for (const auto& [e, c] : other.terms_) insert(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (other.dim_ != dim_) throw DimensionError("MultiPoly: dimension mismatch");
  for (const auto& [e, c] : other.terms_) insert(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(Complex s) {
  if (s == Complex{0.0, 0.0}) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  std::erase_if(terms_, [](const auto& kv) { return kv.second == Complex{0.0, 0.0}; });
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.dim_ != b.dim_) throw DimensionError("MultiPoly: dimension mismatch");
  MultiPoly r(a.dim_);
  Exponent e(a.dim_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      r.insert(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(dim_, 1.0);
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e != 0) base = base * base;
  }
  return result;
}

double max_coefficient_difference(const MultiPoly& a, const MultiPoly& b) {
  return (a - b).max_abs_coefficient();
}

Complex poly_eval(const MultiPoly& P, const ComplexVec& z) {
  if (z.dim() != P.dim()) throw DimensionError("poly_eval: dimension mismatch");
  const int deg = std::max(P.degree(), 0);
  // powers[j][k] = z_j^k
  std::vector<std::vector<Complex>> powers(P.dim(), std::vector<Complex>(deg + 1));
  for (std::size_t j = 0; j < P.dim(); ++j) {
    powers[j][0] = 1.0;
    for (int k = 1; k <= deg; ++k) powers[j][k] = powers[j][k - 1] * z[j];
  }
  Complex sum{0.0, 0.0};
  for (const auto& [e, c] : P.terms()) {
    Complex term = c;
    for (std::size_t j = 0; j < e.size(); ++j) term *= powers[j][e[j]];
    sum += term;
  }
  return sum;
}

MultiPoly laplacian(const MultiPoly& P) {
  MultiPoly::Terms out;
  for (const auto& [e, c] : P.terms()) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] < 2) continue;
      Exponent d = e;
      d[j] -= 2;
      out[d] += c * static_cast<double>(e[j] * (e[j] - 1));
    }
  }
  return MultiPoly(P.dim(), std::move(out));
}

MultiPoly iterated_laplacian(const MultiPoly& P, int k) {
  if (k < 0) throw DomainError("iterated_laplacian: negative count");
  MultiPoly r = P;
  for (int i = 0; i < k && !r.is_zero(); ++i) r = laplacian(r);
  return r;
}

bool is_polyharmonic(const MultiPoly& P, int p, double tol) {
  if (p < 1) throw DomainError("is_polyharmonic: order must be >= 1");
  const MultiPoly r = iterated_laplacian(P, p);
  if (tol <= 0.0) return r.is_zero();
  // Same iteration on |coefficients|: bounds the size of the cancelling terms.
  MultiPoly::Terms magnitudes;
  for (const auto& [e, c] : P.terms()) magnitudes.emplace(e, std::abs(c));
  const MultiPoly bound = iterated_laplacian(MultiPoly(P.dim(), std::move(magnitudes)), p);
  const double scale = std::max({1.0, P.max_abs_coefficient(), bound.max_abs_coefficient()});
  return r.max_abs_coefficient() <= tol * scale;
}

namespace {

void enumerate_degree(std::size_t dim, int remaining, std::size_t pos, Exponent& cur,
                      std::vector<Exponent>& out) {
  if (pos + 1 == dim) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[pos] = k;
    enumerate_degree(dim, remaining - k, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Exponent> monomials_up_to(std::size_t dim, int max_degree) {
  std::vector<Exponent> out;
  if (max_degree < 0) return out;
  Exponent cur(dim, 0);
  for (int d = 0; d <= max_degree; ++d) enumerate_degree(dim, d, 0, cur, out);
  return out;
}

}  // namespace polyharm
