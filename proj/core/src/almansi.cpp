#include "polyharm/almansi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyharm/error.hpp"

namespace polyharm {

MultiPoly almansi_compose(const std::vector<MultiPoly>& h, double harmonic_tol) {
  if (h.empty()) throw DimensionError("almansi_compose: empty component list");
  const std::size_t n = h.front().dim();
  MultiPoly u(n);
  const MultiPoly r2 = MultiPoly::abs2(n);
  MultiPoly weight = MultiPoly::constant(n, 1.0);
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k].dim() != n) throw DimensionError("almansi_compose: dimension mismatch");
    if (!is_polyharmonic(h[k], 1, harmonic_tol)) {
      throw PreconditionError("almansi_compose: component h_" + std::to_string(k) +
                              " is not harmonic");
    }
    u += weight * h[k];
    weight = weight * r2;
  }
  return u;
}

std::vector<MultiPoly> almansi_decompose(const MultiPoly& P, int p) {
  if (p < 1) throw DomainError("almansi_decompose: order must be >= 1");
  constexpr double kPolyTol = 1e-10;
  if (!is_polyharmonic(P, p, kPolyTol)) {
    throw PreconditionError("almansi_decompose: input is not polyharmonic of order " +
                            std::to_string(p));
  }
  const std::size_t n = P.dim();
  const double nd = static_cast<double>(n);
  const double chop = 1e-14 * std::max(1.0, P.max_abs_coefficient());

  // For h harmonic and homogeneous of degree m,
  //   Delta^k (|x|^{2k} h) = prod_{i=1}^{k} 2i (n + 2m + 2i - 2) h,
  // while Delta^k (|x|^{2j} h) = 0 for j < k. Peel off h_{p-1}, ..., h_0.
  std::vector<MultiPoly> h(static_cast<std::size_t>(p), MultiPoly(n));
  MultiPoly rest = P;
  for (int k = p - 1; k >= 0; --k) {
    MultiPoly::Terms terms;
    const MultiPoly lap = iterated_laplacian(rest, k);
    for (const auto& [e, c] : lap.terms()) {
      int m = 0;
      for (int v : e) m += v;
      double factor = 1.0;
      for (int i = 1; i <= k; ++i) factor *= 2.0 * i * (nd + 2.0 * m + 2.0 * i - 2.0);
      const Complex value = c / factor;
      if (std::abs(value) > chop) terms.emplace(e, value);
    }
    h[k] = MultiPoly(n, std::move(terms));
    if (k > 0) rest -= MultiPoly::abs2(n).pow(static_cast<unsigned>(k)) * h[k];
  }
  return h;
}

}  // namespace polyharm
