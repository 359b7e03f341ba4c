#pragma once

// Test-only oracles. Nothing here calls into the code paths it is used to
// check: finite differences for Laplacians, dense LU for matrix inverses,
// closed-form integrals for quadrature.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using RealFn = std::function<Complex(const std::vector<double>&)>;

/// Delta^p f(x) with nested central second differences of step h.
inline Complex fd_iterated_laplacian(const RealFn& f, const std::vector<double>& x, double h,
                                     int p) {
  if (p == 0) return f(x);
  Complex sum{0.0, 0.0};
  const Complex center = fd_iterated_laplacian(f, x, h, p - 1);
  for (std::size_t j = 0; j < x.size(); ++j) {
    auto xp = x;
    auto xm = x;
    xp[j] += h;
    xm[j] -= h;
    sum += fd_iterated_laplacian(f, xp, h, p - 1) - 2.0 * center +
           fd_iterated_laplacian(f, xm, h, p - 1);
  }
  return sum / (h * h);
}

/// Two levels of Richardson extrapolation over h, h/2, h/4 (removes the
/// O(h^2) and O(h^4) terms).
inline Complex fd_iterated_laplacian_richardson(const RealFn& f, const std::vector<double>& x,
                                                double h, int p) {
  const Complex d0 = fd_iterated_laplacian(f, x, h, p);
  const Complex d1 = fd_iterated_laplacian(f, x, h / 2.0, p);
  const Complex d2 = fd_iterated_laplacian(f, x, h / 4.0, p);
  const Complex r0 = (4.0 * d1 - d0) / 3.0;
  const Complex r1 = (4.0 * d2 - d1) / 3.0;
  return (16.0 * r1 - r0) / 15.0;
}

/// Dense inverse by partial-pivot LU.
inline Eigen::MatrixXcd lu_inverse(const Eigen::MatrixXcd& A) { return A.partialPivLu().inverse(); }

inline std::vector<double> random_point_in_ball(std::size_t n, double max_radius,
                                                std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;
  std::vector<double> v(n);
  double s = 0.0;
  for (auto& c : v) {
    c = normal(gen);
    s += c * c;
  }
  const double r = max_radius * std::pow(unit(gen), 1.0 / static_cast<double>(n));
  for (auto& c : v) c *= r / std::sqrt(s);
  return v;
}

inline std::vector<double> random_point_in_shell(std::size_t n, double r_min, double r_max,
                                                 std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> radius(r_min, r_max);
  std::vector<double> v(n);
  double s = 0.0;
  for (auto& c : v) {
    c = normal(gen);
    s += c * c;
  }
  const double r = radius(gen);
  for (auto& c : v) c *= r / std::sqrt(s);
  return v;
}

}  // namespace oracle
