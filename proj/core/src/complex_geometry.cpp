#include "polyharm/complex_geometry.hpp"

#include <algorithm>
#include <cmath>

#include "polyharm/error.hpp"

namespace polyharm {

namespace {

void require_finite(std::span<const Complex> entries) {
  for (const auto& c : entries) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("ComplexVec: non-finite entry");
    }
  }
}

void require_same_dim(const ComplexVec& a, const ComplexVec& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("ComplexVec: dimension mismatch");
  }
}

// Replace a negative-zero imaginary part so that real negative arguments
// land on the upper side of the branch cut.
Complex upper_side(Complex w) {
  if (w.imag() == 0.0) return {w.real(), 0.0};
  return w;
}

Complex int_power(Complex base, unsigned e) {
  Complex result{1.0, 0.0};
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

}  // namespace

ComplexVec::ComplexVec(std::vector<Complex> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionError("ComplexVec: dimension must be >= 1");
  require_finite(entries_);
}

ComplexVec::ComplexVec(std::initializer_list<Complex> entries)
    : ComplexVec(std::vector<Complex>(entries)) {}

ComplexVec ComplexVec::from_real(std::span<const double> x) {
  std::vector<Complex> e(x.begin(), x.end());
  return ComplexVec(std::move(e));
}

ComplexVec ComplexVec::zeros(std::size_t n) { return ComplexVec(std::vector<Complex>(n)); }

bool ComplexVec::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Complex& c) { return c.imag() == 0.0; });
}

Complex ComplexVec::square() const {
  Complex s{0.0, 0.0};
  for (const auto& c : entries_) s += c * c;
  return s;
}

ComplexVec operator+(const ComplexVec& a, const ComplexVec& b) {
  require_same_dim(a, b);
  std::vector<Complex> r(a.dim());
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = a.entries_[j] + b.entries_[j];
  return ComplexVec(std::move(r));
}

ComplexVec operator-(const ComplexVec& a, const ComplexVec& b) {
  require_same_dim(a, b);
  std::vector<Complex> r(a.dim());
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = a.entries_[j] - b.entries_[j];
  return ComplexVec(std::move(r));
}

ComplexVec operator*(Complex s, const ComplexVec& a) {
  std::vector<Complex> r(a.entries_);
  for (auto& c : r) c *= s;
  return ComplexVec(std::move(r));
}

ComplexVec operator-(const ComplexVec& a) { return Complex{-1.0, 0.0} * a; }

ComplexVec operator*(const ComplexVec& a, Complex s) { return s * a; }

ComplexVec operator/(const ComplexVec& a, Complex s) {
  if (s == Complex{0.0, 0.0}) throw DomainError("ComplexVec: division by zero");
  return (Complex{1.0, 0.0} / s) * a;
}

Complex csqrt_principal(Complex w) {
  if (w.imag() == 0.0) {
    if (w.real() >= 0.0) return {std::sqrt(w.real()), 0.0};
    return {0.0, std::sqrt(-w.real())};
  }
  return std::sqrt(w);
}

Complex cnorm(const ComplexVec& z) { return csqrt_principal(z.square()); }

Complex half_power(Complex w, int m) {
  if (w == Complex{0.0, 0.0}) {
    if (m < 0) throw DomainError("half_power: zero base with negative exponent");
    return m == 0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  }
  if (m % 2 == 0) {
    const Complex p = int_power(w, static_cast<unsigned>(std::abs(m) / 2));
    return m >= 0 ? p : Complex{1.0, 0.0} / p;
  }
  return std::exp(0.5 * static_cast<double>(m) * std::log(upper_side(w)));
}

Complex cnorm_pow(const ComplexVec& z, int m) {
  if (m < 1) throw DomainError("cnorm_pow: exponent must be >= 1");
  return half_power(z.square(), m);
}

double normalize_angle(double phi) {
  if (!std::isfinite(phi)) throw DomainError("normalize_angle: non-finite angle");
  double r = std::remainder(phi, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

Complex rotation_factor(double phi) {
  const double a = normalize_angle(phi);
  const Complex e = std::polar(1.0, a);
  if (a <= -kPi / 2.0 || a > kPi / 2.0) return -e;
  return e;
}

double hermitian_norm(const ComplexVec& z) {
  double s = 0.0;
  for (const auto& c : z.entries()) s += std::norm(c);
  return std::sqrt(s);
}

double lie_norm(const ComplexVec& z) {
  // With z = x + iy, ||z||^4 - |z.z|^2 = 4 sum_{j<k} (x_j y_k - x_k y_j)^2.
  const auto& e = z.entries();
  double h2 = 0.0;
  for (const auto& c : e) h2 += std::norm(c);
  double wedge = 0.0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    for (std::size_t k = j + 1; k < e.size(); ++k) {
      const double m = e[j].real() * e[k].imag() - e[k].real() * e[j].imag();
      wedge += m * m;
    }
  }
  return std::sqrt(h2 + 2.0 * std::sqrt(wedge));
}

RotatedPoint::RotatedPoint(double angle, std::vector<double> base)
    : angle_(normalize_angle(angle)), base_(std::move(base)) {
  if (base_.empty()) throw DimensionError("RotatedPoint: empty base");
  for (double v : base_) {
    if (!std::isfinite(v)) throw DomainError("RotatedPoint: non-finite base entry");
  }
}

RotatedPoint RotatedPoint::real(std::vector<double> base) {
  return RotatedPoint(0.0, std::move(base));
}

double RotatedPoint::base_norm() const {
  double s = 0.0;
  for (double v : base_) s += v * v;
  return std::sqrt(s);
}

ComplexVec RotatedPoint::to_complex() const {
  const Complex e = std::polar(1.0, angle_);
  std::vector<Complex> r(base_.size());
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = e * base_[j];
  return ComplexVec(std::move(r));
}

Complex RotatedPoint::square() const {
  double s = 0.0;
  for (double v : base_) s += v * v;
  return std::polar(s, 2.0 * angle_);
}

namespace {

constexpr double kBoundaryTol = 1e-12;

bool first_nonzero_negative(std::span<const double> x) {
  for (double v : x) {
    if (v != 0.0) return v < 0.0;
  }
  return false;
}

std::vector<double> negated(std::span<const double> x) {
  std::vector<double> r(x.begin(), x.end());
  for (auto& v : r) v = -v;
  return r;
}

}  // namespace

RotatedPoint canonicalize(const RotatedPoint& pt) {
  const double a = pt.angle();
  const double half = kPi / 2.0;
  if (std::abs(a - half) <= kBoundaryTol || std::abs(a + half) <= kBoundaryTol) {
    // On the seam both representatives have |angle| = pi/2.
    if (first_nonzero_negative(pt.base())) {
      return RotatedPoint(a > 0.0 ? a - kPi : a + kPi, negated(pt.base()));
    }
    return pt;
  }
  if (a > half) return RotatedPoint(a - kPi, negated(pt.base()));
  if (a < -half) return RotatedPoint(a + kPi, negated(pt.base()));
  return pt;
}

bool operator==(const RotatedPoint& a, const RotatedPoint& b) {
  if (a.dim() != b.dim()) return false;
  const RotatedPoint ca = canonicalize(a);
  const RotatedPoint cb = canonicalize(b);
  constexpr double tol = 1e-12;
  if (std::abs(ca.angle() - cb.angle()) > tol) return false;
  for (std::size_t j = 0; j < ca.dim(); ++j) {
    if (std::abs(ca.base()[j] - cb.base()[j]) > tol) return false;
  }
  return true;
}

LieBall::LieBall(double radius) : radius_(radius) {
  if (!(radius > 0.0)) throw DomainError("LieBall: radius must be positive");
}

}  // namespace polyharm
