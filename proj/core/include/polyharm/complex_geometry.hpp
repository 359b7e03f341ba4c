#pragma once

// Complex vectors in C^n with the bilinear "norm" |z| = sqrt(sum z_j^2)
// (principal branch), rotated real points e^{i phi} x and Lie-ball geometry.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace polyharm {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// A point of C^n. Entries are always finite and n >= 1.
class ComplexVec {
 public:
  explicit ComplexVec(std::vector<Complex> entries);
  ComplexVec(std::initializer_list<Complex> entries);

  static ComplexVec from_real(std::span<const double> x);
  static ComplexVec zeros(std::size_t n);

  std::size_t dim() const { return entries_.size(); }
  const Complex& operator[](std::size_t j) const { return entries_[j]; }
  std::span<const Complex> entries() const { return entries_; }

  /// True when every imaginary part is exactly zero.
  bool is_real() const;

  /// Bilinear square sum_j z_j^2 (not the Hermitian square).
  Complex square() const;

  friend ComplexVec operator+(const ComplexVec& a, const ComplexVec& b);
  friend ComplexVec operator-(const ComplexVec& a, const ComplexVec& b);
  friend ComplexVec operator*(Complex s, const ComplexVec& a);
  friend ComplexVec operator-(const ComplexVec& a);

 private:
  std::vector<Complex> entries_;
};

ComplexVec operator*(const ComplexVec& a, Complex s);
ComplexVec operator/(const ComplexVec& a, Complex s);

/// Principal square root, branch cut along the nonpositive real axis.
/// For negative reals the result lies on the positive imaginary axis.
Complex csqrt_principal(Complex w);

/// |z| = csqrt_principal(sum z_j^2).
Complex cnorm(const ComplexVec& z);

/// w^{m/2} for w = sum z_j^2 and m >= 1. Even m uses the exact integer
/// power; odd m uses exp((m/2) Log w). Returns 0 when w == 0.
Complex cnorm_pow(const ComplexVec& z, int m);

/// w^{m/2} for any integer m (negative allowed), same branch rules as
/// cnorm_pow. Throws DomainError for w == 0 and m < 0.
Complex half_power(Complex w, int m);

/// |e^{i phi}|_R = principal sqrt of e^{2 i phi}; phi is normalized first.
Complex rotation_factor(double phi);

/// Standard Hermitian norm ||z||.
double hermitian_norm(const ComplexVec& z);

/// Lie norm L(z) = sqrt(||z||^2 + sqrt(||z||^4 - |z.z|^2)).
double lie_norm(const ComplexVec& z);

/// Maps any angle into (-pi, pi].
double normalize_angle(double phi);

/// The point e^{i angle} base with base real. The angle is kept in
/// (-pi, pi]; (phi, x) and (phi + pi, -x) denote the same point.
class RotatedPoint {
 public:
  RotatedPoint(double angle, std::vector<double> base);

  /// A real point (angle 0).
  static RotatedPoint real(std::vector<double> base);

  double angle() const { return angle_; }
  std::span<const double> base() const { return base_; }
  std::size_t dim() const { return base_.size(); }

  /// Euclidean norm of the base vector (equals the Lie norm of the point).
  double base_norm() const;

  /// e^{i angle} * base.
  ComplexVec to_complex() const;

  /// Bilinear square of the point, e^{2 i angle} |base|^2, computed without roots.
  Complex square() const;

  /// Equality of canonical forms, componentwise within 1e-12.
  friend bool operator==(const RotatedPoint& a, const RotatedPoint& b);

 private:
  double angle_;
  std::vector<double> base_;
};

/// Unique representative of the class {(phi, x), (phi + pi, -x)}: angle in
/// (-pi/2, pi/2]. When the angle sits on +-pi/2 the base whose first nonzero
/// entry is nonnegative is chosen. Idempotent.
RotatedPoint canonicalize(const RotatedPoint& pt);

/// Open Lie ball LB(0, r) = { z : L(z) < r }.
class LieBall {
 public:
  explicit LieBall(double radius);
  double radius() const { return radius_; }
  bool contains(const ComplexVec& z) const { return lie_norm(z) < radius_; }

 private:
  double radius_;
};

}  // namespace polyharm
