#include "polyharm/complex_geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "polyharm/error.hpp"

using namespace polyharm;

namespace {

constexpr double kTol = 1e-12;

void expect_near(Complex actual, Complex expected, double tol = kTol) {
  EXPECT_LE(std::abs(actual - expected), tol) << "actual " << actual << " expected " << expected;
}

ComplexVec random_complex_vec(std::size_t n, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Complex> v(n);
  for (auto& c : v) c = {u(gen), u(gen)};
  return ComplexVec(v);
}

std::vector<double> random_real(std::size_t n, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> v(n);
  for (auto& c : v) c = u(gen);
  return v;
}

double euclid(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

TEST(ComplexVec, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(ComplexVec(std::vector<Complex>{}), DimensionError);
  EXPECT_THROW((ComplexVec{Complex{std::nan(""), 0.0}}), DomainError);
  EXPECT_THROW((ComplexVec{Complex{0.0, INFINITY}}), DomainError);
}

TEST(ComplexVec, ArithmeticChecksDimensions) {
  const ComplexVec a{1.0, 2.0};
  const ComplexVec b{1.0, 2.0, 3.0};
  EXPECT_THROW(a + b, DimensionError);
  EXPECT_THROW(a / Complex(0.0, 0.0), DomainError);
}

TEST(CsqrtPrincipal, Examples) {
  expect_near(csqrt_principal(4.0), 2.0);
  expect_near(csqrt_principal(-1.0), Complex{0.0, 1.0});
  // (1 + i)^2 = 2i
  const Complex r{1.0, 1.0};
  expect_near(r * r, Complex{0.0, 2.0});
  expect_near(csqrt_principal(Complex{0.0, 2.0}), r);
}

TEST(CsqrtPrincipal, NegativeRealWithNegativeZeroImagStaysOnUpperSide) {
  expect_near(csqrt_principal(Complex{-4.0, -0.0}), Complex{0.0, 2.0});
}

TEST(CsqrtPrincipal, BranchConsistency) {
  std::mt19937_64 gen(1);
  for (int t = 0; t < 1000; ++t) {
    const ComplexVec z = random_complex_vec(3, gen);
    const Complex w = z.square();
    const Complex r = csqrt_principal(w);
    EXPECT_LE(std::abs(r * r - w), kTol * std::max(1.0, std::abs(w)));
    EXPECT_GE(r.real(), 0.0);
  }
}

TEST(Cnorm, Examples) {
  expect_near(cnorm(ComplexVec{3.0, 4.0}), 5.0);
  expect_near(cnorm(ComplexVec{Complex{0.0, 1.0}, 0.0}), Complex{0.0, 1.0});
  const Complex e = std::polar(1.0, kPi / 3.0);
  expect_near(cnorm(e * ComplexVec{1.0, 2.0, 2.0}), 3.0 * e);
}

TEST(CnormPow, Examples) {
  expect_near(cnorm_pow(ComplexVec{Complex{0.0, 1.0}, 0.0}, 2), -1.0);
  expect_near(cnorm_pow(ComplexVec{0.0, 1.0, 0.0}, 3), 1.0);
  const Complex e = std::polar(1.0, kPi / 2.0);
  expect_near(cnorm_pow(e * ComplexVec{1.0, 0.0}, 3), Complex{0.0, -1.0});
  expect_near(cnorm_pow(ComplexVec{0.0, 0.0}, 3), 0.0);
  EXPECT_THROW(cnorm_pow(ComplexVec{1.0}, 0), DomainError);
}

TEST(CnormPow, EvenPowersMatchDirectPolynomialPower) {
  std::mt19937_64 gen(2);
  for (int t = 0; t < 200; ++t) {
    const ComplexVec z = random_complex_vec(4, gen);
    const Complex w = z.square();
    Complex direct = 1.0;
    for (int m = 2; m <= 8; m += 2) {
      direct *= w;
      EXPECT_LE(std::abs(cnorm_pow(z, m) - direct), kTol * std::abs(direct));
    }
  }
}

TEST(HalfPower, NegativeExponents) {
  expect_near(half_power(4.0, -2), 0.25);
  expect_near(half_power(4.0, -1), 0.5);
  EXPECT_THROW(half_power(0.0, -1), DomainError);
}

TEST(RotationFactor, Examples) {
  expect_near(rotation_factor(0.0), 1.0);
  expect_near(rotation_factor(kPi), 1.0);
  expect_near(rotation_factor(-3.0 * kPi / 4.0), std::polar(1.0, kPi / 4.0));
}

TEST(RotationFactor, EqualsPrincipalRootOfDoubleAngle) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int t = 0; t < 1000; ++t) {
    const double phi = angle(gen);
    if (std::abs(std::abs(phi) - kPi / 2.0) < 1e-6) continue;  // branch seam
    expect_near(rotation_factor(phi), csqrt_principal(std::polar(1.0, 2.0 * phi)));
  }
}

TEST(RotationFactor, RotationIdentity) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int t = 0; t < 1000; ++t) {
    const double phi = angle(gen);
    if (std::abs(std::abs(phi) - kPi / 2.0) < 1e-6) continue;
    const auto x = random_real(3, gen);
    const Complex lhs = cnorm(std::polar(1.0, phi) * ComplexVec::from_real(x));
    expect_near(lhs, rotation_factor(phi) * euclid(x), kTol * std::max(1.0, euclid(x)));
  }
}

TEST(HermitianNorm, Examples) {
  EXPECT_NEAR(hermitian_norm(ComplexVec{1.0, Complex{0.0, 1.0}}), std::sqrt(2.0), kTol);
  EXPECT_NEAR(hermitian_norm(ComplexVec{3.0, 4.0}), 5.0, kTol);
  const std::vector<double> x{1.0, -2.0, 0.5};
  EXPECT_NEAR(hermitian_norm(std::polar(1.0, 0.7) * ComplexVec::from_real(x)), euclid(x), kTol);
  EXPECT_EQ(hermitian_norm(ComplexVec::zeros(3)), 0.0);
}

TEST(LieNorm, Examples) {
  EXPECT_NEAR(lie_norm(ComplexVec{1.0, 2.0, 2.0}), 3.0, kTol);
  // ||z||^2 = 2, z.z = 0, L = sqrt(2 + 2)
  EXPECT_NEAR(lie_norm(ComplexVec{1.0, Complex{0.0, 1.0}}), 2.0, kTol);
}

TEST(LieNorm, RotatedRealPointsHaveLieNormOfBase) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int t = 0; t < 1000; ++t) {
    const auto x = random_real(4, gen);
    const double phi = angle(gen);
    EXPECT_NEAR(lie_norm(std::polar(1.0, phi) * ComplexVec::from_real(x)), euclid(x), kTol * 4);
  }
}

TEST(LieNorm, DominatesHermitianNorm) {
  std::mt19937_64 gen(6);
  for (int t = 0; t < 1000; ++t) {
    const ComplexVec z = random_complex_vec(3, gen);
    EXPECT_GE(lie_norm(z), hermitian_norm(z) * (1.0 - 1e-15));
  }
}

TEST(LieBall, MembershipAndValidation) {
  const LieBall ball(1.0);
  EXPECT_TRUE(ball.contains(std::polar(1.0, 1.0) * ComplexVec{0.5, 0.5}));
  EXPECT_FALSE(ball.contains(ComplexVec{1.0, Complex{0.0, 1.0}}));
  EXPECT_THROW(LieBall(0.0), DomainError);
}

TEST(SymmetryLemma, SquaredFormsAgree) {
  std::mt19937_64 gen(7);
  int checked = 0;
  while (checked < 1000) {
    const ComplexVec x = random_complex_vec(3, gen);
    const ComplexVec y = random_complex_vec(3, gen);
    const Complex nx = cnorm(x);
    const Complex ny = cnorm(y);
    if (std::abs(nx) < 1e-3 || std::abs(ny) < 1e-3) continue;
    const Complex lhs = (x / nx - nx * y).square();
    const Complex rhs = (y / ny - ny * x).square();
    EXPECT_LE(std::abs(lhs - rhs), kTol * std::max(1.0, std::abs(lhs)));
    EXPECT_LE(std::abs(csqrt_principal(lhs) - csqrt_principal(rhs)),
              1e-9 * std::max(1.0, std::abs(lhs)));
    ++checked;
  }
}

TEST(NormalizeAngle, RangeIsHalfOpen) {
  EXPECT_NEAR(normalize_angle(-kPi), kPi, kTol);
  EXPECT_NEAR(normalize_angle(kPi), kPi, kTol);
  EXPECT_NEAR(normalize_angle(3.0 * kPi), kPi, kTol);
  EXPECT_NEAR(normalize_angle(2.5 * kPi), 0.5 * kPi, kTol);
  EXPECT_THROW(normalize_angle(INFINITY), DomainError);
}

TEST(Canonicalize, Examples) {
  const RotatedPoint c = canonicalize(RotatedPoint(kPi, {1.0, 0.0}));
  EXPECT_NEAR(c.angle(), 0.0, kTol);
  EXPECT_EQ(c.base()[0], -1.0);
  EXPECT_EQ(c.base()[1], -0.0);
  const RotatedPoint q(kPi / 4.0, {0.3, -0.2});
  const RotatedPoint cq = canonicalize(q);
  EXPECT_EQ(cq.angle(), q.angle());
  EXPECT_EQ(cq.base()[0], 0.3);
}

TEST(Canonicalize, SeamUsesBaseSign) {
  const RotatedPoint a = canonicalize(RotatedPoint(kPi / 2.0, {-1.0, 2.0}));
  EXPECT_NEAR(a.angle(), -kPi / 2.0, kTol);
  EXPECT_EQ(a.base()[0], 1.0);
  const RotatedPoint b = canonicalize(RotatedPoint(-kPi / 2.0, {1.0, -2.0}));
  EXPECT_NEAR(b.angle(), -kPi / 2.0, kTol);
  EXPECT_TRUE(RotatedPoint(kPi / 2.0, {-1.0, 2.0}) == RotatedPoint(-kPi / 2.0, {1.0, -2.0}));
}

TEST(Canonicalize, IdempotentAndPreservesPoint) {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int t = 0; t < 100; ++t) {
    const RotatedPoint p(angle(gen), random_real(3, gen));
    const RotatedPoint c1 = canonicalize(p);
    const RotatedPoint c2 = canonicalize(c1);
    EXPECT_EQ(c1.angle(), c2.angle());
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(c1.base()[j], c2.base()[j]);
    const ComplexVec z1 = p.to_complex();
    const ComplexVec z2 = c1.to_complex();
    for (std::size_t j = 0; j < 3; ++j) expect_near(z1[j], z2[j], 1e-12);
    EXPECT_TRUE(p == c1);
  }
}

TEST(RotatedPoint, SquareAvoidsRoots) {
  const RotatedPoint p(0.3, {0.5, -0.25});
  expect_near(p.square(), p.to_complex().square());
  EXPECT_FALSE(RotatedPoint(0.3, {0.5, 0.0}) == RotatedPoint(0.3, {0.5, 0.0, 0.0}));
}
