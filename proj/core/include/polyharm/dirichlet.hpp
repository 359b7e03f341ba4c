#pragma once

// Rotated-sphere Dirichlet problem for polyharmonic functions of order p:
// Delta^p u = 0 in the ball, u prescribed on the p rotated spheres
// a + e^{k pi i / p} r dB, k = 0..p-1.

#include <cstddef>
#include <span>
#include <vector>

#include "polyharm/complex_geometry.hpp"
#include "polyharm/field.hpp"
#include "polyharm/quadrature.hpp"

namespace polyharm {

struct ProblemSpec {
  std::size_t dim = 2;
  int order = 1;
  std::vector<double> center;  ///< empty means the origin
  double radius = 1.0;
  int quadrature_order = 64;

  static ProblemSpec unit(std::size_t dim, int order, int quadrature_order);

  /// Throws DomainError/DimensionError when a field is out of range.
  void validate() const;
  /// Center as a dim-vector (zeros when unset).
  std::vector<double> center_or_origin() const;
  bool is_unit_ball() const;
};

/// Entry k maps a real unit vector zeta to f_k(e^{k pi i / p} zeta) (for
/// the general ball: to f(a + r e^{k pi i / p} zeta)).
struct BoundaryData {
  std::vector<FieldFunction> functions;
};

/// p harmonic components, either the Almansi h_k or the g_k of the
/// (1 - |x|^{2p}) / (1 - e^{2 k pi i / p} |x|^2) representation.
struct HarmonicStack {
  std::vector<FieldFunction> components;
};

/// A = [e^{2 k l pi i / p}] and its closed-form inverse (1/p)[e^{-2 k l pi i / p}].
class AlmansiWeights {
 public:
  explicit AlmansiWeights(int p);

  int order() const { return p_; }
  Complex forward(int k, int l) const;
  Complex inverse(int k, int l) const;
  /// Vandermonde product prod_{k<l} (e^{2 l pi i / p} - e^{2 k pi i / p}).
  Complex determinant() const;

 private:
  int p_;
  std::vector<Complex> roots_;  // e^{2 m pi i / p}, m = 0..p-1
};

/// a_k(t) = sum_{j=0}^{p-1} e^{2 j k pi i / p} t^j.
Complex coefficient_a(int k, int p, Complex t);

enum class Conversion { HToG, GToH };

/// g = A^{-1} h or h = A g, as pointwise linear combinations.
HarmonicStack vandermonde_convert(const HarmonicStack& stack, Conversion direction);

struct SolveOptions {
  /// Points must satisfy |x| <= 1 - delta (interior) or |x| >= 1 + delta.
  double delta = 1e-3;
  bool enforce_guard = true;
  unsigned threads = 1;
};

/// (1 - |x|^{2p}) / |e^{-k pi i / p} x - zeta|^n for the unit ball.
/// |x|^{2p} is (e^{2 i phi} |x0|^2)^p; the denominator is the principal
/// power (w)^{n/2}. Throws DomainError when the base norm is >= 1.
Complex rotated_poisson_kernel(const RotatedPoint& x, std::span<const double> zeta, int k,
                               const ProblemSpec& spec);

QuadratureRule make_rule(const ProblemSpec& spec);

/// Discretized Poisson-type integral on the unit ball. Points are
/// e^{i phi} x0 with |x0| <= 1 - delta.
std::vector<Complex> solve_interior(const ProblemSpec& spec, const QuadratureRule& rule,
                                    const BoundaryData& data,
                                    std::span<const RotatedPoint> points,
                                    const SolveOptions& options = {});
std::vector<Complex> solve_interior(const ProblemSpec& spec, const BoundaryData& data,
                                    std::span<const RotatedPoint> points,
                                    const SolveOptions& options = {});

/// Ball B(a, r). Each point is a + e^{i phi} y with (phi, y) the RotatedPoint,
/// i.e. the base is the offset from the center; |y| <= r (1 - delta).
std::vector<Complex> solve_ball(const ProblemSpec& spec, const QuadratureRule& rule,
                                const BoundaryData& data, std::span<const RotatedPoint> points,
                                const SolveOptions& options = {});
std::vector<Complex> solve_ball(const ProblemSpec& spec, const BoundaryData& data,
                                std::span<const RotatedPoint> points,
                                const SolveOptions& options = {});

/// Exterior of the unit ball, real points with |x| >= 1 + delta.
std::vector<Complex> solve_exterior(const ProblemSpec& spec, const QuadratureRule& rule,
                                    const BoundaryData& data,
                                    std::span<const std::vector<double>> points,
                                    const SolveOptions& options = {});
std::vector<Complex> solve_exterior(const ProblemSpec& spec, const BoundaryData& data,
                                    std::span<const std::vector<double>> points,
                                    const SolveOptions& options = {});

/// (1 / (p omega_n)) sum_k sum_i w_i F(x + e^{k pi i / p} r zeta_i).
Complex rotated_mean(const FieldFunction& F, std::span<const double> x, double r, int p,
                     const QuadratureRule& rule);

struct ResidualReport {
  std::vector<double> per_k;  ///< max residual on the k-th rotated sphere
  double max = 0.0;
};

/// max_s |u(a + rho e^{k pi i / p} r zeta_s) - data_k(zeta_s)| per k, with
/// u the discretized solution and `samples` deterministic sample directions.
ResidualReport boundary_residual(const ProblemSpec& spec, const QuadratureRule& rule,
                                 const BoundaryData& data, double rho, int samples,
                                 unsigned threads = 1);
ResidualReport boundary_residual(const ProblemSpec& spec, const BoundaryData& data, double rho,
                                 int samples, unsigned threads = 1);

/// Deterministic, platform-independent sample directions on S^{n-1}.
std::vector<std::vector<double>> sample_directions(std::size_t n, int count);

}  // namespace polyharm
