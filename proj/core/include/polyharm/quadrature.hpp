#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "polyharm/field.hpp"

namespace polyharm {

/// Area of the unit sphere in R^n, 2 pi^{n/2} / Gamma(n/2). Requires n >= 2.
double surface_area(std::size_t n);

struct SphereArea {
  std::size_t dim;
  double value;
};
SphereArea sphere_area(std::size_t n);


/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int count);

/// Immutable node/weight rule on the unit sphere of R^n.
class QuadratureRule {
 public:
  QuadratureRule(std::size_t dim, std::vector<double> flat_nodes, std::vector<double> weights);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return weights_.size(); }
  std::span<const double> node(std::size_t i) const {
    return std::span<const double>(nodes_).subspan(i * dim_, dim_);
  }
  double weight(std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }
  /// Sum of weights; equals surface_area(dim) for rules built here.
  double total_weight() const;

 private:
  std::size_t dim_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Product rule on S^{n-1}:
///   n = 2: `order` equispaced nodes, weights 2 pi / order;
///   n = 3: Gauss-Legendre in cos(polar) x trapezoid in azimuth,
///          order x (2 order) nodes;
///   n >= 4: Gauss-Legendre in each latitude angle (weight sin^{n-2}),
///          recursing down to the (2 order)-point circle.
/// Weights are rescaled so that they sum to surface_area(n).
QuadratureRule unit_sphere_rule(std::size_t n, int order);

/// sum_i w_i F(zeta_i), pairwise summed.
Complex integrate_sphere(const QuadratureRule& rule, const FieldFunction& F);

/// CSV dump: header zeta1..zetan,weight then one row per node.
void write_rule_csv(const QuadratureRule& rule, std::ostream& out);

}  // namespace polyharm
