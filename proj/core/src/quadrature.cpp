#include "polyharm/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "polyharm/error.hpp"
#include "polyharm/summation.hpp"

namespace polyharm {

double surface_area(std::size_t n) {
  if (n < 2) throw DomainError("surface_area: dimension must be >= 2");
  const double h = static_cast<double>(n) / 2.0;
  return 2.0 * std::pow(kPi, h) / std::tgamma(h);
}

SphereArea sphere_area(std::size_t n) { return {n, surface_area(n)}; }

GaussLegendre gauss_legendre(int count) {
  if (count < 1) throw DomainError("gauss_legendre: count must be >= 1");
  GaussLegendre g;
  g.nodes.resize(count);
  g.weights.resize(count);
  if (count == 1) {
    g.nodes[0] = 0.0;
    g.weights[0] = 2.0;
    return g;
  }
  const int m = (count + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton on P_count from a Chebyshev-like initial guess.
    double x = std::cos(kPi * (i + 0.75) / (count + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    g.nodes[i] = -x;
    g.nodes[count - 1 - i] = x;
    g.weights[i] = w;
    g.weights[count - 1 - i] = w;
  }
  return g;
}

QuadratureRule::QuadratureRule(std::size_t dim, std::vector<double> flat_nodes,
                               std::vector<double> weights)
    : dim_(dim), nodes_(std::move(flat_nodes)), weights_(std::move(weights)) {
  if (dim_ < 2) throw DomainError("QuadratureRule: dimension must be >= 2");
  if (nodes_.size() != dim_ * weights_.size()) {
    throw DimensionError("QuadratureRule: node/weight count mismatch");
  }
}

double QuadratureRule::total_weight() const { return pairwise_sum(std::span(weights_)); }

namespace {

struct RawRule {
  std::vector<double> nodes;  // flat
  std::vector<double> weights;
};

RawRule circle_rule(int count) {
  RawRule r;
  r.nodes.reserve(2 * static_cast<std::size_t>(count));
  const double w = 2.0 * kPi / count;
  for (int i = 0; i < count; ++i) {
    const double t = 2.0 * kPi * i / count;
    r.nodes.push_back(std::cos(t));
    r.nodes.push_back(std::sin(t));
    r.weights.push_back(w);
  }
  return r;
}

// zeta = (t, sqrt(1 - t^2) * eta) over a lower-dimensional rule for eta.
RawRule lift(const RawRule& lower, std::size_t lower_dim, std::span<const double> t,
             std::span<const double> s, std::span<const double> tw) {
  RawRule r;
  const std::size_t count = lower.weights.size();
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      r.nodes.push_back(t[a]);
      for (std::size_t j = 0; j < lower_dim; ++j) {
        r.nodes.push_back(s[a] * lower.nodes[b * lower_dim + j]);
      }
      r.weights.push_back(tw[a] * lower.weights[b]);
    }
  }
  return r;
}

}  // namespace

QuadratureRule unit_sphere_rule(std::size_t n, int order) {
  if (n < 2) throw DomainError("unit_sphere_rule: dimension must be >= 2");
  if (order < 1) throw DomainError("unit_sphere_rule: order must be >= 1");

  RawRule rule;
  if (n == 2) {
    rule = circle_rule(order);
  } else {
    const GaussLegendre gl = gauss_legendre(order);
    rule = circle_rule(2 * order);
    // Lift S^1 -> S^2 in the cosine variable (polynomial weight 1).
    {
      std::vector<double> s(order);
      for (int a = 0; a < order; ++a) s[a] = std::sqrt(1.0 - gl.nodes[a] * gl.nodes[a]);
      rule = lift(rule, 2, gl.nodes, s, gl.weights);
    }
    // Higher spheres: Gauss-Legendre in the angle theta on [0, pi] with
    // surface factor sin^{d-2}(theta).
    for (std::size_t d = 4; d <= n; ++d) {
      std::vector<double> t(order), s(order), tw(order);
      for (int a = 0; a < order; ++a) {
        const double theta = 0.5 * kPi * (gl.nodes[a] + 1.0);
        t[a] = std::cos(theta);
        s[a] = std::sin(theta);
        tw[a] = 0.5 * kPi * gl.weights[a] * std::pow(s[a], static_cast<double>(d - 2));
      }
      rule = lift(rule, d - 1, t, s, tw);
    }
  }

  const double total = pairwise_sum(std::span<const double>(rule.weights));
  const double scale = surface_area(n) / total;
  for (auto& w : rule.weights) w *= scale;
  return QuadratureRule(n, std::move(rule.nodes), std::move(rule.weights));
}

Complex integrate_sphere(const QuadratureRule& rule, const FieldFunction& F) {
  if (F.dim() != rule.dim()) throw DimensionError("integrate_sphere: dimension mismatch");
  std::vector<Complex> terms(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    terms[i] = rule.weight(i) * F(ComplexVec::from_real(rule.node(i)));
  }
  return pairwise_sum(std::span<const Complex>(terms));
}

void write_rule_csv(const QuadratureRule& rule, std::ostream& out) {
  for (std::size_t j = 0; j < rule.dim(); ++j) out << "zeta" << (j + 1) << ',';
  out << "weight\n";
  char buf[32];
  for (std::size_t i = 0; i < rule.size(); ++i) {
    for (double v : rule.node(i)) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << buf << ',';
    }
    std::snprintf(buf, sizeof buf, "%.17g", rule.weight(i));
    out << buf << '\n';
  }
}

}  // namespace polyharm
