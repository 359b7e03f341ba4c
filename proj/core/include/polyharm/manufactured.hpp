#pragma once

// Manufactured polyharmonic solutions: random harmonic polynomials, Almansi
// stacks, and their traces on the rotated spheres as BoundaryData.

#include <cstdint>
#include <random>
#include <vector>

#include "polyharm/dirichlet.hpp"
#include "polyharm/multipoly.hpp"

namespace polyharm {

/// Random complex harmonic polynomial of degree <= max_degree, built from
/// powers (a.x)^m of isotropic vectors a (a.a = 0) plus an affine part.
MultiPoly random_harmonic(std::size_t n, int max_degree, std::mt19937_64& gen);

/// p random harmonic polynomials, each of degree <= max_degree.
std::vector<MultiPoly> random_harmonic_stack(std::size_t n, int p, int max_degree,
                                             std::mt19937_64& gen);

/// Traces of u on the rotated spheres of spec: entry k is
/// zeta -> u(a + r e^{k pi i / p} zeta).
BoundaryData rotated_traces(const FieldFunction& u, const ProblemSpec& spec);

}  // namespace polyharm
