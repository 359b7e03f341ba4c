#pragma once

#include <vector>

#include "polyharm/multipoly.hpp"

namespace polyharm {

/// u = h_0 + |x|^2 h_1 + ... + |x|^{2(p-1)} h_{p-1}.
/// Every h_k must be harmonic (checked with a relative tolerance of
/// harmonic_tol) and share one dimension.
MultiPoly almansi_compose(const std::vector<MultiPoly>& h, double harmonic_tol = 1e-10);

/// The unique harmonic h_0..h_{p-1} with P = sum_k |x|^{2k} h_k.
/// h_{p-1} is read off Delta^{p-1} P degree by degree, then subtracted,
/// and so on down to h_0.
/// Throws PreconditionError when P is not polyharmonic of order p.
std::vector<MultiPoly> almansi_decompose(const MultiPoly& P, int p);

}  // namespace polyharm
