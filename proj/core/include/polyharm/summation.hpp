#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace polyharm {

/// Pairwise (cascade) summation. The association order depends only on the
/// length of the input, so results are reproducible.
template <typename T>
T pairwise_sum(std::span<const T> v) {
  constexpr std::size_t kBlock = 16;
  if (v.size() <= kBlock) {
    T s{};
    for (const auto& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace polyharm
