#pragma once

#include <cstddef>
#include <span>

namespace hypercc {

// Pairwise (tree) summation; the result depends only on the order of `terms`.
inline double pairwise_sum(std::span<const double> terms) {
  constexpr std::size_t kBlock = 32;
  if (terms.size() <= kBlock) {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

}  // namespace hypercc
