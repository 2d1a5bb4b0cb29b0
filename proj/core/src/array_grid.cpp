#include "csst/array_grid.hpp"

#include <algorithm>

namespace csst {

namespace {

// Zero-length chains still get a one-slot array; it is never indexed.
std::size_t array_capacity(Index len) { return std::max<std::size_t>(len, 1); }

}  // namespace

ArrayGrid::ArrayGrid(const ChainGeometry& geom, std::size_t block_threshold) : k_(geom.k()) {
  arrays_.reserve(k_ * k_);
  for (Chain from = 0; from < k_; ++from) {
    for (Chain to = 0; to < k_; ++to) {
      arrays_.emplace_back(from == to ? 1 : array_capacity(geom.length(from)), block_threshold);
    }
  }
}

void ArrayGrid::grow(Chain t, Index new_len) {
  for (Chain to = 0; to < k_; ++to) {
    if (to != t) arrays_[t * k_ + to].grow(array_capacity(new_len));
  }
}

std::size_t ArrayGrid::node_count() const noexcept {
  std::size_t total = 0;
  for (const auto& a : arrays_) total += a.node_count();
  return total;
}

std::size_t ArrayGrid::max_density() const noexcept {
  std::size_t d = 0;
  for (const auto& a : arrays_) d = std::max(d, a.density());
  return d;
}

}  // namespace csst
