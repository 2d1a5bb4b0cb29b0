#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "csst/suffix_min_array.hpp"
#include "csst/types.hpp"

namespace csst {

/// Operation counters for one k x k collection of suffix-minima arrays.
struct ArrayOpCounters {
  std::uint64_t updates = 0;
  std::uint64_t queries = 0;
  /// Array operations issued since the last begin_op().
  std::uint64_t in_op = 0;
};

/// The k(k-1) suffix-minima arrays A[from][to] of a chain geometry. Array
/// A[from][to] is indexed by positions of chain `from` and stores positions
/// of chain `to`.
class ArrayGrid {
 public:
  ArrayGrid(const ChainGeometry& geom, std::size_t block_threshold);

  std::size_t k() const noexcept { return k_; }

  const SuffixMinArray& at(Chain from, Chain to) const { return arrays_[from * k_ + to]; }

  Index min_suffix(Chain from, Chain to, Index i) {
    ++counters_.queries;
    ++counters_.in_op;
    return arrays_[from * k_ + to].min_suffix(i);
  }

  /// argleq with kInfinity standing for "none".
  Index argleq(Chain from, Chain to, Index value) {
    ++counters_.queries;
    ++counters_.in_op;
    const auto found = arrays_[from * k_ + to].argleq(value);
    return found ? *found : kInfinity;
  }

  void update(Chain from, Chain to, Index i, Index value) {
    ++counters_.updates;
    ++counters_.in_op;
    arrays_[from * k_ + to].update(i, value);
  }

  /// Resizes every array indexed by chain t.
  void grow(Chain t, Index new_len);

  void begin_op() noexcept { counters_.in_op = 0; }
  const ArrayOpCounters& counters() const noexcept { return counters_; }

  std::size_t node_count() const noexcept;
  std::size_t max_density() const noexcept;

 private:
  std::size_t k_;
  std::vector<SuffixMinArray> arrays_;
  ArrayOpCounters counters_;
};

}  // namespace csst
