#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csst/types.hpp"

namespace csst {

/// Counters filled in by the query functions when the caller asks for them.
struct QueryStats {
  std::size_t visited = 0;
  /// Deepest tree level touched; the root is level 0.
  std::size_t max_level = 0;
};

/// A dynamic suffix-minima array A: [capacity) -> Index | kInfinity, stored as
/// a sparse segment tree.
///
/// Every node stores one (min, pos) pair: pos is the largest index holding
/// the minimum of the node's range once the positions stored by its
/// ancestors are excluded, so a suffix query stops at the first node whose
/// pos falls inside the suffix. Nodes exist only for non-infinite entries: an
/// isolated entry lives in a single-index leaf, and a fresh node whose range
/// is the lowest common ancestor (in the full binary layout over
/// [0, capacity)) is created when two entries need to be separated. Ranges at
/// the layout depth where 2^depth >= capacity / block_threshold are kept as
/// flat block nodes instead of subtrees.
///
/// Height never exceeds min(ceil(log2 capacity), density) for
/// block_threshold >= 2.
class SuffixMinArray {
 public:
  static constexpr std::size_t kDefaultBlockThreshold = 32;

  explicit SuffixMinArray(std::size_t capacity,
                          std::size_t block_threshold = kDefaultBlockThreshold);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t block_threshold() const noexcept { return block_threshold_; }

  /// Sets A[i] = value. kInfinity erases the entry.
  void update(Index i, Index value);
  void erase(Index i) { update(i, kInfinity); }

  /// Logical A[i].
  Index at(Index i) const;

  /// min(A[i:]), kInfinity when the suffix is empty.
  Index min_suffix(Index i, QueryStats* stats = nullptr) const;

  /// max{ i : A[i] <= value }, nullopt when there is none. Only finite entries
  /// take part.
  std::optional<Index> argleq(Index value, QueryStats* stats = nullptr) const;

  /// Number of finite entries.
  std::size_t density() const noexcept { return density_; }
  /// Levels on the longest root-to-leaf path; a block node is one level.
  std::size_t height() const;
  /// Live tree nodes, block nodes included.
  std::size_t node_count() const noexcept { return nodes_.size() - free_nodes_.size(); }
  /// Incremented by every update call.
  std::uint64_t version() const noexcept { return version_; }

  /// Extends the logical array; existing entries are kept.
  void grow(std::size_t new_capacity);
  void clear();

  /// Finite entries as (index, value), ascending by index.
  std::vector<std::pair<Index, Index>> entries() const;

  struct NodeView {
    Index start = 0;
    Index end = 0;
    Index min = kInfinity;
    Index pos = 0;
    /// Depth of the node's range in the full binary layout.
    unsigned layout_depth = 0;
    /// Distance from the root in the stored tree.
    unsigned level = 0;
    bool block = false;
    /// Finite block slots as (index, value); empty for tree nodes.
    std::vector<std::pair<Index, Index>> slots;
  };

  /// All nodes in preorder.
  std::vector<NodeView> nodes() const;

  /// Compact preorder rendering, e.g. "[0,7](13,7){[0,3](42,3){[0,0](59,0),[2,2](65,2)},-}".
  /// Block nodes are written "[s,e]B(min,pos)".
  std::string to_string() const;

  /// Verifies minima indexing, range nesting, block placement and the
  /// density counter. Returns an empty string when everything holds.
  std::string check_invariants() const;

 private:
  static constexpr std::int32_t kNil = -1;

  struct Node {
    Index start = 0;
    Index end = 0;
    Index min = kInfinity;
    Index pos = 0;
    std::int32_t left = kNil;
    std::int32_t right = kNil;
    std::int32_t block = kNil;
    std::uint32_t block_count = 0;
    std::uint8_t depth = 0;

    bool is_block() const noexcept { return block != kNil; }
    Index mid() const noexcept { return start + (end - start) / 2; }
    bool covers(Index i) const noexcept { return start <= i && i <= end; }
  };

  // Minima ordering: smaller value first, ties go to the larger index.
  static bool better(Index v1, Index p1, Index v2, Index p2) noexcept {
    return v1 < v2 || (v1 == v2 && p1 > p2);
  }

  void configure_layout();
  bool block_level(unsigned depth, Index start, Index end) const noexcept;

  std::int32_t new_node(Index start, Index end, unsigned depth);
  std::int32_t new_leaf(Index pos, Index value, Index from_start, Index from_end,
                        unsigned from_depth);
  std::int32_t new_block_node(Index start, Index end, unsigned depth);
  void free_node(std::int32_t id);

  Index& slot(const Node& nd, Index i) { return block_values_[block_offset(nd, i)]; }
  Index slot(const Node& nd, Index i) const { return block_values_[block_offset(nd, i)]; }
  std::size_t block_offset(const Node& nd, Index i) const noexcept {
    return static_cast<std::size_t>(nd.block) * block_stride_ + (i - nd.start);
  }
  void block_write(std::int32_t id, Index i, Index value);
  void refresh_block_top(std::int32_t id);

  void insert(Index pos, Index value);
  void insert_lca(std::int32_t parent, bool left_side, Index pos, Index value);
  bool remove(Index pos);
  void pop_top(std::int32_t* ref);

  Index min_rec(std::int32_t id, Index i, std::size_t level, QueryStats* stats) const;
  std::int64_t argleq_rec(std::int32_t id, Index value, std::size_t level,
                          QueryStats* stats) const;
  std::size_t height_rec(std::int32_t id) const;
  void nodes_rec(std::int32_t id, unsigned level, std::vector<NodeView>& out) const;
  void render_rec(std::int32_t id, std::string& out) const;

  std::size_t capacity_;
  std::size_t block_threshold_;
  unsigned block_depth_ = 0;
  std::size_t block_stride_ = 0;
  bool blocks_enabled_ = false;

  std::vector<Node> nodes_;
  std::vector<std::int32_t> free_nodes_;
  std::vector<Index> block_values_;
  std::vector<std::int32_t> free_blocks_;
  std::int32_t root_ = kNil;
  std::size_t density_ = 0;
  std::uint64_t version_ = 0;
};

}  // namespace csst
