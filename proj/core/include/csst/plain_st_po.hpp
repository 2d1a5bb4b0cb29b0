#pragma once

#include <optional>
#include <vector>

#include "csst/partial_order.hpp"

namespace csst {

/// Dense array-backed segment tree over [0, capacity) holding range minima.
/// Always allocates 2P slots, P the next power of two of the capacity.
class PlainSegmentTree {
 public:
  explicit PlainSegmentTree(std::size_t capacity);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t node_count() const noexcept { return tree_.size(); }

  void update(Index i, Index value);
  Index at(Index i) const { return tree_[leaves_ + i]; }
  Index min_suffix(Index i) const;
  std::optional<Index> argleq(Index value) const;
  void grow(std::size_t new_capacity);

 private:
  std::size_t capacity_;
  std::size_t leaves_;
  std::vector<Index> tree_;
};

/// Insert-only baseline with the same update scheme as the incremental CSSTs
/// but dense segment trees, so memory is Theta(k^2 n) regardless of density.
class PlainStPO final : public PartialOrder {
 public:
  explicit PlainStPO(ChainGeometry geom, const BackendOptions& options = {});

  std::string_view name() const noexcept override { return "st"; }
  const ChainGeometry& geometry() const noexcept override { return geom_; }

  void insert_edge(NodeId u, NodeId v) override;

  bool reachable(NodeId u, NodeId v) override;
  std::optional<Index> successor(NodeId u, Chain t) override;
  std::optional<Index> predecessor(NodeId u, Chain t) override;
  void grow(Chain t, Index new_len) override;

  std::size_t node_count() const noexcept override;

 private:
  PlainSegmentTree& tree(Chain from, Chain to) { return trees_[from * geom_.k() + to]; }
  Index successor_raw(NodeId u, Chain t);
  Index predecessor_raw(NodeId u, Chain t);

  ChainGeometry geom_;
  bool cycle_guard_;
  std::vector<PlainSegmentTree> trees_;
  std::vector<Index> preds_;
  std::vector<Index> succs_;
};

}  // namespace csst
