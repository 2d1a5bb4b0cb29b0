#pragma once

#include <vector>

#include "csst/array_grid.hpp"
#include "csst/partial_order.hpp"

namespace csst {

/// Insert-only CSSTs. Array A[t1][t2] keeps transitive reachability: an entry
/// A[t1][t2][j1] = j2 means <t1,j1> ->* <t2,j2>, and every path from chain t1
/// to chain t2 is witnessed by some entry at or after its source index.
///
/// Insertion costs O(k^2) array operations; every query is a single array
/// lookup.
class IncrementalPartialOrder final : public PartialOrder {
 public:
  explicit IncrementalPartialOrder(ChainGeometry geom, const BackendOptions& options = {});

  std::string_view name() const noexcept override { return "csst-inc"; }
  const ChainGeometry& geometry() const noexcept override { return geom_; }

  void insert_edge(NodeId u, NodeId v) override;

  bool reachable(NodeId u, NodeId v) override;
  std::optional<Index> successor(NodeId u, Chain t) override;
  std::optional<Index> predecessor(NodeId u, Chain t) override;
  void grow(Chain t, Index new_len) override;

  std::size_t node_count() const noexcept override { return grid_.node_count(); }

  const ArrayGrid& arrays() const noexcept { return grid_; }

 private:
  Index successor_raw(NodeId u, Chain t);
  Index predecessor_raw(NodeId u, Chain t);

  ChainGeometry geom_;
  ArrayGrid grid_;
  bool cycle_guard_;
  std::vector<Index> preds_;
  std::vector<Index> succs_;
};

}  // namespace csst
