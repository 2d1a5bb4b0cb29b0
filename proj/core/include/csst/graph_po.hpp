#pragma once

#include <map>
#include <vector>

#include "csst/partial_order.hpp"

namespace csst {

/// Explicit-graph baseline. Updates are O(log n); queries search the graph,
/// keeping only the best index reached on each chain.
class GraphPO final : public PartialOrder {
 public:
  explicit GraphPO(ChainGeometry geom, const BackendOptions& options = {});

  std::string_view name() const noexcept override { return "graph"; }
  const ChainGeometry& geometry() const noexcept override { return geom_; }
  bool supports_delete() const noexcept override { return true; }

  void insert_edge(NodeId u, NodeId v) override;
  void delete_edge(NodeId u, NodeId v) override;

  bool reachable(NodeId u, NodeId v) override;
  std::optional<Index> successor(NodeId u, Chain t) override;
  std::optional<Index> predecessor(NodeId u, Chain t) override;
  void grow(Chain t, Index new_len) override { geom_.grow(t, new_len); }

 private:
  using Adjacency = std::map<Index, std::vector<NodeId>>;

  /// Fills best_ with the earliest index reached per chain. Stops as soon as
  /// `stop` (if valid) is reached.
  void search_forward(NodeId u, NodeId stop);
  /// Fills best_ with the latest index reaching u per chain (kInfinity: none).
  void search_backward(NodeId u);

  ChainGeometry geom_;
  bool cycle_guard_;
  std::vector<Adjacency> out_;
  std::vector<Adjacency> in_;
  std::vector<Index> best_;
  std::vector<Index> scanned_;
  std::vector<Chain> worklist_;
  std::vector<char> queued_;
};

}  // namespace csst
