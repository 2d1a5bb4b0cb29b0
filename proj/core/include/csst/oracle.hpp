#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "csst/partial_order.hpp"
#include "csst/types.hpp"

namespace csst {

/// Ground truth for differential testing: the explicit cross-chain edge set
/// plus implicit chain edges, with every query answered by a fresh graph
/// search. O(n + m) per query.
class OracleGraph final : public PartialOrder {
 public:
  explicit OracleGraph(ChainGeometry geom);

  std::string_view name() const noexcept override { return "oracle"; }
  const ChainGeometry& geometry() const noexcept override { return geom_; }
  bool supports_delete() const noexcept override { return true; }

  /// Rejects same-chain and duplicate edges. Does not check acyclicity.
  void insert_edge(NodeId u, NodeId v) override;
  void delete_edge(NodeId u, NodeId v) override;

  bool reachable(NodeId u, NodeId v) override;
  std::optional<Index> successor(NodeId u, Chain t) override;
  std::optional<Index> predecessor(NodeId u, Chain t) override;
  void grow(Chain t, Index new_len) override;

  bool has_edge(NodeId u, NodeId v) const;
  const std::set<std::pair<NodeId, NodeId>>& edges() const noexcept { return edges_; }

  /// Max over chains of the number of nodes with an outgoing cross-chain edge.
  std::size_t cross_chain_density() const;

  /// Earliest index of chain t reachable from u via a crossing path that
  /// uses at most max_hops cross-chain edges.
  std::optional<Index> successor_within_hops(NodeId u, Chain t, std::size_t max_hops) const;

 private:
  std::uint32_t flat(NodeId node) const { return offsets_[node.chain] + node.index; }
  void rebuild_offsets();
  // Marks every node reachable from start (forward) or reaching it (backward).
  void search(NodeId start, bool forward);

  ChainGeometry geom_;
  std::set<std::pair<NodeId, NodeId>> edges_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::vector<NodeId> stack_;
};

}  // namespace csst
