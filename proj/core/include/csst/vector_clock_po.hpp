#pragma once

#include <map>
#include <vector>

#include "csst/partial_order.hpp"

namespace csst {

/// Insert-only vector-clock baseline. Every event carries a k-wide clock whose
/// component t is one past the latest index of chain t that reaches it (zero
/// for none).
///
/// Clocks are materialized only up to each chain's watermark, the last event
/// with an incoming cross edge; later events share the watermark's clock.
/// Insertion propagates the source clock forward along chains and across
/// outgoing edges until it is dominated, which costs O(n k) in the worst case.
class VectorClockPO final : public PartialOrder {
 public:
  explicit VectorClockPO(ChainGeometry geom, const BackendOptions& options = {});

  std::string_view name() const noexcept override { return "vc"; }
  const ChainGeometry& geometry() const noexcept override { return geom_; }

  void insert_edge(NodeId u, NodeId v) override;

  bool reachable(NodeId u, NodeId v) override;
  std::optional<Index> successor(NodeId u, Chain t) override;
  std::optional<Index> predecessor(NodeId u, Chain t) override;
  void grow(Chain t, Index new_len) override { geom_.grow(t, new_len); }

  /// Materialized clock entries.
  std::size_t node_count() const noexcept override;

 private:
  /// Component t of the clock of node; own-chain components are index + 1.
  Index component(NodeId node, Chain t) const;
  /// Materializes rows of chain t up to and including index.
  void extend(Chain t, Index index);

  ChainGeometry geom_;
  bool cycle_guard_;
  /// rows_[t] holds (watermark + 1) clocks of k components each.
  std::vector<std::vector<Index>> rows_;
  /// Outgoing cross edges per chain, keyed by source index.
  std::vector<std::map<Index, std::vector<NodeId>>> out_;
  std::vector<Index> source_;
  std::vector<NodeId> worklist_;
};

}  // namespace csst
