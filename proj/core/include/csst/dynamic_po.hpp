#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <unordered_map>
#include <vector>

#include "csst/array_grid.hpp"
#include "csst/partial_order.hpp"

namespace csst {

/// Direct cross-chain edges grouped by (source node, target chain). Each
/// group is an ordered set of target indices so the minimum survives
/// deletions.
class EdgeStore {
 public:
  explicit EdgeStore(std::size_t k) : k_(k), sources_(k, 0) {}

  /// False when the edge is already present.
  bool insert(NodeId u, NodeId v);
  /// False when the edge is absent.
  bool erase(NodeId u, NodeId v);
  bool contains(NodeId u, NodeId v) const;

  /// Smallest target index of an edge <t1,j1> -> <t2,*>, kInfinity if none.
  Index min_target(NodeId u, Chain t2) const;

  std::size_t size() const noexcept { return size_; }
  /// Largest number of distinct edge sources on one chain.
  std::size_t density() const noexcept;

 private:
  std::uint64_t key(NodeId u, Chain t2) const noexcept {
    return (static_cast<std::uint64_t>(u.chain * k_ + t2) << 32) | u.index;
  }
  static std::uint64_t node_key(NodeId u) noexcept {
    return (static_cast<std::uint64_t>(u.chain) << 32) | u.index;
  }

  std::size_t k_;
  std::unordered_map<std::uint64_t, std::set<Index>> groups_;
  std::unordered_map<std::uint64_t, std::uint32_t> out_degree_;
  std::vector<std::size_t> sources_;
  std::size_t size_ = 0;
};

/// Fully dynamic CSSTs. Array A[t1][t2] stores only direct edges:
/// A[t1][t2][j1] is the smallest j2 with an edge <t1,j1> -> <t2,j2>.
/// Updates touch one array entry; queries run a closure over the k chains
/// that converges within k rounds.
class DynamicPartialOrder final : public PartialOrder {
 public:
  /// Called with the round number (0 = initial frontier) and the frontier
  /// after that round.
  using ClosureObserver = std::function<void(std::size_t, const std::vector<Index>&)>;

  explicit DynamicPartialOrder(ChainGeometry geom, const BackendOptions& options = {});

  std::string_view name() const noexcept override { return "csst-dyn"; }
  const ChainGeometry& geometry() const noexcept override { return geom_; }
  bool supports_delete() const noexcept override { return true; }

  void insert_edge(NodeId u, NodeId v) override;
  void delete_edge(NodeId u, NodeId v) override;

  bool reachable(NodeId u, NodeId v) override;
  std::optional<Index> successor(NodeId u, Chain t) override;
  std::optional<Index> predecessor(NodeId u, Chain t) override;
  void grow(Chain t, Index new_len) override;

  std::size_t node_count() const noexcept override { return grid_.node_count(); }

  const ArrayGrid& arrays() const noexcept { return grid_; }
  const EdgeStore& edges() const noexcept { return store_; }

  /// Largest number of relaxation rounds any query needed so far. Each round
  /// that changes the frontier counts, as does the final confirming round.
  std::size_t max_closure_rounds() const noexcept { return max_rounds_; }
  std::size_t last_closure_rounds() const noexcept { return last_rounds_; }

  void set_closure_observer(ClosureObserver observer) { observer_ = std::move(observer); }

 private:
  void forward_closure(NodeId u);
  void backward_closure(NodeId u);
  void finish_rounds(std::size_t rounds);

  ChainGeometry geom_;
  ArrayGrid grid_;
  EdgeStore store_;
  bool cycle_guard_;
  std::vector<Index> closure_;
  std::size_t max_rounds_ = 0;
  std::size_t last_rounds_ = 0;
  ClosureObserver observer_;
};

}  // namespace csst
