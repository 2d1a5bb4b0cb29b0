#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csst/types.hpp"

namespace csst {

/// Contract shared by every partial-order backend over a chain DAG.
///
/// Updates only ever connect nodes on different chains; program order inside
/// a chain is built in. Queries on the same chain reduce to index comparison:
/// successor(u, u.chain) == predecessor(u, u.chain) == u.index.
///
/// Backends are single-writer. Queries may mutate internal scratch buffers, so
/// they also require exclusive access. Instances can be moved between threads.
class PartialOrder {
 public:
  virtual ~PartialOrder() = default;

  virtual std::string_view name() const noexcept = 0;
  virtual const ChainGeometry& geometry() const noexcept = 0;

  /// Whether delete_edge is implemented. Insert-only backends throw
  /// DeleteUnsupported from delete_edge.
  virtual bool supports_delete() const noexcept { return false; }

  virtual void insert_edge(NodeId u, NodeId v) = 0;
  virtual void delete_edge(NodeId u, NodeId v);

  /// True iff u ->* v.
  virtual bool reachable(NodeId u, NodeId v) = 0;
  /// Earliest index of chain t reachable from u, or nullopt.
  virtual std::optional<Index> successor(NodeId u, Chain t) = 0;
  /// Latest index of chain t that reaches u, or nullopt.
  virtual std::optional<Index> predecessor(NodeId u, Chain t) = 0;

  /// Extends chain t to new_len events; existing orderings are kept.
  virtual void grow(Chain t, Index new_len) = 0;

  /// Allocated tree/clock nodes, for memory comparisons. Zero when the
  /// backend has no such notion.
  virtual std::size_t node_count() const noexcept { return 0; }
};

/// Backend identifiers accepted by the CLI and the harness.
enum class BackendId { CsstDynamic, CsstIncremental, VectorClock, Graph, PlainSegmentTree };

std::string_view to_string(BackendId id);
std::optional<BackendId> parse_backend(std::string_view name);
const std::vector<BackendId>& all_backends();
bool backend_supports_delete(BackendId id);

struct BackendOptions {
  /// Reject insertions that would close a cycle (CycleDetected). Costs one
  /// reachability query per insertion.
  bool cycle_guard = false;
  std::size_t block_threshold = 32;
};

std::unique_ptr<PartialOrder> make_backend(BackendId id, ChainGeometry geom,
                                           const BackendOptions& options = {});

}  // namespace csst
