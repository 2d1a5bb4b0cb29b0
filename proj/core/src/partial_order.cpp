#include "csst/partial_order.hpp"

#include <array>
#include <utility>

#include "csst/dynamic_po.hpp"
#include "csst/graph_po.hpp"
#include "csst/incremental_po.hpp"
#include "csst/plain_st_po.hpp"
#include "csst/vector_clock_po.hpp"

namespace csst {

void PartialOrder::delete_edge(NodeId u, NodeId v) {
  throw PoError(ErrorKind::DeleteUnsupported, {u, v});
}

namespace {

constexpr std::array<std::pair<BackendId, std::string_view>, 5> kNames{{
    {BackendId::CsstDynamic, "csst-dyn"},
    {BackendId::CsstIncremental, "csst-inc"},
    {BackendId::VectorClock, "vc"},
    {BackendId::Graph, "graph"},
    {BackendId::PlainSegmentTree, "st"},
}};

}  // namespace

std::string_view to_string(BackendId id) {
  for (const auto& [candidate, name] : kNames) {
    if (candidate == id) return name;
  }
  return "?";
}

std::optional<BackendId> parse_backend(std::string_view name) {
  for (const auto& [id, candidate] : kNames) {
    if (candidate == name) return id;
  }
  return std::nullopt;
}

const std::vector<BackendId>& all_backends() {
  static const std::vector<BackendId> ids{BackendId::CsstDynamic, BackendId::CsstIncremental,
                                          BackendId::VectorClock, BackendId::Graph,
                                          BackendId::PlainSegmentTree};
  return ids;
}

bool backend_supports_delete(BackendId id) {
  return id == BackendId::CsstDynamic || id == BackendId::Graph;
}

std::unique_ptr<PartialOrder> make_backend(BackendId id, ChainGeometry geom,
                                           const BackendOptions& options) {
  switch (id) {
    case BackendId::CsstDynamic:
      return std::make_unique<DynamicPartialOrder>(std::move(geom), options);
    case BackendId::CsstIncremental:
      return std::make_unique<IncrementalPartialOrder>(std::move(geom), options);
    case BackendId::VectorClock:
      return std::make_unique<VectorClockPO>(std::move(geom), options);
    case BackendId::Graph:
      return std::make_unique<GraphPO>(std::move(geom), options);
    case BackendId::PlainSegmentTree:
      return std::make_unique<PlainStPO>(std::move(geom), options);
  }
  return nullptr;
}

}  // namespace csst
