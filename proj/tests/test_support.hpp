#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "csst/oracle.hpp"
#include "csst/partial_order.hpp"

namespace csst::testing {

using Edge = std::pair<NodeId, NodeId>;

/// Random acyclic cross-chain edges. Endpoints are drawn uniformly; an edge is
/// kept when it is new and does not close a cycle.
inline std::vector<Edge> random_dag(const ChainGeometry& geom, std::size_t count, std::mt19937_64& rng) {
  OracleGraph oracle(geom);
  std::vector<Edge> edges;
  auto node = [&]() {
    for (;;) {
      const Chain t = static_cast<Chain>(rng() % geom.k());
      if (geom.length(t) > 0) return NodeId{t, static_cast<Index>(rng() % geom.length(t))};
    }
  };
  for (std::size_t attempt = 0; edges.size() < count && attempt < 50 * count; ++attempt) {
    const NodeId u = node();
    const NodeId v = node();
    if (u.chain == v.chain || oracle.has_edge(u, v) || oracle.reachable(v, u)) continue;
    oracle.insert_edge(u, v);
    edges.emplace_back(u, v);
  }
  return edges;
}

/// Every successor and predecessor answer of po, in a fixed order.
inline std::vector<std::optional<Index>> snapshot(PartialOrder& po) {
  const ChainGeometry geom = po.geometry();
  std::vector<std::optional<Index>> out;
  for (Chain t = 0; t < geom.k(); ++t) {
    for (Index i = 0; i < geom.length(t); ++i) {
      for (Chain t2 = 0; t2 < geom.k(); ++t2) {
        out.push_back(po.successor({t, i}, t2));
        out.push_back(po.predecessor({t, i}, t2));
      }
    }
  }
  return out;
}

inline ChainGeometry uniform(std::size_t k, Index len) {
  return ChainGeometry(std::vector<Index>(k, len));
}

}  // namespace csst::testing
