#include "csst/graph_po.hpp"

#include <algorithm>

namespace csst {

namespace {

bool erase_one(std::map<Index, std::vector<NodeId>>& adj, Index at, NodeId other) {
  const auto it = adj.find(at);
  if (it == adj.end()) return false;
  auto pos = std::find(it->second.begin(), it->second.end(), other);
  if (pos == it->second.end()) return false;
  it->second.erase(pos);
  if (it->second.empty()) adj.erase(it);
  return true;
}

}  // namespace

GraphPO::GraphPO(ChainGeometry geom, const BackendOptions& options)
    : geom_(std::move(geom)),
      cycle_guard_(options.cycle_guard),
      out_(geom_.k()),
      in_(geom_.k()),
      best_(geom_.k()),
      scanned_(geom_.k()),
      queued_(geom_.k()) {}

void GraphPO::insert_edge(NodeId u, NodeId v) {
  validate_cross_chain(u, v, geom_);
  auto& targets = out_[u.chain][u.index];
  if (std::find(targets.begin(), targets.end(), v) != targets.end()) {
    throw PoError(ErrorKind::DuplicateEdge, {u, v});
  }
  if (cycle_guard_ && reachable(v, u)) {
    if (targets.empty()) out_[u.chain].erase(u.index);
    throw PoError(ErrorKind::CycleDetected, {u, v});
  }
  out_[u.chain][u.index].push_back(v);
  in_[v.chain][v.index].push_back(u);
}

void GraphPO::delete_edge(NodeId u, NodeId v) {
  validate_cross_chain(u, v, geom_);
  if (!erase_one(out_[u.chain], u.index, v)) throw PoError(ErrorKind::MissingEdge, {u, v});
  erase_one(in_[v.chain], v.index, u);
}

void GraphPO::search_forward(NodeId u, NodeId stop) {
  const bool has_stop = geom_.contains(stop);
  std::fill(best_.begin(), best_.end(), kInfinity);
  std::fill(scanned_.begin(), scanned_.end(), kInfinity);
  std::fill(queued_.begin(), queued_.end(), 0);
  worklist_.clear();
  best_[u.chain] = u.index;
  worklist_.push_back(u.chain);
  queued_[u.chain] = 1;
  while (!worklist_.empty()) {
    const Chain c = worklist_.back();
    worklist_.pop_back();
    queued_[c] = 0;
    // Only the part of the chain not scanned by an earlier visit is new.
    const Index from = best_[c];
    const Index until = scanned_[c];
    scanned_[c] = from;
    const auto& adj = out_[c];
    for (auto it = adj.lower_bound(from); it != adj.end() && it->first < until; ++it) {
      for (const NodeId x : it->second) {
        if (x.index >= best_[x.chain]) continue;
        best_[x.chain] = x.index;
        if (has_stop && x.chain == stop.chain && x.index <= stop.index) return;
        if (!queued_[x.chain]) {
          queued_[x.chain] = 1;
          worklist_.push_back(x.chain);
        }
      }
    }
  }
}

void GraphPO::search_backward(NodeId u) {
  std::fill(best_.begin(), best_.end(), kInfinity);
  std::fill(scanned_.begin(), scanned_.end(), kInfinity);
  std::fill(queued_.begin(), queued_.end(), 0);
  worklist_.clear();
  best_[u.chain] = u.index;
  worklist_.push_back(u.chain);
  queued_[u.chain] = 1;
  auto better = [](Index candidate, Index current) {
    return current == kInfinity || candidate > current;
  };
  while (!worklist_.empty()) {
    const Chain c = worklist_.back();
    worklist_.pop_back();
    queued_[c] = 0;
    // Scan sources in (scanned, best]; kInfinity in scanned_ means nothing yet.
    const Index upto = best_[c];
    const Index below = scanned_[c];
    scanned_[c] = upto;
    const auto& adj = in_[c];
    auto it = adj.upper_bound(upto);
    while (it != adj.begin()) {
      --it;
      if (below != kInfinity && it->first <= below) break;
      for (const NodeId x : it->second) {
        if (!better(x.index, best_[x.chain])) continue;
        best_[x.chain] = x.index;
        if (!queued_[x.chain]) {
          queued_[x.chain] = 1;
          worklist_.push_back(x.chain);
        }
      }
    }
  }
}

bool GraphPO::reachable(NodeId u, NodeId v) {
  validate(u, geom_);
  validate(v, geom_);
  if (u.chain == v.chain) return u.index <= v.index;
  search_forward(u, v);
  return best_[v.chain] <= v.index;
}

std::optional<Index> GraphPO::successor(NodeId u, Chain t) {
  validate(u, geom_);
  validate_chain(t, geom_);
  if (t == u.chain) return u.index;
  search_forward(u, NodeId{static_cast<Chain>(geom_.k()), 0});
  if (best_[t] == kInfinity) return std::nullopt;
  return best_[t];
}

std::optional<Index> GraphPO::predecessor(NodeId u, Chain t) {
  validate(u, geom_);
  validate_chain(t, geom_);
  if (t == u.chain) return u.index;
  search_backward(u);
  if (best_[t] == kInfinity) return std::nullopt;
  return best_[t];
}

}  // namespace csst
