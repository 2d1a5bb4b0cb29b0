#include "csst/dynamic_po.hpp"

#include <algorithm>

namespace csst {

bool EdgeStore::insert(NodeId u, NodeId v) {
  if (!groups_[key(u, v.chain)].insert(v.index).second) return false;
  ++size_;
  if (out_degree_[node_key(u)]++ == 0) ++sources_[u.chain];
  return true;
}

bool EdgeStore::erase(NodeId u, NodeId v) {
  const auto it = groups_.find(key(u, v.chain));
  if (it == groups_.end() || it->second.erase(v.index) == 0) return false;
  if (it->second.empty()) groups_.erase(it);
  --size_;
  const auto deg = out_degree_.find(node_key(u));
  if (--deg->second == 0) {
    out_degree_.erase(deg);
    --sources_[u.chain];
  }
  return true;
}

bool EdgeStore::contains(NodeId u, NodeId v) const {
  const auto it = groups_.find(key(u, v.chain));
  return it != groups_.end() && it->second.count(v.index) != 0;
}

Index EdgeStore::min_target(NodeId u, Chain t2) const {
  const auto it = groups_.find(key(u, t2));
  return it == groups_.end() ? kInfinity : *it->second.begin();
}

std::size_t EdgeStore::density() const noexcept {
  return sources_.empty() ? 0 : *std::max_element(sources_.begin(), sources_.end());
}

DynamicPartialOrder::DynamicPartialOrder(ChainGeometry geom, const BackendOptions& options)
    : geom_(std::move(geom)),
      grid_(geom_, options.block_threshold),
      store_(geom_.k()),
      cycle_guard_(options.cycle_guard),
      closure_(geom_.k(), kInfinity) {}

void DynamicPartialOrder::insert_edge(NodeId u, NodeId v) {
  validate_cross_chain(u, v, geom_);
  if (store_.contains(u, v)) throw PoError(ErrorKind::DuplicateEdge, {u, v});
  if (cycle_guard_ && reachable(v, u)) throw PoError(ErrorKind::CycleDetected, {u, v});
  grid_.begin_op();
  const Index before = store_.min_target(u, v.chain);
  store_.insert(u, v);
  if (v.index < before) grid_.update(u.chain, v.chain, u.index, v.index);
}

void DynamicPartialOrder::delete_edge(NodeId u, NodeId v) {
  validate_cross_chain(u, v, geom_);
  if (!store_.erase(u, v)) throw PoError(ErrorKind::MissingEdge, {u, v});
  grid_.begin_op();
  const Index after = store_.min_target(u, v.chain);
  if (after > v.index) {
    // v was the smallest target; fall back to the next one (or none).
    grid_.update(u.chain, v.chain, u.index, after);
  }
}

void DynamicPartialOrder::finish_rounds(std::size_t rounds) {
  last_rounds_ = rounds;
  max_rounds_ = std::max(max_rounds_, rounds);
}

void DynamicPartialOrder::forward_closure(NodeId u) {
  const std::size_t k = geom_.k();
  for (Chain t = 0; t < k; ++t) {
    closure_[t] = t == u.chain ? u.index : grid_.min_suffix(u.chain, t, u.index);
  }
  if (observer_) observer_(0, closure_);
  std::size_t rounds = 0;
  bool changed;
  do {
    changed = false;
    ++rounds;
    for (Chain t1 = 0; t1 < k; ++t1) {
      if (t1 == u.chain) continue;
      for (Chain t2 = 0; t2 < k; ++t2) {
        if (t2 == u.chain || t2 == t1 || closure_[t2] == kInfinity) continue;
        const Index j = grid_.min_suffix(t2, t1, closure_[t2]);
        if (j < closure_[t1]) {
          closure_[t1] = j;
          changed = true;
        }
      }
    }
    if (observer_) observer_(rounds, closure_);
  } while (changed);
  finish_rounds(rounds);
}

void DynamicPartialOrder::backward_closure(NodeId u) {
  // kInfinity marks "no predecessor"; every finite value beats it.
  const std::size_t k = geom_.k();
  for (Chain t = 0; t < k; ++t) {
    closure_[t] = t == u.chain ? u.index : grid_.argleq(t, u.chain, u.index);
  }
  if (observer_) observer_(0, closure_);
  std::size_t rounds = 0;
  bool changed;
  do {
    changed = false;
    ++rounds;
    for (Chain t1 = 0; t1 < k; ++t1) {
      if (t1 == u.chain) continue;
      for (Chain t2 = 0; t2 < k; ++t2) {
        if (t2 == u.chain || t2 == t1 || closure_[t2] == kInfinity) continue;
        const Index j = grid_.argleq(t1, t2, closure_[t2]);
        if (j != kInfinity && (closure_[t1] == kInfinity || j > closure_[t1])) {
          closure_[t1] = j;
          changed = true;
        }
      }
    }
    if (observer_) observer_(rounds, closure_);
  } while (changed);
  finish_rounds(rounds);
}

bool DynamicPartialOrder::reachable(NodeId u, NodeId v) {
  validate(u, geom_);
  validate(v, geom_);
  if (u.chain == v.chain) return u.index <= v.index;
  forward_closure(u);
  return closure_[v.chain] <= v.index;
}

std::optional<Index> DynamicPartialOrder::successor(NodeId u, Chain t) {
  validate(u, geom_);
  validate_chain(t, geom_);
  if (t == u.chain) return u.index;
  forward_closure(u);
  if (closure_[t] == kInfinity) return std::nullopt;
  return closure_[t];
}

std::optional<Index> DynamicPartialOrder::predecessor(NodeId u, Chain t) {
  validate(u, geom_);
  validate_chain(t, geom_);
  if (t == u.chain) return u.index;
  backward_closure(u);
  if (closure_[t] == kInfinity) return std::nullopt;
  return closure_[t];
}

void DynamicPartialOrder::grow(Chain t, Index new_len) {
  geom_.grow(t, new_len);
  grid_.grow(t, new_len);
}

}  // namespace csst
