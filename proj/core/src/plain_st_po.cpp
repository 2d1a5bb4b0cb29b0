#include "csst/plain_st_po.hpp"

#include <algorithm>
#include <bit>

namespace csst {

PlainSegmentTree::PlainSegmentTree(std::size_t capacity)
    : capacity_(std::max<std::size_t>(capacity, 1)),
      leaves_(std::bit_ceil(capacity_)),
      tree_(2 * leaves_, kInfinity) {}

void PlainSegmentTree::update(Index i, Index value) {
  std::size_t node = leaves_ + i;
  tree_[node] = value;
  for (node /= 2; node >= 1; node /= 2) {
    tree_[node] = std::min(tree_[2 * node], tree_[2 * node + 1]);
  }
}

Index PlainSegmentTree::min_suffix(Index i) const {
  if (i >= capacity_) return kInfinity;
  Index best = kInfinity;
  std::size_t lo = leaves_ + i;
  std::size_t hi = 2 * leaves_;  // exclusive
  while (lo < hi) {
    if (lo & 1) best = std::min(best, tree_[lo++]);
    if (hi & 1) best = std::min(best, tree_[--hi]);
    lo /= 2;
    hi /= 2;
  }
  return best;
}

std::optional<Index> PlainSegmentTree::argleq(Index value) const {
  if (tree_[1] > value) return std::nullopt;
  std::size_t node = 1;
  while (node < leaves_) {
    node = tree_[2 * node + 1] <= value ? 2 * node + 1 : 2 * node;
  }
  return static_cast<Index>(node - leaves_);
}

void PlainSegmentTree::grow(std::size_t new_capacity) {
  if (new_capacity <= capacity_) return;
  PlainSegmentTree bigger(new_capacity);
  for (std::size_t i = 0; i < capacity_; ++i) {
    if (tree_[leaves_ + i] != kInfinity) bigger.update(static_cast<Index>(i), tree_[leaves_ + i]);
  }
  *this = std::move(bigger);
}

PlainStPO::PlainStPO(ChainGeometry geom, const BackendOptions& options)
    : geom_(std::move(geom)), cycle_guard_(options.cycle_guard), preds_(geom_.k()), succs_(geom_.k()) {
  const std::size_t k = geom_.k();
  trees_.reserve(k * k);
  for (Chain from = 0; from < k; ++from) {
    for (Chain to = 0; to < k; ++to) {
      trees_.emplace_back(from == to ? 1 : geom_.length(from));
    }
  }
}

std::size_t PlainStPO::node_count() const noexcept {
  std::size_t total = 0;
  const std::size_t k = geom_.k();
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i / k != i % k) total += trees_[i].node_count();
  }
  return total;
}

Index PlainStPO::successor_raw(NodeId u, Chain t) {
  if (t == u.chain) return u.index;
  return tree(u.chain, t).min_suffix(u.index);
}

Index PlainStPO::predecessor_raw(NodeId u, Chain t) {
  if (t == u.chain) return u.index;
  const auto found = tree(t, u.chain).argleq(u.index);
  return found ? *found : kInfinity;
}

void PlainStPO::insert_edge(NodeId u, NodeId v) {
  validate_cross_chain(u, v, geom_);
  if (cycle_guard_ && reachable(v, u)) throw PoError(ErrorKind::CycleDetected, {u, v});
  const std::size_t k = geom_.k();
  for (Chain t = 0; t < k; ++t) {
    preds_[t] = predecessor_raw(u, t);
    succs_[t] = successor_raw(v, t);
  }
  for (Chain t1 = 0; t1 < k; ++t1) {
    if (preds_[t1] == kInfinity) continue;
    for (Chain t2 = 0; t2 < k; ++t2) {
      if (t2 == t1 || succs_[t2] == kInfinity) continue;
      auto& tr = tree(t1, t2);
      if (tr.min_suffix(preds_[t1]) > succs_[t2]) tr.update(preds_[t1], succs_[t2]);
    }
  }
}

bool PlainStPO::reachable(NodeId u, NodeId v) {
  validate(u, geom_);
  validate(v, geom_);
  if (u.chain == v.chain) return u.index <= v.index;
  return tree(u.chain, v.chain).min_suffix(u.index) <= v.index;
}

std::optional<Index> PlainStPO::successor(NodeId u, Chain t) {
  validate(u, geom_);
  validate_chain(t, geom_);
  const Index j = successor_raw(u, t);
  if (j == kInfinity) return std::nullopt;
  return j;
}

std::optional<Index> PlainStPO::predecessor(NodeId u, Chain t) {
  validate(u, geom_);
  validate_chain(t, geom_);
  const Index j = predecessor_raw(u, t);
  if (j == kInfinity) return std::nullopt;
  return j;
}

void PlainStPO::grow(Chain t, Index new_len) {
  geom_.grow(t, new_len);
  for (Chain to = 0; to < geom_.k(); ++to) {
    if (to != t) tree(t, to).grow(new_len);
  }
}

}  // namespace csst
