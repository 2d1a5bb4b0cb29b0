#include "csst/incremental_po.hpp"

namespace csst {

IncrementalPartialOrder::IncrementalPartialOrder(ChainGeometry geom, const BackendOptions& options)
    : geom_(std::move(geom)),
      grid_(geom_, options.block_threshold),
      cycle_guard_(options.cycle_guard),
      preds_(geom_.k()),
      succs_(geom_.k()) {}

Index IncrementalPartialOrder::successor_raw(NodeId u, Chain t) {
  if (t == u.chain) return u.index;
  return grid_.min_suffix(u.chain, t, u.index);
}

Index IncrementalPartialOrder::predecessor_raw(NodeId u, Chain t) {
  if (t == u.chain) return u.index;
  return grid_.argleq(t, u.chain, u.index);
}

void IncrementalPartialOrder::insert_edge(NodeId u, NodeId v) {
  validate_cross_chain(u, v, geom_);
  if (cycle_guard_ && reachable(v, u)) throw PoError(ErrorKind::CycleDetected, {u, v});
  grid_.begin_op();

  const std::size_t k = geom_.k();
  // In a DAG the new edge cannot change who reaches u or whom v reaches, so
  // both frontiers are computed once up front.
  for (Chain t = 0; t < k; ++t) {
    preds_[t] = predecessor_raw(u, t);
    succs_[t] = successor_raw(v, t);
  }
  for (Chain t1 = 0; t1 < k; ++t1) {
    const Index j1 = preds_[t1];
    if (j1 == kInfinity) continue;
    for (Chain t2 = 0; t2 < k; ++t2) {
      if (t2 == t1) continue;
      const Index j2 = succs_[t2];
      if (j2 == kInfinity) continue;
      if (grid_.min_suffix(t1, t2, j1) > j2) grid_.update(t1, t2, j1, j2);
    }
  }
}

bool IncrementalPartialOrder::reachable(NodeId u, NodeId v) {
  validate(u, geom_);
  validate(v, geom_);
  if (u.chain == v.chain) return u.index <= v.index;
  return grid_.min_suffix(u.chain, v.chain, u.index) <= v.index;
}

std::optional<Index> IncrementalPartialOrder::successor(NodeId u, Chain t) {
  validate(u, geom_);
  validate_chain(t, geom_);
  const Index j = successor_raw(u, t);
  if (j == kInfinity) return std::nullopt;
  return j;
}

std::optional<Index> IncrementalPartialOrder::predecessor(NodeId u, Chain t) {
  validate(u, geom_);
  validate_chain(t, geom_);
  const Index j = predecessor_raw(u, t);
  if (j == kInfinity) return std::nullopt;
  return j;
}

void IncrementalPartialOrder::grow(Chain t, Index new_len) {
  geom_.grow(t, new_len);
  grid_.grow(t, new_len);
}

}  // namespace csst
