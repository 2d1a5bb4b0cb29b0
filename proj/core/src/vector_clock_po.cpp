#include "csst/vector_clock_po.hpp"

#include <algorithm>

namespace csst {

VectorClockPO::VectorClockPO(ChainGeometry geom, const BackendOptions& options)
    : geom_(std::move(geom)), cycle_guard_(options.cycle_guard), rows_(geom_.k()), out_(geom_.k()) {}

std::size_t VectorClockPO::node_count() const noexcept {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

Index VectorClockPO::component(NodeId node, Chain t) const {
  if (t == node.chain) return node.index + 1;
  const std::size_t k = geom_.k();
  const auto& rows = rows_[node.chain];
  const std::size_t materialized = rows.size() / k;
  if (materialized == 0) return 0;
  const std::size_t row = std::min<std::size_t>(node.index, materialized - 1);
  return rows[row * k + t];
}

void VectorClockPO::extend(Chain t, Index index) {
  const std::size_t k = geom_.k();
  auto& rows = rows_[t];
  std::size_t have = rows.size() / k;
  if (index < have) return;
  rows.resize((index + 1) * k, 0);
  for (; have <= index; ++have) {
    if (have > 0) std::copy_n(rows.begin() + (have - 1) * k, k, rows.begin() + have * k);
    rows[have * k + t] = have + 1;
  }
}

void VectorClockPO::insert_edge(NodeId u, NodeId v) {
  validate_cross_chain(u, v, geom_);
  if (cycle_guard_ && reachable(v, u)) throw PoError(ErrorKind::CycleDetected, {u, v});
  out_[u.chain][u.index].push_back(v);
  // v must own a row even when already ordered: later growth of u's clock
  // reaches it through this edge.
  extend(v.chain, v.index);
  if (component(v, u.chain) > u.index) return;

  const std::size_t k = geom_.k();
  source_.resize(k);
  for (Chain t = 0; t < k; ++t) source_[t] = component(u, t);

  worklist_.clear();
  worklist_.push_back(v);
  while (!worklist_.empty()) {
    const NodeId w = worklist_.back();
    worklist_.pop_back();
    auto& rows = rows_[w.chain];
    const std::size_t materialized = rows.size() / k;
    // Events in [w.index, stop) change; past the watermark they all share the
    // last row, so a change that reaches it covers the rest of the chain.
    Index stop = kInfinity;
    for (std::size_t i = w.index; i < materialized; ++i) {
      bool changed = false;
      Index* row = rows.data() + i * k;
      for (Chain t = 0; t < k; ++t) {
        if (source_[t] > row[t]) {
          row[t] = source_[t];
          changed = true;
        }
      }
      // Rows grow monotonically along the chain, so once one dominates the
      // source clock every later row does too.
      if (!changed) {
        stop = static_cast<Index>(i);
        break;
      }
    }
    const auto& out = out_[w.chain];
    for (auto it = out.lower_bound(w.index); it != out.end() && it->first < stop; ++it) {
      worklist_.insert(worklist_.end(), it->second.begin(), it->second.end());
    }
  }
}

bool VectorClockPO::reachable(NodeId u, NodeId v) {
  validate(u, geom_);
  validate(v, geom_);
  if (u.chain == v.chain) return u.index <= v.index;
  return component(v, u.chain) > u.index;
}

std::optional<Index> VectorClockPO::successor(NodeId u, Chain t) {
  validate(u, geom_);
  validate_chain(t, geom_);
  if (t == u.chain) return u.index;
  // Component u.chain is nondecreasing along chain t; beyond the watermark it
  // stays constant, so searching the materialized rows suffices.
  const std::size_t k = geom_.k();
  const auto& rows = rows_[t];
  const std::size_t materialized = rows.size() / k;
  std::size_t lo = 0, hi = materialized;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (rows[mid * k + u.chain] > u.index) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo == materialized) return std::nullopt;
  return static_cast<Index>(lo);
}

std::optional<Index> VectorClockPO::predecessor(NodeId u, Chain t) {
  validate(u, geom_);
  validate_chain(t, geom_);
  const Index c = component(u, t);
  if (c == 0) return std::nullopt;
  return c - 1;
}

}  // namespace csst
