#include "csst/oracle.hpp"

#include <algorithm>

namespace csst {

OracleGraph::OracleGraph(ChainGeometry geom) : geom_(std::move(geom)) { rebuild_offsets(); }

void OracleGraph::rebuild_offsets() {
  std::vector<std::vector<NodeId>> out(geom_.total());
  std::vector<std::vector<NodeId>> in(geom_.total());
  offsets_.assign(geom_.k(), 0);
  std::uint32_t acc = 0;
  for (Chain t = 0; t < geom_.k(); ++t) {
    offsets_[t] = acc;
    acc += geom_.length(t);
  }
  for (const auto& [u, v] : edges_) {
    out[flat(u)].push_back(v);
    in[flat(v)].push_back(u);
  }
  out_ = std::move(out);
  in_ = std::move(in);
  mark_.assign(geom_.total(), 0);
  stamp_ = 0;
}

void OracleGraph::insert_edge(NodeId u, NodeId v) {
  validate_cross_chain(u, v, geom_);
  if (!edges_.emplace(u, v).second) throw PoError(ErrorKind::DuplicateEdge, {u, v});
  out_[flat(u)].push_back(v);
  in_[flat(v)].push_back(u);
}

void OracleGraph::delete_edge(NodeId u, NodeId v) {
  validate_cross_chain(u, v, geom_);
  if (edges_.erase({u, v}) == 0) throw PoError(ErrorKind::MissingEdge, {u, v});
  auto& out = out_[flat(u)];
  out.erase(std::find(out.begin(), out.end(), v));
  auto& in = in_[flat(v)];
  in.erase(std::find(in.begin(), in.end(), u));
}

bool OracleGraph::has_edge(NodeId u, NodeId v) const { return edges_.count({u, v}) != 0; }

void OracleGraph::search(NodeId start, bool forward) {
  if (++stamp_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    stamp_ = 1;
  }
  stack_.clear();
  stack_.push_back(start);
  mark_[flat(start)] = stamp_;
  auto visit = [&](NodeId next) {
    std::uint32_t& m = mark_[flat(next)];
    if (m != stamp_) {
      m = stamp_;
      stack_.push_back(next);
    }
  };
  while (!stack_.empty()) {
    const NodeId node = stack_.back();
    stack_.pop_back();
    if (forward) {
      if (node.index + 1 < geom_.length(node.chain)) visit({node.chain, node.index + 1});
      for (const NodeId next : out_[flat(node)]) visit(next);
    } else {
      if (node.index > 0) visit({node.chain, node.index - 1});
      for (const NodeId prev : in_[flat(node)]) visit(prev);
    }
  }
}

bool OracleGraph::reachable(NodeId u, NodeId v) {
  validate(u, geom_);
  validate(v, geom_);
  search(u, true);
  return mark_[flat(v)] == stamp_;
}

std::optional<Index> OracleGraph::successor(NodeId u, Chain t) {
  validate(u, geom_);
  validate_chain(t, geom_);
  search(u, true);
  for (Index j = 0; j < geom_.length(t); ++j) {
    if (mark_[flat({t, j})] == stamp_) return j;
  }
  return std::nullopt;
}

std::optional<Index> OracleGraph::predecessor(NodeId u, Chain t) {
  validate(u, geom_);
  validate_chain(t, geom_);
  search(u, false);
  for (Index j = geom_.length(t); j-- > 0;) {
    if (mark_[flat({t, j})] == stamp_) return j;
  }
  return std::nullopt;
}

void OracleGraph::grow(Chain t, Index new_len) {
  geom_.grow(t, new_len);
  rebuild_offsets();
}

std::size_t OracleGraph::cross_chain_density() const {
  std::vector<std::set<Index>> sources(geom_.k());
  for (const auto& [u, v] : edges_) sources[u.chain].insert(u.index);
  std::size_t d = 0;
  for (const auto& s : sources) d = std::max(d, s.size());
  return d;
}

std::optional<Index> OracleGraph::successor_within_hops(NodeId u, Chain t,
                                                        std::size_t max_hops) const {
  // best[c] = earliest index of chain c reached so far; layered relaxation
  // where each layer crosses exactly one more edge.
  std::vector<Index> best(geom_.k(), kInfinity);
  best[u.chain] = u.index;
  for (std::size_t hop = 0; hop < max_hops; ++hop) {
    std::vector<Index> next = best;
    for (const auto& [a, b] : edges_) {
      if (best[a.chain] != kInfinity && a.index >= best[a.chain] && b.index < next[b.chain]) {
        next[b.chain] = b.index;
      }
    }
    best = std::move(next);
  }
  if (best[t] == kInfinity) return std::nullopt;
  return best[t];
}

}  // namespace csst
