#include "csst/types.hpp"

#include <numeric>
#include <sstream>

namespace csst {

std::string to_string(NodeId node) {
  return "<" + std::to_string(node.chain) + "," + std::to_string(node.index) + ">";
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SameChainUpdate: return "SameChainUpdate";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::MissingEdge: return "MissingEdge";
    case ErrorKind::DeleteUnsupported: return "DeleteUnsupported";
    case ErrorKind::CycleDetected: return "CycleDetected";
  }
  return "Unknown";
}

namespace {

std::string describe(ErrorKind kind, const std::vector<NodeId>& nodes) {
  std::ostringstream out;
  out << to_string(kind);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << (i == 0 ? ": " : " -> ") << to_string(nodes[i]);
  }
  return out.str();
}

}  // namespace

PoError::PoError(ErrorKind kind, std::vector<NodeId> nodes)
    : std::runtime_error(describe(kind, nodes)), kind_(kind), nodes_(std::move(nodes)) {}

ChainGeometry::ChainGeometry(std::vector<Index> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) {
    throw std::invalid_argument("chain geometry needs at least one chain");
  }
}

std::uint64_t ChainGeometry::total() const noexcept {
  return std::accumulate(lengths_.begin(), lengths_.end(), std::uint64_t{0});
}

void ChainGeometry::grow(Chain t, Index new_len) {
  if (t >= lengths_.size()) {
    throw PoError(ErrorKind::OutOfRange, {NodeId{t, new_len}});
  }
  if (new_len < lengths_[t]) {
    throw std::invalid_argument("chain " + std::to_string(t) + " cannot shrink from " +
                                std::to_string(lengths_[t]) + " to " + std::to_string(new_len));
  }
  lengths_[t] = new_len;
}

void validate(NodeId node, const ChainGeometry& geom) {
  if (!geom.contains(node)) {
    throw PoError(ErrorKind::OutOfRange, {node});
  }
}

void validate_chain(Chain t, const ChainGeometry& geom) {
  if (t >= geom.k()) throw PoError(ErrorKind::OutOfRange, {NodeId{t, 0}});
}

void validate_cross_chain(NodeId u, NodeId v, const ChainGeometry& geom) {
  validate(u, geom);
  validate(v, geom);
  if (u.chain == v.chain) {
    throw PoError(ErrorKind::SameChainUpdate, {u, v});
  }
}

}  // namespace csst
