#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csst {

/// Position of an event inside its chain. Also the value domain of the
/// suffix-minima arrays, which store indices of other chains.
using Index = std::uint32_t;
/// Chain (thread) identifier in [0, k).
using Chain = std::uint32_t;

/// Sentinel strictly greater than every finite index ("no successor").
inline constexpr Index kInfinity = std::numeric_limits<Index>::max();

/// One event of a chain DAG.
struct NodeId {
  Chain chain = 0;
  Index index = 0;

  friend constexpr auto operator<=>(const NodeId&, const NodeId&) = default;
};

std::string to_string(NodeId node);

enum class ErrorKind {
  OutOfRange,
  SameChainUpdate,
  DuplicateEdge,
  MissingEdge,
  DeleteUnsupported,
  CycleDetected,
};

std::string_view to_string(ErrorKind kind);

/// Error raised by every partial-order backend. Carries the offending nodes.
class PoError : public std::runtime_error {
 public:
  PoError(ErrorKind kind, std::vector<NodeId> nodes);

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<NodeId>& nodes() const noexcept { return nodes_; }

 private:
  ErrorKind kind_;
  std::vector<NodeId> nodes_;
};

/// Number of chains and the declared length of each one. Chain edges
/// <t,i> -> <t,i+1> are implicit.
class ChainGeometry {
 public:
  explicit ChainGeometry(std::vector<Index> lengths);

  std::size_t k() const noexcept { return lengths_.size(); }
  Index length(Chain t) const { return lengths_.at(t); }
  const std::vector<Index>& lengths() const noexcept { return lengths_; }
  /// Total number of events, n.
  std::uint64_t total() const noexcept;

  bool contains(NodeId node) const noexcept {
    return node.chain < lengths_.size() && node.index < lengths_[node.chain];
  }

  /// Extends chain t to new_len events. Shrinking is rejected.
  void grow(Chain t, Index new_len);

  friend bool operator==(const ChainGeometry&, const ChainGeometry&) = default;

 private:
  std::vector<Index> lengths_;
};

/// Throws PoError(OutOfRange) unless node lies inside geom.
void validate(NodeId node, const ChainGeometry& geom);

/// Throws PoError(OutOfRange) unless t names a chain of geom.
void validate_chain(Chain t, const ChainGeometry& geom);

/// Shared precondition of insert_edge/delete_edge: both endpoints valid and
/// on different chains.
void validate_cross_chain(NodeId u, NodeId v, const ChainGeometry& geom);

}  // namespace csst
