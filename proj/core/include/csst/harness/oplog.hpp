#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "csst/partial_order.hpp"

namespace csst::harness {

enum class OpKind { Init, Insert, Delete, Successor, Predecessor, Reachable, Grow };

/// One line of an op-log:
///   init <k> <len_0> ... <len_{k-1}>
///   ins|del|reach <t1> <j1> <t2> <j2>
///   succ|pred <t1> <j1> <t2>
///   grow <t> <new_len>
struct OpRecord {
  OpKind kind = OpKind::Init;
  NodeId u;
  NodeId v;
  /// Target chain of succ/pred, chain of grow.
  Chain chain = 0;
  /// New length for grow.
  Index length = 0;
  /// Chain lengths for init.
  std::vector<Index> lengths;

  static OpRecord init(std::vector<Index> lengths);
  static OpRecord insert(NodeId u, NodeId v);
  static OpRecord erase(NodeId u, NodeId v);
  static OpRecord successor(NodeId u, Chain t);
  static OpRecord predecessor(NodeId u, Chain t);
  static OpRecord reachable(NodeId u, NodeId v);
  static OpRecord grow(Chain t, Index new_len);

  bool is_query() const noexcept {
    return kind == OpKind::Successor || kind == OpKind::Predecessor || kind == OpKind::Reachable;
  }

  friend bool operator==(const OpRecord&, const OpRecord&) = default;
};

std::string to_string(const OpRecord& op);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Parses a whole op-log. The first record must be init; operands of later
/// records are checked against the geometry declared so far (grow included).
/// Blank lines and '#' comments are skipped.
std::vector<OpRecord> parse_oplog(std::istream& in);
std::vector<OpRecord> parse_oplog_string(const std::string& text);

std::string format_oplog(const std::vector<OpRecord>& ops);

/// Result of a query: reach yields a bool, succ/pred an optional index.
using Answer = std::variant<bool, std::optional<Index>>;

/// Runs one record against a backend. Returns the answer for queries.
std::optional<Answer> apply(PartialOrder& po, const OpRecord& op);

/// "succ -> 3", "succ -> inf", "pred -> none", "reach -> true".
std::string format_answer(const OpRecord& op, const Answer& answer);

}  // namespace csst::harness
