#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "csst/types.hpp"

namespace csst::harness {

struct TraceEvent {
  Chain thread = 0;
  Index index = 0;
  bool is_write = false;
  std::string variable;
  long long value = 0;

  NodeId node() const { return {thread, index}; }
};

/// A concurrent trace: events in file order plus orderings known up front
/// (for instance from synchronization).
///
/// Text format, one record per line, '#' comments:
///   e <thread> <index> <w|r> <var> <value>
///   o <t1> <i1> <t2> <i2>      (event <t1,i1> happens before <t2,i2>)
struct Trace {
  std::vector<TraceEvent> events;
  std::vector<std::pair<NodeId, NodeId>> orderings;

  ChainGeometry geometry() const;
  const TraceEvent& at(NodeId node) const;
};

/// Throws ParseError on malformed input, non-dense per-thread indices,
/// orderings naming unknown events, and reads no write could satisfy.
Trace parse_trace(std::istream& in);
Trace parse_trace_string(const std::string& text);

struct SatResult {
  bool consistent = false;
  /// Witness: read -> write it reads from. Empty when inconsistent.
  std::map<NodeId, NodeId> reads_from;
  /// One line per decision, e.g. "try <0,2> <- <1,0>: rejected (cycle)".
  std::vector<std::string> log;
};

/// Decides whether some interleaving of the trace (respecting program order
/// and the given orderings) lets every read observe the latest preceding
/// write to its variable with the same value.
///
/// Backtracks over reads-from candidates in trace order. Each choice w -> r
/// is saturated: another write w' to the same variable that precedes r must
/// precede w, and one that follows w must follow r. Orderings go into a
/// dynamic partial order with the cycle guard on; a cycle rejects the
/// candidate and its orderings are deleted again. Once every read is
/// assigned, writes still unordered against a choice are branched on.
SatResult satcheck(const Trace& trace);

/// "CONSISTENT" followed by "rf <t> <i> <- <t> <i>" lines, or "INCONSISTENT".
std::string format_result(const SatResult& result);

}  // namespace csst::harness
