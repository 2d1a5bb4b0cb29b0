#include "csst/harness/satcheck.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "csst/dynamic_po.hpp"
#include "csst/harness/oplog.hpp"

namespace csst::harness {

ChainGeometry Trace::geometry() const {
  std::vector<Index> lengths;
  for (const auto& e : events) {
    if (e.thread >= lengths.size()) lengths.resize(e.thread + 1, 0);
    lengths[e.thread] = std::max(lengths[e.thread], e.index + 1);
  }
  if (lengths.empty()) lengths.push_back(0);
  return ChainGeometry(std::move(lengths));
}

const TraceEvent& Trace::at(NodeId node) const {
  const auto it = std::find_if(events.begin(), events.end(),
                               [&](const TraceEvent& e) { return e.node() == node; });
  if (it == events.end()) throw std::out_of_range("no event " + to_string(node));
  return *it;
}

Trace parse_trace(std::istream& in) {
  Trace trace;
  std::map<NodeId, std::size_t> line_of;
  std::vector<std::pair<std::size_t, std::pair<NodeId, NodeId>>> pending;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string tag;
    if (!(words >> tag)) continue;
    std::string extra;
    if (tag == "e") {
      TraceEvent e;
      std::string op;
      long long thread = -1, index = -1;
      if (!(words >> thread >> index >> op >> e.variable >> e.value) || thread < 0 || index < 0 ||
          (op != "w" && op != "r") || (words >> extra)) {
        throw ParseError(line_no, "expected 'e <thread> <index> <w|r> <var> <value>'");
      }
      e.thread = static_cast<Chain>(thread);
      e.index = static_cast<Index>(index);
      e.is_write = op == "w";
      if (!line_of.emplace(e.node(), line_no).second) {
        throw ParseError(line_no, "duplicate event " + to_string(e.node()));
      }
      trace.events.push_back(std::move(e));
    } else if (tag == "o") {
      long long t1 = -1, i1 = -1, t2 = -1, i2 = -1;
      if (!(words >> t1 >> i1 >> t2 >> i2) || t1 < 0 || i1 < 0 || t2 < 0 || i2 < 0 || (words >> extra)) {
        throw ParseError(line_no, "expected 'o <t1> <i1> <t2> <i2>'");
      }
      pending.push_back({line_no,
                         {NodeId{static_cast<Chain>(t1), static_cast<Index>(i1)},
                          NodeId{static_cast<Chain>(t2), static_cast<Index>(i2)}}});
    } else {
      throw ParseError(line_no, "unknown record '" + tag + "'");
    }
  }

  // Per-thread indices must be dense from zero.
  std::map<Chain, Index> count;
  for (const auto& e : trace.events) ++count[e.thread];
  for (const auto& e : trace.events) {
    if (e.index >= count[e.thread]) {
      throw ParseError(line_of[e.node()], "indices of thread " + std::to_string(e.thread) +
                                              " are not dense from 0");
    }
  }
  for (const auto& [at, edge] : pending) {
    if (!line_of.count(edge.first) || !line_of.count(edge.second)) {
      throw ParseError(at, "ordering names an unknown event");
    }
    trace.orderings.push_back(edge);
  }
  for (const auto& r : trace.events) {
    if (r.is_write) continue;
    const bool matched = std::any_of(trace.events.begin(), trace.events.end(), [&](const TraceEvent& w) {
      return w.is_write && w.variable == r.variable && w.value == r.value;
    });
    if (!matched) throw ParseError(line_of[r.node()], "read " + to_string(r.node()) + " has no matching write");
  }
  return trace;
}

Trace parse_trace_string(const std::string& text) {
  std::istringstream in(text);
  return parse_trace(in);
}

namespace {

class Solver {
 public:
  explicit Solver(const Trace& trace)
      : trace_(trace), po_(trace.geometry(), BackendOptions{.cycle_guard = true}) {
    for (const auto& e : trace.events) {
      if (e.is_write) {
        writes_[e.variable].push_back(&e);
      } else {
        reads_.push_back(&e);
      }
    }
  }

  SatResult run() {
    SatResult result;
    bool ok = true;
    for (const auto& [a, b] : trace_.orderings) {
      if (!order(a, b)) {
        log_.push_back("ordering " + to_string(a) + " -> " + to_string(b) + " closes a cycle");
        ok = false;
        break;
      }
    }
    result.consistent = ok && search(0);
    if (result.consistent) result.reads_from = rf_;
    result.log = std::move(log_);
    return result;
  }

 private:
  // Establishes a before b. False when b already precedes a.
  bool order(NodeId a, NodeId b) {
    if (po_.reachable(a, b)) return true;
    if (a.chain == b.chain) return false;
    try {
      po_.insert_edge(a, b);
    } catch (const PoError& e) {
      if (e.kind() == ErrorKind::CycleDetected) return false;
      throw;
    }
    trail_.emplace_back(a, b);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      po_.delete_edge(trail_.back().first, trail_.back().second);
      trail_.pop_back();
    }
  }

  bool saturate() {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& [r, w] : rf_) {
        for (const TraceEvent* other : writes_[trace_.at(r).variable]) {
          const NodeId x = other->node();
          if (x == w) continue;
          const std::size_t before = trail_.size();
          if (po_.reachable(x, r) && !order(x, w)) return false;
          if (po_.reachable(w, x) && !order(r, x)) return false;
          changed |= trail_.size() != before;
        }
      }
    }
    return true;
  }

  bool search(std::size_t next) {
    if (next == reads_.size()) return resolve();
    const TraceEvent& r = *reads_[next];
    for (const TraceEvent* w : writes_[r.variable]) {
      if (w->value != r.value) continue;
      const std::size_t mark = trail_.size();
      rf_[r.node()] = w->node();
      const bool ok = order(w->node(), r.node()) && saturate();
      log_.push_back("try " + to_string(r.node()) + " <- " + to_string(w->node()) + ": " +
                     (ok ? "accepted" : "rejected (cycle)"));
      if (ok && search(next + 1)) return true;
      rf_.erase(r.node());
      undo(mark);
    }
    return false;
  }

  // Branches on a write still unordered against some reads-from pair until
  // every linearization of the order agrees with the assignment.
  bool resolve() {
    for (const auto& [r, w] : rf_) {
      for (const TraceEvent* other : writes_[trace_.at(r).variable]) {
        const NodeId x = other->node();
        if (x == w || po_.reachable(x, w) || po_.reachable(r, x)) continue;
        const std::size_t mark = trail_.size();
        if (order(x, w) && saturate() && resolve()) return true;
        undo(mark);
        if (order(r, x) && saturate() && resolve()) return true;
        undo(mark);
        return false;
      }
    }
    return true;
  }

  const Trace& trace_;
  DynamicPartialOrder po_;
  std::vector<const TraceEvent*> reads_;
  std::map<std::string, std::vector<const TraceEvent*>> writes_;
  std::vector<std::pair<NodeId, NodeId>> trail_;
  std::map<NodeId, NodeId> rf_;
  std::vector<std::string> log_;
};

}  // namespace

SatResult satcheck(const Trace& trace) { return Solver(trace).run(); }

std::string format_result(const SatResult& result) {
  if (!result.consistent) return "INCONSISTENT\n";
  std::string out = "CONSISTENT\n";
  for (const auto& [r, w] : result.reads_from) {
    out += "rf " + std::to_string(r.chain) + " " + std::to_string(r.index) + " <- " +
           std::to_string(w.chain) + " " + std::to_string(w.index) + "\n";
  }
  return out;
}

}  // namespace csst::harness
