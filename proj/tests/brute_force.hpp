#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "csst/harness/satcheck.hpp"

namespace csst::testing {

/// Exhaustive sequential-consistency check: explores every interleaving that
/// respects program order and the trace orderings, memoized on thread
/// positions plus memory contents. A read must see a prior write.
class BruteForce {
 public:
  explicit BruteForce(const harness::Trace& trace) : trace_(trace) {
    for (const auto& e : trace.events) {
      if (e.thread >= threads_.size()) threads_.resize(e.thread + 1);
      if (e.index >= threads_[e.thread].size()) threads_[e.thread].resize(e.index + 1);
      threads_[e.thread][e.index] = &e;
    }
    for (const auto& [a, b] : trace.orderings) before_[b].push_back(a);
  }

  bool consistent() {
    std::vector<Index> pos(threads_.size(), 0);
    std::map<std::string, long long> memory;
    return explore(pos, memory);
  }

 private:
  bool explore(std::vector<Index>& pos, std::map<std::string, long long>& memory) {
    bool done = true;
    for (Chain t = 0; t < threads_.size(); ++t) done &= pos[t] == threads_[t].size();
    if (done) return true;
    if (!seen_.insert({pos, memory}).second) return false;
    for (Chain t = 0; t < threads_.size(); ++t) {
      if (pos[t] == threads_[t].size()) continue;
      const harness::TraceEvent& e = *threads_[t][pos[t]];
      bool ready = true;
      for (const NodeId a : before_[e.node()]) ready &= a.index < pos[a.chain];
      if (!ready) continue;
      if (e.is_write) {
        const auto saved = memory;
        memory[e.variable] = e.value;
        ++pos[t];
        const bool ok = explore(pos, memory);
        --pos[t];
        memory = saved;
        if (ok) return true;
      } else {
        const auto it = memory.find(e.variable);
        if (it == memory.end() || it->second != e.value) continue;
        ++pos[t];
        const bool ok = explore(pos, memory);
        --pos[t];
        if (ok) return true;
      }
    }
    return false;
  }

  const harness::Trace& trace_;
  std::vector<std::vector<const harness::TraceEvent*>> threads_;
  std::map<NodeId, std::vector<NodeId>> before_;
  std::set<std::pair<std::vector<Index>, std::map<std::string, long long>>> seen_;
};

inline bool brute_force_consistent(const harness::Trace& trace) { return BruteForce(trace).consistent(); }

/// Random trace of at most max_events events over 2 to 4 threads and two
/// variables. Every read matches the value of some write; a few orderings
/// between random events are added.
inline harness::Trace random_trace(std::mt19937_64& rng, std::size_t max_events) {
  harness::Trace trace;
  const std::size_t threads = 2 + rng() % 3;
  const std::size_t n = 2 + rng() % (max_events - 1);
  std::vector<Index> next(threads, 0);
  std::map<std::string, std::vector<long long>> written;
  const char* vars[] = {"x", "y"};
  for (std::size_t i = 0; i < n; ++i) {
    harness::TraceEvent e;
    e.thread = static_cast<Chain>(rng() % threads);
    e.index = next[e.thread]++;
    e.variable = vars[rng() % 2];
    auto& values = written[e.variable];
    e.is_write = values.empty() || rng() % 2 == 0;
    e.value = e.is_write ? static_cast<long long>(rng() % 3) : values[rng() % values.size()];
    if (e.is_write) values.push_back(e.value);
    trace.events.push_back(e);
  }
  const std::size_t orderings = rng() % 3;
  for (std::size_t i = 0; i < orderings; ++i) {
    const auto& a = trace.events[rng() % n];
    const auto& b = trace.events[rng() % n];
    if (a.thread != b.thread) trace.orderings.emplace_back(a.node(), b.node());
  }
  return trace;
}

}  // namespace csst::testing
