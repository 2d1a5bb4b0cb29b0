#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csst/partial_order.hpp"

namespace csst::harness {

struct BenchConfig {
  std::size_t k = 10;
  /// Events per chain.
  Index ell = 1000;
  /// Maximum |i - j| between the endpoints of a generated edge.
  Index window = 10000;
  /// Insertion attempts = insert_factor * ell.
  std::size_t insert_factor = 20;
  /// Random reachability queries issued on the final order.
  std::size_t queries = 1000000;
  std::uint64_t seed = 1;
  BackendId backend = BackendId::CsstDynamic;
};

struct BenchResult {
  BenchConfig config;
  double mean_insert_ns = 0;
  double mean_query_ns = 0;
  std::size_t inserted_edges = 0;
  /// Cross-chain density of the inserted edge set.
  std::size_t density_max = 0;
  /// Inserted edges in insertion order.
  std::vector<std::pair<NodeId, NodeId>> edges;
};

/// Runs the scalability workload. A first pass draws random cross-chain pairs
/// within the window and inserts those whose endpoints are unordered (every
/// draw counts as one attempt); a second pass replays the accepted edges into
/// a fresh instance under the timer. Queries get one untimed warm-up pass.
BenchResult run_bench(const BenchConfig& config);

std::string csv_header();
std::string to_csv_row(const BenchResult& result);

}  // namespace csst::harness
