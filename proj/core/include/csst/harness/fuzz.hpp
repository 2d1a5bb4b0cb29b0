#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csst/harness/oplog.hpp"
#include "csst/partial_order.hpp"

namespace csst::harness {

using BackendFactory =
    std::function<std::unique_ptr<PartialOrder>(BackendId, const ChainGeometry&)>;

struct FuzzOptions {
  std::size_t k = 4;
  Index max_len = 64;
  std::size_t n_ops = 2000;
  std::uint64_t seed = 1;
  /// Mix deletions of live edges into the update stream.
  bool decremental = false;
  /// Share of updates that delete a live edge (decremental runs only).
  double delete_ratio = 0.3;
  /// Share of operations that are queries.
  double query_ratio = 0.5;
  /// Share of operations that grow a chain by a few events, up to max_len.
  double grow_ratio = 0.0;
  /// Share of insertions allowed to connect already-ordered endpoints.
  double implied_ratio = 0.1;
  /// Maximum |i - j| between the endpoints of an inserted edge.
  Index window = 10000;
  /// Draw chain lengths from [1, max_len] instead of fixing them to max_len.
  bool random_lengths = false;
  bool check_invariants = true;
  bool shrink = true;
  /// Backends under test. Empty selects csst-inc, st and vc for insert-only
  /// runs and csst-dyn and graph for decremental ones.
  std::vector<BackendId> backends;
  /// Constructs backends; defaults to make_backend. Tests use it to inject
  /// faulty implementations.
  BackendFactory factory;
};

struct FuzzStats {
  std::size_t inserts = 0;
  std::size_t deletes = 0;
  std::size_t queries = 0;
  std::size_t grows = 0;
  std::size_t height_checks = 0;
  std::size_t height_violations = 0;
  std::size_t density_violations = 0;
  std::size_t slot_violations = 0;
  std::size_t round_violations = 0;
  std::size_t max_closure_rounds = 0;
  /// Largest cross-chain density seen at any point.
  std::size_t max_cross_density = 0;
  /// Final node counts per backend.
  std::map<BackendId, std::size_t> node_counts;
  /// Whether every csst array ended below a quarter of its capacity.
  bool final_sparse = true;
};

struct FuzzReport {
  bool passed = true;
  std::string failure;
  /// Every operation executed, init first.
  std::vector<OpRecord> ops;
  /// Minimized failing op-log; empty on success.
  std::vector<OpRecord> reproducer;
  FuzzStats stats;
};

FuzzReport fuzz(const FuzzOptions& options);

/// Replays ops against the selected backends and the oracle. Returns the
/// first failure, or nullopt when all agree. Sequences that are not valid
/// workloads (absent deletes, duplicate or cyclic inserts, nodes outside the
/// geometry) never count as failures.
std::optional<std::string> check_ops(const std::vector<OpRecord>& ops, const FuzzOptions& options,
                                     FuzzStats* stats = nullptr);

/// Greedy chunk-removal minimization keeping check_ops failing.
std::vector<OpRecord> shrink_ops(std::vector<OpRecord> ops, const FuzzOptions& options);

/// Human-readable verdict: "PASS ..." or "FAIL ..." plus the reproducer.
std::string describe(const FuzzReport& report, const FuzzOptions& options);

}  // namespace csst::harness
