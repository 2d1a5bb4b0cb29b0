#include "csst/harness/fuzz.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <unordered_map>

#include "csst/dynamic_po.hpp"
#include "csst/incremental_po.hpp"
#include "csst/oracle.hpp"

namespace csst::harness {

namespace {

std::vector<BackendId> selected_backends(const FuzzOptions& options) {
  if (!options.backends.empty()) return options.backends;
  if (options.decremental) return {BackendId::CsstDynamic, BackendId::Graph};
  return {BackendId::CsstIncremental, BackendId::PlainSegmentTree, BackendId::VectorClock};
}

std::size_t height_bound(std::size_t capacity, std::size_t density) {
  const std::size_t log = capacity <= 1 ? 0 : std::bit_width(capacity - 1);
  return std::min(std::max<std::size_t>(log, 1), density);
}

// Drives the backends under test and the oracle in lockstep, checking
// answers and structural invariants after every step.
class Runner {
 public:
  Runner(const FuzzOptions& options, const ChainGeometry& geom, FuzzStats& stats)
      : options_(options), oracle_(geom), stats_(stats), sources_(geom.k(), 0) {
    for (const BackendId id : selected_backends(options)) {
      Backend b;
      b.id = id;
      b.po = options.factory ? options.factory(id, geom) : make_backend(id, geom);
      b.inc = dynamic_cast<IncrementalPartialOrder*>(b.po.get());
      b.dyn = dynamic_cast<DynamicPartialOrder*>(b.po.get());
      const std::size_t k = geom.k();
      b.versions.assign(k * k, 0);
      backends_.push_back(std::move(b));
    }
  }

  OracleGraph& oracle() { return oracle_; }

  bool valid(const OpRecord& op) {
    const ChainGeometry& g = oracle_.geometry();
    switch (op.kind) {
      case OpKind::Init:
        return false;
      case OpKind::Insert:
        return g.contains(op.u) && g.contains(op.v) && op.u.chain != op.v.chain &&
               !oracle_.has_edge(op.u, op.v) && !oracle_.reachable(op.v, op.u);
      case OpKind::Delete:
        return g.contains(op.u) && g.contains(op.v) && oracle_.has_edge(op.u, op.v);
      case OpKind::Successor:
      case OpKind::Predecessor:
        return g.contains(op.u) && op.chain < g.k();
      case OpKind::Reachable:
        return g.contains(op.u) && g.contains(op.v);
      case OpKind::Grow:
        return op.chain < g.k() && op.length >= g.length(op.chain);
    }
    return false;
  }

  std::optional<std::string> step(const OpRecord& op) {
    const std::optional<Answer> want = apply(oracle_, op);
    track_density(op);
    for (auto& b : backends_) {
      std::optional<Answer> got;
      try {
        got = apply(*b.po, op);
      } catch (const std::exception& e) {
        return std::string(to_string(b.id)) + " threw on '" + to_string(op) + "': " + e.what();
      }
      if (want && (!got || *got != *want)) {
        return std::string(to_string(b.id)) + " answered '" +
               (got ? format_answer(op, *got) : std::string("nothing")) + "' but the oracle answered '" +
               format_answer(op, *want) + "' for '" + to_string(op) + "'";
      }
      if (b.dyn && op.is_query()) {
        const std::size_t rounds = b.dyn->last_closure_rounds();
        stats_.max_closure_rounds = std::max(stats_.max_closure_rounds, rounds);
        if (rounds > oracle_.geometry().k()) {
          ++stats_.round_violations;
          return "closure needed " + std::to_string(rounds) + " rounds for '" + to_string(op) + "'";
        }
      }
      if (options_.check_invariants && (op.kind == OpKind::Insert || op.kind == OpKind::Delete)) {
        if (auto failure = check_arrays(b, op)) return failure;
      }
    }
    switch (op.kind) {
      case OpKind::Insert: ++stats_.inserts; break;
      case OpKind::Delete: ++stats_.deletes; break;
      case OpKind::Grow: ++stats_.grows; break;
      case OpKind::Init: break;
      default: ++stats_.queries; break;
    }
    return std::nullopt;
  }

  void finish() {
    for (const auto& b : backends_) {
      stats_.node_counts[b.id] = b.po->node_count();
      const ArrayGrid* grid = b.inc ? &b.inc->arrays() : b.dyn ? &b.dyn->arrays() : nullptr;
      if (!grid) continue;
      const std::size_t k = grid->k();
      for (Chain from = 0; from < k; ++from) {
        for (Chain to = 0; to < k; ++to) {
          if (from == to) continue;
          const auto& a = grid->at(from, to);
          if (4 * a.density() >= a.capacity()) stats_.final_sparse = false;
        }
      }
    }
  }

 private:
  struct Backend {
    BackendId id{};
    std::unique_ptr<PartialOrder> po;
    IncrementalPartialOrder* inc = nullptr;
    DynamicPartialOrder* dyn = nullptr;
    std::vector<std::uint64_t> versions;
  };

  static std::uint64_t key(NodeId u) { return (static_cast<std::uint64_t>(u.chain) << 32) | u.index; }

  void track_density(const OpRecord& op) {
    if (op.kind == OpKind::Insert) {
      if (out_degree_[key(op.u)]++ == 0) ++sources_[op.u.chain];
    } else if (op.kind == OpKind::Delete) {
      auto it = out_degree_.find(key(op.u));
      if (--it->second == 0) {
        out_degree_.erase(it);
        --sources_[op.u.chain];
      }
    } else {
      return;
    }
    density_ = *std::max_element(sources_.begin(), sources_.end());
    stats_.max_cross_density = std::max(stats_.max_cross_density, density_);
  }

  std::optional<std::string> check_arrays(Backend& b, const OpRecord& op) {
    const ArrayGrid* grid = b.inc ? &b.inc->arrays() : b.dyn ? &b.dyn->arrays() : nullptr;
    if (!grid) return std::nullopt;
    const std::size_t k = grid->k();
    const std::string where = std::string(to_string(b.id)) + " after '" + to_string(op) + "': ";

    if (b.dyn) {
      const Index slot = grid->at(op.u.chain, op.v.chain).at(op.u.index);
      if (slot != b.dyn->edges().min_target(op.u, op.v.chain)) {
        ++stats_.slot_violations;
        return where + "array slot differs from the smallest stored edge target";
      }
    }
    for (Chain from = 0; from < k; ++from) {
      for (Chain to = 0; to < k; ++to) {
        if (from == to) continue;
        const auto& a = grid->at(from, to);
        std::uint64_t& seen = b.versions[from * k + to];
        if (a.version() == seen) continue;
        seen = a.version();

        ++stats_.height_checks;
        if (a.height() > height_bound(a.capacity(), a.density())) {
          ++stats_.height_violations;
          return where + "array " + std::to_string(from) + "->" + std::to_string(to) + " height " +
                 std::to_string(a.height()) + " exceeds bound";
        }
        if (a.density() > density_) {
          ++stats_.density_violations;
          return where + "array " + std::to_string(from) + "->" + std::to_string(to) + " density " +
                 std::to_string(a.density()) + " exceeds cross-chain density " +
                 std::to_string(density_);
        }
        if (const std::string broken = a.check_invariants(); !broken.empty()) {
          return where + "array " + std::to_string(from) + "->" + std::to_string(to) + ": " + broken;
        }
        if (b.dyn) {
          for (const auto& [j1, value] : a.entries()) {
            if (value != b.dyn->edges().min_target({from, j1}, to)) {
              ++stats_.slot_violations;
              return where + "array " + std::to_string(from) + "->" + std::to_string(to) +
                     " holds a value that is not an edge minimum";
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  const FuzzOptions& options_;
  OracleGraph oracle_;
  FuzzStats& stats_;
  std::vector<Backend> backends_;
  std::unordered_map<std::uint64_t, std::uint32_t> out_degree_;
  std::vector<std::size_t> sources_;
  std::size_t density_ = 0;
};

class Generator {
 public:
  Generator(const FuzzOptions& options, OracleGraph& oracle, std::mt19937_64& rng)
      : options_(options), oracle_(oracle), rng_(rng) {}

  OpRecord next() {
    const double r = unit();
    if (r < options_.query_ratio || oracle_.geometry().k() < 2) return query();
    if (r < options_.query_ratio + options_.grow_ratio) return grow();
    // Insertions can fail on saturated orders, so deletions are skipped while
    // they already exceed their share of the executed updates.
    const bool over_share = static_cast<double>(deletes_) > options_.delete_ratio * static_cast<double>(deletes_ + inserts_);
    if (options_.decremental && !live_.empty() && !over_share && unit() < options_.delete_ratio) return erase();
    if (auto op = insert()) return *op;
    return query();
  }

  // Keeps the live-edge list in sync with what was actually executed.
  void executed(const OpRecord& op) {
    if (op.kind == OpKind::Insert) {
      live_.emplace_back(op.u, op.v);
      ++inserts_;
    } else if (op.kind == OpKind::Delete) {
      ++deletes_;
      auto it = std::find(live_.begin(), live_.end(), std::make_pair(op.u, op.v));
      *it = live_.back();
      live_.pop_back();
    }
  }

 private:
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }

  NodeId node() {
    const ChainGeometry& g = oracle_.geometry();
    for (;;) {
      const Chain t = static_cast<Chain>(below(g.k()));
      if (g.length(t) > 0) return {t, static_cast<Index>(below(g.length(t)))};
    }
  }

  OpRecord query() {
    const NodeId u = node();
    switch (below(3)) {
      case 0: return OpRecord::successor(u, static_cast<Chain>(below(oracle_.geometry().k())));
      case 1: return OpRecord::predecessor(u, static_cast<Chain>(below(oracle_.geometry().k())));
      default: return OpRecord::reachable(u, node());
    }
  }

  // Chains never grow past max_len; a full chain yields a query instead.
  OpRecord grow() {
    const Chain t = static_cast<Chain>(below(oracle_.geometry().k()));
    const Index len = oracle_.geometry().length(t);
    if (len >= options_.max_len) return query();
    const Index want = len + 1 + static_cast<Index>(below(4));
    return OpRecord::grow(t, std::min(want, options_.max_len));
  }

  OpRecord erase() {
    const auto& [u, v] = live_[below(live_.size())];
    return OpRecord::erase(u, v);
  }

  std::optional<OpRecord> insert() {
    const ChainGeometry& g = oracle_.geometry();
    const std::size_t k = g.k();
    const bool allow_implied = unit() < options_.implied_ratio;
    for (int attempt = 0; attempt < 20; ++attempt) {
      const NodeId u = node();
      Chain t2 = static_cast<Chain>(below(k - 1));
      if (t2 >= u.chain) ++t2;
      const Index len = g.length(t2);
      if (len == 0) continue;
      const Index lo = u.index > options_.window ? u.index - options_.window : 0;
      if (lo >= len) continue;
      const Index hi = std::min<std::uint64_t>(len - 1, std::uint64_t{u.index} + options_.window);
      const NodeId v{t2, lo + static_cast<Index>(below(hi - lo + 1))};
      if (oracle_.has_edge(u, v) || oracle_.reachable(v, u)) continue;
      if (!allow_implied && oracle_.reachable(u, v)) continue;
      return OpRecord::insert(u, v);
    }
    // Dense orders rarely yield a pair by chance; look for the unordered
    // range of a few sources directly.
    for (int attempt = 0; attempt < 4; ++attempt) {
      const NodeId u = node();
      const Chain offset = static_cast<Chain>(below(k));
      for (Chain step = 0; step < k; ++step) {
        const Chain t2 = static_cast<Chain>((offset + step) % k);
        if (t2 == u.chain || g.length(t2) == 0) continue;
        const auto pred = oracle_.predecessor(u, t2);
        const auto succ = oracle_.successor(u, t2);
        std::uint64_t lo = pred ? std::uint64_t{*pred} + 1 : 0;
        std::uint64_t hi = succ ? std::uint64_t{*succ} : g.length(t2);  // exclusive
        lo = std::max<std::uint64_t>(lo, u.index > options_.window ? u.index - options_.window : 0);
        hi = std::min<std::uint64_t>(hi, std::uint64_t{u.index} + options_.window + 1);
        if (lo >= hi) continue;
        return OpRecord::insert(u, {t2, static_cast<Index>(lo + below(hi - lo))});
      }
    }
    return std::nullopt;
  }

  const FuzzOptions& options_;
  OracleGraph& oracle_;
  std::mt19937_64& rng_;
  std::vector<std::pair<NodeId, NodeId>> live_;
  std::size_t inserts_ = 0;
  std::size_t deletes_ = 0;
};

}  // namespace

std::optional<std::string> check_ops(const std::vector<OpRecord>& ops, const FuzzOptions& options,
                                     FuzzStats* stats) {
  if (ops.empty() || ops.front().kind != OpKind::Init) return std::nullopt;
  FuzzStats local;
  Runner runner(options, ChainGeometry(ops.front().lengths), stats ? *stats : local);
  for (std::size_t i = 1; i < ops.size(); ++i) {
    if (!runner.valid(ops[i])) return std::nullopt;
    if (auto failure = runner.step(ops[i])) return failure;
  }
  runner.finish();
  return std::nullopt;
}

std::vector<OpRecord> shrink_ops(std::vector<OpRecord> ops, const FuzzOptions& options) {
  FuzzOptions quiet = options;
  quiet.shrink = false;
  std::size_t budget = 4000;
  for (std::size_t chunk = std::max<std::size_t>(1, (ops.size() - 1) / 2); chunk >= 1; chunk /= 2) {
    bool removed = true;
    while (removed && budget > 0) {
      removed = false;
      for (std::size_t start = 1; start < ops.size() && budget > 0;) {
        const std::size_t stop = std::min(ops.size(), start + chunk);
        std::vector<OpRecord> candidate(ops.begin(), ops.begin() + start);
        candidate.insert(candidate.end(), ops.begin() + stop, ops.end());
        --budget;
        if (check_ops(candidate, quiet)) {
          ops = std::move(candidate);
          removed = true;
        } else {
          start = stop;
        }
      }
    }
    if (chunk == 1) break;
  }
  return ops;
}

FuzzReport fuzz(const FuzzOptions& options) {
  FuzzReport report;
  std::mt19937_64 rng(options.seed);
  std::vector<Index> lengths(options.k, options.max_len);
  if (options.random_lengths) {
    std::uniform_int_distribution<Index> len(1, std::max<Index>(options.max_len, 1));
    for (auto& l : lengths) l = len(rng);
  }
  report.ops.push_back(OpRecord::init(lengths));

  Runner runner(options, ChainGeometry(lengths), report.stats);
  Generator gen(options, runner.oracle(), rng);
  for (std::size_t i = 0; i < options.n_ops; ++i) {
    const OpRecord op = gen.next();
    report.ops.push_back(op);
    if (auto failure = runner.step(op)) {
      report.passed = false;
      report.failure = *failure;
      report.reproducer = options.shrink ? shrink_ops(report.ops, options) : report.ops;
      return report;
    }
    gen.executed(op);
  }
  runner.finish();
  return report;
}

std::string describe(const FuzzReport& report, const FuzzOptions& options) {
  std::ostringstream out;
  out << (report.passed ? "PASS" : "FAIL") << " seed=" << options.seed << " k=" << options.k
      << " max_len=" << options.max_len << " ops=" << report.ops.size() - 1
      << " inserts=" << report.stats.inserts << " deletes=" << report.stats.deletes
      << " queries=" << report.stats.queries << " max_rounds=" << report.stats.max_closure_rounds
      << '\n';
  if (!report.passed) {
    out << "failure: " << report.failure << '\n'
        << "reproducer (" << report.reproducer.size() << " records):\n"
        << format_oplog(report.reproducer);
  }
  return out.str();
}

}  // namespace csst::harness
