#include "csst/harness/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

namespace csst::harness {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t cross_density(const std::vector<std::pair<NodeId, NodeId>>& edges, std::size_t k) {
  std::vector<std::set<Index>> sources(k);
  for (const auto& [u, v] : edges) sources[u.chain].insert(u.index);
  std::size_t d = 0;
  for (const auto& s : sources) d = std::max(d, s.size());
  return d;
}

}  // namespace

BenchResult run_bench(const BenchConfig& config) {
  BenchResult result;
  result.config = config;
  const ChainGeometry geom(std::vector<Index>(config.k, config.ell));
  std::mt19937_64 rng(config.seed);
  auto below = [&](std::uint64_t n) {
    return static_cast<Index>(std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng));
  };

  // Warm-up pass: generates the workload with the backend's own reachability.
  {
    auto po = make_backend(config.backend, geom);
    const std::size_t attempts = config.insert_factor * config.ell;
    for (std::size_t a = 0; a < attempts && config.k >= 2; ++a) {
      const Chain t1 = below(config.k);
      Chain t2 = below(config.k - 1);
      if (t2 >= t1) ++t2;
      const Index i = below(config.ell);
      const Index lo = i > config.window ? i - config.window : 0;
      const Index hi = std::min<std::uint64_t>(config.ell - 1, std::uint64_t{i} + config.window);
      const Index j = lo + below(hi - lo + 1);
      const NodeId u{t1, i};
      const NodeId v{t2, j};
      if (po->reachable(u, v) || po->reachable(v, u)) continue;
      po->insert_edge(u, v);
      result.edges.emplace_back(u, v);
    }
  }
  result.inserted_edges = result.edges.size();
  result.density_max = cross_density(result.edges, config.k);

  auto po = make_backend(config.backend, geom);
  const auto insert_start = Clock::now();
  for (const auto& [u, v] : result.edges) po->insert_edge(u, v);
  const auto insert_ns =
      std::chrono::duration<double, std::nano>(Clock::now() - insert_start).count();
  if (!result.edges.empty()) result.mean_insert_ns = insert_ns / result.edges.size();

  std::vector<std::pair<NodeId, NodeId>> queries;
  queries.reserve(config.queries);
  for (std::size_t q = 0; q < config.queries; ++q) {
    const NodeId u{below(config.k), below(config.ell)};
    const NodeId v{below(config.k), below(config.ell)};
    queries.emplace_back(u, v);
  }
  std::size_t hits = 0;
  for (const auto& [u, v] : queries) hits += po->reachable(u, v);
  const auto query_start = Clock::now();
  for (const auto& [u, v] : queries) hits += po->reachable(u, v);
  const auto query_ns = std::chrono::duration<double, std::nano>(Clock::now() - query_start).count();
  if (!queries.empty()) result.mean_query_ns = query_ns / queries.size();
  // Keeps the query loops observable to the optimizer.
  if (hits == static_cast<std::size_t>(-1)) result.mean_query_ns += 1;
  return result;
}

std::string csv_header() {
  return "backend,k,ell,window,mean_insert_ns,mean_query_ns,inserted_edges,density_max";
}

std::string to_csv_row(const BenchResult& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  out << to_string(r.config.backend) << ',' << r.config.k << ',' << r.config.ell << ','
      << r.config.window << ',' << r.mean_insert_ns << ',' << r.mean_query_ns << ','
      << r.inserted_edges << ',' << r.density_max;
  return out.str();
}

}  // namespace csst::harness
