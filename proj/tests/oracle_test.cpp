#include <gtest/gtest.h>

#include <random>

#include "csst/oracle.hpp"
#include "test_support.hpp"

using namespace csst;
using csst::testing::random_dag;
using csst::testing::uniform;

namespace {

OracleGraph four_chain_example() {
  OracleGraph oracle(uniform(4, 3));
  oracle.insert_edge({0, 1}, {1, 0});
  oracle.insert_edge({0, 2}, {3, 2});
  oracle.insert_edge({1, 1}, {2, 1});
  oracle.insert_edge({2, 2}, {3, 1});
  return oracle;
}

}  // namespace

TEST(OracleGraph, FourChainExample) {
  OracleGraph oracle = four_chain_example();
  EXPECT_EQ(oracle.successor({0, 0}, 3), std::optional<Index>(1));
  EXPECT_EQ(oracle.predecessor({3, 1}, 0), std::optional<Index>(1));
  EXPECT_TRUE(oracle.reachable({0, 0}, {3, 1}));
  EXPECT_FALSE(oracle.reachable({0, 0}, {3, 0}));
  oracle.delete_edge({2, 2}, {3, 1});
  EXPECT_EQ(oracle.successor({0, 0}, 3), std::optional<Index>(2));
}

TEST(OracleGraph, EmptyEdgeSetIsChainOrderOnly) {
  OracleGraph oracle(uniform(3, 5));
  for (Chain t = 0; t < 3; ++t) {
    for (Index i = 0; i < 5; ++i) {
      for (Chain t2 = 0; t2 < 3; ++t2) {
        const std::optional<Index> same = t == t2 ? std::optional<Index>(i) : std::nullopt;
        EXPECT_EQ(oracle.successor({t, i}, t2), same);
        EXPECT_EQ(oracle.predecessor({t, i}, t2), same);
      }
    }
  }
  EXPECT_EQ(oracle.cross_chain_density(), 0u);
}

TEST(OracleGraph, AnswersAreExtremalReachableNodes) {
  std::mt19937_64 rng(13);
  const ChainGeometry geom = uniform(4, 20);
  OracleGraph oracle(geom);
  for (const auto& [u, v] : random_dag(geom, 40, rng)) oracle.insert_edge(u, v);
  for (Chain t = 0; t < 4; ++t) {
    for (Index i = 0; i < 20; ++i) {
      const NodeId u{t, i};
      for (Chain t2 = 0; t2 < 4; ++t2) {
        const auto succ = oracle.successor(u, t2);
        const auto pred = oracle.predecessor(u, t2);
        for (Index j = 0; j < 20; ++j) {
          const bool forward = oracle.reachable(u, {t2, j});
          const bool backward = oracle.reachable({t2, j}, u);
          EXPECT_EQ(forward, succ && j >= *succ);
          EXPECT_EQ(backward, pred && j <= *pred);
        }
      }
    }
  }
}

TEST(OracleGraph, HopBoundedSuccessor) {
  OracleGraph oracle = four_chain_example();
  EXPECT_EQ(oracle.successor_within_hops({0, 0}, 3, 1), std::optional<Index>(2));
  EXPECT_EQ(oracle.successor_within_hops({0, 0}, 3, 2), std::optional<Index>(2));
  EXPECT_EQ(oracle.successor_within_hops({0, 0}, 3, 3), std::optional<Index>(1));
  EXPECT_EQ(oracle.successor_within_hops({0, 0}, 2, 1), std::nullopt);
  EXPECT_EQ(oracle.successor_within_hops({0, 0}, 2, 2), std::optional<Index>(1));
  EXPECT_EQ(oracle.successor_within_hops({0, 1}, 0, 0), std::optional<Index>(1));
}

TEST(OracleGraph, DensityCountsDistinctSources) {
  OracleGraph oracle(uniform(3, 10));
  oracle.insert_edge({0, 1}, {1, 2});
  oracle.insert_edge({0, 1}, {2, 2});
  oracle.insert_edge({0, 4}, {1, 8});
  oracle.insert_edge({1, 0}, {2, 0});
  EXPECT_EQ(oracle.cross_chain_density(), 2u);
  oracle.delete_edge({0, 4}, {1, 8});
  EXPECT_EQ(oracle.cross_chain_density(), 1u);
}

TEST(OracleGraph, RejectsInvalidUpdates) {
  OracleGraph oracle(uniform(2, 4));
  auto kind_of = [&](auto&& fn) {
    try {
      fn();
    } catch (const PoError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error";
    return ErrorKind::OutOfRange;
  };
  oracle.insert_edge({0, 0}, {1, 0});
  EXPECT_EQ(kind_of([&] { oracle.insert_edge({0, 0}, {1, 0}); }), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of([&] { oracle.delete_edge({0, 1}, {1, 0}); }), ErrorKind::MissingEdge);
  EXPECT_EQ(kind_of([&] { oracle.insert_edge({0, 1}, {0, 3}); }), ErrorKind::SameChainUpdate);
  EXPECT_EQ(kind_of([&] { oracle.insert_edge({0, 4}, {1, 0}); }), ErrorKind::OutOfRange);
  EXPECT_TRUE(oracle.has_edge({0, 0}, {1, 0}));
  EXPECT_EQ(oracle.edges().size(), 1u);
}

TEST(OracleGraph, GrowAppendsEvents) {
  OracleGraph oracle(ChainGeometry({2, 2}));
  oracle.insert_edge({0, 1}, {1, 1});
  oracle.grow(1, 5);
  EXPECT_TRUE(oracle.reachable({0, 0}, {1, 4}));
  EXPECT_EQ(oracle.predecessor({1, 4}, 0), std::optional<Index>(1));
}
