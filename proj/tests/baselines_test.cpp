#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "csst/graph_po.hpp"
#include "csst/plain_st_po.hpp"
#include "csst/vector_clock_po.hpp"
#include "test_support.hpp"

using namespace csst;
using csst::testing::random_dag;
using csst::testing::snapshot;
using csst::testing::uniform;

namespace {

class BaselineTest : public ::testing::TestWithParam<BackendId> {
 protected:
  std::unique_ptr<PartialOrder> make(ChainGeometry geom) { return make_backend(GetParam(), std::move(geom)); }
};

std::string backend_label(const ::testing::TestParamInfo<BackendId>& info) {
  switch (info.param) {
    case BackendId::VectorClock:
      return "VectorClock";
    case BackendId::Graph:
      return "Graph";
    case BackendId::PlainSegmentTree:
      return "PlainSegmentTree";
    default:
      return "Other";
  }
}

}  // namespace

TEST_P(BaselineTest, FourChainExample) {
  auto po = make(uniform(4, 3));
  po->insert_edge({0, 1}, {1, 0});
  po->insert_edge({0, 2}, {3, 2});
  po->insert_edge({1, 1}, {2, 1});
  po->insert_edge({2, 2}, {3, 1});
  EXPECT_EQ(po->successor({0, 0}, 3), std::optional<Index>(1));
  EXPECT_EQ(po->predecessor({3, 1}, 0), std::optional<Index>(1));
  EXPECT_TRUE(po->reachable({0, 0}, {3, 1}));
  EXPECT_FALSE(po->reachable({0, 0}, {3, 0}));
}

TEST_P(BaselineTest, ThreeChainExample) {
  auto po = make(ChainGeometry({3, 3, 2}));
  po->insert_edge({1, 0}, {2, 0});
  po->insert_edge({1, 1}, {2, 1});
  po->insert_edge({2, 1}, {1, 2});
  po->insert_edge({1, 2}, {0, 1});
  EXPECT_EQ(po->successor({1, 0}, 2), std::optional<Index>(0));
  EXPECT_EQ(po->predecessor({0, 2}, 1), std::optional<Index>(2));
  EXPECT_EQ(po->successor({1, 0}, 0), std::optional<Index>(1));
  EXPECT_EQ(po->successor({0, 0}, 1), std::nullopt);
}

TEST_P(BaselineTest, SameChainConventions) {
  auto po = make(uniform(2, 5));
  EXPECT_EQ(po->successor({1, 3}, 1), std::optional<Index>(3));
  EXPECT_EQ(po->predecessor({1, 3}, 1), std::optional<Index>(3));
  EXPECT_TRUE(po->reachable({0, 1}, {0, 4}));
  EXPECT_FALSE(po->reachable({0, 4}, {0, 1}));
}

TEST_P(BaselineTest, MatchesOracleOnRandomDags) {
  std::mt19937_64 rng(static_cast<unsigned>(GetParam()) + 100);
  for (int instance = 0; instance < 10; ++instance) {
    const ChainGeometry geom = uniform(2 + instance % 5, 24 + instance * 3);
    auto po = make(geom);
    OracleGraph oracle(geom);
    const auto edges = random_dag(geom, 20 + instance * 10, rng);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      po->insert_edge(edges[i].first, edges[i].second);
      oracle.insert_edge(edges[i].first, edges[i].second);
      if (i % 10 == 9) ASSERT_EQ(snapshot(*po), snapshot(oracle));
    }
    ASSERT_EQ(snapshot(*po), snapshot(oracle));
  }
}

TEST_P(BaselineTest, GrowKeepsOrderings) {
  auto po = make(ChainGeometry({2, 2, 1}));
  po->insert_edge({0, 1}, {1, 0});
  po->grow(1, 8);
  po->grow(2, 4);
  po->insert_edge({1, 7}, {2, 3});
  EXPECT_TRUE(po->reachable({0, 0}, {2, 3}));
  EXPECT_EQ(po->predecessor({2, 3}, 0), std::optional<Index>(1));
  EXPECT_EQ(po->successor({0, 1}, 2), std::optional<Index>(3));
}

TEST_P(BaselineTest, DeleteSupportMatchesRegistry) {
  auto po = make(uniform(2, 4));
  EXPECT_EQ(po->supports_delete(), backend_supports_delete(GetParam()));
  po->insert_edge({0, 1}, {1, 2});
  if (po->supports_delete()) {
    po->delete_edge({0, 1}, {1, 2});
    EXPECT_FALSE(po->reachable({0, 1}, {1, 2}));
  } else {
    try {
      po->delete_edge({0, 1}, {1, 2});
      ADD_FAILURE() << "delete accepted";
    } catch (const PoError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DeleteUnsupported);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Baselines, BaselineTest,
                         ::testing::Values(BackendId::VectorClock, BackendId::Graph,
                                           BackendId::PlainSegmentTree),
                         backend_label);

// Regression: an edge into an event past the target chain's watermark must
// still propagate to clocks reached through later edges.
TEST(VectorClockPO, PropagatesPastWatermark) {
  VectorClockPO po(uniform(6, 256));
  po.insert_edge({4, 236}, {1, 34});
  po.insert_edge({2, 126}, {4, 77});
  EXPECT_EQ(po.predecessor({1, 197}, 2), std::optional<Index>(126));
  EXPECT_EQ(po.successor({2, 0}, 1), std::optional<Index>(34));
}

TEST(VectorClockPO, MaterializesOnlyUpToWatermarks) {
  VectorClockPO po(uniform(3, 1000));
  EXPECT_EQ(po.node_count(), 0u);
  po.insert_edge({0, 10}, {1, 20});
  EXPECT_LE(po.node_count(), 3u * 21);
}

TEST(GraphPO, DeletionsMatchOracle) {
  std::mt19937_64 rng(8);
  const ChainGeometry geom = uniform(4, 32);
  GraphPO po(geom);
  OracleGraph oracle(geom);
  auto edges = random_dag(geom, 80, rng);
  for (const auto& [u, v] : edges) {
    po.insert_edge(u, v);
    oracle.insert_edge(u, v);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    po.delete_edge(edges[i].first, edges[i].second);
    oracle.delete_edge(edges[i].first, edges[i].second);
    if (i % 8 == 0) ASSERT_EQ(snapshot(po), snapshot(oracle));
  }
  EXPECT_THROW(po.delete_edge(edges[0].first, edges[0].second), PoError);
}

TEST(PlainSegmentTree, MirrorsLinearScan) {
  std::mt19937_64 rng(4);
  for (std::size_t cap : {1u, 2u, 3u, 5u, 8u, 31u, 64u, 100u}) {
    PlainSegmentTree tree(cap);
    std::vector<Index> mirror(cap, kInfinity);
    EXPECT_GE(tree.node_count(), 2 * cap);
    for (int step = 0; step < 300; ++step) {
      const Index i = static_cast<Index>(rng() % cap);
      const Index value = rng() % 4 == 0 ? kInfinity : static_cast<Index>(rng() % 50);
      tree.update(i, value);
      mirror[i] = value;
      const Index q = static_cast<Index>(rng() % cap);
      ASSERT_EQ(tree.at(q), mirror[q]);
      ASSERT_EQ(tree.min_suffix(q), *std::min_element(mirror.begin() + q, mirror.end()));
      const Index bound = static_cast<Index>(rng() % 50);
      std::optional<Index> want;
      for (Index j = 0; j < cap; ++j) {
        if (mirror[j] <= bound) want = j;
      }
      ASSERT_EQ(tree.argleq(bound), want);
    }
  }
}

TEST(PlainSegmentTree, GrowKeepsValues) {
  PlainSegmentTree tree(3);
  tree.update(1, 7);
  tree.grow(9);
  EXPECT_EQ(tree.capacity(), 9u);
  EXPECT_EQ(tree.at(1), 7u);
  EXPECT_EQ(tree.min_suffix(2), kInfinity);
  tree.update(8, 2);
  EXPECT_EQ(tree.min_suffix(0), 2u);
}

TEST(PlainStPO, MemoryIsDenseInChainLength) {
  PlainStPO po(uniform(3, 100));
  // Six off-diagonal trees of 2 * 128 slots each.
  EXPECT_EQ(po.node_count(), 6u * 256);
}
