#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <vector>

#include "csst/suffix_min_array.hpp"

using csst::Index;
using csst::kInfinity;
using csst::SuffixMinArray;

namespace {

// Plain vector mirror with linear-time queries.
struct Mirror {
  explicit Mirror(std::size_t n) : values(n, kInfinity) {}

  Index min_suffix(Index i) const {
    Index best = kInfinity;
    for (std::size_t j = i; j < values.size(); ++j) best = std::min(best, values[j]);
    return best;
  }

  std::optional<Index> argleq(Index v) const {
    for (std::size_t j = values.size(); j-- > 0;) {
      if (values[j] != kInfinity && values[j] <= v) return static_cast<Index>(j);
    }
    return std::nullopt;
  }

  std::size_t density() const {
    return std::count_if(values.begin(), values.end(), [](Index x) { return x != kInfinity; });
  }

  std::vector<Index> values;
};

std::size_t ceil_log2(std::size_t n) { return n <= 1 ? 0 : std::bit_width(n - 1); }

}  // namespace

TEST(SuffixMinArray, EmptyArrayAnswersInfinity) {
  SuffixMinArray a(16);
  EXPECT_EQ(a.min_suffix(0), kInfinity);
  EXPECT_EQ(a.min_suffix(15), kInfinity);
  EXPECT_FALSE(a.argleq(1000).has_value());
  EXPECT_EQ(a.density(), 0u);
  EXPECT_EQ(a.height(), 0u);
  EXPECT_EQ(a.node_count(), 0u);
  EXPECT_EQ(a.to_string(), "-");
}

TEST(SuffixMinArray, SmallExampleQueries) {
  SuffixMinArray a(4);
  const Index values[] = {6, 9, 8, 10};
  for (Index i = 0; i < 4; ++i) a.update(i, values[i]);
  EXPECT_EQ(a.min_suffix(0), 6u);
  EXPECT_EQ(a.min_suffix(1), 8u);
  EXPECT_EQ(a.min_suffix(2), 8u);
  EXPECT_EQ(a.min_suffix(3), 10u);
  EXPECT_EQ(a.argleq(7), std::optional<Index>(0));
  EXPECT_EQ(a.argleq(9), std::optional<Index>(2));
  EXPECT_EQ(a.argleq(11), std::optional<Index>(3));
  EXPECT_FALSE(a.argleq(5).has_value());
  EXPECT_EQ(a.check_invariants(), "");
}

TEST(SuffixMinArray, InsertionSequenceBuildsExpectedShapes) {
  SuffixMinArray a(8, 1);
  a.update(2, 65);
  EXPECT_EQ(a.to_string(), "[0,7](65,2)");
  a.update(3, 42);
  EXPECT_EQ(a.to_string(), "[0,7](42,3){[2,2](65,2),-}");
  a.update(0, 59);
  EXPECT_EQ(a.to_string(), "[0,7](42,3){[0,3](59,0){-,[2,2](65,2)},-}");
  a.update(7, 13);
  EXPECT_EQ(a.to_string(), "[0,7](13,7){[0,3](42,3){[0,0](59,0),[2,2](65,2)},-}");
  EXPECT_EQ(a.check_invariants(), "");
  EXPECT_EQ(a.density(), 4u);
  EXPECT_EQ(a.node_count(), 4u);
}

TEST(SuffixMinArray, SuffixQueryStopsEarly) {
  SuffixMinArray a(8, 1);
  const Index values[] = {77, 42, 65, 59, 60, 61, 62, 100};
  for (Index i = 0; i < 8; ++i) a.update(i, values[i]);
  csst::QueryStats stats;
  EXPECT_EQ(a.min_suffix(2, &stats), 59u);
  EXPECT_LE(stats.max_level, 1u);
  EXPECT_EQ(a.check_invariants(), "");
}

TEST(SuffixMinArray, DenseRangeBecomesBlock) {
  SuffixMinArray a(64, 8);
  a.update(1, 50);
  const Index block[] = {11, 10, 15, kInfinity, 13, 22, 24, 29};
  for (Index i = 0; i < 8; ++i) {
    if (block[i] != kInfinity) a.update(32 + i, block[i]);
  }
  const auto nodes = a.nodes();
  ASSERT_EQ(nodes.size(), 3u);
  EXPECT_EQ(nodes[0].start, 0u);
  EXPECT_EQ(nodes[0].end, 63u);
  EXPECT_EQ(nodes[0].min, 10u);
  EXPECT_EQ(nodes[0].pos, 33u);
  EXPECT_EQ(nodes[1].start, 1u);
  EXPECT_EQ(nodes[1].end, 1u);
  EXPECT_EQ(nodes[1].min, 50u);
  EXPECT_FALSE(nodes[1].block);
  EXPECT_TRUE(nodes[2].block);
  EXPECT_EQ(nodes[2].start, 32u);
  EXPECT_EQ(nodes[2].end, 39u);
  EXPECT_EQ(a.node_count(), 3u);
  EXPECT_EQ(a.min_suffix(2), 10u);
  EXPECT_EQ(a.min_suffix(34), 13u);
  EXPECT_EQ(a.argleq(12), std::optional<Index>(33));
  EXPECT_EQ(a.check_invariants(), "");
}

TEST(SuffixMinArray, OverwriteAndEraseRestoreState) {
  SuffixMinArray a(10);
  a.update(4, 7);
  a.update(4, 3);
  EXPECT_EQ(a.at(4), 3u);
  EXPECT_EQ(a.density(), 1u);
  a.update(4, 9);
  EXPECT_EQ(a.min_suffix(0), 9u);
  a.erase(4);
  EXPECT_EQ(a.density(), 0u);
  EXPECT_EQ(a.node_count(), 0u);
  EXPECT_EQ(a.min_suffix(0), kInfinity);
  a.erase(5);  // erasing an absent entry is a no-op
  EXPECT_EQ(a.density(), 0u);
}

TEST(SuffixMinArray, TiesPreferLargerIndex) {
  SuffixMinArray a(16, 1);
  a.update(3, 5);
  a.update(9, 5);
  a.update(12, 5);
  EXPECT_EQ(a.nodes().front().pos, 12u);
  EXPECT_EQ(a.argleq(5), std::optional<Index>(12));
  EXPECT_EQ(a.min_suffix(10), 5u);
  EXPECT_EQ(a.min_suffix(13), kInfinity);
  EXPECT_EQ(a.check_invariants(), "");
}

TEST(SuffixMinArray, CapacityOneAndBounds) {
  SuffixMinArray a(1);
  a.update(0, 4);
  EXPECT_EQ(a.min_suffix(0), 4u);
  EXPECT_EQ(a.height(), 1u);
  EXPECT_THROW(a.update(1, 4), std::out_of_range);
  EXPECT_THROW(a.min_suffix(5), std::out_of_range);
}

TEST(SuffixMinArray, GrowKeepsEntries) {
  SuffixMinArray a(5, 2);
  a.update(1, 8);
  a.update(4, 2);
  a.grow(300);
  EXPECT_EQ(a.capacity(), 300u);
  EXPECT_EQ(a.at(1), 8u);
  EXPECT_EQ(a.at(4), 2u);
  a.update(299, 1);
  EXPECT_EQ(a.min_suffix(5), 1u);
  EXPECT_EQ(a.min_suffix(2), 1u);
  EXPECT_EQ(a.argleq(3), std::optional<Index>(299));
  EXPECT_EQ(a.check_invariants(), "");
}

// Random updates/erasures mirrored against a plain vector across sizes and
// block thresholds; checks every query kind and the structural invariants.
class SuffixMinArrayMirror : public ::testing::TestWithParam<std::tuple<std::size_t, std::size_t>> {};

TEST_P(SuffixMinArrayMirror, MatchesPlainArray) {
  const auto [n, b] = GetParam();
  std::mt19937_64 rng(n * 131 + b);
  SuffixMinArray a(n, b);
  Mirror m(n);
  std::uniform_int_distribution<Index> idx(0, static_cast<Index>(n - 1));
  std::uniform_int_distribution<Index> val(0, static_cast<Index>(2 * n));
  for (int step = 0; step < 600; ++step) {
    const Index i = idx(rng);
    const Index v = rng() % 5 == 0 ? kInfinity : val(rng);
    a.update(i, v);
    m.values[i] = v;
    ASSERT_EQ(a.density(), m.density());
    if (b >= 2) {
      const std::size_t bound = std::min(std::max<std::size_t>(1, ceil_log2(n)), a.density());
      ASSERT_LE(a.height(), bound);
    }
    if (step % 10 == 0) ASSERT_EQ(a.check_invariants(), "") << a.to_string();
    const Index q = idx(rng);
    ASSERT_EQ(a.min_suffix(q), m.min_suffix(q));
    const Index w = val(rng);
    ASSERT_EQ(a.argleq(w), m.argleq(w));
    ASSERT_EQ(a.at(q), m.values[q]);
  }
  for (Index i = 0; i < n; ++i) ASSERT_EQ(a.min_suffix(i), m.min_suffix(i));
}

INSTANTIATE_TEST_SUITE_P(Sizes, SuffixMinArrayMirror,
                         ::testing::Combine(::testing::Values(1, 2, 3, 7, 8, 33, 100, 257),
                                            ::testing::Values(1, 2, 4, 32)));
