#include <gtest/gtest.h>

#include <array>
#include <queue>
#include <set>

#include "bcpoly/tableau.hpp"

using namespace bcpoly;

TEST(Partition, StripsTrailingZerosAndRejectsIncreasingParts) {
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_EQ(Partition({0}).length(), 0);
  EXPECT_THROW(Partition({1, 2}), Error);
  EXPECT_THROW(Partition({2, -1}), Error);
}

TEST(Partition, ParsesCommaLists) {
  EXPECT_EQ(parse_partition("3,1"), Partition({3, 1}));
  EXPECT_EQ(parse_partition(""), Partition());
  EXPECT_EQ(parse_partition("0"), Partition());
  EXPECT_THROW(parse_partition("3,,1"), Error);
  EXPECT_THROW(parse_partition("a"), Error);
  EXPECT_THROW(parse_partition("1,2"), Error);
}

TEST(Partition, CountsMatchThePartitionFunction) {
  const std::array<std::size_t, 9> p{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(partitions_of(k).size(), p[static_cast<std::size_t>(k)]);
  EXPECT_EQ(partitions_of(6, 2).size(), 4u);
}

TEST(Partition, ConjugateIsAnInvolution) {
  for (const auto& lambda : partitions_up_to(8)) {
    EXPECT_EQ(conjugate(conjugate(lambda)), lambda);
    EXPECT_EQ(conjugate(lambda).size(), lambda.size());
  }
  EXPECT_EQ(conjugate(Partition({3, 1})), Partition({2, 1, 1}));
}

TEST(Partition, ModifiedFrobeniusCoordinatesSumToSize) {
  for (const auto& lambda : partitions_up_to(8)) {
    auto f = modified_frobenius(lambda);
    Rational s = 0;
    for (const auto& v : f.rows) s += v;
    for (const auto& v : f.cols) s += v;
    EXPECT_EQ(s, Rational(lambda.size())) << to_string(lambda);
  }
}

namespace {
// Brute-force membership in the cone spanned by e_i - e_j (i < j) and e_i,
// by breadth-first search over a bounded box.
std::set<std::vector<int>> reachable_cone(int len, int bound) {
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < len; ++i) {
    std::vector<int> g(static_cast<std::size_t>(len), 0);
    g[static_cast<std::size_t>(i)] = 1;
    gens.push_back(g);
    for (int j = i + 1; j < len; ++j) {
      std::vector<int> h(static_cast<std::size_t>(len), 0);
      h[static_cast<std::size_t>(i)] = 1;
      h[static_cast<std::size_t>(j)] = -1;
      gens.push_back(h);
    }
  }
  std::set<std::vector<int>> seen{std::vector<int>(static_cast<std::size_t>(len), 0)};
  std::queue<std::vector<int>> todo;
  todo.push(*seen.begin());
  while (!todo.empty()) {
    auto v = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      auto w = v;
      bool inside = true;
      for (std::size_t k = 0; k < w.size(); ++k) {
        w[k] += g[k];
        inside = inside && std::abs(w[k]) <= bound;
      }
      if (inside && seen.insert(w).second) todo.push(w);
    }
  }
  return seen;
}
}  // namespace

TEST(Partition, LlOrderMatchesBruteForceCone) {
  const int len = 4;
  auto cone = reachable_cone(len, 7);
  auto shapes = partitions_up_to(6, len);
  for (const auto& mu : shapes)
    for (const auto& lambda : shapes) {
      std::vector<int> d;
      for (int i = 0; i < len; ++i) d.push_back(lambda.part(i) - mu.part(i));
      EXPECT_EQ(ll_order(mu, lambda), cone.count(d) > 0) << to_string(mu) << " " << to_string(lambda);
    }
}

TEST(Partition, ContainmentAndDominanceImplyLl) {
  auto shapes = partitions_up_to(6);
  for (const auto& mu : shapes)
    for (const auto& lambda : shapes) {
      if (contained_in(mu, lambda)) EXPECT_TRUE(ll_order(mu, lambda));
      if (dominated_by(mu, lambda)) EXPECT_TRUE(ll_order(mu, lambda));
    }
}

TEST(Partition, SubpartitionsAreExactlyTheContainedOnes) {
  for (const auto& lambda : partitions_up_to(6)) {
    auto subs = subpartitions(lambda);
    std::size_t expected = 0;
    for (const auto& mu : partitions_up_to(lambda.size()))
      if (contained_in(mu, lambda)) ++expected;
    EXPECT_EQ(subs.size(), expected);
    for (const auto& mu : subs) EXPECT_TRUE(contained_in(mu, lambda));
  }
}

TEST(Partition, HorizontalStrips) {
  EXPECT_TRUE(is_horizontal_strip(Partition({3, 1}), Partition({1})));
  EXPECT_TRUE(is_horizontal_strip(Partition({3, 1}), Partition({2, 1})));
  EXPECT_TRUE(is_horizontal_strip(Partition({2, 2}), Partition({2})));
  EXPECT_FALSE(is_horizontal_strip(Partition({2, 2}), Partition({1, 1})));
  EXPECT_FALSE(is_horizontal_strip(Partition({1, 1}), Partition()));
}

TEST(Tableau, SingleRowCountIsBinomial) {
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m) {
      auto stream = enumerate_reverse_tableaux(m ? Partition{m} : Partition(), n);
      long count = 0;
      while (stream.next()) ++count;
      EXPECT_EQ(Integer(count), binomial(n + m - 1, m));
    }
}

TEST(Tableau, CountMatchesHookContentFormula) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : partitions_up_to(5, n)) {
      Partition conj = conjugate(lambda);
      Rational expected = 1;
      for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
          expected *= Rational(n + j - i) / Rational(arm_length(lambda, i, j) + leg_length(lambda, conj, i, j) + 1);
      std::set<std::vector<std::vector<int>>> distinct;
      auto stream = enumerate_reverse_tableaux(lambda, n);
      while (auto t = stream.next()) {
        EXPECT_LE(t->max_entry(), n);
        distinct.insert(t->rows());
      }
      EXPECT_EQ(Rational(static_cast<long>(distinct.size())), expected) << to_string(lambda) << " n=" << n;
    }
}

TEST(Tableau, RejectsInvalidFillings) {
  EXPECT_THROW(ReverseTableau(Partition({2}), {{1, 2}}), Error);
  EXPECT_THROW(ReverseTableau(Partition({1, 1}), {{1}, {1}}), Error);
  ReverseTableau t(Partition({2, 1}), {{3, 1}, {2}});
  EXPECT_EQ(t.shape_at_least(2), Partition({1, 1}));
  EXPECT_EQ(t.shape_at_least(3), Partition({1}));
}
