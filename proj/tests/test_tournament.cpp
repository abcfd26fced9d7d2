#include <gtest/gtest.h>

#include <random>

#include "tourn/tournament.hpp"

using namespace tourn;

namespace {

Tournament random_tournament(int n, std::mt19937_64& rng) {
  return Tournament::from_predicate(n, [&](int, int) { return (rng() & 1) != 0; });
}

}  // namespace

TEST(Tournament, TransitiveShape) {
  const auto t = Tournament::transitive(5);
  EXPECT_EQ(t.size(), 5);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(out_degree(t, i), 4 - i);
  EXPECT_TRUE(is_transitive(t));
  EXPECT_EQ(t.pair_bits(), "1111111111");
}

TEST(Tournament, ExactlyOneDirectionPerPair) {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    const auto t = random_tournament(1 + rep % 20, rng);
    for (int u = 0; u < t.size(); ++u) {
      EXPECT_FALSE(t.beats(u, u));
      for (int v = 0; v < t.size(); ++v)
        if (u != v) {
          EXPECT_NE(t.beats(u, v), t.beats(v, u));
        }
    }
    int total = 0;
    for (int u = 0; u < t.size(); ++u) total += out_degree(t, u);
    EXPECT_EQ(total, t.size() * (t.size() - 1) / 2);
  }
}

TEST(Tournament, FromRowsRejectsBadOrientation) {
  EXPECT_THROW(Tournament::from_rows({0b10, 0b01}), std::invalid_argument);
  EXPECT_THROW(Tournament::from_rows({0b00, 0b00}), std::invalid_argument);
  EXPECT_THROW(Tournament::from_rows({0b01}), std::invalid_argument);
}

TEST(Tournament, TrnRoundTrip) {
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 12; ++n) {
    const auto t = random_tournament(n, rng);
    EXPECT_EQ(parse_trn(to_trn(t)), t);
  }
  EXPECT_EQ(parse_trn("3\n101"), parse_trn("3\n101\n"));
  EXPECT_EQ(to_trn(parse_trn("3\r\n101\r\n")), "3\n101\n");
}

TEST(Tournament, TrnRejectsMalformed) {
  EXPECT_THROW(parse_trn(""), std::invalid_argument);
  EXPECT_THROW(parse_trn("3\n10\n"), std::invalid_argument);
  EXPECT_THROW(parse_trn("3\n1021\n"), std::invalid_argument);
  EXPECT_THROW(parse_trn("3\n102\n"), std::invalid_argument);
  EXPECT_THROW(parse_trn("x\n"), std::invalid_argument);
  EXPECT_THROW(parse_trn("3\n101\nextra\n"), std::invalid_argument);
  EXPECT_THROW(parse_trn("65\n"), std::out_of_range);
}

TEST(Tournament, EdgeList) {
  const auto t = parse_edge_list("# triangle\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(t.size(), 3);
  EXPECT_TRUE(t.beats(0, 1));
  EXPECT_TRUE(t.beats(1, 2));
  EXPECT_TRUE(t.beats(2, 0));
  EXPECT_THROW(parse_edge_list("0 1\n1 0\n"), std::invalid_argument);
  EXPECT_THROW(parse_edge_list("0 1\n1 2\n"), std::invalid_argument);
  EXPECT_EQ(parse_edge_list("n 2\n1 0\n").out(1), bit(0));
}

TEST(Tournament, InducedKeepsOrder) {
  const auto c3 = Tournament::from_rows({0b010, 0b100, 0b001});
  const auto t = concat(c3, Tournament::transitive(2));
  EXPECT_EQ(t.size(), 5);
  EXPECT_EQ(induced(t, VertexSet::from_mask(0b111)), c3);
  EXPECT_TRUE(is_transitive(induced(t, bit(0) | bit(3) | bit(4))));
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 5; ++b) EXPECT_TRUE(t.beats(a, b));
}

TEST(Tournament, StrongConnectivity) {
  EXPECT_TRUE(is_strongly_connected(Tournament::transitive(1)));
  EXPECT_FALSE(is_strongly_connected(Tournament::transitive(2)));
  EXPECT_TRUE(is_strongly_connected(Tournament::from_rows({0b010, 0b100, 0b001})));
  std::mt19937_64 rng(3);
  const auto big = random_tournament(6, rng);
  EXPECT_FALSE(is_strongly_connected(concat(big, big)));
}

TEST(Tournament, RelabelInverse) {
  std::mt19937_64 rng(5);
  const auto t = random_tournament(9, rng);
  std::vector<int> order{3, 1, 4, 0, 5, 8, 2, 6, 7};
  const auto r = t.relabel(order);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if (i != j) {
        EXPECT_EQ(r.beats(i, j), t.beats(order[i], order[j]));
      }
  const std::vector<int> bad{0, 0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_THROW(t.relabel(bad), std::invalid_argument);
}

TEST(Tournament, VertexSetValidation) {
  EXPECT_EQ(VertexSet({2, 1})[0], 1);
  EXPECT_THROW(VertexSet({1, 1}), std::invalid_argument);
  const VertexSet s({0, 3, 5});
  EXPECT_EQ(s.mask(), bit(0) | bit(3) | bit(5));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
}
