#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace tourn;
using namespace tourn::testing;

namespace {

const Tournament kTriangle = Tournament::from_rows({0b010, 0b100, 0b001});

bool related(const Tournament& t, int u, int v) {
  return homogeneous_path_mask(t, u, v).has_value();
}

// 3 per cyclic triangle, 1 per maximal run of single vertices.
int stacked_block_count(const CompositionSeq& seq) {
  int count = 0;
  bool in_run = false;
  for (int a : seq.terms()) {
    if (a == 3) {
      count += 3;
      in_run = false;
    } else if (!in_run) {
      ++count;
      in_run = true;
    }
  }
  return count;
}

}  // namespace

TEST(Blocks, HomogeneousPairExamples) {
  const auto path = is_homogeneous_pair(Tournament::transitive(3), 0, 2);
  ASSERT_TRUE(path);
  EXPECT_EQ(*path, (VertexSet{0, 1, 2}));
  EXPECT_EQ(*is_homogeneous_pair(Tournament::transitive(3), 1, 1), VertexSet{1});
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      if (u != v) {
        EXPECT_FALSE(is_homogeneous_pair(kTriangle, u, v));
      }
  const auto c4 = make_cyclic(4);
  ASSERT_TRUE(is_homogeneous_pair(c4, 1, 2));
  EXPECT_EQ(*is_homogeneous_pair(c4, 2, 1), (VertexSet{1, 2}));
  int pairs = 0;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) pairs += related(c4, u, v);
  EXPECT_EQ(pairs, 1);
  EXPECT_THROW(is_homogeneous_pair(c4, 0, 4), std::out_of_range);
}

TEST(Blocks, DecomposeExamples) {
  for (int n = 1; n <= 10; ++n) {
    const auto d = decompose(Tournament::transitive(n));
    EXPECT_EQ(d.count(), 1u);
    EXPECT_EQ(d.sequence, std::vector<int>{n});
  }
  const auto tri = decompose(kTriangle);
  EXPECT_EQ(tri.sequence, (std::vector<int>{1, 1, 1}));
  EXPECT_TRUE(is_isomorphic(tri.quotient, kTriangle));
  const auto c4 = decompose(make_cyclic(4));
  EXPECT_EQ(c4.sequence, (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(c4.blocks[1], (VertexSet{1, 2}));
  EXPECT_EQ(block_count(Tournament::transitive(1)), 1);
  EXPECT_EQ(block_count(Tournament::transitive(0)), 0);
}

TEST(Blocks, StackedTriangleBlockCount) {
  // Consecutive single vertices form one block; triangle vertices stay apart.
  for (int s = 1; s <= 10; ++s)
    for (const auto& seq : compositions_1_3(s))
      EXPECT_EQ(block_count(make_T(seq)), stacked_block_count(seq));
  EXPECT_EQ(block_count(make_T(CompositionSeq{3})), 3);
  EXPECT_EQ(block_count(make_T(CompositionSeq{1, 1, 3, 1})), 5);
}

TEST(Blocks, RelationTransitiveOnAllSmallClasses) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& t : all_classes(n)) {
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          for (int w = 0; w < n; ++w)
            if (related(t, u, v) && related(t, v, w)) {
              ASSERT_TRUE(related(t, u, w)) << to_trn(t);
            }
      EXPECT_NO_THROW(decompose(t));
    }
}

TEST(Blocks, DecompositionInvariants) {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 400; ++rep) {
    const auto t = (rep % 2) ? random_blocky(12, rng) : random_tournament(1 + rep % 9, rng);
    const auto d = decompose(t);
    Mask seen = 0;
    int total = 0;
    for (const auto& b : d.blocks) {
      EXPECT_EQ(seen & b.mask(), 0u);
      seen |= b.mask();
      total += static_cast<int>(b.size());
      EXPECT_TRUE(is_transitive_on(t, b.mask()) || b.size() <= 1);
    }
    EXPECT_EQ(seen, t.all());
    EXPECT_EQ(total, t.size());
    EXPECT_TRUE(std::is_sorted(d.sequence.rbegin(), d.sequence.rend()));
    for (std::size_t i = 0; i < d.count(); ++i)
      for (std::size_t j = 0; j < d.count(); ++j) {
        if (i == j) continue;
        for (int a : d.blocks[i])
          for (int b : d.blocks[j])
            EXPECT_EQ(t.beats(a, b), d.quotient.beats(static_cast<int>(i), static_cast<int>(j)));
      }
    const auto q = decompose(d.quotient);
    EXPECT_EQ(q.count(), d.count());
    EXPECT_EQ(decompose(shuffled(t, rng)).sequence, d.sequence);
  }
}

TEST(Blocks, BlowUpRecoversParts) {
  // Parts of a blow-up of a tournament without homogeneous pairs are its blocks.
  const auto t = blow_up(make_cyclic(5), {4, 1, 3, 2, 2});
  EXPECT_EQ(decompose(t).sequence, (std::vector<int>{4, 3, 2, 2, 1}));
}

TEST(Blocks, SeparationCaseOne) {
  // x -> y, y -> u -> x.
  const auto t = Tournament::from_rows({0b010, 0b100, 0b001});
  const auto s = separate_blocks(t, VertexSet{0, 1}, VertexSet{0}, VertexSet{1});
  EXPECT_EQ(s.case_number, 1);
  EXPECT_EQ(s.added, std::vector<int>{2});
  EXPECT_NE(block_in(t, s.vertices.mask(), 0), block_in(t, s.vertices.mask(), 1));
}

TEST(Blocks, SeparationRejects) {
  const auto t = Tournament::transitive(4);
  EXPECT_THROW(separate_blocks(t, VertexSet{0, 1}, VertexSet{0}, VertexSet{1}), SeparationError);
  EXPECT_THROW(separate_blocks(t, VertexSet{0}, VertexSet{0}, VertexSet{1}),
               std::invalid_argument);
  EXPECT_THROW(separate_blocks(t, VertexSet{0, 1}, VertexSet{0}, VertexSet{0, 1}),
               std::invalid_argument);
  EXPECT_THROW(separate_blocks(t, VertexSet{0, 1}, VertexSet{}, VertexSet{1}),
               std::invalid_argument);
}

TEST(Blocks, SeparationRandom) {
  std::mt19937_64 rng(41);
  std::set<int> cases;
  for (int rep = 0; rep < 300; ++rep) {
    const auto inst = random_separation_instance(12, 2, rng);
    const auto s = separate_blocks(inst.t, inst.a, inst.blocks[0], inst.blocks[1]);
    cases.insert(s.case_number);
    EXPECT_LE(s.added.size(), 3u);
    EXPECT_EQ(s.vertices.mask() & inst.a.mask(), inst.a.mask());
    const Mask r = s.vertices.mask();
    EXPECT_NE(block_in(inst.t, r, inst.blocks[0][0]), block_in(inst.t, r, inst.blocks[1][0]));
  }
  EXPECT_GE(cases.size(), 2u);
}

TEST(Blocks, SeparationIterated) {
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 200; ++rep) {
    const auto inst = random_separation_instance(12, 3, rng);
    const auto it = separate_all(inst.t, inst.blocks);
    EXPECT_LE(it.rounds, 3);
    const Mask r = it.vertices.mask();
    std::set<int> ids;
    for (const auto& b : inst.blocks) ids.insert(block_in(inst.t, r, b[0]));
    EXPECT_EQ(ids.size(), 3u);
  }
}

TEST(Blocks, EstimateK) {
  const auto trans = hereditary_closure({Tournament::transitive(12)}, 12);
  EXPECT_EQ(estimate_k(trans, 12), 0);
  // Two big transitive blocks around one separating vertex.
  const auto two = hereditary_closure({blow_up(kTriangle, {10, 10, 1})}, 12);
  EXPECT_EQ(estimate_k(two, 12), 1);
  const auto three = hereditary_closure({blow_up(kTriangle, {10, 10, 10})}, 12);
  EXPECT_EQ(estimate_k(three, 12), 2);
  // Stacked triangles: (3,3,3,3) has twelve blocks, so the default threshold
  // ceil(12/13) = 1 is met at l = 11. With a fixed threshold of 4, runs of
  // single vertices such as in (1,1,1,1,3,1,1,1,1,1) give l = 1.
  std::vector<Tournament> seeds;
  for (const auto& seq : compositions_1_3(12)) seeds.push_back(make_T(seq));
  const auto stacked = hereditary_closure(seeds, 12);
  EXPECT_EQ(estimate_k(stacked, 12), 11);
  EXPECT_EQ(estimate_k(stacked, 12, [](int, int) { return 4; }), 1);
  EXPECT_THROW(estimate_k(SpeedTable{}, 12), std::invalid_argument);
}
