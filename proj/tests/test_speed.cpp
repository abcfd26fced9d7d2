#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace tourn;
using namespace tourn::testing;

namespace {

const Tournament kTriangle = Tournament::from_rows({0b010, 0b100, 0b001});

// Brute-force oracle: classes of k-subsets via canonical forms in a std::set.
std::size_t brute_classes(const Tournament& host, int k) {
  std::set<std::string> seen;
  for (Mask m = 0; m < (Mask{1} << host.size()); ++m)
    if (popcount(m) == k) seen.insert(canonical_form(induced(host, m)).line());
  return seen.size();
}

}  // namespace

TEST(Speed, Fstar) {
  const std::uint64_t expected[] = {1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(fstar(n), expected[n]);
  EXPECT_THROW(fstar(-1), std::invalid_argument);
}

TEST(Speed, TransitiveClosure) {
  const auto t = hereditary_closure({Tournament::transitive(10)}, 10);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(t.count(n), 1u);
  EXPECT_TRUE(verify_downward_closed(t));
}

TEST(Speed, StackedTrianglesMatchFstar) {
  std::vector<Tournament> seeds;
  for (const auto& seq : compositions_1_3(12)) seeds.push_back(make_T(seq));
  const auto t = hereditary_closure(seeds, 10);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(t.count(n), fstar(n)) << "n=" << n;
  EXPECT_TRUE(verify_downward_closed(t));
}

TEST(Speed, CyclicClosureAtFour) {
  const auto t = hereditary_closure(cyclic_seeds(12), 4);
  EXPECT_EQ(t.count(4), 2u);
  EXPECT_EQ(t.count(3), 2u);
}

TEST(Speed, AllTournamentsByExtension) {
  const std::uint64_t expected[] = {0, 1, 1, 2, 4, 12, 56, 456};
  const auto t = avoiding_property({}, 7);
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(t.count(n), expected[n]);
  EXPECT_TRUE(verify_downward_closed(t));
}

TEST(Speed, AvoidingTriangleIsTransitive) {
  const auto t = avoiding_property({kTriangle}, 9);
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(t.count(n), 1u);
  const auto rep = check_supermultiplicative(t, {kTriangle});
  EXPECT_TRUE(rep.ok());
}

TEST(Speed, AvoidingMatchesFilter) {
  // Oracle: filter all classes by pattern containment.
  const auto c4 = make_cyclic(4);
  const auto t = avoiding_property({c4}, 7);
  for (int n = 1; n <= 7; ++n) {
    std::size_t count = 0;
    for (const auto& g : all_classes(n)) count += !contains_induced(g, c4);
    EXPECT_EQ(t.count(n), count) << "n=" << n;
  }
}

TEST(Speed, Supermultiplicative) {
  const auto c4 = make_cyclic(4);
  const auto t = avoiding_property({c4}, 8);
  const auto rep = check_supermultiplicative(t, {c4});
  EXPECT_TRUE(rep.forbidden_strongly_connected);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.cases.size(), 28u);
  const auto bad = check_supermultiplicative(t, {Tournament::transitive(2)});
  EXPECT_FALSE(bad.forbidden_strongly_connected);
}

TEST(Speed, InducedClassesMatchBruteForce) {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 10; ++rep) {
    const auto host = random_tournament(10, rng);
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(induced_classes(host, k).size(), brute_classes(host, k));
  }
  // The deletion path gives the same answer.
  const auto host = make_cyclic(12);
  EnumOptions bfs;
  bfs.max_subsets = 0;
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(induced_classes(host, k, bfs), induced_classes(host, k));
}

TEST(Speed, CountSubL) {
  for (int b = 0; b < 8; ++b) EXPECT_EQ(count_sub_L(FlagTriple::from_bits(b), 1, 3).value, 1u);
  for (int n = 1; n <= 7; ++n) {
    const auto v = count_sub_L(FlagTriple{true, true, true}, n, n);
    EXPECT_EQ(v.value, fstar(n));
  }
  const auto s = count_sub_L_series(FlagTriple{false, true, false}, 5, 7);
  EXPECT_TRUE(s.monotone);
  EXPECT_NE(s.stable_m, 0);
  for (int m = 5; m <= 7; ++m) EXPECT_EQ(s.values[static_cast<std::size_t>(m) - 1], s.values[4]);
  EXPECT_GE(s.values.back(), 8u);
  EXPECT_THROW(count_sub_L(FlagTriple{}, 3, 13), InfeasibleError);
}

TEST(Speed, CyclicSubs) {
  EXPECT_EQ(count_cyclic_subs(1), 1u);
  EXPECT_EQ(count_cyclic_subs(3), 2u);
  for (int n = 1; n <= 7; ++n)
    EXPECT_GE(count_cyclic_subs(n), ((std::uint64_t{1} << (n - 1)) + n - 1) / n);
  EXPECT_EQ(count_cyclic_subs(5), brute_classes(make_cyclic(10), 5));
}

TEST(Speed, TnLower) {
  EXPECT_EQ(count_tn_lower(2), 0);
  EXPECT_EQ(count_tn_lower(6), 6);
  EXPECT_EQ(count_tn_lower(8), 78);
  for (int n = 2; n <= 8; ++n) {
    const auto c = count_type1_subs(n);
    EXPECT_TRUE(c.embeddings_ok);
    EXPECT_GE(static_cast<std::int64_t>(c.ts_classes), count_tn_lower(n));
    EXPECT_GE(static_cast<std::int64_t>(c.unique_transitive), count_tn_lower(n));
  }
}

TEST(Speed, OLarge) {
  const auto rows = check_olarge(30);
  ASSERT_EQ(rows.size(), 30u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.i_ok && r.ii_ok && r.recurrence_ok) << "n=" << r.n;
    if (r.n != 4) {
      EXPECT_TRUE(r.iii_ok) << "n=" << r.n;
    }
  }
  const auto& six = rows[5];
  EXPECT_EQ(six.f1, 6);
  EXPECT_EQ(six.f2, 6);
  EXPECT_EQ(six.f3, 6);
  EXPECT_EQ(six.fstar, 6u);
  EXPECT_EQ(rows[3].f3, 2);
  EXPECT_FALSE(rows[3].iii_checked);
  EXPECT_EQ(rows[4].f3, 4);
}

TEST(Speed, Errors) {
  EXPECT_THROW(hereditary_closure({Tournament::transitive(37)}, 5), InfeasibleError);
  EXPECT_THROW(hereditary_closure({}, 5), std::invalid_argument);
  EnumOptions tiny;
  tiny.mem_budget = 1000;
  EXPECT_THROW(hereditary_closure({make_cyclic(12)}, 12, tiny), InfeasibleError);
}

TEST(Speed, ThreadCountDoesNotChangeResults) {
  EnumOptions one, four;
  four.threads = 4;
  const auto seeds = std::vector<Tournament>{make_cyclic(11), make_moon_tower(2)};
  const auto a = hereditary_closure(seeds, 9, one);
  const auto b = hereditary_closure(seeds, 9, four);
  EXPECT_EQ(a.levels, b.levels);
  EXPECT_EQ(avoiding_property({make_cyclic(4)}, 7, one).levels,
            avoiding_property({make_cyclic(4)}, 7, four).levels);
  EXPECT_EQ(induced_classes(make_cyclic(14), 6, one), induced_classes(make_cyclic(14), 6, four));
}

TEST(Speed, Lemma3Bound) {
  for (const auto& [name, seeds] : bounded_block_seeds()) {
    const auto t = hereditary_closure(seeds, 10);
    const int M = max_block_count(t) - 1;
    for (int n = 1; n <= 10; ++n)
      EXPECT_LE(static_cast<double>(t.count(n)), lemma3_bound(n, M)) << name;
  }
}

TEST(Speed, LogLogSlope) {
  SpeedTable t;
  // Synthetic counts n^2 give slope 2.
  for (int n = 1; n <= 12; ++n) {
    std::vector<CanonicalForm> forms(static_cast<std::size_t>(n * n),
                                     CanonicalForm::of_labelled(Tournament::transitive(n)));
    t.levels[n] = forms;
  }
  EXPECT_NEAR(loglog_slope(t, 6, 12), 2.0, 1e-9);
}
