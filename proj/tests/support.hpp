#pragma once

// Generators shared by the unit and acceptance tests.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "tourn/tourn.hpp"

namespace tourn::testing {

inline Tournament random_tournament(int n, std::mt19937_64& rng) {
  return Tournament::from_predicate(n, [&](int, int) { return (rng() & 1) != 0; });
}

inline Tournament shuffled(const Tournament& t, std::mt19937_64& rng) {
  std::vector<int> order(static_cast<std::size_t>(t.size()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return t.relabel(order);
}

/// One representative per isomorphism class, n vertices.
inline std::vector<Tournament> all_classes(int n) {
  std::vector<Tournament> out;
  if (n == 0) {
    out.push_back(Tournament::transitive(0));
    return out;
  }
  const auto table = avoiding_property({}, n);
  for (const auto& f : table.at(n)) out.push_back(f.tournament());
  return out;
}

/// A random quotient blown up by transitive parts, relabelled.
inline Tournament random_blocky(int max_n, std::mt19937_64& rng) {
  const int q = 2 + static_cast<int>(rng() % 5);
  const auto quotient = random_tournament(q, rng);
  std::vector<int> sizes(static_cast<std::size_t>(q));
  int total = 0;
  for (auto& s : sizes) {
    s = 1 + static_cast<int>(rng() % 3);
    total += s;
  }
  while (total > max_n) {
    auto it = std::max_element(sizes.begin(), sizes.end());
    --*it;
    --total;
  }
  return shuffled(blow_up(quotient, sizes), rng);
}

struct SeparationInstance {
  Tournament t;
  VertexSet a;
  std::vector<VertexSet> blocks;
};

/// Host with `count` distinct blocks and a vertex set A containing them in
/// which at least one pair of them shares a block of the induced tournament.
inline SeparationInstance random_separation_instance(int max_n, int count, std::mt19937_64& rng) {
  while (true) {
    const auto t = (rng() & 1) ? random_blocky(max_n, rng)
                               : random_tournament(4 + static_cast<int>(rng() % (max_n - 3)), rng);
    const auto d = decompose(t);
    if (static_cast<int>(d.count()) < count) continue;
    std::vector<std::size_t> idx(d.count());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<VertexSet> blocks;
    Mask a = 0;
    for (int i = 0; i < count; ++i) {
      blocks.push_back(d.blocks[idx[static_cast<std::size_t>(i)]]);
      a |= blocks.back().mask();
    }
    const Mask others = t.all() & ~a;
    for_each_bit(others, [&](int v) {
      if (rng() % 4 == 0) a |= bit(v);
    });
    std::vector<int> order;
    for_each_bit(a, [&](int v) { order.push_back(v); });
    std::vector<int> local(static_cast<std::size_t>(t.size()), -1);
    for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<int>(i);
    const auto da = decompose(induced(t, a));
    bool merged = false;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t j = i + 1; j < blocks.size(); ++j)
        merged |= da.block_of[local[blocks[i][0]]] == da.block_of[local[blocks[j][0]]];
    if (merged) return {t, VertexSet::from_mask(a), blocks};
  }
}

/// Block index (in the decomposition of t[a]) of host vertex v.
inline int block_in(const Tournament& t, Mask a, int v) {
  std::vector<int> order;
  for_each_bit(a, [&](int w) { order.push_back(w); });
  const auto it = std::find(order.begin(), order.end(), v);
  return decompose(induced(t, a)).block_of[static_cast<std::size_t>(it - order.begin())];
}

/// Exhaustive Type-1 search: ordered (2k+1)-tuples of distinct vertices.
inline bool brute_type1(const Tournament& t, int k) {
  for (auto f : {Type1Flavor::kA, Type1Flavor::kB}) {
    const auto target = canonical_form(make_type1(k, f));
    const int need = 2 * k + 1;
    for (Mask m = 0; m < (Mask{1} << t.size()); ++m)
      if (popcount(m) == need && canonical_form(induced(t, m)) == target) return true;
  }
  return false;
}

/// Exhaustive Type-2 search over ordered assignments.
inline bool brute_type2(const Tournament& t, int k) {
  const int n = t.size();
  std::vector<int> a;
  auto rec = [&](auto&& self, Mask used) -> bool {
    if (static_cast<int>(a.size()) == 3 * k) {
      StructureWitness w{WitnessKind::kType2, a};
      return check_witness(t, k, w);
    }
    for (int v = 0; v < n; ++v) {
      if (used & bit(v)) continue;
      a.push_back(v);
      const bool ok = self(self, used | bit(v));
      a.pop_back();
      if (ok) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace tourn::testing
