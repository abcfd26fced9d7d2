#pragma once

// Homogeneous blocks.
//
// u ~> v holds when u -> v and C(u, v) = {u, v} + {w : u -> w -> v} induces a
// tournament whose interior is transitive and which every outside vertex sees
// uniformly. u ~ v when u = v or either direction holds; the blocks are the
// classes of ~.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tourn/speed_table.hpp"
#include "tourn/tournament.hpp"

namespace tourn {

/// C(u, v) as a mask when {u, v} is homogeneous, otherwise nullopt.
inline std::optional<Mask> homogeneous_path_mask(const Tournament& t, int u, int v) {
  check_vertex(t, u);
  check_vertex(t, v);
  if (u == v) return bit(u);
  if (t.beats(v, u)) std::swap(u, v);
  const Mask inner = t.out(u) & t.in(v);
  if (!is_transitive_on(t, inner)) return std::nullopt;
  const Mask path = inner | bit(u) | bit(v);
  for (Mask rest = t.all() & ~path; rest; rest &= rest - 1) {
    const Mask seen = t.out(lowest(rest)) & path;
    if (seen != 0 && seen != path) return std::nullopt;
  }
  return path;
}

inline std::optional<VertexSet> is_homogeneous_pair(const Tournament& t, int u, int v) {
  auto m = homogeneous_path_mask(t, u, v);
  if (!m) return std::nullopt;
  return VertexSet::from_mask(*m);
}

struct BlockDecomposition {
  /// Blocks ordered by their smallest vertex.
  std::vector<VertexSet> blocks;
  /// block_of[v] indexes `blocks`.
  std::vector<int> block_of;
  /// One vertex per block, in block order: i -> j iff blocks[i] -> blocks[j].
  Tournament quotient;
  /// Block sizes, non-increasing.
  std::vector<int> sequence;

  std::size_t count() const { return blocks.size(); }
  /// Size of the r-th largest block (0-based); 0 past the end.
  int largest(std::size_t r) const { return r < sequence.size() ? sequence[r] : 0; }
};

/// Thrown if the pairwise relation fails to be transitive, which would
/// contradict the equivalence-relation property of ~.
class BlockInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline BlockDecomposition decompose(const Tournament& t) {
  const int n = t.size();
  std::vector<Mask> related(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int u = 0; u < n; ++u) {
    related[u] |= bit(u);
    for (int v = u + 1; v < n; ++v)
      if (homogeneous_path_mask(t, u, v)) {
        related[u] |= bit(v);
        related[v] |= bit(u);
        parent[find(u)] = find(v);
      }
  }
  std::vector<Mask> class_mask(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) class_mask[find(v)] |= bit(v);

  BlockDecomposition d;
  d.block_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<Mask> block_masks;
  for (int v = 0; v < n; ++v) {
    if (d.block_of[v] != -1) continue;
    const Mask cls = class_mask[find(v)];
    for_each_bit(cls, [&](int w) {
      if ((related[w] & cls) != cls)
        throw BlockInvariantError("homogeneity is not transitive at vertex " +
                                  std::to_string(w));
      d.block_of[w] = static_cast<int>(block_masks.size());
    });
    block_masks.push_back(cls);
    d.blocks.push_back(VertexSet::from_mask(cls));
  }
  const int m = static_cast<int>(block_masks.size());
  std::vector<Mask> rows(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      // Every cross pair must agree; check all of them.
      bool forward = false, backward = false;
      for_each_bit(block_masks[i], [&](int a) {
        const Mask o = t.out(a) & block_masks[j];
        forward |= o != 0;
        backward |= o != block_masks[j];
      });
      if (forward && backward)
        throw BlockInvariantError("blocks " + std::to_string(i) + " and " +
                                  std::to_string(j) + " are not uniformly oriented");
      if (forward) rows[i] |= bit(j);
    }
  d.quotient = Tournament::from_rows(std::move(rows));
  for (Mask b : block_masks) d.sequence.push_back(popcount(b));
  std::sort(d.sequence.begin(), d.sequence.end(), std::greater<>());
  return d;
}

inline int block_count(const Tournament& t) {
  return static_cast<int>(decompose(t).count());
}

// ---- separation of merged blocks ---------------------------------------

/// Thrown when no case of the separation procedure applies. That happens only
/// when Bj, Bl and the in-between set M all lie in one homogeneous block of
/// the host, so the two sets were not distinct blocks to begin with.
class SeparationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Separation {
  VertexSet vertices;  // A plus at most three new vertices
  int case_number = 0;  // 1..4
  std::vector<int> added;
};

/// Given blocks Bj, Bl of `t` inside A that share a block of t[A], returns A
/// plus at most three vertices so that they fall into different blocks.
/// With Bj -> Bl (swapped if needed):
///   1. some u with Bl -> u -> Bj;
///   2. u in M, v in K with u -> v;   3. u in L, v in M with u -> v;
///   4. a cyclic triangle inside M;
/// where K beats Bj + Bl, L is beaten by Bj + Bl and Bj -> M -> Bl.
/// The first applicable case is used, smallest vertices first.
inline Separation separate_blocks(const Tournament& t, const VertexSet& a,
                                  const VertexSet& bj_set, const VertexSet& bl_set) {
  for (int v : a) check_vertex(t, v);
  Mask bj = bj_set.mask(), bl = bl_set.mask();
  const Mask am = a.mask();
  if (!bj || !bl) throw std::invalid_argument("separate_blocks: empty block");
  if (bj & bl) throw std::invalid_argument("separate_blocks: blocks overlap");
  if ((bj | bl) & ~am) throw std::invalid_argument("separate_blocks: blocks not inside A");
  auto all_beat = [&](Mask from, Mask to) {
    bool ok = true;
    for_each_bit(from, [&](int x) { ok &= (t.out(x) & to) == to; });
    return ok;
  };
  if (!all_beat(bj, bl)) {
    std::swap(bj, bl);
    if (!all_beat(bj, bl))
      throw std::invalid_argument("separate_blocks: blocks are not uniformly oriented");
  }
  const Mask both = bj | bl;
  Mask k = 0, l = 0, m = 0;
  Mask bridge = 0;  // Bl -> u -> Bj
  for_each_bit(t.all() & ~both, [&](int v) {
    const Mask o = t.out(v);
    const bool beats_j = (o & bj) == bj, beats_l = (o & bl) == bl;
    const bool loses_j = (o & bj) == 0, loses_l = (o & bl) == 0;
    if (beats_j && beats_l) k |= bit(v);
    else if (loses_j && loses_l) l |= bit(v);
    else if (loses_j && beats_l) m |= bit(v);
    else if (beats_j && loses_l) bridge |= bit(v);
  });
  auto finish = [&](int case_number, std::vector<int> add) {
    Mask result = am;
    std::vector<int> added;
    for (int v : add)
      if (!(result & bit(v))) {
        result |= bit(v);
        added.push_back(v);
      }
    return Separation{VertexSet::from_mask(result), case_number, added};
  };
  if (bridge) return finish(1, {lowest(bridge)});
  for (Mask mu = m; mu; mu &= mu - 1) {
    const int u = lowest(mu);
    if (const Mask hit = t.out(u) & k) return finish(2, {u, lowest(hit)});
  }
  for (Mask lu = l; lu; lu &= lu - 1) {
    const int u = lowest(lu);
    if (const Mask hit = t.out(u) & m) return finish(3, {u, lowest(hit)});
  }
  for (Mask mu = m; mu; mu &= mu - 1) {
    const int u = lowest(mu);
    for (Mask mv = t.out(u) & m; mv; mv &= mv - 1) {
      const int v = lowest(mv);
      if (const Mask hit = t.out(v) & t.in(u) & m) return finish(4, {u, v, lowest(hit)});
    }
  }
  throw SeparationError(
      "separate_blocks: no separating vertices exist; Bj, Bl and M share one "
      "homogeneous block of the host");
}

struct IteratedSeparation {
  VertexSet vertices;
  int rounds = 0;
  std::vector<Separation> steps;
};

/// Starting from the union of `blocks`, separates merged pairs until every
/// block lies in its own block of the induced sub-tournament.
inline IteratedSeparation separate_all(const Tournament& t, const std::vector<VertexSet>& blocks) {
  Mask a = 0;
  for (const auto& b : blocks) a |= b.mask();
  IteratedSeparation out;
  const std::size_t limit = blocks.size() * blocks.size() + 1;
  while (true) {
    std::vector<int> order;
    for_each_bit(a, [&](int v) { order.push_back(v); });
    std::vector<int> local(static_cast<std::size_t>(t.size()), -1);
    for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<int>(i);
    const auto d = decompose(induced(t, a));
    std::optional<std::pair<std::size_t, std::size_t>> merged;
    for (std::size_t i = 0; i < blocks.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < blocks.size() && !merged; ++j)
        if (d.block_of[local[blocks[i][0]]] == d.block_of[local[blocks[j][0]]])
          merged = {i, j};
    if (!merged) break;
    if (static_cast<std::size_t>(out.rounds) >= limit)
      throw std::logic_error("separate_all: separation did not terminate");
    auto step = separate_blocks(t, VertexSet::from_mask(a), blocks[merged->first],
                                blocks[merged->second]);
    a = step.vertices.mask();
    out.steps.push_back(std::move(step));
    ++out.rounds;
  }
  out.vertices = VertexSet::from_mask(a);
  return out;
}

// ---- finite-scale estimate of k(P) -------------------------------------

/// Default threshold for the (l+1)-st largest block at level N: ceil(N / (l+2)).
inline int default_block_threshold(int level, int l) { return (level + l + 1) / (l + 2); }

/// Largest l such that some member of level N has its (l+1)-st largest block
/// of size at least threshold(N, l); 0 if no l qualifies. A heuristic
/// estimate from finite data, not a certificate.
template <typename Threshold = int (*)(int, int)>
inline int estimate_k(const SpeedTable& table, int level,
                      Threshold threshold = default_block_threshold) {
  if (table.levels.empty()) throw std::invalid_argument("estimate_k: empty table");
  const auto& forms = table.at(level);
  if (forms.empty()) throw std::invalid_argument("estimate_k: empty level");
  std::vector<int> best(static_cast<std::size_t>(level) + 1, 0);
  for (const auto& f : forms) {
    const auto d = decompose(f.tournament());
    for (std::size_t r = 0; r < d.sequence.size(); ++r) best[r] = std::max(best[r], d.sequence[r]);
  }
  int estimate = 0;
  for (int l = 0; l < level; ++l)
    if (best[l] >= threshold(level, l)) estimate = l;
  return estimate;
}

}  // namespace tourn
