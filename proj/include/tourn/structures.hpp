#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tourn/canon.hpp"
#include "tourn/families.hpp"
#include "tourn/tournament.hpp"
#include "tourn/witness.hpp"

namespace tourn {

inline constexpr int kDefaultStructureBound = 4;

namespace detail {

// Largest |X| with required ⊆ X ⊆ required ∪ pool and X transitive, or -1.
// The top of X is either the source of `required` or a pool vertex that
// beats all of `required`.
inline int max_transitive_extension(const Tournament& t, Mask required, Mask pool, int floor) {
  if (!is_transitive_on(t, required)) return -1;
  int best = -1;
  auto go = [&](auto&& self, Mask req, Mask p, int size) -> void {
    if (size + popcount(req) + popcount(p) <= best) return;
    if (!req && !p) {
      best = std::max(best, size);
      return;
    }
    if (req) {
      int src = -1;
      for_each_bit(req, [&](int v) {
        if ((t.out(v) & req) == (req & ~bit(v))) src = v;
      });
      self(self, req & ~bit(src), p & t.out(src), size + 1);
    }
    for (Mask q = p; q; q &= q - 1) {
      const int v = lowest(q);
      if ((t.out(v) & req) != req) continue;
      self(self, req, (p & t.out(v)), size + 1);
      if (best >= size + popcount(req) + popcount(p)) return;
    }
    if (!req) best = std::max(best, size);
  };
  go(go, required, pool & ~required, 0);
  return best >= floor ? best : -1;
}

}  // namespace detail

/// Maximum transitive vertex subset, lexicographically smallest among those
/// of maximum size. The assignment lists it in chain order, source first.
inline StructureWitness max_transitive(const Tournament& t) {
  const int n = t.size();
  StructureWitness w{WitnessKind::kTransitive, {}};
  if (n == 0) return w;
  const int best = detail::max_transitive_extension(t, 0, t.all(), 0);
  Mask chosen = 0;
  for (int v = 0; v < n && popcount(chosen) < best; ++v) {
    const Mask later = t.all() & ~low_mask(v + 1);
    if (detail::max_transitive_extension(t, chosen | bit(v), later, best) >= best)
      chosen |= bit(v);
  }
  for_each_bit(chosen, [&](int v) { w.assignment.push_back(v); });
  std::sort(w.assignment.begin(), w.assignment.end(), [&](int a, int b) {
    return popcount(t.out(a) & chosen) > popcount(t.out(b) & chosen);
  });
  return w;
}

inline void check_structure_k(int k, int bound) {
  if (k < 1) throw std::invalid_argument("structure size k must be >= 1");
  if (k > bound)
    throw InfeasibleError("structure size k = " + std::to_string(k) + " exceeds bound " +
                          std::to_string(bound));
}

/// Type-1 k-structure as an induced copy of make_type1(k, flavor), flavor A
/// tried first.
inline std::optional<StructureWitness> detect_type1(const Tournament& t, int k,
                                                    int bound = kDefaultStructureBound) {
  check_structure_k(k, bound);
  for (auto flavor : {Type1Flavor::kA, Type1Flavor::kB}) {
    if (auto w = contains_induced(t, make_type1(k, flavor))) {
      w->kind = flavor == Type1Flavor::kA ? WitnessKind::kType1FlavorA
                                          : WitnessKind::kType1FlavorB;
      return w;
    }
  }
  return std::nullopt;
}

/// Type-2 k-structure: chain x_1 -> ... -> x_2k and distinct y_1..y_k with
/// x_2i -> y_i -> x_2i-1; other pairs unconstrained. Returns the
/// lexicographically smallest assignment (x's, then y's).
inline std::optional<StructureWitness> detect_type2(const Tournament& t, int k,
                                                    int bound = kDefaultStructureBound) {
  check_structure_k(k, bound);
  const int len = 2 * k;
  if (t.size() < 3 * k) return std::nullopt;
  std::vector<int> xs(static_cast<std::size_t>(len)), ys(static_cast<std::size_t>(k));

  auto place_y = [&](auto&& self, int i, Mask used) -> bool {
    if (i == k) return true;
    const Mask cand = t.out(xs[2 * i + 1]) & t.in(xs[2 * i]) & ~used;
    for (Mask c = cand; c; c &= c - 1) {
      ys[i] = lowest(c);
      if (self(self, i + 1, used | bit(ys[i]))) return true;
    }
    return false;
  };
  auto place_x = [&](auto&& self, int i, Mask cand, Mask used) -> bool {
    if (i == len) return place_y(place_y, 0, used);
    if (popcount(cand) < len - i) return false;
    for (Mask c = cand; c; c &= c - 1) {
      const int v = lowest(c);
      xs[i] = v;
      if (i % 2 == 1) {
        // y_i needs a vertex between; a quick necessary check.
        if (!(t.out(v) & t.in(xs[i - 1]) & ~(used | bit(v)))) continue;
      }
      if (self(self, i + 1, cand & t.out(v), used | bit(v))) return true;
    }
    return false;
  };
  if (!place_x(place_x, 0, t.all(), 0)) return std::nullopt;
  StructureWitness w{WitnessKind::kType2, xs};
  w.assignment.insert(w.assignment.end(), ys.begin(), ys.end());
  return w;
}

/// Re-checks a returned witness against its defining constraints.
inline bool check_witness(const Tournament& t, int k, const StructureWitness& w) {
  const auto& a = w.assignment;
  for (int v : a)
    if (v < 0 || v >= t.size()) return false;
  {
    auto s = a;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  }
  auto chain_ok = [&](int len) {
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j)
        if (!t.beats(a[i], a[j])) return false;
    return true;
  };
  switch (w.kind) {
    case WitnessKind::kType1FlavorA:
    case WitnessKind::kType1FlavorB: {
      if (static_cast<int>(a.size()) != 2 * k + 1 || !chain_ok(2 * k)) return false;
      const int y = a[2 * k];
      if (t.beats(y, a[0]) != (w.kind == WitnessKind::kType1FlavorA)) return false;
      for (int i = 0; i + 1 < 2 * k; ++i)
        if (t.beats(y, a[i]) != t.beats(a[i + 1], y)) return false;
      return true;
    }
    case WitnessKind::kType2: {
      if (static_cast<int>(a.size()) != 3 * k || !chain_ok(2 * k)) return false;
      for (int i = 0; i < k; ++i) {
        const int y = a[2 * k + i];
        if (!t.beats(a[2 * i + 1], y) || !t.beats(y, a[2 * i])) return false;
      }
      return true;
    }
    case WitnessKind::kTransitive:
      return chain_ok(static_cast<int>(a.size()));
    case WitnessKind::kEmbedding:
      return false;
  }
  return false;
}

// ---- D_n ----------------------------------------------------------------

/// Number of n-vertex transitive sub-tournaments of T_{n+1}(S).
inline int transitive_deletions(int n, const std::vector<int>& S) {
  const Tournament t = make_TS(n + 1, S);
  int count = 0;
  for (int v = 0; v <= n; ++v)
    if (is_transitive_on(t, t.all() & ~bit(v))) ++count;
  return count;
}

inline bool dn_membership(int n, const std::vector<int>& S) {
  return transitive_deletions(n, S) >= 2;
}

/// All members of D_n, each as a sorted subset of [n], in order of bitmask.
inline std::vector<std::vector<int>> enumerate_dn(int n) {
  if (n < 0 || n > 20) throw InfeasibleError("enumerate_dn: n out of range");
  std::vector<std::vector<int>> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    std::vector<int> S;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) S.push_back(i + 1);
    if (dn_membership(n, S)) out.push_back(std::move(S));
  }
  return out;
}

/// Which of the shapes "[i,n]" (1), "{i} + [j+1,n]" (2), "[i,j-1] + [j+1,n]"
/// (3) S has, the first that fits; 0 if none. Intervals [a,b] with a > b are empty.
inline int dn_shape(int n, const std::vector<int>& S) {
  auto sorted = S;
  std::sort(sorted.begin(), sorted.end());
  auto interval = [](int a, int b) {
    std::vector<int> r;
    for (int x = a; x <= b; ++x) r.push_back(x);
    return r;
  };
  auto join = [](std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
  };
  for (int i = 1; i <= n + 1; ++i)
    if (interval(i, n) == sorted) return 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (join({i}, interval(j + 1, n)) == sorted) return 2;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (join(interval(i, j - 1), interval(j + 1, n)) == sorted) return 3;
  return 0;
}

}  // namespace tourn
