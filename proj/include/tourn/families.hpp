#pragma once

// Constructors for the named tournament families, and the two reconstruction
// procedures showing their members are pairwise distinguishable.
//
// Family members use 1-based indices in their rules; vertex k of the returned
// tournament is the (k+1)-th vertex of the family's fixed order (x-block, then
// y-block, block-major).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tourn/tournament.hpp"

namespace tourn {

/// Sequence of stacked blocks, each a single vertex (1) or a cyclic triangle (3).
class CompositionSeq {
 public:
  CompositionSeq() = default;
  CompositionSeq(std::initializer_list<int> terms) : CompositionSeq(std::vector<int>(terms)) {}
  explicit CompositionSeq(std::vector<int> terms) : terms_(std::move(terms)) {
    for (int a : terms_)
      if (a != 1 && a != 3)
        throw std::invalid_argument("CompositionSeq: entry " + std::to_string(a) +
                                    " is not 1 or 3");
  }
  const std::vector<int>& terms() const { return terms_; }
  int sum() const {
    int s = 0;
    for (int a : terms_) s += a;
    return s;
  }
  std::size_t length() const { return terms_.size(); }
  friend bool operator==(const CompositionSeq&, const CompositionSeq&) = default;
  friend auto operator<=>(const CompositionSeq&, const CompositionSeq&) = default;

 private:
  std::vector<int> terms_;
};

/// All sequences over {1,3} with the given sum, in lexicographic order.
inline std::vector<CompositionSeq> compositions_1_3(int sum) {
  std::vector<CompositionSeq> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int a : {1, 3}) {
      if (a > left) continue;
      cur.push_back(a);
      self(self, left - a);
      cur.pop_back();
    }
  };
  rec(rec, sum);
  return out;
}

struct FlagTriple {
  bool i1 = false, i2 = false, i3 = false;
  friend bool operator==(const FlagTriple&, const FlagTriple&) = default;
  std::string str() const {
    return std::string{i1 ? '1' : '0', i2 ? '1' : '0', i3 ? '1' : '0'};
  }
  static FlagTriple from_bits(int b) { return {(b & 4) != 0, (b & 2) != 0, (b & 1) != 0}; }
};

/// Transitive n-chain with t independent edges reversed: for the sorted
/// positions a(1) < ... < a(2t) of `positions`, the pair
/// (a(l), a(t + sigma(l))) points backwards. Positions and sigma are 1-based.
struct ReversalSpec {
  int n = 0;
  std::vector<int> positions;
  std::vector<int> sigma;

  void validate() const {
    if (n < 0 || n > kMaxVertices) throw std::out_of_range("ReversalSpec: bad n");
    if (positions.size() % 2 != 0)
      throw std::invalid_argument("ReversalSpec: positions must have even size");
    auto s = positions;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("ReversalSpec: repeated position");
    if (!s.empty() && (s.front() < 1 || s.back() > n))
      throw std::out_of_range("ReversalSpec: position outside [1, n]");
    const std::size_t t = s.size() / 2;
    if (sigma.size() != t) throw std::invalid_argument("ReversalSpec: sigma must have size t");
    std::vector<int> p = sigma;
    std::sort(p.begin(), p.end());
    for (std::size_t i = 0; i < t; ++i)
      if (p[i] != static_cast<int>(i) + 1)
        throw std::invalid_argument("ReversalSpec: sigma is not a permutation of [t]");
  }
  std::vector<int> sorted_positions() const {
    auto s = positions;
    std::sort(s.begin(), s.end());
    return s;
  }
  /// a(t) + 1 < a(t+1): the condition under which S is recoverable.
  bool separated() const {
    const auto s = sorted_positions();
    const std::size_t t = s.size() / 2;
    return t == 0 || s[t - 1] + 1 < s[t];
  }
};

inline Tournament make_T(const CompositionSeq& seq) {
  const int n = seq.sum();
  if (n > kMaxVertices) throw InfeasibleError("make_T: more than 64 vertices");
  std::vector<int> block(static_cast<std::size_t>(n)), index(static_cast<std::size_t>(n));
  int v = 0;
  for (std::size_t b = 0; b < seq.length(); ++b)
    for (int j = 0; j < seq.terms()[b]; ++j, ++v) {
      block[v] = static_cast<int>(b);
      index[v] = j;
    }
  return Tournament::from_predicate(n, [&](int u, int w) {
    if (block[u] != block[w]) return block[u] < block[w];
    return (index[w] - index[u] + 3) % 3 == 1;
  });
}

/// Inverse of make_T up to isomorphism, by repeatedly peeling a top vertex
/// (beats everything left) or a top cyclic triangle (beats everything left).
/// Throws std::invalid_argument when neither exists, i.e. T is not in the family.
inline CompositionSeq reconstruct_seq(const Tournament& t) {
  std::vector<int> terms;
  Mask left = t.all();
  while (left) {
    const int size = popcount(left);
    std::optional<int> top;
    for_each_bit(left, [&](int v) {
      if (!top && popcount(t.out(v) & left) == size - 1) top = v;
    });
    if (top) {
      terms.push_back(1);
      left &= ~bit(*top);
      continue;
    }
    std::optional<Mask> triangle;
    for (Mask a_m = left; a_m && !triangle; a_m &= a_m - 1) {
      const int a = lowest(a_m);
      // b, c beat everything outside {a, b, c}; a -> b -> c -> a.
      for_each_bit(t.out(a) & left, [&](int b) {
        if (triangle) return;
        for_each_bit(t.out(b) & t.in(a) & left, [&](int c) {
          if (triangle) return;
          const Mask tri = bit(a) | bit(b) | bit(c);
          const Mask outside = left & ~tri;
          if ((t.out(a) & outside) == outside && (t.out(b) & outside) == outside &&
              (t.out(c) & outside) == outside)
            triangle = tri;
        });
      });
    }
    if (!triangle)
      throw std::invalid_argument(
          "reconstruct_seq: no top vertex or top triangle; not a stacked-triangle tournament");
    terms.push_back(3);
    left &= ~*triangle;
  }
  return CompositionSeq(std::move(terms));
}

/// x_1..x_2n then y_1..y_n, with
///   x_i -> x_j for i < j;  x_2i -> y_i -> x_{2i-1};
///   y_i -> y_j (i < j) iff I1;  x_i -> y_j for i <= 2j-2 iff I2;
///   y_j -> x_i for i >= 2j+1 iff I3.
inline Tournament make_M(FlagTriple flags, int n) {
  if (n < 1) throw std::invalid_argument("make_M: n must be >= 1");
  if (3 * n > kMaxVertices) throw InfeasibleError("make_M: more than 64 vertices");
  const int xs = 2 * n;
  // beats for 1-based labels; x_i is vertex i-1, y_j is vertex xs+j-1.
  auto x_beats_y = [&](int i, int j) {
    if (i == 2 * j) return true;
    if (i == 2 * j - 1) return false;
    if (i <= 2 * j - 2) return flags.i2;
    return !flags.i3;  // i >= 2j + 1
  };
  return Tournament::from_predicate(3 * n, [&](int u, int v) {
    if (v < xs) return true;                        // both x, u < v
    if (u < xs) return x_beats_y(u + 1, v - xs + 1);  // x vs y
    return flags.i1;                                // y_i vs y_j, i < j
  });
}

/// kn vertices: x_i -> x_j for i < j, unless i + k - 1 = j and k divides j.
inline Tournament make_M_general(int k, int n) {
  if (k < 3) throw std::invalid_argument("make_M_general: k must be >= 3");
  if (n < 1) throw std::invalid_argument("make_M_general: n must be >= 1");
  if (k * n > kMaxVertices) throw InfeasibleError("make_M_general: more than 64 vertices");
  return Tournament::from_predicate(k * n, [&](int u, int v) {
    const int i = u + 1, j = v + 1;
    return !(i + k - 1 == j && j % k == 0);
  });
}

/// C_n: x_i -> x_j iff 1 <= (j - i mod n) < n/2, or j - i = n/2 exactly.
inline Tournament make_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("make_cyclic: n must be >= 1");
  if (n > kMaxVertices) throw InfeasibleError("make_cyclic: more than 64 vertices");
  return Tournament::from_predicate(n, [&](int u, int v) {
    const int d = v - u;  // u < v, so this is the literal difference
    if (2 * d == n) return true;
    return 2 * (d % n) < n;
  });
}

/// Transitive chain x_1 -> ... -> x_n plus y beating exactly {x_i : i in S}.
/// `n_plus_1` is the total vertex count; y is the last vertex.
inline Tournament make_TS(int n_plus_1, const std::vector<int>& S) {
  const int n = n_plus_1 - 1;
  if (n < 0) throw std::invalid_argument("make_TS: size must be >= 1");
  if (n_plus_1 > kMaxVertices) throw InfeasibleError("make_TS: more than 64 vertices");
  Mask s = 0;
  for (int i : S) {
    if (i < 1 || i > n) throw std::out_of_range("make_TS: S not a subset of [n]");
    s |= bit(i - 1);
  }
  return Tournament::from_predicate(n_plus_1, [&](int u, int v) {
    if (v < n) return true;
    return (s & bit(u)) == 0;  // v is y: x_u beats y iff u not in S
  });
}

inline Tournament make_Tstar(const ReversalSpec& spec) {
  spec.validate();
  const auto a = spec.sorted_positions();
  const std::size_t t = a.size() / 2;
  std::vector<Mask> reversed(static_cast<std::size_t>(spec.n), 0);
  for (std::size_t l = 0; l < t; ++l) {
    const int i = a[l] - 1, j = a[t + static_cast<std::size_t>(spec.sigma[l]) - 1] - 1;
    reversed[i] |= bit(j);
  }
  return Tournament::from_predicate(spec.n, [&](int u, int v) {
    return (reversed[u] & bit(v)) == 0;
  });
}

/// Recovers the reversal positions S of a make_Tstar image with
/// a(t) + 1 < a(t+1). Vertices are ordered by out-degree, descending, equal
/// degrees by the edge between them; a degree class of three (possible only
/// when a(t+1) = a(t) + 2) keeps original index order. S is the set of
/// positions i whose vertex has out-degree other than n - i.
/// Throws std::invalid_argument if a degree class is larger than three or a
/// pair with equal degree points against the order.
inline std::vector<int> reconstruct_S(const Tournament& t) {
  const int n = t.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[v] = popcount(t.out(v));
  std::stable_sort(order.begin(), order.end(), [&](int u, int v) { return deg[u] > deg[v]; });
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg[order[j]] == deg[order[i]]) ++j;
    if (j - i > 3)
      throw std::invalid_argument("reconstruct_S: more than three vertices share a degree");
    if (j - i == 2 && t.beats(order[i + 1], order[i])) std::swap(order[i], order[i + 1]);
    i = j;
  }
  std::vector<int> S;
  for (int i = 1; i <= n; ++i)
    if (deg[order[i - 1]] != n - i) S.push_back(i);
  return S;
}

/// Type-1 k-structure: chain x_1 -> ... -> x_2k and y with y -> x_i iff
/// x_{i+1} -> y. Flavor A has y -> x_1 (so y beats the odd x's), flavor B has
/// x_1 -> y. Order: x_1..x_2k, y.
enum class Type1Flavor { kA, kB };

inline Tournament make_type1(int k, Type1Flavor flavor) {
  if (k < 1) throw std::invalid_argument("make_type1: k must be >= 1");
  if (2 * k + 1 > kMaxVertices) throw InfeasibleError("make_type1: more than 64 vertices");
  const int y = 2 * k;
  return Tournament::from_predicate(2 * k + 1, [&](int u, int v) {
    if (v < y) return true;
    // x_{u+1} vs y: y beats x_i for odd i under flavor A.
    const bool y_beats = ((u % 2 == 0) == (flavor == Type1Flavor::kA));
    return !y_beats;
  });
}

/// Replaces vertex i of `quotient` by a transitive tournament on sizes[i]
/// vertices (sizes may be 0). Parts occupy consecutive index ranges.
inline Tournament blow_up(const Tournament& quotient, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != quotient.size())
    throw std::invalid_argument("blow_up: one size per quotient vertex");
  std::vector<int> part;
  for (int i = 0; i < quotient.size(); ++i) {
    if (sizes[i] < 0) throw std::invalid_argument("blow_up: negative part size");
    part.insert(part.end(), static_cast<std::size_t>(sizes[i]), i);
  }
  if (part.size() > static_cast<std::size_t>(kMaxVertices))
    throw InfeasibleError("blow_up: more than 64 vertices");
  return Tournament::from_predicate(static_cast<int>(part.size()), [&](int u, int v) {
    return part[u] == part[v] || quotient.beats(part[u], part[v]);
  });
}

inline constexpr int kMoonTowerMaxLevel = 3;  // 27 vertices

/// T_1 is the cyclic triangle; T_{l+1} is three copies U, V, W of T_l with
/// U -> V -> W -> U. Copies occupy consecutive index ranges.
inline Tournament make_moon_tower(int level) {
  if (level < 1) throw std::invalid_argument("make_moon_tower: level must be >= 1");
  if (level > kMoonTowerMaxLevel)
    throw InfeasibleError("make_moon_tower: level " + std::to_string(level) +
                          " exceeds 64 vertices");
  int size = 1;
  for (int l = 0; l < level; ++l) size *= 3;
  return Tournament::from_predicate(size, [&](int u, int v) {
    // Highest base-3 digit where u and v differ decides the orientation.
    int a = u, b = v;
    int du = 0, dv = 0;
    while (a != b) {
      du = a % 3;
      dv = b % 3;
      a /= 3;
      b /= 3;
    }
    return (dv - du + 3) % 3 == 1;
  });
}

}  // namespace tourn
