#pragma once

// Tournament value type: a complete oriented graph on at most 64 vertices.
//
// Storage is one out-neighbour bitmask per vertex. The serialized form is the
// pair-bit string over pairs (i, j), i < j, in row-major order, '1' meaning
// i -> j. That string is also the body line of a `.trn` file.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tourn {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Raised when an input is well-formed but too large for the requested work.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr Mask bit(int v) { return Mask{1} << v; }

inline constexpr Mask low_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

inline int lowest(Mask m) { return std::countr_zero(m); }

/// Calls f(v) for every set bit v of m, in increasing order.
template <typename F>
inline void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(lowest(m));
    m &= m - 1;
  }
}

/// Sorted, duplicate-free subset of the vertices of a host tournament.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) : VertexSet(std::vector<int>(vs)) {}
  explicit VertexSet(std::vector<int> vs) : members_(std::move(vs)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw std::invalid_argument("VertexSet: duplicate vertex");
    if (!members_.empty() && members_.front() < 0)
      throw std::out_of_range("VertexSet: negative vertex");
  }
  static VertexSet from_mask(Mask m) {
    VertexSet s;
    for_each_bit(m, [&](int v) { s.members_.push_back(v); });
    return s;
  }

  Mask mask() const {
    Mask m = 0;
    for (int v : members_) {
      if (v >= kMaxVertices) throw std::out_of_range("VertexSet: vertex >= 64");
      m |= bit(v);
    }
    return m;
  }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  std::span<const int> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  int operator[](std::size_t i) const { return members_[i]; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> members_;
};

class Tournament {
 public:
  Tournament() = default;

  /// The transitive tournament on n vertices: i -> j iff i < j.
  static Tournament transitive(int n) {
    Tournament t(n);
    for (int i = 0; i < n; ++i) t.out_[i] = low_mask(n) & ~low_mask(i + 1);
    return t;
  }

  /// Builds from a predicate beats(i, j) evaluated for every i < j.
  template <typename Pred>
  static Tournament from_predicate(int n, Pred&& beats) {
    Tournament t(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (beats(i, j))
          t.out_[i] |= bit(j);
        else
          t.out_[j] |= bit(i);
      }
    return t;
  }

  /// Builds from out-neighbour rows, validating completeness and antisymmetry.
  static Tournament from_rows(std::vector<Mask> rows) {
    const int n = static_cast<int>(rows.size());
    check_size(n);
    for (int i = 0; i < n; ++i) {
      if (rows[i] & ~low_mask(n) || rows[i] & bit(i))
        throw std::invalid_argument("Tournament: row out of range or self-loop");
      for (int j = i + 1; j < n; ++j) {
        const bool ij = rows[i] & bit(j), ji = rows[j] & bit(i);
        if (ij == ji)
          throw std::invalid_argument("Tournament: pair (" + std::to_string(i) +
                                      "," + std::to_string(j) +
                                      ") not oriented exactly once");
      }
    }
    Tournament t;
    t.n_ = n;
    t.out_ = std::move(rows);
    return t;
  }

  /// Parses a pair-bit body line of length n(n-1)/2.
  static Tournament from_pair_bits(int n, std::string_view bits) {
    check_size(n);
    const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (bits.size() != expected)
      throw std::invalid_argument("pair-bit string has length " +
                                  std::to_string(bits.size()) + ", expected " +
                                  std::to_string(expected));
    std::size_t p = 0;
    Tournament t(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++p) {
        const char c = bits[p];
        if (c == '1')
          t.out_[i] |= bit(j);
        else if (c == '0')
          t.out_[j] |= bit(i);
        else
          throw std::invalid_argument("pair-bit string: bad character");
      }
    return t;
  }

  int size() const { return n_; }
  Mask all() const { return low_mask(n_); }

  bool beats(int u, int v) const { return (out_[u] >> v) & 1U; }
  Mask out(int v) const { return out_[v]; }
  Mask in(int v) const { return all() & ~out_[v] & ~bit(v); }
  std::span<const Mask> rows() const { return out_; }

  std::string pair_bits() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) s.push_back(beats(i, j) ? '1' : '0');
    return s;
  }

  /// Relabels so that new vertex k is old vertex order[k].
  Tournament relabel(std::span<const int> order) const {
    if (static_cast<int>(order.size()) != n_)
      throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<int> pos(n_, -1);
    for (int k = 0; k < n_; ++k) {
      if (order[k] < 0 || order[k] >= n_ || pos[order[k]] != -1)
        throw std::invalid_argument("relabel: not a permutation");
      pos[order[k]] = k;
    }
    Tournament t(n_);
    for (int k = 0; k < n_; ++k)
      for_each_bit(out_[order[k]], [&](int w) { t.out_[k] |= bit(pos[w]); });
    return t;
  }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  explicit Tournament(int n) : n_(n), out_(static_cast<std::size_t>(n), 0) {
    check_size(n);
  }
  static void check_size(int n) {
    if (n < 0 || n > kMaxVertices)
      throw std::out_of_range("Tournament: size must be in [0, 64]");
  }

  int n_ = 0;
  std::vector<Mask> out_;
};

inline void check_vertex(const Tournament& t, int v) {
  if (v < 0 || v >= t.size())
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for tournament on " +
                            std::to_string(t.size()) + " vertices");
}

inline int out_degree(const Tournament& t, int v) {
  check_vertex(t, v);
  return popcount(t.out(v));
}

/// Sub-tournament on the vertices of `subset`, relabelled 0..k-1 in increasing
/// order of the original index.
inline Tournament induced(const Tournament& t, Mask subset) {
  if (subset & ~t.all()) throw std::out_of_range("induced: vertex out of range");
  std::vector<int> order;
  for_each_bit(subset, [&](int v) { order.push_back(v); });
  std::vector<Mask> rows(order.size(), 0);
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = 0; b < order.size(); ++b)
      if (t.beats(order[a], order[b])) rows[a] |= bit(static_cast<int>(b));
  return Tournament::from_rows(std::move(rows));
}

inline Tournament induced(const Tournament& t, const VertexSet& s) {
  for (int v : s) check_vertex(t, v);
  return induced(t, s.mask());
}

/// A tournament is transitive iff its out-degrees are pairwise distinct.
inline bool is_transitive(const Tournament& t) {
  Mask seen = 0;
  for (int v = 0; v < t.size(); ++v) {
    const Mask d = bit(popcount(t.out(v)));
    if (seen & d) return false;
    seen |= d;
  }
  return true;
}

inline bool is_transitive_on(const Tournament& t, Mask s) {
  Mask seen = 0;
  for (Mask m = s; m; m &= m - 1) {
    const int v = lowest(m);
    const Mask d = bit(popcount(t.out(v) & s));
    if (seen & d) return false;
    seen |= d;
  }
  return true;
}

inline Mask reachable_from(const Tournament& t, int v) {
  Mask seen = bit(v), frontier = bit(v);
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int u) { next |= t.out(u); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

/// Every ordered pair joined by a directed path. Vacuously true for n <= 1.
inline bool is_strongly_connected(const Tournament& t) {
  if (t.size() <= 1) return true;
  if (reachable_from(t, 0) != t.all()) return false;
  for (int v = 1; v < t.size(); ++v)
    if (!(reachable_from(t, v) & bit(0))) return false;
  return true;
}

/// Disjoint union with every cross pair oriented from `first` to `second`.
inline Tournament concat(const Tournament& first, const Tournament& second) {
  const int a = first.size(), b = second.size();
  if (a + b > kMaxVertices) throw InfeasibleError("concat: more than 64 vertices");
  std::vector<Mask> rows(static_cast<std::size_t>(a + b));
  for (int i = 0; i < a; ++i) rows[i] = first.out(i) | (low_mask(a + b) & ~low_mask(a));
  for (int j = 0; j < b; ++j) rows[a + j] = second.out(j) << a;
  return Tournament::from_rows(std::move(rows));
}

// ---- `.trn` text format -------------------------------------------------

inline std::string to_trn(const Tournament& t) {
  return std::to_string(t.size()) + "\n" + t.pair_bits() + "\n";
}

inline Tournament parse_trn(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string first, body, rest;
  if (!std::getline(in, first)) throw std::invalid_argument(".trn: empty input");
  if (!first.empty() && first.back() == '\r') first.pop_back();
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(first, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(".trn: first line is not a vertex count");
  }
  if (used != first.size() || n < 0)
    throw std::invalid_argument(".trn: first line is not a vertex count");
  std::getline(in, body);
  if (!body.empty() && body.back() == '\r') body.pop_back();
  while (std::getline(in, rest))
    if (!rest.empty() && rest != "\r")
      throw std::invalid_argument(".trn: trailing content after body line");
  return Tournament::from_pair_bits(n, body);
}

/// Human-authored input: one "u v" per line meaning u -> v. Lines starting
/// with '#' are comments. An optional leading "n N" line fixes the vertex
/// count; otherwise it is one more than the largest vertex named.
inline Tournament parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<int, int>> arcs;
  int n = -1, max_v = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string a;
    if (!(ls >> a) || a[0] == '#') continue;
    if (a == "n") {
      if (!(ls >> n)) throw std::invalid_argument("edge list: bad 'n' line");
      continue;
    }
    int u = 0, v = 0;
    try {
      u = std::stoi(a);
    } catch (const std::exception&) {
      throw std::invalid_argument("edge list: bad line '" + line + "'");
    }
    if (!(ls >> v) || u < 0 || v < 0 || u == v)
      throw std::invalid_argument("edge list: bad line '" + line + "'");
    arcs.emplace_back(u, v);
    max_v = std::max({max_v, u, v});
  }
  if (n < 0) n = max_v + 1;
  if (n > kMaxVertices || max_v >= n)
    throw std::out_of_range("edge list: vertex out of range");
  std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : arcs) {
    if (rows[v] & bit(u) || rows[u] & bit(v))
      throw std::invalid_argument("edge list: pair given twice");
    rows[u] |= bit(v);
  }
  return Tournament::from_rows(std::move(rows));
}

}  // namespace tourn
