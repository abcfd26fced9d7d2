#pragma once

// Canonical forms, isomorphism, automorphism-group order and induced
// containment for tournaments.
//
// The canonical form is the lexicographically least pair-bit string over all
// relabellings. Row-major order makes the search incremental: once the
// vertices at positions 0..k-1 are chosen, the unplaced vertices fall into an
// ordered partition of cells (vertices agreeing on every placed vertex), the
// vertex at position k must come from the first cell, and its row is fixed by
// how many members of each cell beat it, since those must be placed first.
// Branch-and-bound over that tree, pruned with the automorphisms discovered at
// equal leaves, yields the exact minimum.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tourn/tournament.hpp"
#include "tourn/witness.hpp"

namespace tourn {

class CanonicalForm {
 public:
  CanonicalForm() = default;

  static CanonicalForm of_labelled(const Tournament& t) {
    CanonicalForm f;
    f.n_ = t.size();
    const std::size_t pairs = static_cast<std::size_t>(f.n_) * (f.n_ - 1) / 2;
    f.words_.assign((pairs + 63) / 64, 0);
    std::size_t p = 0;
    for (int i = 0; i < f.n_; ++i)
      for (int j = i + 1; j < f.n_; ++j, ++p)
        if (t.beats(i, j)) f.words_[p / 64] |= Mask{1} << (63 - p % 64);
    return f;
  }

  /// Parses a `.trn` body line. The line must already be canonical; this is
  /// not checked here (see is_canonical).
  static CanonicalForm from_line(int n, std::string_view line) {
    return of_labelled(Tournament::from_pair_bits(n, line));
  }

  int size() const { return n_; }
  std::string line() const { return tournament().pair_bits(); }
  Tournament tournament() const {
    std::size_t p = 0;
    std::vector<Mask> rows(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j, ++p) {
        if ((words_[p / 64] >> (63 - p % 64)) & 1U)
          rows[i] |= bit(j);
        else
          rows[j] |= bit(i);
      }
    return Tournament::from_rows(std::move(rows));
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n_);
    for (Mask w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
  std::size_t byte_size() const { return sizeof(*this) + words_.size() * sizeof(Mask); }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> words_;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const { return f.hash(); }
};

namespace detail {

class CanonSearch {
 public:
  explicit CanonSearch(const Tournament& t) : t_(t), n_(t.size()) {}

  /// Least labelling whose first positions are `forced`, in that order.
  std::vector<int> run(const std::vector<int>& forced = {}) {
    std::vector<Mask> cells;
    Mask rest = t_.all();
    for (int v : forced) {
      cells.push_back(bit(v));
      rest &= ~bit(v);
    }
    if (rest) cells.push_back(rest);
    cur_.clear();
    cur_rows_.clear();
    have_best_ = false;
    if (n_ == 0) return {};
    dfs(cells, /*equal_to_best=*/false);
    return best_;
  }

  const std::vector<std::vector<int>>& generators() const { return gens_; }

 private:
  // Row of candidate c given the ordered cells, first cell containing c.
  Mask row_of(int c, const std::vector<Mask>& cells) const {
    Mask row = 0;
    const Mask in_c = t_.in(c);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Mask cell = i == 0 ? cells[0] & ~bit(c) : cells[i];
      const int zeros = popcount(cell & in_c);
      const int ones = popcount(cell) - zeros;
      row <<= zeros;
      row = (row << ones) | low_mask(ones);
    }
    return row;
  }

  static std::vector<Mask> split(int c, const std::vector<Mask>& cells, Mask in_c) {
    std::vector<Mask> next;
    next.reserve(cells.size() + 1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Mask cell = i == 0 ? cells[0] & ~bit(c) : cells[i];
      if (cell & in_c) next.push_back(cell & in_c);
      if (cell & ~in_c) next.push_back(cell & ~in_c);
    }
    return next;
  }

  void leaf(bool equal_to_best) {
    if (!have_best_ || !equal_to_best) {
      best_ = cur_;
      best_rows_ = cur_rows_;
      have_best_ = true;
      updated_ = true;
      return;
    }
    // Equal strings: best_[i] -> cur_[i] is an automorphism.
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[best_[i]] = cur_[i];
      identity &= best_[i] == cur_[i];
    }
    if (!identity) gens_.push_back(std::move(gamma));
  }

  // Union-find over vertices using generators that fix the current prefix.
  std::vector<int> stabilizer_orbits() const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : gens_) {
      bool fixes = true;
      for (int v : cur_) fixes &= g[v] == v;
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) parent[find(v)] = find(g[v]);
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void dfs(const std::vector<Mask>& cells, bool equal_to_best) {
    const int depth = static_cast<int>(cur_.size());
    if (depth == n_) {
      updated_ = false;
      leaf(equal_to_best);
      return;
    }
    const Mask first = cells[0];
    Mask min_row = ~Mask{0};
    std::vector<int> cands;
    for_each_bit(first, [&](int c) {
      const Mask r = row_of(c, cells);
      if (r < min_row) {
        min_row = r;
        cands.clear();
      }
      if (r == min_row) cands.push_back(c);
    });
    std::vector<int> explored;
    bool any_update = false;
    for (int c : cands) {
      // A leaf below a sibling replaced best with a string sharing our prefix.
      if (any_update) equal_to_best = true;
      bool child_equal = false;
      if (have_best_ && equal_to_best) {
        if (min_row > best_rows_[depth]) break;
        child_equal = min_row == best_rows_[depth];
      }
      if (!explored.empty() && !gens_.empty()) {
        const auto orbit = stabilizer_orbits();
        const bool redundant = std::any_of(explored.begin(), explored.end(),
                                           [&](int e) { return orbit[e] == orbit[c]; });
        if (redundant) continue;
      }
      explored.push_back(c);
      cur_.push_back(c);
      cur_rows_.push_back(min_row);
      updated_ = false;
      dfs(split(c, cells, t_.in(c)), child_equal);
      any_update |= updated_;
      cur_.pop_back();
      cur_rows_.pop_back();
    }
    updated_ = any_update;
  }

  const Tournament& t_;
  int n_;
  std::vector<int> cur_, best_;
  std::vector<Mask> cur_rows_, best_rows_;
  bool have_best_ = false;
  bool updated_ = false;
  std::vector<std::vector<int>> gens_;
};

}  // namespace detail

/// Vertex order (position -> original vertex) realizing the canonical form.
inline std::vector<int> canonical_labelling(const Tournament& t) {
  return detail::CanonSearch(t).run();
}

inline CanonicalForm canonical_form(const Tournament& t) {
  if (t.size() <= 1) return CanonicalForm::of_labelled(t);
  return CanonicalForm::of_labelled(t.relabel(canonical_labelling(t)));
}

inline bool is_canonical(const Tournament& t) {
  return canonical_form(t) == CanonicalForm::of_labelled(t);
}

inline bool is_isomorphic(const Tournament& a, const Tournament& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

inline constexpr int kDefaultAutomorphismBound = 16;

/// |Aut(T)| as the product of orbit sizes along a stabilizer chain. Two
/// vertices a, b share an orbit of the stabilizer of (v_1..v_k) iff the least
/// labellings forced to start (v_1..v_k, a) and (v_1..v_k, b) agree.
inline std::uint64_t automorphism_order(const Tournament& t,
                                        int bound = kDefaultAutomorphismBound) {
  if (t.size() > bound)
    throw InfeasibleError("automorphism_order: " + std::to_string(t.size()) +
                          " vertices exceeds bound " + std::to_string(bound));
  const int n = t.size();
  std::uint64_t order = 1;
  std::vector<int> prefix;
  detail::CanonSearch search(t);
  auto form_with = [&](int v) {
    auto forced = prefix;
    forced.push_back(v);
    return CanonicalForm::of_labelled(t.relabel(search.run(forced)));
  };
  for (int base = 0; base < n; ++base) {
    const CanonicalForm ref = form_with(base);
    std::uint64_t orbit = 1;
    for (int v = 0; v < n; ++v) {
      if (v == base || std::find(prefix.begin(), prefix.end(), v) != prefix.end())
        continue;
      if (popcount(t.out(v)) != popcount(t.out(base))) continue;
      if (form_with(v) == ref) ++orbit;
    }
    order *= orbit;
    prefix.push_back(base);
  }
  return order;
}

namespace detail {

template <typename Accept>
bool embed(const Tournament& host, const Tournament& pattern, std::vector<int>& image,
           Mask used, const std::vector<int>& pattern_out,
           const std::vector<int>& host_out, Accept&& accept) {
  const int k = static_cast<int>(image.size());
  const int h = pattern.size();
  if (k == h) return accept(image);
  Mask cand = host.all() & ~used;
  for (int i = 0; i < k; ++i)
    cand &= pattern.beats(i, k) ? host.out(image[i]) : host.in(image[i]);
  const int need_out = pattern_out[k], need_in = h - 1 - pattern_out[k];
  const int n = host.size();
  while (cand) {
    const int w = lowest(cand);
    cand &= cand - 1;
    if (host_out[w] < need_out || n - 1 - host_out[w] < need_in) continue;
    image.push_back(w);
    if (embed(host, pattern, image, used | bit(w), pattern_out, host_out, accept))
      return true;
    image.pop_back();
  }
  return false;
}

}  // namespace detail

/// Injective map from `pattern` into `host` with pattern ~= host[image], found
/// by backtracking in increasing host-vertex order.
inline std::optional<StructureWitness> contains_induced(const Tournament& host,
                                                        const Tournament& pattern) {
  if (pattern.size() > host.size()) return std::nullopt;
  std::vector<int> pattern_out(pattern.size()), host_out(host.size());
  for (int v = 0; v < pattern.size(); ++v) pattern_out[v] = popcount(pattern.out(v));
  for (int v = 0; v < host.size(); ++v) host_out[v] = popcount(host.out(v));
  std::vector<int> image;
  std::optional<StructureWitness> found;
  detail::embed(host, pattern, image, 0, pattern_out, host_out,
                [&](const std::vector<int>& img) {
                  found = StructureWitness{WitnessKind::kEmbedding, img};
                  return true;
                });
  return found;
}

/// As contains_induced, restricted to embeddings whose image contains `v`.
inline bool contains_induced_through(const Tournament& host, const Tournament& pattern,
                                     int v) {
  if (pattern.size() > host.size()) return false;
  std::vector<int> pattern_out(pattern.size()), host_out(host.size());
  for (int u = 0; u < pattern.size(); ++u) pattern_out[u] = popcount(pattern.out(u));
  for (int u = 0; u < host.size(); ++u) host_out[u] = popcount(host.out(u));
  // Move each pattern vertex in turn to the front and pin it to v.
  for (int h = 0; h < pattern.size(); ++h) {
    std::vector<int> order(pattern.size());
    std::iota(order.begin(), order.end(), 0);
    std::swap(order[0], order[h]);
    const Tournament p = pattern.relabel(order);
    std::vector<int> p_out(p.size());
    for (int u = 0; u < p.size(); ++u) p_out[u] = popcount(p.out(u));
    const int host_in = host.size() - 1 - host_out[v], p_in = p.size() - 1 - p_out[0];
    if (host_out[v] < p_out[0] || host_in < p_in) continue;
    std::vector<int> image{v};
    if (detail::embed(host, p, image, bit(v), p_out, host_out,
                      [](const std::vector<int>&) { return true; }))
      return true;
  }
  return false;
}

}  // namespace tourn
