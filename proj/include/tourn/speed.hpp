#pragma once

// Speeds of hereditary properties: closure enumeration and the counting
// quantities built on it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tourn/blocks.hpp"
#include "tourn/canon.hpp"
#include "tourn/families.hpp"
#include "tourn/speed_table.hpp"
#include "tourn/tournament.hpp"

namespace tourn {

inline constexpr int kDefaultMaxSeedSize = 36;
inline constexpr std::size_t kDefaultMemBudget = std::size_t{2} << 30;

struct EnumOptions {
  int threads = 1;
  std::size_t mem_budget = kDefaultMemBudget;
  int max_seed_size = kDefaultMaxSeedSize;
  // induced_classes switches from subset enumeration to deletion BFS above
  // this many subsets.
  std::uint64_t max_subsets = 5'000'000;
};

using FormSet = std::unordered_set<CanonicalForm, CanonicalFormHash>;

namespace detail {

// Rough resident size of one stored form, hash-set node included.
inline std::size_t form_cost(int n) {
  return sizeof(CanonicalForm) + 8 * static_cast<std::size_t>((n * (n - 1) / 2 + 63) / 64) + 48;
}

class Budget {
 public:
  explicit Budget(std::size_t limit) : limit_(limit) {}
  void charge(std::size_t forms, int n, const char* what) {
    used_ += forms * form_cost(n);
    if (used_ > limit_)
      throw InfeasibleError(std::string(what) + ": memory budget of " + std::to_string(limit_) +
                            " bytes exceeded at level " + std::to_string(n));
  }
  void release(std::size_t forms, int n) {
    const std::size_t c = forms * form_cost(n);
    used_ = c > used_ ? 0 : used_ - c;
  }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

// Runs work(i, shard) for i in [0, count) over `threads` workers, each with
// its own shard, and returns the sorted union.
template <typename Work>
std::vector<CanonicalForm> sharded_collect(std::size_t count, int threads, Work&& work) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)),
                                                     count));
  std::vector<FormSet> shards(workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i, shards[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) work(i, shards[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<CanonicalForm> out;
  std::size_t total = 0;
  for (auto& s : shards) total += s.size();
  out.reserve(total);
  for (auto& s : shards) {
    out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
    s.clear();
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<CanonicalForm> delete_one(const std::vector<CanonicalForm>& level, int threads) {
  return sharded_collect(level.size(), threads, [&](std::size_t i, FormSet& shard) {
    const Tournament t = level[i].tournament();
    for (int v = 0; v < t.size(); ++v) shard.insert(canonical_form(induced(t, t.all() & ~bit(v))));
  });
}

}  // namespace detail

/// Closure under induced sub-tournaments of `seeds`, levels 1..n_max, by
/// deleting vertices level by level from the largest seed down.
inline SpeedTable hereditary_closure(const std::vector<Tournament>& seeds, int n_max,
                                     const EnumOptions& opts = {}, std::string description = "") {
  if (seeds.empty()) throw std::invalid_argument("hereditary_closure: no seeds");
  if (n_max < 1) throw std::invalid_argument("hereditary_closure: n_max must be >= 1");
  int top = 0;
  for (const auto& s : seeds) {
    if (s.size() > opts.max_seed_size)
      throw InfeasibleError("hereditary_closure: seed on " + std::to_string(s.size()) +
                            " vertices exceeds the bound " + std::to_string(opts.max_seed_size));
    top = std::max(top, s.size());
  }
  SpeedTable table;
  table.seed = description.empty() ? std::to_string(seeds.size()) + " seeds" : description;
  table.max_seed_size = top;
  detail::Budget budget(opts.mem_budget);
  std::vector<CanonicalForm> current;
  for (int level = top; level >= 1; --level) {
    std::vector<CanonicalForm> next =
        current.empty() ? std::vector<CanonicalForm>{} : detail::delete_one(current, opts.threads);
    bool added = false;
    for (const auto& s : seeds)
      if (s.size() == level) {
        next.push_back(canonical_form(s));
        added = true;
      }
    if (added) {
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
    }
    budget.charge(next.size(), level, "hereditary_closure");
    if (level + 1 > n_max) budget.release(current.size(), level + 1);
    current = std::move(next);
    if (level <= n_max) table.levels[level] = current;
  }
  return table;
}

/// Every single-vertex deletion of each member lies one level down.
inline bool verify_downward_closed(const SpeedTable& table) {
  for (const auto& [n, forms] : table.levels) {
    if (n <= 1 || !table.has(n - 1)) continue;
    for (const auto& f : forms) {
      const Tournament t = f.tournament();
      for (int v = 0; v < n; ++v)
        if (!table.contains(canonical_form(induced(t, t.all() & ~bit(v))))) return false;
    }
  }
  return true;
}

/// Members of the property of tournaments avoiding every pattern in
/// `forbidden` as an induced sub-tournament, levels 1..n_max, by one-vertex
/// extensions of the previous level.
inline SpeedTable avoiding_property(const std::vector<Tournament>& forbidden, int n_max,
                                    const EnumOptions& opts = {}, std::string description = "") {
  if (n_max < 1) throw std::invalid_argument("avoiding_property: n_max must be >= 1");
  if (n_max > 16) throw InfeasibleError("avoiding_property: n_max above 16");
  SpeedTable table;
  if (description.empty()) {
    description = "avoid{";
    for (std::size_t i = 0; i < forbidden.size(); ++i)
      description += (i ? "," : "") + canonical_form(forbidden[i]).line();
    description += "}";
  }
  table.seed = std::move(description);
  detail::Budget budget(opts.mem_budget);
  auto allowed_through = [&](const Tournament& t, int v) {
    for (const auto& f : forbidden)
      if (f.size() <= t.size() && f.size() >= 1 && contains_induced_through(t, f, v)) return false;
    return true;
  };
  std::vector<CanonicalForm> current;
  {
    const Tournament one = Tournament::transitive(1);
    if (allowed_through(one, 0)) current.push_back(canonical_form(one));
  }
  table.levels[1] = current;
  for (int n = 2; n <= n_max; ++n) {
    const int old = n - 1;
    const std::size_t ext = std::size_t{1} << old;
    current = detail::sharded_collect(current.size() * ext, opts.threads,
                                      [&](std::size_t i, FormSet& shard) {
      const Tournament base = current[i / ext].tournament();
      const Mask outs = static_cast<Mask>(i % ext);
      std::vector<Mask> rows(base.rows().begin(), base.rows().end());
      for (int u = 0; u < old; ++u)
        if (!(outs & bit(u))) rows[u] |= bit(old);
      rows.push_back(outs);
      const Tournament t = Tournament::from_rows(std::move(rows));
      if (allowed_through(t, old)) shard.insert(canonical_form(t));
    });
    budget.charge(current.size(), n, "avoiding_property");
    table.levels[n] = current;
  }
  table.max_seed_size = 0;
  return table;
}

// ---- counting ----------------------------------------------------------

/// F*_0 = F*_1 = F*_2 = 1, F*_n = F*_{n-1} + F*_{n-3}.
inline std::uint64_t fstar(int n) {
  if (n < 0) throw std::invalid_argument("fstar: n must be >= 0");
  std::uint64_t a = 1, b = 1, c = 1;  // F*_{i-2}, F*_{i-1}, F*_i
  for (int i = 3; i <= n; ++i) {
    const std::uint64_t d = c + a;
    if (d < c) throw std::overflow_error("fstar: overflow");
    a = b;
    b = c;
    c = d;
  }
  return c;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

/// Sorted canonical forms of the k-vertex induced sub-tournaments of `host`.
inline std::vector<CanonicalForm> induced_classes(const Tournament& host, int k,
                                                  const EnumOptions& opts = {}) {
  const int n = host.size();
  if (k < 0 || k > n) throw std::invalid_argument("induced_classes: bad size");
  if (k == 0) return {CanonicalForm::of_labelled(Tournament::transitive(0))};
  if (binomial(n, k) > opts.max_subsets) {
    EnumOptions o = opts;
    o.max_seed_size = std::max(o.max_seed_size, n);
    return hereditary_closure({host}, k, o).at(k);
  }
  // Fan out on the smallest chosen vertex.
  return detail::sharded_collect(static_cast<std::size_t>(n - k + 1), opts.threads,
                                 [&](std::size_t first, FormSet& shard) {
    auto rec = [&](auto&& self, int next, int left, Mask chosen) -> void {
      if (left == 0) {
        shard.insert(canonical_form(induced(host, chosen)));
        return;
      }
      for (int v = next; v <= n - left; ++v) self(self, v + 1, left - 1, chosen | bit(v));
    };
    const int f = static_cast<int>(first);
    rec(rec, f + 1, k - 1, bit(f));
  });
}

struct LValue {
  std::uint64_t value = 0;
  std::uint64_t previous = 0;  // value at m - 1 (0 when m = 1)
  bool stabilized = false;     // value == previous
};

/// Number of distinct n-vertex sub-tournaments of make_M(I, m), with the
/// value at m - 1 for comparison.
inline LValue count_sub_L(FlagTriple flags, int n, int m, const EnumOptions& opts = {}) {
  if (m < 1 || n < 1) throw std::invalid_argument("count_sub_L: n and m must be >= 1");
  if (3 * m > opts.max_seed_size)
    throw InfeasibleError("count_sub_L: make_M with m = " + std::to_string(m) + " is too large");
  auto at = [&](int mm) -> std::uint64_t {
    if (mm < 1 || 3 * mm < n) return 0;
    return induced_classes(make_M(flags, mm), n, opts).size();
  };
  LValue r;
  r.value = at(m);
  r.previous = at(m - 1);
  r.stabilized = r.value == r.previous;
  return r;
}

struct LSeries {
  std::vector<std::uint64_t> values;  // values[m - 1] = L(n, I) at m
  int stable_m = 0;                   // first m with value(m) == value(m - 1), 0 if none
  bool monotone = true;
};

/// L(n, I) for m = 1..m_max.
inline LSeries count_sub_L_series(FlagTriple flags, int n, int m_max, const EnumOptions& opts = {}) {
  if (3 * m_max > opts.max_seed_size)
    throw InfeasibleError("count_sub_L_series: m_max too large");
  LSeries s;
  for (int m = 1; m <= m_max; ++m) {
    const std::uint64_t v = 3 * m < n ? 0 : induced_classes(make_M(flags, m), n, opts).size();
    if (!s.values.empty()) {
      if (v < s.values.back()) s.monotone = false;
      if (v == s.values.back() && v > 0 && s.stable_m == 0) s.stable_m = m;
    }
    s.values.push_back(v);
  }
  return s;
}

/// Distinct n-vertex sub-tournaments of C_2n.
inline std::uint64_t count_cyclic_subs(int n, const EnumOptions& opts = {}) {
  if (n < 1) throw std::invalid_argument("count_cyclic_subs: n must be >= 1");
  if (2 * n > opts.max_seed_size) throw InfeasibleError("count_cyclic_subs: 2n too large");
  return induced_classes(make_cyclic(2 * n), n, opts).size();
}

/// 2^(n-1) - 2 C(n-1, 2) - n, possibly negative.
inline std::int64_t count_tn_lower(int n) {
  if (n < 1 || n > 62) throw std::invalid_argument("count_tn_lower: n out of range");
  return (std::int64_t{1} << (n - 1)) - 2 * static_cast<std::int64_t>(binomial(n - 1, 2)) - n;
}

struct Type1Count {
  std::uint64_t ts_classes = 0;        // distinct T_n(S), S subset of [n-1], found inside
  std::uint64_t unique_transitive = 0;  // of those, S outside D_{n-1}
  bool embeddings_ok = true;           // each chosen vertex set induces T_n(S)
};

/// Inside make_type1(n, A), the vertices y, x_{2i-1} (i in S), x_2i (i not
/// in S) for i in [n-1] induce T_n(S); counts the distinct classes.
inline Type1Count count_type1_subs(int n) {
  if (n < 2 || n > 20) throw std::invalid_argument("count_type1_subs: n out of range");
  const Tournament host = make_type1(n, Type1Flavor::kA);
  const int y = 2 * n;
  FormSet all, unique;
  Type1Count r;
  for (std::uint32_t s = 0; s < (1u << (n - 1)); ++s) {
    Mask chosen = bit(y);
    std::vector<int> S;
    for (int i = 1; i <= n - 1; ++i) {
      const bool in = s >> (i - 1) & 1;
      if (in) S.push_back(i);
      chosen |= bit(in ? 2 * i - 2 : 2 * i - 1);
    }
    const CanonicalForm f = canonical_form(induced(host, chosen));
    if (f != canonical_form(make_TS(n, S))) r.embeddings_ok = false;
    all.insert(f);
    int transitive = 0;
    const Tournament ts = make_TS(n, S);
    for (int v = 0; v < n; ++v)
      if (is_transitive_on(ts, ts.all() & ~bit(v))) ++transitive;
    if (transitive < 2) unique.insert(f);
  }
  r.ts_classes = all.size();
  r.unique_transitive = unique.size();
  return r;
}

// ---- reports -----------------------------------------------------------

struct OLargeRow {
  int n = 0;
  std::int64_t f1 = 0, f2a = 0, f2 = 0, f3 = 0;
  std::uint64_t fstar = 0;
  bool i_ok = true, ii_ok = true, iii_ok = true;  // vacuous where not claimed
  bool i_checked = false, ii_checked = false, iii_checked = false;
  bool recurrence_ok = true;  // f(n+1) >= f(n) + f(n-2) for the three f's, n >= 6
};

/// The three lower-bound inequalities against F*_n:
///   (i)   2^(n-1) - 2 C(n-1, 2) - n >= F*_n            for n >= 6
///   (ii)  2^(n-2) > 2^(n-3) - 2 >= F*_n                for n >= 6
///   (iii) ceil(2^(n-1) / n) >= F*_n                    for n != 4
inline std::vector<OLargeRow> check_olarge(int n_max) {
  if (n_max > 60) throw std::invalid_argument("check_olarge: n_max above 60");
  auto f1 = [](int n) { return count_tn_lower(n); };
  auto f2a = [](int n) { return std::int64_t{1} << (n - 2); };
  auto f2 = [](int n) { return (std::int64_t{1} << (n - 3)) - 2; };
  auto f3 = [](int n) {
    const std::int64_t p = std::int64_t{1} << (n - 1);
    return (p + n - 1) / n;
  };
  std::vector<OLargeRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    OLargeRow r;
    r.n = n;
    r.fstar = fstar(n);
    const auto fs = static_cast<std::int64_t>(r.fstar);
    r.f1 = f1(n);
    r.f3 = f3(n);
    if (n >= 3) {
      r.f2a = f2a(n);
      r.f2 = f2(n);
    }
    if (n >= 6) {
      r.i_checked = r.ii_checked = true;
      r.i_ok = r.f1 >= fs;
      r.ii_ok = r.f2a > r.f2 && r.f2 >= fs;
      r.recurrence_ok = f1(n + 1) >= f1(n) + f1(n - 2) && f2(n + 1) >= f2(n) + f2(n - 2) &&
                        f3(n + 1) >= f3(n) + f3(n - 2);
    }
    if (n != 4) {
      r.iii_checked = true;
      r.iii_ok = r.f3 >= fs;
    }
    rows.push_back(r);
  }
  return rows;
}

struct SupermultCase {
  int m = 0, n = 0;
  std::uint64_t lhs = 0, rhs = 0;  // |P_{m+n}| and |P_m| |P_n|
  bool inequality = false;
  bool concat_members = false;     // every concat(G1, G2) lies in level m + n
  bool concat_injective = false;   // distinct pairs give distinct classes
  bool cut_clean = true;           // no forbidden pattern in any concat (when given)
};

struct SupermultReport {
  bool forbidden_strongly_connected = true;
  std::vector<SupermultCase> cases;
  bool ok() const {
    if (!forbidden_strongly_connected) return false;
    for (const auto& c : cases)
      if (!c.inequality || !c.concat_members || !c.concat_injective || !c.cut_clean) return false;
    return true;
  }
};

/// |P_{m+n}| >= |P_m| |P_n| for all m, n >= 1 with m + n in the table, with
/// the concatenation map checked pair by pair.
inline SupermultReport check_supermultiplicative(const SpeedTable& table,
                                                 const std::vector<Tournament>& forbidden = {}) {
  SupermultReport rep;
  for (const auto& f : forbidden)
    if (!is_strongly_connected(f)) rep.forbidden_strongly_connected = false;
  const int depth = table.max_level();
  for (int total = 2; total <= depth; ++total) {
    if (!table.has(total)) continue;
    for (int m = 1; m < total; ++m) {
      const int n = total - m;
      if (!table.has(m) || !table.has(n)) continue;
      SupermultCase c;
      c.m = m;
      c.n = n;
      c.lhs = table.count(total);
      c.rhs = table.count(m) * table.count(n);
      c.inequality = c.lhs >= c.rhs;
      c.concat_members = true;
      FormSet images;
      for (const auto& g1 : table.at(m)) {
        const Tournament t1 = g1.tournament();
        for (const auto& g2 : table.at(n)) {
          const Tournament joined = concat(t1, g2.tournament());
          const CanonicalForm f = canonical_form(joined);
          if (!table.contains(f)) c.concat_members = false;
          images.insert(f);
          for (const auto& bad : forbidden)
            if (contains_induced(joined, bad)) c.cut_clean = false;
        }
      }
      c.concat_injective = images.size() == c.rhs;
      rep.cases.push_back(c);
    }
  }
  return rep;
}

/// Largest block count over all stored members.
inline int max_block_count(const SpeedTable& table) {
  int b = 0;
  for (const auto& [n, forms] : table.levels)
    for (const auto& f : forms) b = std::max(b, block_count(f.tournament()));
  return b;
}

/// 2^((M+1)^2) C(n+M, M), as a double.
inline double lemma3_bound(int n, int M) {
  return std::pow(2.0, static_cast<double>((M + 1) * (M + 1))) *
         static_cast<double>(binomial(n + M, M));
}

/// Least-squares slope of log |P_n| against log n over [lo, hi].
inline double loglog_slope(const SpeedTable& table, int lo, int hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int k = 0;
  for (int n = lo; n <= hi; ++n) {
    const auto c = table.count(n);
    if (c == 0) throw std::domain_error("loglog_slope: empty level");
    const double x = std::log(static_cast<double>(n)), y = std::log(static_cast<double>(c));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++k;
  }
  if (k < 2) throw std::invalid_argument("loglog_slope: need two levels");
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace tourn
