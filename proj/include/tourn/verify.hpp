#pragma once

// Finite-scale checks of the counting claims, one report per lemma id.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tourn/blocks.hpp"
#include "tourn/canon.hpp"
#include "tourn/families.hpp"
#include "tourn/speed.hpp"
#include "tourn/structures.hpp"

namespace tourn {

struct VerifyCase {
  std::string label;
  std::string observed;
  std::string required;
  bool pass = false;
};

struct VerifyReport {
  std::string lemma;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<VerifyCase> cases;

  bool passed() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return !cases.empty();
  }
  void add(std::string label, std::string observed, std::string required, bool pass) {
    cases.push_back({std::move(label), std::move(observed), std::move(required), pass});
  }
  template <typename A, typename B>
  void add_ge(std::string label, A observed, B bound) {
    add(std::move(label), std::to_string(observed), ">= " + std::to_string(bound),
        static_cast<long double>(observed) >= static_cast<long double>(bound));
  }
  template <typename A, typename B>
  void add_eq(std::string label, A observed, B expected) {
    add(std::move(label), std::to_string(observed), "== " + std::to_string(expected),
        static_cast<long double>(observed) == static_cast<long double>(expected));
  }
};

struct VerifyParams {
  int n_max = 0;  // 0 selects the per-lemma default
  EnumOptions enumeration;
};

inline const std::vector<FlagTriple>& all_flag_triples() {
  static const std::vector<FlagTriple> all = [] {
    std::vector<FlagTriple> v;
    for (int b = 7; b >= 0; --b) v.push_back(FlagTriple::from_bits(b));
    return v;
  }();
  return all;
}

inline std::vector<Tournament> stacked_triangle_seeds(int max_sum) {
  std::vector<Tournament> seeds;
  for (const auto& seq : compositions_1_3(max_sum)) seeds.push_back(make_T(seq));
  return seeds;
}

inline std::vector<Tournament> cyclic_seeds(int max_m) {
  std::vector<Tournament> seeds;
  for (int m = 1; m <= max_m; ++m) seeds.push_back(make_cyclic(m));
  return seeds;
}

/// Closures of a few blown-up tournaments whose block count is bounded.
inline std::vector<std::pair<std::string, std::vector<Tournament>>> bounded_block_seeds() {
  const Tournament tri = make_cyclic(3);
  return {
      {"transitive(12)", {Tournament::transitive(12)}},
      {"C3[12,12,1]", {blow_up(tri, {12, 12, 1})}},
      {"C3[12,12,12]", {blow_up(tri, {12, 12, 12})}},
      {"C4[6,6,6,6]", {blow_up(make_cyclic(4), {6, 6, 6, 6})}},
  };
}

namespace detail {

inline void verify_t_equals_fstar(VerifyReport& r, const VerifyParams& p) {
  const int n_max = p.n_max ? p.n_max : 10;
  r.parameters.push_back({"n_max", std::to_string(n_max)});
  r.parameters.push_back({"seed_sum_max", std::to_string(n_max + 3)});
  const auto table = hereditary_closure(stacked_triangle_seeds(n_max + 3), n_max, p.enumeration,
                                        "make_T(seq), sum <= " + std::to_string(n_max + 3));
  for (int n = 1; n <= n_max; ++n) r.add_eq("n=" + std::to_string(n), table.count(n), fstar(n));
  r.add("downward-closed", verify_downward_closed(table) ? "true" : "false", "true",
        verify_downward_closed(table));
}

inline void verify_dn_bound(VerifyReport& r, const VerifyParams& p) {
  const int n_max = p.n_max ? p.n_max : 8;
  r.parameters.push_back({"n_max", std::to_string(n_max)});
  for (int n = 1; n <= n_max; ++n) {
    const auto dn = enumerate_dn(n);
    const auto bound = 2 * binomial(n, 2) + static_cast<std::uint64_t>(n) + 1;
    r.add("n=" + std::to_string(n) + " |D_n|", std::to_string(dn.size()),
          "<= " + std::to_string(bound), dn.size() <= bound);
    std::size_t unmatched = 0;
    for (const auto& S : dn)
      if (dn_shape(n, S) == 0) ++unmatched;
    r.add_eq("n=" + std::to_string(n) + " unmatched shapes", unmatched, 0);
  }
}

inline void verify_l_series(VerifyReport& r, const VerifyParams& p, FlagTriple flags, int n_max,
                            const std::function<std::int64_t(int)>& bound, bool exact) {
  for (int n = 1; n <= n_max; ++n) {
    // Sub-tournaments on n vertices meet at most n triples, so m = n is final.
    const auto s = count_sub_L_series(flags, n, n + 1, p.enumeration);
    const std::string tag = "I=" + flags.str() + " n=" + std::to_string(n);
    const auto final_value = s.values.back();
    r.add(tag + " stabilized", "stable_m=" + std::to_string(s.stable_m),
          "value(m) == value(m-1) for some m <= " + std::to_string(n + 1),
          s.stable_m != 0 && s.values[static_cast<std::size_t>(n) - 1] == final_value);
    r.add(tag + " monotone", s.monotone ? "true" : "false", "true", s.monotone);
    const auto at_stable = s.stable_m ? s.values[static_cast<std::size_t>(s.stable_m) - 1] : 0;
    if (exact)
      r.add_eq(tag + " value", final_value, bound(n));
    else
      r.add_ge(tag + " value at stable m", at_stable, bound(n));
  }
}

inline void verify_l111(VerifyReport& r, const VerifyParams& p) {
  const int n_max = p.n_max ? p.n_max : 9;
  r.parameters.push_back({"n_max", std::to_string(n_max)});
  verify_l_series(r, p, FlagTriple{true, true, true}, n_max,
                  [](int n) { return static_cast<std::int64_t>(fstar(n)); }, true);
}

inline void verify_l_i2_neq_i3(VerifyReport& r, const VerifyParams& p) {
  const int n_max = p.n_max ? p.n_max : 6;
  r.parameters.push_back({"n_max", std::to_string(n_max)});
  for (const auto& f : all_flag_triples())
    if (f.i2 != f.i3)
      verify_l_series(r, p, f, n_max,
                      [](int n) { return n >= 2 ? std::int64_t{1} << (n - 2) : std::int64_t{1}; },
                      false);
}

inline void verify_l_i1_zero(VerifyReport& r, const VerifyParams& p) {
  const int n_max = p.n_max ? p.n_max : 6;
  r.parameters.push_back({"n_max", std::to_string(n_max)});
  for (const auto& f : {FlagTriple{false, false, false}, FlagTriple{false, true, true}})
    verify_l_series(r, p, f, n_max,
                    [](int n) { return n >= 3 ? (std::int64_t{1} << (n - 3)) - 2 : std::int64_t{0}; },
                    false);
}

inline void verify_cyclic_count(VerifyReport& r, const VerifyParams& p) {
  const int n_max = p.n_max ? p.n_max : 8;
  r.parameters.push_back({"n_max", std::to_string(n_max)});
  for (int n = 1; n <= n_max; ++n) {
    const auto c = count_cyclic_subs(n, p.enumeration);
    const std::int64_t pw = std::int64_t{1} << (n - 1);
    r.add_ge("n=" + std::to_string(n), c, (pw + n - 1) / n);
    if (n == 3) r.add_eq("n=3 exact", c, 2);
  }
}

inline void verify_olarge(VerifyReport& r, const VerifyParams& p) {
  const int n_max = p.n_max ? p.n_max : 30;
  r.parameters.push_back({"n_max", std::to_string(n_max)});
  for (const auto& row : check_olarge(n_max)) {
    const std::string tag = "n=" + std::to_string(row.n);
    if (row.i_checked) r.add_ge(tag + " (i)", row.f1, row.fstar);
    if (row.ii_checked)
      r.add(tag + " (ii)", std::to_string(row.f2a) + " > " + std::to_string(row.f2),
            ">= " + std::to_string(row.fstar), row.ii_ok);
    if (row.iii_checked) r.add_ge(tag + " (iii)", row.f3, row.fstar);
    if (row.n >= 6)
      r.add(tag + " recurrence", row.recurrence_ok ? "true" : "false", "true", row.recurrence_ok);
    if (row.n == 4)
      r.add("n=4 (iii) exception", std::to_string(row.f3), "< " + std::to_string(row.fstar),
            row.f3 < static_cast<std::int64_t>(row.fstar));
  }
}

inline void verify_osmall(VerifyReport& r, const VerifyParams& p) {
  const auto cyc = hereditary_closure(cyclic_seeds(12), 5, p.enumeration, "C_m, m <= 12");
  r.add_eq("cyclic closure |P_4|", cyc.count(4), 2);
  for (int n = 1; n <= 3; ++n)
    r.add_ge("cyclic closure |P_" + std::to_string(n) + "|", cyc.count(n), fstar(n));
  for (auto flavor : {Type1Flavor::kA, Type1Flavor::kB}) {
    const std::string name = flavor == Type1Flavor::kA ? "A" : "B";
    const auto t = hereditary_closure({make_type1(3, flavor)}, 5, p.enumeration);
    r.add_ge("type-1 3-structure " + name + " |P_5|", t.count(5), fstar(5));
  }
  for (const auto& f : all_flag_triples()) {
    if (f.i1) continue;
    const auto t = hereditary_closure({make_M(f, 3)}, 5, p.enumeration);
    r.add_ge("M_" + f.str() + "^(3) |P_5|", t.count(5), fstar(5));
  }
}

inline void verify_moon_aut(VerifyReport& r, const VerifyParams& p) {
  const int levels = p.n_max ? p.n_max : 2;
  r.parameters.push_back({"levels", std::to_string(levels)});
  for (int l = 1; l <= levels; ++l) {
    const int size = l == 1 ? 3 : l == 2 ? 9 : 27;
    std::uint64_t expected = 1;
    for (int i = 0; i < (size - 1) / 2; ++i) expected *= 3;
    r.add_eq("level " + std::to_string(l), automorphism_order(make_moon_tower(l), 32), expected);
  }
}

inline void verify_fekete(VerifyReport& r, const VerifyParams& p) {
  const int n_max = p.n_max ? p.n_max : 9;
  r.parameters.push_back({"n_max", std::to_string(n_max)});
  const std::vector<Tournament> forbidden{make_cyclic(4)};
  const auto table = avoiding_property(forbidden, n_max, p.enumeration);
  const auto rep = check_supermultiplicative(table, forbidden);
  r.add("forbidden strongly connected", rep.forbidden_strongly_connected ? "true" : "false",
        "true", rep.forbidden_strongly_connected);
  for (const auto& c : rep.cases) {
    const std::string tag = "m=" + std::to_string(c.m) + " n=" + std::to_string(c.n);
    r.add_ge(tag, c.lhs, c.rhs);
    r.add(tag + " concat", c.concat_members && c.concat_injective && c.cut_clean ? "ok" : "bad",
          "members, injective, cut clean", c.concat_members && c.concat_injective && c.cut_clean);
  }
}

inline void verify_lemma3_bound(VerifyReport& r, const VerifyParams& p) {
  const int n_max = p.n_max ? p.n_max : 10;
  r.parameters.push_back({"n_max", std::to_string(n_max)});
  for (const auto& [name, seeds] : bounded_block_seeds()) {
    const auto table = hereditary_closure(seeds, n_max, p.enumeration, name);
    const int M = max_block_count(table) - 1;
    for (int n = 1; n <= n_max; ++n) {
      const double bound = lemma3_bound(n, M);
      r.add(name + " n=" + std::to_string(n), std::to_string(table.count(n)),
            "<= 2^" + std::to_string((M + 1) * (M + 1)) + " C(" + std::to_string(n + M) + "," +
                std::to_string(M) + ")",
            static_cast<double>(table.count(n)) <= bound);
    }
  }
}

inline void verify_type1_count(VerifyReport& r, const VerifyParams& p) {
  const int n_max = p.n_max ? p.n_max : 9;
  r.parameters.push_back({"n_max", std::to_string(n_max)});
  for (int n = 2; n <= n_max; ++n) {
    const auto c = count_type1_subs(n);
    const std::string tag = "n=" + std::to_string(n);
    r.add(tag + " embeddings", c.embeddings_ok ? "true" : "false", "true", c.embeddings_ok);
    r.add_ge(tag + " T_n(S) classes", c.ts_classes, count_tn_lower(n));
    r.add_ge(tag + " with one transitive (n-1)-set", c.unique_transitive, count_tn_lower(n));
  }
}

}  // namespace detail

inline const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{
      "T-equals-Fstar", "Dn-bound", "L111",     "L-I2neqI3", "L-I1zero",     "cyclic-count",
      "olarge",         "osmall",   "moon-aut", "fekete",    "lemma3-bound", "type1-count"};
  return ids;
}

inline VerifyReport run_verify(const std::string& id, const VerifyParams& params = {}) {
  using Fn = void (*)(VerifyReport&, const VerifyParams&);
  static const std::map<std::string, Fn> table{
      {"T-equals-Fstar", detail::verify_t_equals_fstar},
      {"Dn-bound", detail::verify_dn_bound},
      {"L111", detail::verify_l111},
      {"L-I2neqI3", detail::verify_l_i2_neq_i3},
      {"L-I1zero", detail::verify_l_i1_zero},
      {"cyclic-count", detail::verify_cyclic_count},
      {"olarge", detail::verify_olarge},
      {"osmall", detail::verify_osmall},
      {"moon-aut", detail::verify_moon_aut},
      {"fekete", detail::verify_fekete},
      {"lemma3-bound", detail::verify_lemma3_bound},
      {"type1-count", detail::verify_type1_count},
  };
  auto it = table.find(id);
  if (it == table.end()) throw std::invalid_argument("unknown lemma id: " + id);
  VerifyReport r;
  r.lemma = id;
  it->second(r, params);
  return r;
}

}  // namespace tourn
