// tourney: command-line front end for the tourn library.
//
// Tournaments cross the boundary as .trn text. Structured results go to
// stdout as JSON (or CSV where --csv makes sense); diagnostics and timings
// go to stderr so stdout stays reproducible.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tourn/tourn.hpp"

using nlohmann::ordered_json;
using namespace tourn;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

struct Global {
  bool json = false;
  bool csv = false;
  int threads = 1;
  std::string mem_budget;
  std::uint64_t seed = 1;
};

std::size_t parse_size(const std::string& s) {
  if (s.empty()) return kDefaultMemBudget;
  std::size_t pos = 0;
  const unsigned long long v = std::stoull(s, &pos);
  std::size_t mult = 1;
  const std::string suffix = s.substr(pos);
  if (suffix == "" || suffix == "B") mult = 1;
  else if (suffix == "K" || suffix == "KiB") mult = std::size_t{1} << 10;
  else if (suffix == "M" || suffix == "MiB") mult = std::size_t{1} << 20;
  else if (suffix == "G" || suffix == "GiB") mult = std::size_t{1} << 30;
  else throw std::invalid_argument("bad --mem-budget suffix: " + suffix);
  return static_cast<std::size_t>(v) * mult;
}

EnumOptions enum_options(const Global& g) {
  EnumOptions o;
  o.threads = g.threads;
  o.mem_budget = parse_size(g.mem_budget);
  return o;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Tournament read_one(const std::string& path) { return parse_trn(slurp(path)); }

// A file may hold several .trn records back to back (two lines each).
std::vector<Tournament> read_many(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<Tournament> out;
  std::string size_line, bits_line;
  while (std::getline(in, size_line)) {
    if (size_line.empty()) continue;
    if (!std::getline(in, bits_line)) bits_line.clear();
    out.push_back(parse_trn(size_line + "\n" + bits_line + "\n"));
  }
  if (out.empty()) throw std::invalid_argument(path + ": no tournaments");
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  if (s.empty() || s == "-") return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("not an integer: " + item);
    out.push_back(v);
  }
  return out;
}

FlagTriple parse_flags(const std::string& s) {
  std::string bits;
  for (char c : s)
    if (c != ',') bits += c;
  if (bits.size() != 3 || bits.find_first_not_of("01") != std::string::npos)
    throw std::invalid_argument("flag triple must be three bits, got " + s);
  return {bits[0] == '1', bits[1] == '1', bits[2] == '1'};
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json witness_json(const StructureWitness& w) {
  return {{"found", true}, {"kind", to_string(w.kind)}, {"assignment", w.assignment}};
}

ordered_json table_json(const SpeedTable& t, bool forms) {
  ordered_json levels = ordered_json::object();
  for (const auto& [n, level] : t.levels) {
    ordered_json entry{{"count", level.size()}};
    if (forms) {
      ordered_json lines = ordered_json::array();
      for (const auto& f : level) lines.push_back(f.line());
      entry["forms"] = lines;
    }
    levels[std::to_string(n)] = entry;
  }
  return {{"seed", t.seed}, {"levels", levels}};
}

ordered_json report_json(const VerifyReport& r) {
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  ordered_json cases = ordered_json::array();
  for (const auto& c : r.cases)
    cases.push_back({{"label", c.label}, {"observed", c.observed}, {"required", c.required},
                     {"pass", c.pass}});
  return {{"lemma", r.lemma}, {"parameters", params}, {"cases", cases}, {"passed", r.passed()}};
}

class Timer {
 public:
  explicit Timer(std::string what) : what_(std::move(what)) {}
  ~Timer() {
    const auto dt = std::chrono::steady_clock::now() - start_;
    std::cerr << what_ << ": " << std::chrono::duration<double>(dt).count() << " s\n";
  }

 private:
  std::string what_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tournaments: families, canonical forms, blocks, structures and speeds"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  auto* json_flag = app.add_flag("--json", g.json, "JSON output where plain text is the default");
  app.add_flag("--csv", g.csv, "CSV output for speed tables and reports")->excludes(json_flag);
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--mem-budget", g.mem_budget, "enumeration memory budget, e.g. 512M or 2G");
  app.add_option("--seed", g.seed, "seed for randomized verbs");

  int rc = 0;
  std::string out_path;
  auto write_trn = [&](const Tournament& t) {
    if (out_path.empty()) {
      std::cout << to_trn(t);
      return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << to_trn(t);
  };

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family member as .trn");
  gen->require_subcommand(1);
  gen->add_option("-o,--output", out_path, "output file (default stdout)");
  gen->fallthrough();
  std::string s1, s2, s3;
  int i1 = 0, i2 = 0;

  gen->add_subcommand("T", "stacked triangles from a 1/3 sequence, e.g. 1,3,1")
      ->add_option("seq", s1)->required();
  gen->get_subcommand("T")->callback([&] {
    const auto v = parse_ints(s1);
    write_trn(make_T(CompositionSeq(v)));
  });

  auto* gm = gen->add_subcommand("M", "M_I^(n) for a flag triple, e.g. 101 4");
  gm->add_option("flags", s1)->required();
  gm->add_option("n", i1)->required();
  gm->callback([&] { write_trn(make_M(parse_flags(s1), i1)); });

  auto* gmk = gen->add_subcommand("Mk", "M(k, n)");
  gmk->add_option("k", i1)->required();
  gmk->add_option("n", i2)->required();
  gmk->callback([&] { write_trn(make_M_general(i1, i2)); });

  auto* gc = gen->add_subcommand("cyclic", "cyclic tournament C_n");
  gc->add_option("n", i1)->required();
  gc->callback([&] { write_trn(make_cyclic(i1)); });

  auto* gts = gen->add_subcommand("TS", "T_{n+1}(S): vertex count and a comma list S (or -)");
  gts->add_option("n_plus_1", i1)->required();
  gts->add_option("S", s1);
  gts->callback([&] { write_trn(make_TS(i1, parse_ints(s1))); });

  auto* gst = gen->add_subcommand("Tstar", "chain with reversed pairs: n, positions, sigma");
  gst->add_option("n", i1)->required();
  gst->add_option("positions", s1);
  gst->add_option("sigma", s2);
  gst->callback([&] { write_trn(make_Tstar(ReversalSpec{i1, parse_ints(s1), parse_ints(s2)})); });

  auto* gt1 = gen->add_subcommand("type1", "Type-1 k-structure, flavor A or B");
  gt1->add_option("k", i1)->required();
  gt1->add_option("flavor", s1)->required()->check(CLI::IsMember({"A", "B"}));
  gt1->callback([&] { write_trn(make_type1(i1, s1 == "A" ? Type1Flavor::kA : Type1Flavor::kB)); });

  auto* gmoon = gen->add_subcommand("moon", "cyclic tower on 3^level vertices");
  gmoon->add_option("level", i1)->required();
  gmoon->callback([&] { write_trn(make_moon_tower(i1)); });

  auto* gtr = gen->add_subcommand("transitive", "transitive tournament");
  gtr->add_option("n", i1)->required();
  gtr->callback([&] { write_trn(Tournament::transitive(i1)); });

  auto* gblow = gen->add_subcommand("blowup", "replace quotient vertices by transitive parts");
  gblow->add_option("quotient", s1, "quotient .trn file")->required();
  gblow->add_option("sizes", s2)->required();
  gblow->callback([&] { write_trn(blow_up(read_one(s1), parse_ints(s2))); });

  auto* grand = gen->add_subcommand("random", "uniform random labelled tournament (uses --seed)");
  grand->add_option("n", i1)->required();
  grand->callback([&] {
    if (i1 < 0 || i1 > kMaxVertices) throw std::out_of_range("random: n out of range");
    std::mt19937_64 rng(g.seed);
    write_trn(Tournament::from_predicate(i1, [&](int, int) { return (rng() & 1) != 0; }));
  });

  // canon
  std::string file_a = "-", file_b;
  auto* canon = app.add_subcommand("canon", "print the canonical form as .trn");
  canon->add_option("file", file_a, "input .trn (default stdin)");
  canon->callback([&] {
    const auto f = canonical_form(read_one(file_a));
    if (g.json) emit({{"n", f.size()}, {"canonical", f.line()}});
    else std::cout << to_trn(f.tournament());
  });

  // iso
  auto* iso = app.add_subcommand("iso", "test two tournaments for isomorphism (exit 1 if not)");
  iso->add_option("a", file_a)->required();
  iso->add_option("b", file_b)->required();
  iso->callback([&] {
    const bool same = is_isomorphic(read_one(file_a), read_one(file_b));
    emit({{"isomorphic", same}});
    if (!same) rc = kExitFail;
  });

  // aut
  int aut_bound = kDefaultAutomorphismBound;
  auto* aut = app.add_subcommand("aut", "automorphism group order");
  aut->add_option("file", file_a)->required();
  aut->add_option("--bound", aut_bound, "largest vertex count accepted");
  aut->callback([&] { emit({{"order", automorphism_order(read_one(file_a), aut_bound)}}); });

  // blocks
  auto* blk = app.add_subcommand("blocks", "homogeneous block decomposition");
  blk->add_option("file", file_a)->required();
  blk->callback([&] {
    const auto d = decompose(read_one(file_a));
    ordered_json parts = ordered_json::array();
    for (const auto& b : d.blocks) parts.push_back(b.members());
    emit({{"blocks", parts}, {"sequence", d.sequence}, {"quotient", to_trn(d.quotient)}});
  });

  // detect
  int detect_type = 1, detect_k = 1, detect_bound = kDefaultStructureBound;
  auto* det = app.add_subcommand("detect", "find a Type-1 or Type-2 k-structure (exit 1 if absent)");
  det->add_option("--type", detect_type)->required()->check(CLI::IsMember({1, 2}));
  det->add_option("--k", detect_k)->required();
  det->add_option("--bound", detect_bound, "largest k accepted");
  det->add_option("file", file_a)->required();
  det->callback([&] {
    const auto t = read_one(file_a);
    const auto w = detect_type == 1 ? detect_type1(t, detect_k, detect_bound)
                                    : detect_type2(t, detect_k, detect_bound);
    if (w) {
      emit(witness_json(*w));
    } else {
      emit({{"found", false}});
      rc = kExitFail;
    }
  });

  // speed
  int speed_n_max = 8;
  bool speed_avoid = false, speed_forms = false;
  std::vector<std::string> speed_files;
  auto* spd = app.add_subcommand("speed", "speed table of a hereditary property");
  spd->add_option("--n-max", speed_n_max, "largest level")->check(CLI::Range(1, kMaxVertices));
  spd->add_flag("--avoid", speed_avoid, "treat inputs as forbidden sub-tournaments");
  spd->add_flag("--forms", speed_forms, "include canonical lines per level");
  spd->add_option("files", speed_files, ".trn files (several records per file allowed)");
  spd->callback([&] {
    std::vector<Tournament> ts;
    for (const auto& f : speed_files)
      for (auto& t : read_many(f)) ts.push_back(std::move(t));
    const auto opts = enum_options(g);
    SpeedTable table;
    {
      Timer timer("speed");
      table = speed_avoid ? avoiding_property(ts, speed_n_max, opts)
                          : hereditary_closure(ts, speed_n_max, opts);
    }
    if (g.csv) {
      std::cout << "n,count\n";
      for (const auto& [n, level] : table.levels) std::cout << n << "," << level.size() << "\n";
    } else {
      emit(table_json(table, speed_forms));
    }
  });

  // subcount
  std::string sub_flags;
  int sub_n = 0, sub_m = 0, sub_cyclic = 0;
  auto* sub = app.add_subcommand("subcount", "count distinct n-vertex sub-tournaments");
  auto* sub_i = sub->add_option("--I", sub_flags, "flag triple for make_M, e.g. 111");
  sub->add_option("--n", sub_n)->needs(sub_i);
  sub->add_option("--m", sub_m)->needs(sub_i);
  sub->add_option("--cyclic", sub_cyclic, "count n-subsets of C_2n instead")->excludes(sub_i);
  sub->callback([&] {
    const auto opts = enum_options(g);
    if (sub_cyclic > 0) {
      emit({{"n", sub_cyclic}, {"host", "C_" + std::to_string(2 * sub_cyclic)},
            {"count", count_cyclic_subs(sub_cyclic, opts)}});
      return;
    }
    if (sub_flags.empty() || sub_n < 1 || sub_m < 1)
      throw CLI::ValidationError("subcount", "needs --I, --n and --m, or --cyclic");
    const auto v = count_sub_L(parse_flags(sub_flags), sub_n, sub_m, opts);
    emit({{"I", parse_flags(sub_flags).str()}, {"n", sub_n}, {"m", sub_m}, {"count", v.value},
          {"previous", v.previous}, {"stabilized", v.stabilized}});
  });

  // verify
  std::string lemma;
  int verify_n_max = 0;
  auto* ver = app.add_subcommand("verify", "run one finite-scale check and report");
  ver->add_option("lemma-id", lemma)->required()->check(CLI::IsMember(lemma_ids()));
  ver->add_option("--n-max", verify_n_max, "largest size (default per check)");
  ver->callback([&] {
    VerifyParams p;
    p.n_max = verify_n_max;
    p.enumeration = enum_options(g);
    VerifyReport r;
    {
      Timer timer("verify " + lemma);
      r = run_verify(lemma, p);
    }
    if (g.csv) {
      std::cout << "label,observed,required,pass\n";
      for (const auto& c : r.cases)
        std::cout << c.label << "," << c.observed << "," << c.required << ","
                  << (c.pass ? "true" : "false") << "\n";
    } else {
      emit(report_json(r));
    }
    if (!r.passed()) rc = kExitFail;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return rc;
}
