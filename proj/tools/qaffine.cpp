/* qaffine — batch front-end for coloured-partition counting, enumeration,
 * bijection checks and identity verification.
 *
 * Exit codes: 0 = all checks passed (or pure data command succeeded),
 *             1 = a verification found a mismatch,
 *             2 = usage or validation error.
 *
 * All data output goes to stdout and is byte-deterministic for fixed
 * arguments at --jobs 1; progress lines go to stderr only.  The environment
 * variable QAFFINE_ORDER supplies the default truncation order / weight
 * bound wherever --order or --max is not given.
 */

#include "CLI11.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qaffine/characters.hpp"
#include "qaffine/classical.hpp"
#include "qaffine/coloured.hpp"
#include "qaffine/crystal.hpp"
#include "qaffine/json_io.hpp"

namespace {

using namespace qaffine;

constexpr const char* kOrderEnv = "QAFFINE_ORDER";

io::Format parse_format(const std::string& name) {
  auto f = io::format_from_name(name);
  if (!f) throw std::invalid_argument("unknown format: " + name);
  return *f;
}

Level2Module parse_module(const std::string& name) {
  auto m = module_from_name(name);
  if (!m) throw std::invalid_argument("unknown module: " + name + " (expected l01, 2l0 or 2l1)");
  return *m;
}

/* ---------------- count ---------------- */

QSeries count_series(const std::string& family, int i, int nr, int max) {
  QSeries s(max);
  if (family == "c" || family == "cgeq") {
    // One enumeration pass gives every weight bucket at once.
    auto buckets = (family == "c") ? exact_partitions(i, nr, max)
                                   : atleast_partitions(i, nr, max);
    for (int m = 0; m <= max; ++m) s.set(m, Int(static_cast<long>(buckets[m].size())));
  } else {
    for (int m = 0; m <= max; ++m) {
      if (family == "mp") s.set(m, meurman_primc_count(i, nr, m));
      else if (family == "ag") s.set(m, andrews_gordon_count(i, nr, m));
      else if (family == "bressoud") s.set(m, bressoud_count(i, nr, m));
      else throw std::invalid_argument("unknown counting family: " + family);
    }
  }
  return s;
}

void print_counts(const QSeries& s, io::Format f) {
  if (f == io::Format::kJson) {
    std::cout << io::to_json(s);
  } else {
    const char sep = (f == io::Format::kCsv) ? ',' : ' ';
    for (int m = 0; m <= s.order(); ++m)
      std::cout << m << sep << to_decimal(s.at(m)) << "\n";
  }
}

/* ---------------- enum ---------------- */

std::vector<ColouredPartition> enumerated(const std::string& family, int i, int n,
                                          const std::string& module_name_arg, int max) {
  std::vector<ColouredPartition> flat;
  if (family == "grounded") {
    auto buckets = grounded_partitions(level2_family(parse_module(module_name_arg)), max);
    for (const auto& [w, bucket] : buckets)
      flat.insert(flat.end(), bucket.begin(), bucket.end());
  } else {
    auto buckets = (family == "c") ? exact_partitions(i, n, max)
                                   : atleast_partitions(i, n, max);
    for (const auto& bucket : buckets)
      flat.insert(flat.end(), bucket.begin(), bucket.end());
  }
  return flat;
}

void print_partitions(const std::vector<ColouredPartition>& ps, io::Format f) {
  if (f == io::Format::kJson) {
    std::cout << io::partitions_json(ps);
  } else {
    for (const auto& p : ps)
      std::cout << (f == io::Format::kCsv ? io::to_csv(p) : io::to_text(p));
  }
}

/* ---------------- bijection checks ---------------- */

VerifyReport bijection_phi_report(int i, int n, int max_len) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.identity = "path/partition bijection round-trip (i=" + std::to_string(i) +
                 ", n=" + std::to_string(n) + ", prefix length <= " + std::to_string(max_len) + ")";
  rep.order = max_len;
  rep.pass = true;
  for (const CrystalPath& p : enumerate_paths(i, n, max_len)) {
    const ColouredPartition pi = path_to_partition(p);
    std::string where = "path " + std::to_string(p.i) + "/" + std::to_string(p.n) + " prefix(";
    for (size_t k = 0; k < p.prefix.size(); ++k)
      where += (k ? "," : "") + std::to_string(p.prefix[k]);
    where += ")";
    if (!is_exact_valid(pi, i, n)) {
      rep.pass = false;
      rep.mismatch = MismatchInfo{where, partition_to_string(pi), "a partition in the exact family"};
      break;
    }
    const AffineWeight deviation = path_weight(p) - highest_weight(i, n);
    const AffineWeight monomial = partition_weight_monomial(pi, i, n).to_affine();
    if (deviation != monomial) {
      rep.pass = false;
      rep.mismatch = MismatchInfo{where + " weight", deviation.to_string(), monomial.to_string()};
      break;
    }
    const CrystalPath back = partition_to_path(pi, i, n);
    if (back.prefix != p.prefix) {
      rep.pass = false;
      std::string got = "prefix(";
      for (size_t k = 0; k < back.prefix.size(); ++k)
        got += (k ? "," : "") + std::to_string(back.prefix[k]);
      rep.mismatch = MismatchInfo{where + " round-trip", where, got + ")"};
      break;
    }
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0).count();
  return rep;
}

VerifyReport bijection_psi_report(int i, int n, int max_weight) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.identity = "split/merge bijection round-trip (i=" + std::to_string(i) +
                 ", n=" + std::to_string(n) + ", weight <= " + std::to_string(max_weight) + ")";
  rep.order = max_weight;
  rep.pass = true;
  auto buckets = atleast_partitions(i, n, max_weight);
  for (const auto& bucket : buckets) {
    for (const ColouredPartition& pi : bucket) {
      const std::string where = "partition " + partition_to_string(pi);
      const SplitResult split = psi_split(pi, i, n);
      long long nu_weight = 0;
      for (int v : split.nu) nu_weight += v;
      if (!is_exact_valid(split.mu, i, n)) {
        rep.pass = false;
        rep.mismatch = MismatchInfo{where, partition_to_string(split.mu),
                                    "an exact-family component"};
        break;
      }
      if (partition_weight(pi) != partition_weight(split.mu) + nu_weight) {
        rep.pass = false;
        rep.mismatch = MismatchInfo{where + " weight split",
                                    std::to_string(partition_weight(pi)),
                                    std::to_string(partition_weight(split.mu)) + " + " +
                                        std::to_string(nu_weight)};
        break;
      }
      const ColouredPartition back = psi_merge(split, i, n);
      if (back != pi) {
        rep.pass = false;
        rep.mismatch = MismatchInfo{where + " round-trip", partition_to_string(pi),
                                    partition_to_string(back)};
        break;
      }
    }
    if (!rep.pass) break;
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/* ---------------- grid ---------------- */

std::vector<VerifyReport> run_cells(const std::vector<std::function<VerifyReport()>>& cells,
                                    int jobs) {
  std::vector<VerifyReport> out(cells.size());
  if (cells.empty()) return out;
  std::atomic<size_t> next{0};
  std::atomic<size_t> done{0};
  std::mutex log_mutex;
  auto worker = [&]() {
    for (;;) {
      const size_t k = next.fetch_add(1);
      if (k >= cells.size()) return;
      out[k] = cells[k]();
      const size_t finished = done.fetch_add(1) + 1;
      std::lock_guard<std::mutex> lock(log_mutex);
      std::cerr << "[" << finished << "/" << cells.size() << "] "
                << (out[k].pass ? "PASS " : "FAIL ") << out[k].identity << "\n";
    }
  };
  const int degree = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
  if (degree == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(degree));
    for (int t = 0; t < degree; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

int print_grid(const std::vector<VerifyReport>& cells, io::Format f) {
  bool all_pass = true;
  for (const auto& r : cells) all_pass = all_pass && r.pass;
  if (f == io::Format::kJson) {
    std::cout << io::grid_summary_json(cells);
  } else if (f == io::Format::kCsv) {
    for (const auto& r : cells) std::cout << io::to_csv(r);
  } else {
    for (const auto& r : cells) std::cout << io::to_text(r);
    int passed = 0;
    for (const auto& r : cells) passed += r.pass ? 1 : 0;
    std::cout << (all_pass ? "PASS" : "FAIL") << "  " << passed << "/" << cells.size()
              << " grid cells passed\n";
  }
  return all_pass ? 0 : 1;
}

int print_report(const VerifyReport& rep, io::Format f) {
  std::cout << io::render(rep, f);
  return rep.pass ? 0 : 1;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact q-series verification of coloured-partition identities"};
  app.require_subcommand(1);

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  // ---- count ----
  auto* count_cmd = app.add_subcommand("count", "Graded counts of a partition family");
  std::string count_family;
  int count_i = 0, count_n = -1, count_r = -1, count_max = 20;
  count_cmd->add_option("family", count_family, "Family: c, cgeq, mp, ag, bressoud")
      ->required()
      ->check(CLI::IsMember({"c", "cgeq", "mp", "ag", "bressoud"}));
  count_cmd->add_option("--i", count_i, "Ground colour / count of allowed ones")->required();
  count_cmd->add_option("--n", count_n, "Colour bound (families c, cgeq, mp)");
  count_cmd->add_option("--r", count_r, "Gap window length (families ag, bressoud)");
  count_cmd->add_option("--max", count_max, "Largest weight to count")
      ->envname(kOrderEnv)
      ->capture_default_str();

  // ---- enum ----
  auto* enum_cmd = app.add_subcommand("enum", "List the partitions of a family by weight");
  std::string enum_family, enum_module = "l01";
  int enum_i = 0, enum_n = -1, enum_max = 10;
  enum_cmd->add_option("family", enum_family, "Family: c, cgeq, grounded")
      ->required()
      ->check(CLI::IsMember({"c", "cgeq", "grounded"}));
  enum_cmd->add_option("--i", enum_i, "Ground colour");
  enum_cmd->add_option("--n", enum_n, "Colour bound");
  enum_cmd->add_option("--module", enum_module, "Level-2 module for family 'grounded'")
      ->check(CLI::IsMember({"l01", "2l0", "2l1", "L01", "2L0", "2L1"}));
  enum_cmd->add_option("--max", enum_max, "Largest weight to enumerate")
      ->envname(kOrderEnv)
      ->capture_default_str();

  // ---- series ----
  auto* series_cmd = app.add_subcommand("series", "Print a truncated series");
  std::string series_what, series_module = "l01";
  int series_i = 0, series_n = -1, series_r = -1, series_order = 20;
  series_cmd
      ->add_option("what", series_what,
                   "One of: product-ag, product-bressoud, product-main, product-maingeq, "
                   "weyl-kac, gf-closed, gf-enum")
      ->required()
      ->check(CLI::IsMember({"product-ag", "product-bressoud", "product-main",
                             "product-maingeq", "weyl-kac", "gf-closed", "gf-enum"}));
  series_cmd->add_option("--i", series_i, "First parameter i");
  series_cmd->add_option("--n", series_n, "Level / colour bound n");
  series_cmd->add_option("--r", series_r, "Gap window length r");
  series_cmd->add_option("--module", series_module, "Level-2 module (gf-closed, gf-enum)")
      ->check(CLI::IsMember({"l01", "2l0", "2l1", "L01", "2L0", "2L1"}));
  series_cmd->add_option("--order", series_order, "Truncation order")
      ->envname(kOrderEnv)
      ->capture_default_str();

  // ---- bijection ----
  auto* bij_cmd = app.add_subcommand("bijection", "Check a bijection by exhaustive round-trip");
  std::string bij_which;
  int bij_i = 0, bij_n = 1, bij_len = 6, bij_max = 15;
  bij_cmd->add_option("which", bij_which, "phi (paths) or psi (split/merge)")
      ->required()
      ->check(CLI::IsMember({"phi", "psi"}));
  bij_cmd->add_option("--i", bij_i, "Ground colour")->required();
  bij_cmd->add_option("--n", bij_n, "Colour bound")->required();
  bij_cmd->add_option("--max-len", bij_len, "Largest deviating prefix length (phi)")
      ->capture_default_str();
  bij_cmd->add_option("--max", bij_max, "Largest weight (psi)")
      ->envname(kOrderEnv)
      ->capture_default_str();

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "Verify one identity coefficientwise");
  std::string verify_what, verify_rel = "exact", verify_module = "l01";
  int verify_i = 0, verify_n = -1, verify_r = -1, verify_order = 20;
  verify_cmd
      ->add_option("what", verify_what,
                   "One of: main, mp, ag, bressoud, weyl-kac, character")
      ->required()
      ->check(CLI::IsMember({"main", "mp", "ag", "bressoud", "weyl-kac", "character"}));
  verify_cmd->add_option("--i", verify_i, "First parameter i");
  verify_cmd->add_option("--n", verify_n, "Level / colour bound n");
  verify_cmd->add_option("--r", verify_r, "Gap window length r");
  verify_cmd->add_option("--rel", verify_rel, "Difference relation for 'main': exact or atleast")
      ->check(CLI::IsMember({"exact", "atleast"}))
      ->capture_default_str();
  verify_cmd->add_option("--module", verify_module, "Level-2 module (character)")
      ->check(CLI::IsMember({"l01", "2l0", "2l1", "L01", "2L0", "2L1"}));
  verify_cmd->add_option("--order", verify_order, "Truncation order")
      ->envname(kOrderEnv)
      ->capture_default_str();

  // ---- grid ----
  auto* grid_cmd = app.add_subcommand("grid", "Verify a Cartesian grid of identities");
  std::string grid_what, grid_rel = "exact", grid_modules = "l01,2l0,2l1";
  int grid_min_n = 0, grid_max_n = 4, grid_order = 20, grid_jobs = 1;
  grid_cmd->add_option("what", grid_what, "main or character")
      ->required()
      ->check(CLI::IsMember({"main", "character"}));
  grid_cmd->add_option("--min-n", grid_min_n, "Smallest n (main)")->capture_default_str();
  grid_cmd->add_option("--max-n", grid_max_n, "Largest n (main)")->capture_default_str();
  grid_cmd->add_option("--rel", grid_rel, "exact, atleast or both (main)")
      ->check(CLI::IsMember({"exact", "atleast", "both"}))
      ->capture_default_str();
  grid_cmd->add_option("--modules", grid_modules, "Comma-separated module list (character)")
      ->capture_default_str();
  grid_cmd->add_option("--order", grid_order, "Truncation order")
      ->envname(kOrderEnv)
      ->capture_default_str();
  grid_cmd->add_option("--jobs", grid_jobs, "Concurrent cells")->capture_default_str();

  // ---- character ----
  auto* char_cmd = app.add_subcommand("character", "Print a module character over the weight lattice");
  std::string char_module;
  int char_i = 0, char_n = -1, char_order = 12, char_max_weight = -1;
  char_cmd->add_option("--module", char_module, "Level-2 module: closed-form character")
      ->check(CLI::IsMember({"l01", "2l0", "2l1", "L01", "2L0", "2L1"}));
  char_cmd->add_option("--i", char_i, "Highest weight parameter i (enumerated character)");
  char_cmd->add_option("--n", char_n, "Level n (enumerated character)");
  char_cmd->add_option("--max-weight", char_max_weight,
                       "Partition weight bound for the enumerated character");
  char_cmd->add_option("--order", char_order, "Truncation order (closed-form character)")
      ->envname(kOrderEnv)
      ->capture_default_str();

  // Let global options such as --format appear after a subcommand's own options.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\nRun with --help for usage.\n";
    return 2;
  }

  const io::Format fmt = parse_format(format_name);

  if (app.got_subcommand(count_cmd)) {
    const bool uses_r = (count_family == "ag" || count_family == "bressoud");
    const int nr = uses_r ? count_r : count_n;
    if (nr < 0)
      throw std::invalid_argument("count " + count_family + ": missing --" +
                                  (uses_r ? std::string("r") : std::string("n")));
    if (count_max < 0) throw std::invalid_argument("count: --max must be >= 0");
    print_counts(count_series(count_family, count_i, nr, count_max), fmt);
    return 0;
  }

  if (app.got_subcommand(enum_cmd)) {
    if (enum_family != "grounded" && enum_n < 0)
      throw std::invalid_argument("enum " + enum_family + ": missing --n");
    if (enum_max < 0) throw std::invalid_argument("enum: --max must be >= 0");
    print_partitions(enumerated(enum_family, enum_i, enum_n, enum_module, enum_max), fmt);
    return 0;
  }

  if (app.got_subcommand(series_cmd)) {
    if (series_order < 0) throw std::invalid_argument("series: --order must be >= 0");
    if (series_what == "weyl-kac") {
      if (series_n < 0) throw std::invalid_argument("series weyl-kac: missing --n");
      std::cout << io::render(weyl_kac_principal(series_i, series_n, series_order), fmt);
    } else if (series_what == "gf-closed") {
      std::cout << io::render(level2_gf_closed(parse_module(series_module), series_order), fmt);
    } else if (series_what == "gf-enum") {
      std::cout << io::render(gf_from_enumeration(parse_module(series_module), series_order), fmt);
    } else {
      ProductFamily fam;
      ProductParams params;
      params.i = series_i;
      if (series_what == "product-ag" || series_what == "product-bressoud") {
        if (series_r < 0) throw std::invalid_argument("series " + series_what + ": missing --r");
        params.rn = series_r;
        fam = (series_what == "product-ag") ? ProductFamily::kAndrewsGordon
                                            : ProductFamily::kBressoud;
      } else {
        if (series_n < 0) throw std::invalid_argument("series " + series_what + ": missing --n");
        params.rn = series_n;
        fam = (series_what == "product-main") ? ProductFamily::kMainExact
                                              : ProductFamily::kMainAtLeast;
      }
      std::cout << io::render(product_side(fam, params, series_order), fmt);
    }
    return 0;
  }

  if (app.got_subcommand(bij_cmd)) {
    const VerifyReport rep = (bij_which == "phi")
                                 ? bijection_phi_report(bij_i, bij_n, bij_len)
                                 : bijection_psi_report(bij_i, bij_n, bij_max);
    return print_report(rep, fmt);
  }

  if (app.got_subcommand(verify_cmd)) {
    if (verify_order < 0) throw std::invalid_argument("verify: --order must be >= 0");
    VerifyReport rep;
    if (verify_what == "main") {
      if (verify_n < 0) throw std::invalid_argument("verify main: missing --n");
      rep = verify_main(verify_i, verify_n, verify_rel == "atleast", verify_order);
    } else if (verify_what == "mp") {
      if (verify_n < 0) throw std::invalid_argument("verify mp: missing --n");
      rep = verify_meurman_primc(verify_i, verify_n, verify_order);
    } else if (verify_what == "ag") {
      if (verify_r < 0) throw std::invalid_argument("verify ag: missing --r");
      rep = verify_andrews_gordon(verify_i, verify_r, verify_order);
    } else if (verify_what == "bressoud") {
      if (verify_r < 0) throw std::invalid_argument("verify bressoud: missing --r");
      rep = verify_bressoud(verify_i, verify_r, verify_order);
    } else if (verify_what == "weyl-kac") {
      if (verify_n < 0) throw std::invalid_argument("verify weyl-kac: missing --n");
      rep = verify_weyl_kac(verify_i, verify_n, verify_order);
    } else {
      rep = verify_character(parse_module(verify_module), verify_order);
    }
    return print_report(rep, fmt);
  }

  if (app.got_subcommand(grid_cmd)) {
    if (grid_order < 0) throw std::invalid_argument("grid: --order must be >= 0");
    if (grid_jobs < 1) throw std::invalid_argument("grid: --jobs must be >= 1");
    std::vector<std::function<VerifyReport()>> cells;
    if (grid_what == "main") {
      std::vector<bool> rels;
      if (grid_rel == "exact" || grid_rel == "both") rels.push_back(false);
      if (grid_rel == "atleast" || grid_rel == "both") rels.push_back(true);
      for (int n = grid_min_n; n <= grid_max_n; ++n)
        for (int i = 0; i <= n; ++i)
          for (bool at_least : rels)
            cells.push_back([=] { return verify_main(i, n, at_least, grid_order); });
    } else {
      for (const std::string& name : split_list(grid_modules)) {
        const Level2Module m = parse_module(name);
        cells.push_back([=] { return verify_character(m, grid_order); });
      }
    }
    return print_grid(run_cells(cells, grid_jobs), fmt);
  }

  if (app.got_subcommand(char_cmd)) {
    if (!char_module.empty()) {
      if (char_order < 0) throw std::invalid_argument("character: --order must be >= 0");
      std::cout << io::render(level2_char_closed(parse_module(char_module), char_order), fmt);
    } else {
      if (char_n < 0)
        throw std::invalid_argument("character: give --module, or --i/--n for the enumerated form");
      const int bound = (char_max_weight >= 0) ? char_max_weight : 2 * char_order + char_n;
      std::cout << io::render(exact_family_char(char_i, char_n, bound), fmt);
    }
    return 0;
  }

  std::cerr << "no subcommand given\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
