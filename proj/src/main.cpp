#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3char/cache.hpp"
#include "k3char/decomp.hpp"
#include "k3char/hilb.hpp"
#include "k3char/published.hpp"
#include "k3char/qseries.hpp"
#include "k3char/verify.hpp"
#include "k3char/version.hpp"

namespace {

using namespace k3char;
using nlohmann::ordered_json;

struct Options {
  int n_max = -1;
  int n = -1;
  std::vector<int> degrees;
  int rank = 0;  // 0 = per-n default
  int order = -1;
  std::string format = "text";
  std::string cache_dir;
  std::string suite = "all";
  std::string family = "B";
  std::string weight;
};

std::string default_cache_dir() {
  if (const char* home = std::getenv("HOME"))
    return std::string(home) + "/.cache/k3char";
  return ".k3char-cache";
}

ordered_json config_json(const Options& o, std::initializer_list<const char*> keys) {
  ordered_json c = ordered_json::object();
  for (const char* key : keys) {
    std::string k = key;
    if (k == "n_max") c["n_max"] = o.n_max;
    if (k == "n") c["n"] = o.n;
    if (k == "degrees") {
      if (o.degrees.empty())
        c["degrees"] = nullptr;
      else
        c["degrees"] = o.degrees;
    }
    if (k == "rank") {
      if (o.rank == 0)
        c["rank"] = nullptr;
      else
        c["rank"] = o.rank;
    }
    if (k == "order") c["order"] = o.order;
    if (k == "format") c["format"] = o.format;
    if (k == "cache_dir") c["cache_dir"] = o.cache_dir;
    if (k == "suite") c["suite"] = o.suite;
    if (k == "family") c["family"] = o.family;
    if (k == "weight") c["weight"] = o.weight;
  }
  return c;
}

ordered_json envelope(const Options& o, std::initializer_list<const char*> keys) {
  ordered_json j;
  j["tool_version"] = kVersion;
  j["config"] = config_json(o, keys);
  return j;
}

ordered_json int_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

// Computes (or loads) every decomposition cell for n in [0, n_hi], then
// keeps the selected ones. The cache is per cell; any miss recomputes the
// whole run so molien factor work is shared, then stores every cell.
std::vector<DecompositionTable> tables_for(const Options& o, int n_hi) {
  DecomposeAllOptions dopts;
  if (o.rank != 0) dopts.rank = o.rank;
  if (o.order >= 0) dopts.order = o.order;

  ResultCache cache(o.cache_dir);
  auto key_for = [&](int n, int degree) {
    CacheKey key;
    key.n = n;
    key.degree = degree;
    key.family = n <= 1 ? Family::D : Family::B;
    key.rank = o.rank != 0 ? o.rank : std::max(2, std::min(11, n + 1));
    return key;
  };

  std::vector<DecompositionTable> tables;
  bool complete = true;
  for (int n = 0; n <= n_hi && complete; ++n)
    for (int deg = 0; deg <= 2 * n && complete; deg += 2) {
      auto payload = cache.load(key_for(n, deg));
      if (!payload) {
        complete = false;
        break;
      }
      tables.push_back(table_from_json(*payload));
    }

  if (!complete) {
    tables = decompose_all(n_hi, dopts);
    for (const auto& t : tables) cache.store(key_for(t.n, t.degree), table_to_json(t));
  }
  return tables;
}

std::vector<DecompositionTable> select_cells(std::vector<DecompositionTable> tables,
                                             const Options& o) {
  std::vector<DecompositionTable> out;
  for (auto& t : tables) {
    if (o.n >= 0 && t.n != o.n) continue;
    if (!o.degrees.empty() &&
        std::find(o.degrees.begin(), o.degrees.end(), t.degree) == o.degrees.end())
      continue;
    out.push_back(std::move(t));
  }
  return out;
}

void emit_tables_text(const std::vector<DecompositionTable>& tables, std::ostream& os) {
  for (const auto& t : tables) {
    os << "n=" << t.n << " degree=" << t.degree << " family=" << family_letter(t.family)
       << " rank=" << t.rank << " betti=" << t.betti.str() << "\n";
    for (const auto& [w, c] : t.entries)
      os << "  " << weight_to_string(w) << ": " << c.str() << "\n";
  }
}

void emit_tables_csv(const std::vector<DecompositionTable>& tables, std::ostream& os) {
  auto order = [](const std::pair<Weight, Int>& a, const std::pair<Weight, Int>& b) {
    int na = weight_norm1(a.first), nb = weight_norm1(b.first);
    if (na != nb) return na < nb;
    return a.first > b.first;
  };
  std::vector<std::pair<Weight, Int>> rows;
  Family dim_family = Family::D;
  for (const auto& t : tables) {
    if (t.family == Family::B) dim_family = Family::B;
    for (const auto& [w, c] : t.entries) {
      std::pair<Weight, Int> probe{w, 0};
      auto it = std::lower_bound(rows.begin(), rows.end(), probe, order);
      if (it == rows.end() || it->first != w) rows.insert(it, std::move(probe));
    }
  }
  RootSystem full = build_root_system(dim_family, 11);

  os << "weight,dim";
  for (const auto& t : tables)
    os << "," << csv_quote("H^{" + std::to_string(t.degree) + "," + std::to_string(t.n) + "}");
  os << "\n";
  for (const auto& [w, unused] : rows) {
    os << csv_quote(weight_to_string(w)) << "," << weyl_dim(full, padded(w, 11)).str();
    for (const auto& t : tables) os << "," << t.multiplicity(w).str();
    os << "\n";
  }
}

int cmd_table(const Options& o) {
  int n_hi = o.n >= 0 ? o.n : (o.n_max >= 0 ? o.n_max : 6);
  for (int d : o.degrees)
    if (d < 0 || d % 2 != 0 || d > 2 * n_hi)
      throw DomainError("degree " + std::to_string(d) + " is not an even degree of any "
                        "requested table");
  auto tables = select_cells(tables_for(o, n_hi), o);

  if (o.format == "json") {
    ordered_json j = envelope(o, {"n_max", "n", "degrees", "rank", "order", "format",
                                  "cache_dir"});
    j["tables"] = ordered_json::array();
    for (const auto& t : tables) j["tables"].push_back(ordered_json::parse(table_to_json(t)));
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    emit_tables_csv(tables, std::cout);
  } else {
    emit_tables_text(tables, std::cout);
  }
  return 0;
}

int cmd_hodge(const Options& o) {
  int n_hi = o.n >= 0 ? o.n : (o.n_max >= 0 ? o.n_max : 6);
  auto tables = tables_for(o, n_hi);
  std::vector<std::pair<int, Int>> counts;
  for (const auto& t : tables) {
    if (t.degree != 2 * t.n) continue;
    if (o.n >= 0 && t.n != o.n) continue;
    counts.emplace_back(t.n, t.multiplicity({}));
  }

  if (o.format == "json") {
    ordered_json j = envelope(o, {"n_max", "n", "rank", "order", "format", "cache_dir"});
    j["hodge"] = ordered_json::array();
    for (const auto& [n, c] : counts)
      j["hodge"].push_back(ordered_json{{"n", n}, {"count", int_json(c)}});
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "n,count\n";
    for (const auto& [n, c] : counts) std::cout << n << "," << c.str() << "\n";
  } else {
    for (const auto& [n, c] : counts) std::cout << "n=" << n << ": " << c.str() << "\n";
  }
  return 0;
}

int cmd_betti(const Options& o) {
  int n = o.n;
  int order = o.order >= 0 ? o.order : std::max(n, 12);
  if (order < n) throw DomainError("order below n");
  PolySeries gottsche = gottsche_series(1, 0, 22, order);
  std::vector<Int> betti;
  for (int deg = 0; deg <= 4 * n; deg += 2) betti.push_back(k3_betti(gottsche, n, deg));

  if (o.format == "json") {
    ordered_json j = envelope(o, {"n", "order", "format"});
    j["n"] = n;
    j["betti"] = ordered_json::array();
    for (const auto& b : betti) j["betti"].push_back(int_json(b));
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "degree,betti\n";
    for (std::size_t i = 0; i < betti.size(); ++i)
      std::cout << 2 * i << "," << betti[i].str() << "\n";
  } else {
    for (std::size_t i = 0; i < betti.size(); ++i)
      std::cout << (i ? ", " : "") << betti[i].str();
    std::cout << "\n";
  }
  return 0;
}

int cmd_dim(const Options& o) {
  Family fam = parse_family(o.family);
  int rank = o.rank != 0 ? o.rank : 11;
  RootSystem rs = build_root_system(fam, rank);
  Weight w = parse_weight(o.weight);
  Weight full = padded(w, rank);
  if (!is_dominant(rs, full))
    throw DomainError("weight " + weight_to_string(w) + " is not dominant for " +
                      std::string(1, family_letter(fam)) + std::to_string(rank));
  Int dim = weyl_dim(rs, full);

  if (o.format == "json") {
    ordered_json j = envelope(o, {"family", "rank", "weight", "format"});
    j["family"] = std::string(1, family_letter(fam));
    j["rank"] = rank;
    j["weight"] = trimmed(w);
    j["dim"] = int_json(dim);
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "family,rank,weight,dim\n"
              << family_letter(fam) << "," << rank << ","
              << csv_quote(weight_to_string(trimmed(w))) << "," << dim.str() << "\n";
  } else {
    std::cout << dim.str() << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyOptions vopts;
  if (o.order >= 0) vopts.order = o.order;
  auto results = run_suite(o.suite, vopts);

  int passed = 0, failed = 0, discrepancies = 0;
  for (const auto& r : results) {
    switch (r.status) {
      case CheckStatus::Pass: ++passed; break;
      case CheckStatus::Fail: ++failed; break;
      case CheckStatus::Discrepancy: ++discrepancies; break;
    }
  }

  if (o.format == "json") {
    ordered_json j = envelope(o, {"suite", "order", "format"});
    j["results"] = ordered_json::array();
    for (const auto& r : results) {
      const char* status = r.status == CheckStatus::Pass
                               ? "pass"
                               : r.status == CheckStatus::Fail ? "fail" : "discrepancy";
      j["results"].push_back(
          ordered_json{{"name", r.name}, {"status", status}, {"detail", r.detail}});
    }
    j["ok"] = failed == 0;
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "name,status,detail\n";
    for (const auto& r : results) {
      const char* status = r.status == CheckStatus::Pass
                               ? "pass"
                               : r.status == CheckStatus::Fail ? "fail" : "discrepancy";
      std::cout << csv_quote(r.name) << "," << status << "," << csv_quote(r.detail) << "\n";
    }
  } else {
    for (const auto& r : results) {
      const char* tag = r.status == CheckStatus::Pass
                            ? "[PASS]"
                            : r.status == CheckStatus::Fail ? "[FAIL]" : "[DISCREPANCY]";
      std::cout << tag << " " << r.name;
      if (!r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << "\n";
    }
    std::cout << "passed " << passed << ", failed " << failed << ", discrepancies "
              << discrepancies << "\n";
  }
  return failed == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact characters of the orthogonal action on the cohomology of deformed "
               "Hilbert schemes of points on K3 surfaces"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd, bool with_cache) {
    cmd->add_option("--rank", o.rank, "working rank override (1..11)")
        ->check(CLI::Range(1, 11));
    cmd->add_option("--order", o.order, "truncation order")->check(CLI::Range(0, 64));
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    if (with_cache)
      cmd->add_option("--cache-dir", o.cache_dir, "result cache directory")
          ->envname("K3CHAR_CACHE_DIR")
          ->default_val(default_cache_dir());
  };

  CLI::App* table = app.add_subcommand(
      "table", "decomposition multiplicities for each cohomology degree");
  auto* tn_max = table->add_option("--n-max", o.n_max, "largest number of points")
                     ->check(CLI::Range(0, 32));
  table->add_option("--n", o.n, "single number of points")
      ->check(CLI::Range(0, 32))
      ->excludes(tn_max);
  table->add_option("--degrees", o.degrees, "restrict to these cohomological degrees")
      ->delimiter(',');
  add_common(table, true);

  CLI::App* hodge = app.add_subcommand(
      "hodge", "canonical Hodge class counts in the middle cohomology");
  auto* hn_max = hodge->add_option("--n-max", o.n_max, "largest number of points")
                     ->check(CLI::Range(0, 32));
  hodge->add_option("--n", o.n, "single number of points")
      ->check(CLI::Range(0, 32))
      ->excludes(hn_max);
  add_common(hodge, true);

  CLI::App* betti = app.add_subcommand("betti", "Betti numbers of the n-point Hilbert scheme");
  betti->add_option("--n", o.n, "number of points")->required()->check(CLI::Range(0, 32));
  add_common(betti, false);

  CLI::App* dim = app.add_subcommand("dim", "dimension of an irreducible representation");
  dim->add_option("--family", o.family, "B or D")->default_val("B");
  dim->add_option("--weight", o.weight, "highest weight, e.g. 2,1")->required();
  add_common(dim, false);

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--suite", o.suite, "ring, lie, hilb, decomp, published, or all")
      ->default_val("all");
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(table)) return cmd_table(o);
    if (app.got_subcommand(hodge)) return cmd_hodge(o);
    if (app.got_subcommand(betti)) return cmd_betti(o);
    if (app.got_subcommand(dim)) return cmd_dim(o);
    if (app.got_subcommand(verify)) return cmd_verify(o);
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
