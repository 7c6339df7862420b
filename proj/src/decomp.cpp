#include "k3char/decomp.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <set>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3char {

namespace {

bool entry_order(const std::pair<Weight, Int>& a, const std::pair<Weight, Int>& b) {
  int na = weight_norm1(a.first), nb = weight_norm1(b.first);
  if (na != nb) return na < nb;
  return a.first > b.first;
}

std::vector<std::pair<Weight, Int>> finish_entries(std::map<Weight, Int> found) {
  std::vector<std::pair<Weight, Int>> out;
  out.reserve(found.size());
  for (auto& [w, c] : found) out.emplace_back(trimmed(w), std::move(c));
  std::sort(out.begin(), out.end(), entry_order);
  return out;
}

std::vector<std::pair<Weight, Int>> decompose_impl(
    const Character& chi, const std::function<std::size_t(std::size_t)>& pick_among) {
  RootSystem rs = build_root_system(chi.family, chi.rank);
  std::map<Weight, Int> coeffs = chi.orbit_coeffs;
  std::map<Weight, Int> found;
  while (true) {
    for (auto it = coeffs.begin(); it != coeffs.end();) {
      it = it->second == 0 ? coeffs.erase(it) : std::next(it);
    }
    if (coeffs.empty()) break;

    Weight lam;
    if (!pick_among) {
      auto best = coeffs.begin();
      for (auto it = std::next(coeffs.begin()); it != coeffs.end(); ++it) {
        int nb = weight_norm1(best->first), ni = weight_norm1(it->first);
        if (ni > nb || (ni == nb && it->first > best->first)) best = it;
      }
      lam = best->first;
    } else {
      std::vector<Weight> maximal;
      for (const auto& [w, c] : coeffs) {
        bool dominated = false;
        for (const auto& [v, cv] : coeffs)
          if (v != w && dominance_leq(rs, v, w)) {
            dominated = true;
            break;
          }
        if (!dominated) maximal.push_back(w);
      }
      lam = maximal[pick_among(maximal.size())];
    }

    Int c = coeffs[lam];
    if (c < 0)
      throw NotACharacterError("not a character: weight " + weight_to_string(trimmed(lam)) +
                               " has negative multiplicity " + c.str());
    found[lam] += c;
    for (const auto& [mu, m] : freudenthal_mults(rs, lam)) {
      Int& dst = coeffs[mu];
      dst -= c * m;
    }
  }
  return finish_entries(std::move(found));
}

}  // namespace

Int DecompositionTable::multiplicity(const Weight& w) const {
  Weight key = trimmed(w);
  for (const auto& [wt, c] : entries)
    if (wt == key) return c;
  return 0;
}

std::vector<std::pair<Weight, Int>> decompose(const Character& chi) {
  return decompose_impl(chi, nullptr);
}

std::vector<std::pair<Weight, Int>> decompose_randomized(const Character& chi,
                                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return decompose_impl(chi, [&rng](std::size_t n) { return rng() % n; });
}

Int trivial_multiplicity(const Character& chi) {
  for (const auto& [w, c] : decompose(chi))
    if (w.empty()) return c;
  return 0;
}

Int invariant_dim_ct(const Character& chi, int rank_cap) {
  if (chi.rank > rank_cap)
    throw DomainError("oracle rank cap: constant-term integration limited to rank " +
                      std::to_string(rank_cap));
  RootSystem rs = build_root_system(chi.family, chi.rank);
  LaurentPoly weyl_factor = LaurentPoly::constant(chi.rank, 1);
  for (const auto& a : rs.positive_roots) {
    for (int sign : {1, -1}) {
      Exponent e(chi.rank);
      for (int i = 0; i < chi.rank; ++i) e.set_t(i, sign * a[static_cast<std::size_t>(i)]);
      LaurentPoly binomial = LaurentPoly::constant(chi.rank, 1) +
                             LaurentPoly::monomial(std::move(e), -1);
      weyl_factor = laurent_mul(weyl_factor, binomial);
    }
  }
  LaurentPoly expanded = expand_character(chi);
  Int ct = 0;
  for (const auto& t : expanded.terms()) ct += t.c * weyl_factor.coeff(-t.e);

  Int weyl_order = 1;
  for (int i = 2; i <= chi.rank; ++i) weyl_order *= i;
  weyl_order <<= (chi.family == Family::B ? chi.rank : chi.rank - 1);
  Int q, rem;
  boost::multiprecision::divide_qr(ct, weyl_order, q, rem);
  if (rem != 0 || q < 0)
    throw ConsistencyError("constant-term oracle did not produce a dimension");
  return q;
}

BranchReport branch_consistency_check(const Character& chi) {
  if (chi.family != Family::B)
    throw DomainError("branch consistency check expects a B-type character");
  BranchReport report;

  std::map<Weight, Int> from_branching;
  for (const auto& [lam, c] : decompose(chi)) {
    for (const auto& mu : branch_B_to_D(padded(lam, chi.rank))) {
      // A nonzero last coordinate comes as a mirror pair; the stored orbit
      // convention treats the pair as one constituent, so count it once.
      if (mu.back() < 0) continue;
      from_branching[trimmed(mu)] += c;
    }
  }

  Character as_d;
  as_d.family = Family::D;
  as_d.rank = chi.rank;
  as_d.orbit_coeffs = chi.orbit_coeffs;
  std::map<Weight, Int> direct;
  for (const auto& [w, c] : decompose(as_d)) direct[w] = c;

  std::set<Weight> keys;
  for (const auto& [w, c] : from_branching) keys.insert(w);
  for (const auto& [w, c] : direct) keys.insert(w);
  for (const auto& w : keys) {
    Int a = from_branching.count(w) ? from_branching.at(w) : 0;
    Int b = direct.count(w) ? direct.at(w) : 0;
    if (a != b) {
      report.ok = false;
      report.mismatches.push_back(weight_to_string(w) + ": branched " + a.str() +
                                  ", direct " + b.str());
    }
  }
  return report;
}

std::vector<DecompositionTable> decompose_all(int n_max, const DecomposeAllOptions& opts) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  int order = opts.order.value_or(n_max);
  if (order < n_max) throw DomainError("order below n_max");

  PolySeries gottsche = gottsche_series(1, 0, 22, order);

  auto working_rank = [&](int n) {
    if (opts.rank) {
      if (*opts.rank < 2 || *opts.rank > 11)
        throw DomainError("rank override must be in 2..11");
      return *opts.rank;
    }
    return std::max(2, std::min(11, n + 1));
  };

  struct Cell {
    int n, degree, rank, check_rank;
    Family family;
  };
  std::vector<Cell> cells;
  std::map<int, int> rank_to_order;
  for (int n = 0; n <= n_max; ++n) {
    int r = working_rank(n);
    int r2 = (!opts.rank && opts.stability_check && r < 11) ? r + 1 : 0;
    Family fam = n <= 1 ? Family::D : Family::B;
    for (int deg = 0; deg <= 2 * n; deg += 2) {
      cells.push_back({n, deg, r, r2, fam});
    }
    rank_to_order[r] = std::max(rank_to_order[r], n);
    if (r2) rank_to_order[r2] = std::max(rank_to_order[r2], n);
  }

  std::map<int, GradedCharSeries> molien;
  for (const auto& [r, ord] : rank_to_order) molien.emplace(r, GradedCharSeries(r, ord));

  RootSystem full_b = build_root_system(Family::B, 11);
  RootSystem full_d = build_root_system(Family::D, 11);

  std::vector<DecompositionTable> tables(cells.size());
  std::exception_ptr error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long ci = 0; ci < static_cast<long long>(cells.size()); ++ci) {
    try {
      const Cell& cell = cells[static_cast<std::size_t>(ci)];
      const GradedCharSeries& pg = molien.at(cell.rank);
      LaurentPoly poly = pg.slice(cell.n, cell.degree / 2 - cell.n);
      Character chi = character_from_laurent(cell.family, cell.rank, poly);
      DecompositionTable t;
      t.n = cell.n;
      t.degree = cell.degree;
      t.family = cell.family;
      t.rank = cell.rank;
      t.entries = decompose(chi);

      if (cell.check_rank) {
        const GradedCharSeries& pg2 = molien.at(cell.check_rank);
        LaurentPoly poly2 = pg2.slice(cell.n, cell.degree / 2 - cell.n);
        Character chi2 = character_from_laurent(cell.family, cell.check_rank, poly2);
        if (decompose(chi2) != t.entries)
          throw ConsistencyError("rank stability failure at n=" + std::to_string(cell.n) +
                                 " degree=" + std::to_string(cell.degree));
      }

      const RootSystem& full = cell.family == Family::B ? full_b : full_d;
      for (const auto& [w, c] : t.entries) t.betti += c * weyl_dim(full, w);
      Int expected = k3_betti(gottsche, cell.n, cell.degree);
      if (t.betti != expected)
        throw ConsistencyError("betti checksum failure at n=" + std::to_string(cell.n) +
                               " degree=" + std::to_string(cell.degree) + ": got " +
                               t.betti.str() + ", surface series gives " + expected.str());
      tables[static_cast<std::size_t>(ci)] = std::move(t);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return tables;
}

std::string table_to_json(const DecompositionTable& t) {
  nlohmann::ordered_json j;
  j["n"] = t.n;
  j["degree"] = t.degree;
  j["family"] = std::string(1, family_letter(t.family));
  j["rank"] = t.rank;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [w, c] : t.entries) {
    nlohmann::ordered_json e;
    e["weight"] = w;
    e["mult"] = c.convert_to<long long>();
    j["entries"].push_back(std::move(e));
  }
  if (t.betti <= std::numeric_limits<long long>::max()) {
    j["betti"] = t.betti.convert_to<long long>();
  } else {
    j["betti"] = t.betti.str();
  }
  return j.dump(2);
}

DecompositionTable table_from_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    DecompositionTable t;
    t.n = j.at("n").get<int>();
    t.degree = j.at("degree").get<int>();
    t.family = parse_family(j.at("family").get<std::string>());
    t.rank = j.at("rank").get<int>();
    for (const auto& e : j.at("entries")) {
      t.entries.emplace_back(e.at("weight").get<Weight>(),
                             Int(e.at("mult").get<long long>()));
    }
    const auto& b = j.at("betti");
    t.betti = b.is_string() ? Int(b.get<std::string>()) : Int(b.get<long long>());
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed table json: ") + e.what());
  }
}

}  // namespace k3char
