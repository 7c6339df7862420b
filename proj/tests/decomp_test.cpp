#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <string>

#include "k3char/cache.hpp"
#include "k3char/decomp.hpp"
#include "derived_data.hpp"

using namespace k3char;

namespace {

std::map<std::pair<int, int>, const DecompositionTable*> by_cell(
    const std::vector<DecompositionTable>& tables) {
  std::map<std::pair<int, int>, const DecompositionTable*> out;
  for (const auto& t : tables) out[{t.n, t.degree}] = &t;
  return out;
}

Character middle_slice_char(int rank, int n) {
  GradedCharSeries pg = molien_pg(rank, n);
  return character_from_laurent(Family::B, rank, pg.slice(n, 0));
}

}  // namespace

TEST_CASE("tables reproduce the frozen reference decompositions") {
  auto tables = decompose_all(6);
  auto cells = by_cell(tables);
  std::map<std::pair<int, int>, std::size_t> counted;
  for (const auto& cell : derived::kCells) {
    if (cell.n > 6) continue;
    REQUIRE(cells.count({cell.n, cell.degree}) == 1);
    const DecompositionTable& t = *cells.at({cell.n, cell.degree});
    CHECK(family_letter(t.family) == cell.family);
    CHECK(t.multiplicity(parse_weight(cell.weight)) == cell.mult);
    ++counted[{cell.n, cell.degree}];
  }
  for (const auto& t : tables) {
    if (t.n < 1) continue;
    INFO("n=" << t.n << " degree=" << t.degree);
    CHECK(t.entries.size() == counted[{t.n, t.degree}]);
  }
  for (const auto& row : derived::kBetti) {
    if (row.n > 6) continue;
    CHECK(cells.at({row.n, row.degree})->betti == row.betti);
  }
}

TEST_CASE("default working ranks and families") {
  auto tables = decompose_all(3);
  auto cells = by_cell(tables);
  CHECK(cells.at({0, 0})->family == Family::D);
  CHECK(cells.at({1, 2})->family == Family::D);
  CHECK(cells.at({2, 2})->family == Family::B);
  CHECK(cells.at({2, 2})->rank == 3);
  CHECK(cells.at({3, 4})->rank == 4);
}

TEST_CASE("rank override leaves the stable multiplicities unchanged") {
  DecomposeAllOptions opts;
  opts.rank = 6;
  auto fixed_tables = decompose_all(3, opts);
  auto dflt_tables = decompose_all(3);
  auto fixed = by_cell(fixed_tables);
  auto dflt = by_cell(dflt_tables);
  for (const auto& [key, t] : dflt) {
    if (key.first < 2) continue;
    const DecompositionTable& f = *fixed.at(key);
    CHECK(f.entries == t->entries);
    CHECK(f.betti == t->betti);
  }
}

TEST_CASE("entries come sorted by total weight then reverse lexicographic") {
  auto tables = decompose_all(4);
  for (const auto& t : tables) {
    for (std::size_t i = 1; i < t.entries.size(); ++i) {
      const Weight& a = t.entries[i - 1].first;
      const Weight& b = t.entries[i].first;
      bool ordered = weight_norm1(a) < weight_norm1(b) ||
                     (weight_norm1(a) == weight_norm1(b) && b < a);
      CHECK(ordered);
    }
  }
}

TEST_CASE("greedy peeling rejects a bare orbit sum") {
  Character bogus;
  bogus.family = Family::B;
  bogus.rank = 2;
  bogus.orbit_coeffs[{1, 1}] = 1;
  CHECK_THROWS_AS(decompose(bogus), NotACharacterError);
}

TEST_CASE("randomized peeling agrees with the greedy order") {
  Character chi = middle_slice_char(5, 4);
  auto reference = decompose(chi);
  std::mt19937_64 seeds(12345);
  for (int trial = 0; trial < 12; ++trial)
    CHECK(decompose_randomized(chi, seeds()) == reference);
}

TEST_CASE("trivial multiplicity matches the constant term oracle") {
  RootSystem b3 = build_root_system(Family::B, 3);
  Character v = irrep_char(b3, {1, 0, 0});
  Character sq = tensor_product(v, v);
  CHECK(trivial_multiplicity(sq) == 1);
  CHECK(invariant_dim_ct(sq) == 1);
  Character cube = tensor_product(sq, v);
  CHECK(trivial_multiplicity(cube) == invariant_dim_ct(cube));
  for (int n = 2; n <= 4; ++n) {
    Character chi = middle_slice_char(3, n);
    CHECK(trivial_multiplicity(chi) == invariant_dim_ct(chi));
  }
  CHECK_THROWS_AS(invariant_dim_ct(middle_slice_char(6, 2)), DomainError);
}

TEST_CASE("branching cross check accepts genuine graded characters") {
  Character chi = middle_slice_char(4, 3);
  BranchReport rep = branch_consistency_check(chi);
  CHECK(rep.ok);
  CHECK(rep.mismatches.empty());
}

TEST_CASE("tables round trip through json") {
  auto tables = decompose_all(3);
  for (const auto& t : tables) {
    DecompositionTable back = table_from_json(table_to_json(t));
    CHECK(back.n == t.n);
    CHECK(back.degree == t.degree);
    CHECK(back.family == t.family);
    CHECK(back.rank == t.rank);
    CHECK(back.entries == t.entries);
    CHECK(back.betti == t.betti);
  }
  CHECK_THROWS_AS(table_from_json("{"), DomainError);
}

TEST_CASE("result cache stores and validates entries") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "k3char_cache_test";
  fs::remove_all(dir);
  ResultCache cache(dir);
  CacheKey key{3, 4, Family::B, 4};
  CHECK_FALSE(cache.load(key).has_value());

  auto tables = decompose_all(3);
  std::string payload = table_to_json(*by_cell(tables).at({3, 4}));
  cache.store(key, payload);
  auto got = cache.load(key);
  REQUIRE(got.has_value());
  CHECK(*got == payload);

  CacheKey other = key;
  other.degree = 6;
  CHECK_FALSE(cache.load(other).has_value());

  fs::path file = dir / (key.file_stem() + ".json");
  REQUIRE(fs::exists(file));
  std::ofstream(file, std::ios::trunc) << "{\"schema\":1}";
  CHECK_FALSE(cache.load(key).has_value());
  fs::remove_all(dir);
}
