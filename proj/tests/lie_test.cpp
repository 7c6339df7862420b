#include <doctest.h>

#include <map>
#include <set>

#include "k3char/character.hpp"
#include "k3char/rootsystem.hpp"

using namespace k3char;

TEST_CASE("weight parsing and normal forms") {
  CHECK(parse_weight("2,1") == Weight{2, 1});
  CHECK(parse_weight("(2,1)") == Weight{2, 1});
  CHECK(parse_weight("") == Weight{});
  CHECK(parse_weight("()") == Weight{});
  CHECK_THROWS_AS(parse_weight("2,,1"), DomainError);
  CHECK_THROWS_AS(parse_weight("abc"), DomainError);
  CHECK(trimmed({2, 1, 0, 0}) == Weight{2, 1});
  CHECK(padded({2, 1}, 4) == Weight{2, 1, 0, 0});
  CHECK(weight_norm1({2, 1, 0}) == 3);
  CHECK(weight_to_string({2, 1}) == "(2,1)");
  CHECK(weight_to_string({}) == "()");
}

TEST_CASE("root system shapes") {
  RootSystem b3 = build_root_system(Family::B, 3);
  CHECK(b3.positive_roots.size() == 9);
  CHECK(b3.two_rho == std::vector<int>{5, 3, 1});
  RootSystem d4 = build_root_system(Family::D, 4);
  CHECK(d4.positive_roots.size() == 12);
  CHECK(d4.two_rho == std::vector<int>{6, 4, 2, 0});
  CHECK(is_dominant(b3, {2, 1, 0}));
  CHECK_FALSE(is_dominant(b3, {1, 2, 0}));
  CHECK_FALSE(is_dominant(b3, {1, 0, -1}));
  RootSystem d3 = build_root_system(Family::D, 3);
  CHECK(is_dominant(d3, {1, 1, -1}));
}

TEST_CASE("dominance order from prefix sums") {
  RootSystem b3 = build_root_system(Family::B, 3);
  CHECK(dominance_leq(b3, {2, 0, 0}, {1, 1, 0}));
  CHECK(dominance_leq(b3, {2, 0, 0}, {0, 0, 0}));
  CHECK_FALSE(dominance_leq(b3, {1, 1, 0}, {2, 0, 0}));
  CHECK(dominance_leq(b3, {1, 1, 1}, {1, 1, 1}));
}

TEST_CASE("dimension formula on classical small cases") {
  RootSystem b2 = build_root_system(Family::B, 2);
  CHECK(weyl_dim(b2, {1, 0}) == 5);
  CHECK(weyl_dim(b2, {1, 1}) == 10);
  CHECK(weyl_dim(b2, {2, 0}) == 14);
  RootSystem d4 = build_root_system(Family::D, 4);
  CHECK(weyl_dim(d4, {1, 0, 0, 0}) == 8);
  CHECK(weyl_dim(d4, {1, 1, 0, 0}) == 28);
  CHECK(weyl_dim(d4, {1, 1, 1, 1}) == weyl_dim(d4, {1, 1, 1, -1}));
}

TEST_CASE("dimension formula at the working rank") {
  RootSystem b11 = build_root_system(Family::B, 11);
  const std::pair<Weight, long long> known[] = {
      {{}, 1},          {{1}, 23},         {{2}, 275},      {{1, 1}, 253},
      {{3}, 2277},      {{2, 1}, 4025},    {{1, 1, 1}, 1771}, {{4}, 14674},
      {{3, 1}, 37422},  {{2, 2}, 23000},   {{5}, 78430},    {{4, 1}, 256795},
      {{4, 2}, 2193763}, {{6}, 361790},
  };
  for (const auto& [w, d] : known) CHECK(weyl_dim(b11, w) == d);
  RootSystem d11 = build_root_system(Family::D, 11);
  CHECK(weyl_dim(d11, {1}) == 22);
  CHECK(weyl_dim(d11, {2}) == 252);
}

TEST_CASE("orbit sizes from coordinate patterns") {
  RootSystem b2 = build_root_system(Family::B, 2);
  CHECK(orbit_size(b2, {0, 0}) == 1);
  CHECK(orbit_size(b2, {1, 0}) == 4);
  CHECK(orbit_size(b2, {1, 1}) == 4);
  CHECK(orbit_size(b2, {2, 1}) == 8);
  RootSystem d3 = build_root_system(Family::D, 3);
  CHECK(orbit_size(d3, {1, 1, 1}) == 8);
}

TEST_CASE("freudenthal recovers the adjoint weight multiplicities") {
  RootSystem b2 = build_root_system(Family::B, 2);
  auto m = freudenthal_mults(b2, {1, 1});
  CHECK(m.size() == 3);
  CHECK(m.at({1, 1}) == 1);
  CHECK(m.at({1, 0}) == 1);
  CHECK(m.at({0, 0}) == 2);
  Int dim = 0;
  for (const auto& [w, c] : m) dim += c * orbit_size(b2, w);
  CHECK(dim == 10);
}

TEST_CASE("half spin weights are rejected in family D") {
  RootSystem d2 = build_root_system(Family::D, 2);
  CHECK_THROWS_AS(freudenthal_mults(d2, {1, 1}), HalfSpinError);
  RootSystem d3 = build_root_system(Family::D, 3);
  CHECK_NOTHROW(freudenthal_mults(d3, {1, 1, 0}));
}

TEST_CASE("exterior powers of the vector representation are fundamental") {
  RootSystem b3 = build_root_system(Family::B, 3);
  CHECK(elementary_char(b3, 1) == irrep_char(b3, {1, 0, 0}));
  CHECK(elementary_char(b3, 2) == irrep_char(b3, {1, 1, 0}));
  CHECK(character_dimension(elementary_char(b3, 3)) == 35);
}

TEST_CASE("tensor square of the vector representation splits") {
  RootSystem b4 = build_root_system(Family::B, 4);
  Character v = irrep_char(b4, {1});
  Character sq = tensor_product(v, v);
  Character expect = character_add(
      character_add(irrep_char(b4, {2}), irrep_char(b4, {1, 1})), irrep_char(b4, {}));
  CHECK(sq == expect);
  CHECK(character_dimension(sq) == 81);
}

TEST_CASE("characters survive the laurent expansion round trip") {
  RootSystem b3 = build_root_system(Family::B, 3);
  Character chi = tensor_product(irrep_char(b3, {2, 0, 0}), irrep_char(b3, {1, 0, 0}));
  LaurentPoly p = expand_character(chi);
  CHECK(character_from_laurent(Family::B, 3, p) == chi);
  CHECK(p.coeff_sum() == character_dimension(chi));
}

TEST_CASE("restriction to the even subgroup preserves dimension") {
  Weight lam = {2, 1, 0, 0};
  RootSystem b4 = build_root_system(Family::B, 4);
  RootSystem d4 = build_root_system(Family::D, 4);
  Int total = 0;
  for (const auto& mu : branch_B_to_D(padded(lam, 4))) total += weyl_dim(d4, mu);
  CHECK(total == weyl_dim(b4, lam));
}

TEST_CASE("vector representation branches to vector plus trivial") {
  auto mus = branch_B_to_D(Weight{1, 0, 0});
  std::multiset<Weight> got(mus.begin(), mus.end());
  std::multiset<Weight> expect{{0, 0, 0}, {1, 0, 0}};
  CHECK(got == expect);
}

TEST_CASE("branching emits mirror pairs for full-length patterns") {
  auto mus = branch_B_to_D(Weight{1, 1, 1});
  std::multiset<Weight> got(mus.begin(), mus.end());
  std::multiset<Weight> expect{{1, 1, 0}, {1, 1, 1}, {1, 1, -1}};
  CHECK(got == expect);
}
