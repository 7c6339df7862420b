#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3char/character.hpp"
#include "k3char/hilb.hpp"

namespace k3char {

// Irreducible constituents of one cohomology degree of one Hilbert scheme.
// Entries are sorted by (total weight, reverse lexicographic) and weights
// are stored in trimmed partition form.
struct DecompositionTable {
  int n = 0;
  int degree = 0;
  Family family = Family::B;
  int rank = 0;
  std::vector<std::pair<Weight, Int>> entries;
  Int betti = 0;

  Int multiplicity(const Weight& w) const;
};

// Greedy peeling: repeatedly subtract the full character of the maximal
// dominant weight present. Fails loudly if any multiplicity goes negative.
std::vector<std::pair<Weight, Int>> decompose(const Character& chi);

// Same result via randomized choices among dominance-maximal weights; used
// to document that the outcome does not depend on the selection order.
std::vector<std::pair<Weight, Int>> decompose_randomized(const Character& chi,
                                                         std::uint64_t seed);

Int trivial_multiplicity(const Character& chi);

// Independent invariant-dimension oracle: constant term of the expanded
// character times the product of (1 - x^alpha) over all roots, divided by
// the Weyl group order. Exponential in rank, hence capped.
Int invariant_dim_ct(const Character& chi, int rank_cap = 5);

struct BranchReport {
  bool ok = true;
  std::vector<std::string> mismatches;
};

// Decomposes chi as a B-type character, pushes every constituent through
// the B->D branching rule, and compares with decomposing the same
// polynomial directly as a D-type character.
BranchReport branch_consistency_check(const Character& chi);

struct DecomposeAllOptions {
  std::optional<int> rank;  // fixed working rank; default min(11, n+1) per n
  std::optional<int> order;
  bool stability_check = true;  // re-run at rank+1 and compare
};

// Tables for every n <= n_max and every even degree 0..2n. Each table is
// checked against the Betti numbers from gottsche_series at full rank.
std::vector<DecompositionTable> decompose_all(int n_max,
                                              const DecomposeAllOptions& opts = {});

std::string table_to_json(const DecompositionTable& t);
DecompositionTable table_from_json(const std::string& text);

}  // namespace k3char
