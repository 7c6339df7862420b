#pragma once

#include <map>
#include <string>
#include <vector>

#include "k3char/ints.hpp"

namespace k3char {

enum class Family { B, D };

inline char family_letter(Family f) { return f == Family::B ? 'B' : 'D'; }
Family parse_family(const std::string& s);

// Weight in the standard orthogonal coordinates, one entry per rank slot.
using Weight = std::vector<int>;

std::string weight_to_string(const Weight& w);

// Accepts "2,1", "(2,1)", or "" for the trivial weight.
Weight parse_weight(const std::string& s);

// Strips trailing zeros, giving the rank-independent partition form.
Weight trimmed(const Weight& w);
Weight padded(const Weight& w, int rank);
int weight_norm1(const Weight& w);

struct RootSystem {
  Family family;
  int rank;
  std::vector<Weight> positive_roots;
  std::vector<int> two_rho;  // doubled Weyl vector, integral in both families
};

RootSystem build_root_system(Family family, int rank);

bool is_dominant(const RootSystem& rs, const Weight& w);

// Dominance order: lambda - mu must be a nonnegative combination of simple
// roots. Solved in closed form from prefix sums.
bool dominance_leq(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// Exact Weyl dimension formula. Family D accepts a negative last coordinate
// (the two mirror representations have equal dimension).
Int weyl_dim(const RootSystem& rs, const Weight& lambda);

// Size of the signed-permutation orbit of w, computed from the pattern of
// equal and zero coordinates. For family D with all coordinates nonzero this
// counts the union of the two even-sign-change orbits, matching the storage
// convention for characters whose weights are invariant under single flips.
Int orbit_size(const RootSystem& rs, const Weight& w);

// Dominant weight multiplicities of the irreducible with highest weight
// lambda, via the Freudenthal recursion on dominant-orbit data.
std::map<Weight, Int> freudenthal_mults(const RootSystem& rs, const Weight& lambda);

// Restriction of the B_r irreducible to D_r: one pattern per integer
// interlacing, with the last coordinate ranging over both signs.
std::vector<Weight> branch_B_to_D(const Weight& lambda);

}  // namespace k3char
