#pragma once

#include <map>

#include "k3char/laurent.hpp"
#include "k3char/rootsystem.hpp"

namespace k3char {

// Weyl-invariant Laurent polynomial in orbit form: one integer coefficient
// per dominant weight, standing for the sum over its signed-permutation
// orbit. All weights handled here are invariant under single sign flips, so
// family D uses the same nonnegative representatives as family B.
struct Character {
  Family family = Family::B;
  int rank = 0;
  std::map<Weight, Int> orbit_coeffs;

  bool operator==(const Character& o) const = default;
};

Character irrep_char(const RootSystem& rs, const Weight& lambda);

// k-th elementary symmetric polynomial of the standard-representation
// eigenvalues: 2r of them for family D, 2r+1 (with the fixed eigenvalue 1)
// for family B.
Character elementary_char(const RootSystem& rs, int k);

Character character_add(const Character& a, const Character& b);
Character character_scale(const Character& a, const Int& k);

// Full monomial expansion of the orbit form; exponential in rank, intended
// for small-rank verification only.
LaurentPoly expand_character(const Character& chi);

// Reads a torus-only polynomial back into orbit form, verifying genuine
// Weyl invariance: every orbit must be complete with a constant coefficient.
Character character_from_laurent(Family family, int rank, const LaurentPoly& p);

// Evaluation at all torus variables = 1, i.e. the dimension of the virtual
// representation the character describes.
Int character_dimension(const Character& chi);

Character tensor_product(const Character& a, const Character& b);

}  // namespace k3char
