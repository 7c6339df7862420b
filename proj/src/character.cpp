#include "k3char/character.hpp"

#include <algorithm>

namespace k3char {

Character irrep_char(const RootSystem& rs, const Weight& lambda) {
  Character chi;
  chi.family = rs.family;
  chi.rank = rs.rank;
  chi.orbit_coeffs = freudenthal_mults(rs, lambda);
  return chi;
}

Character elementary_char(const RootSystem& rs, int k) {
  int dim_std = rs.family == Family::B ? 2 * rs.rank + 1 : 2 * rs.rank;
  if (k < 0 || k > dim_std)
    throw DomainError("elementary_char index out of range");
  Character chi;
  chi.family = rs.family;
  chi.rank = rs.rank;
  // A dominant monomial (1^j, 0^...) arises from j bare variables, p
  // inverse pairs t_i * t_i^{-1}, and, for family B, optionally the fixed
  // eigenvalue 1 soaking up one leftover slot.
  for (int j = std::min(k, rs.rank); j >= 0; --j) {
    Int ways = 0;
    for (int p = 0; 2 * p + j <= k && p <= rs.rank - j; ++p) {
      int leftover = k - j - 2 * p;
      bool ok = rs.family == Family::B ? leftover <= 1 : leftover == 0;
      if (!ok) continue;
      Int binom = 1;
      for (int i = 0; i < p; ++i) binom = binom * (rs.rank - j - i) / (i + 1);
      ways += binom;
    }
    if (ways == 0) continue;
    Weight w(static_cast<std::size_t>(rs.rank), 0);
    for (int i = 0; i < j; ++i) w[static_cast<std::size_t>(i)] = 1;
    chi.orbit_coeffs[std::move(w)] = ways;
  }
  return chi;
}

Character character_add(const Character& a, const Character& b) {
  if (a.family != b.family || a.rank != b.rank)
    throw DomainError("character family/rank mismatch");
  Character out = a;
  for (const auto& [w, c] : b.orbit_coeffs) {
    Int& dst = out.orbit_coeffs[w];
    dst += c;
    if (dst == 0) out.orbit_coeffs.erase(w);
  }
  return out;
}

Character character_scale(const Character& a, const Int& k) {
  Character out;
  out.family = a.family;
  out.rank = a.rank;
  if (k == 0) return out;
  for (const auto& [w, c] : a.orbit_coeffs) out.orbit_coeffs[w] = c * k;
  return out;
}

namespace {

void orbit_monomials(const Weight& rep, int rank, std::vector<Exponent>& out) {
  Weight sorted = rep;
  std::sort(sorted.begin(), sorted.end());
  do {
    std::vector<int> nz;
    for (int i = 0; i < rank; ++i)
      if (sorted[static_cast<std::size_t>(i)] != 0) nz.push_back(i);
    for (unsigned mask = 0; mask < (1u << nz.size()); ++mask) {
      Exponent e(rank);
      for (int i = 0; i < rank; ++i) e.set_t(i, sorted[static_cast<std::size_t>(i)]);
      for (std::size_t b = 0; b < nz.size(); ++b)
        if (mask & (1u << b))
          e.set_t(nz[b], -sorted[static_cast<std::size_t>(nz[b])]);
      out.push_back(e);
    }
  } while (std::next_permutation(sorted.begin(), sorted.end()));
}

}  // namespace

LaurentPoly expand_character(const Character& chi) {
  if (chi.rank > 6)
    throw DomainError("character expansion capped at rank 6");
  std::vector<LaurentPoly::Term> raw;
  for (const auto& [rep, c] : chi.orbit_coeffs) {
    std::vector<Exponent> orbit;
    orbit_monomials(rep, chi.rank, orbit);
    for (auto& e : orbit) raw.push_back({std::move(e), c});
  }
  return LaurentPoly::from_terms(chi.rank, std::move(raw));
}

Character character_from_laurent(Family family, int rank, const LaurentPoly& p) {
  if (p.rank() != rank) throw DomainError("polynomial rank mismatch");
  RootSystem rs = build_root_system(family, rank);
  Character chi;
  chi.family = family;
  chi.rank = rank;

  // Group terms by the dominant representative of their orbit; invariance
  // means each group is a full orbit with one shared coefficient.
  std::map<Weight, std::pair<Int, Int>> groups;  // rep -> (coeff, member count)
  for (const auto& t : p.terms()) {
    if (t.e.z() != 0)
      throw DomainError("character polynomial must not involve z");
    Weight w(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) {
      int v = t.e.t(i);
      w[static_cast<std::size_t>(i)] = v < 0 ? -v : v;
    }
    std::sort(w.begin(), w.end(), std::greater<int>());
    auto it = groups.find(w);
    if (it == groups.end()) {
      groups.emplace(std::move(w), std::make_pair(t.c, Int(1)));
    } else {
      if (it->second.first != t.c)
        throw ConsistencyError("polynomial is not Weyl invariant: orbit " +
                               weight_to_string(w) + " has mixed coefficients");
      it->second.second += 1;
    }
  }
  for (auto& [rep, cc] : groups) {
    if (cc.second != orbit_size(rs, rep))
      throw ConsistencyError("polynomial is not Weyl invariant: orbit " +
                             weight_to_string(rep) + " is incomplete");
    chi.orbit_coeffs[rep] = std::move(cc.first);
  }
  return chi;
}

Int character_dimension(const Character& chi) {
  RootSystem rs = build_root_system(chi.family, chi.rank);
  Int total = 0;
  for (const auto& [w, c] : chi.orbit_coeffs) total += c * orbit_size(rs, w);
  return total;
}

Character tensor_product(const Character& a, const Character& b) {
  if (a.family != b.family || a.rank != b.rank)
    throw DomainError("character family/rank mismatch");
  LaurentPoly prod = laurent_mul(expand_character(a), expand_character(b));
  return character_from_laurent(a.family, a.rank, prod);
}

}  // namespace k3char
