#include "k3char/hilb.hpp"

namespace k3char {

GradedCharSeries::GradedCharSeries(int rank, int order)
    : rank_(rank), order_(order), zpart_(order), tpart_(order) {
  if (rank < 1 || rank > 11) throw DomainError("molien rank must be in 1..11");
  if (order < 0) throw DomainError("molien order must be nonnegative");
  zpart_ = poly_series_one(0, order);
  tpart_ = poly_series_one(rank, order);
  for (int m = 1; m <= order; ++m) {
    apply_geometric_monomial(zpart_, z_exponent(0, 2), m);
    apply_geometric_monomial(zpart_, z_exponent(0, -2), m);
  }
  // One eigenvalue variable at a time: the partial products stay small in the
  // untouched variables, which keeps the merge passes cheap until the end.
  for (int i = 0; i < rank; ++i)
    for (int m = 1; m <= order; ++m) {
      apply_geometric_monomial(tpart_, t_exponent(rank, i, 1), m);
      apply_geometric_monomial(tpart_, t_exponent(rank, i, -1), m);
    }
}

LaurentPoly GradedCharSeries::slice(int n, int k) const {
  if (n < 0 || n > order_) throw DomainError("slice index beyond truncation order");
  LaurentPoly acc(rank_);
  Exponent zk = z_exponent(0, 2 * k);
  for (int a = 0; a <= n; ++a) {
    Int c = zpart_.coeff(a).coeff(zk);
    acc.accumulate_shifted(tpart_.coeff(n - a), Exponent(rank_), c);
  }
  return acc;
}

LaurentPoly GradedCharSeries::pzn(int n) const {
  std::vector<LaurentPoly::Term> raw;
  for (int k = -n; k <= n; ++k) {
    LaurentPoly s = slice(n, k);
    for (const auto& t : s.terms()) {
      Exponent e = t.e;
      e.set_z(2 * k);
      raw.push_back({std::move(e), t.c});
    }
  }
  return LaurentPoly::from_terms(rank_, std::move(raw));
}

LaurentPoly GradedCharSeries::pzn_at_ones(int n) const {
  if (n < 0 || n > order_) throw DomainError("slice index beyond truncation order");
  LaurentPoly acc(0);
  for (int a = 0; a <= n; ++a)
    acc.accumulate_shifted(zpart_.coeff(a), Exponent(0), tpart_.coeff(n - a).coeff_sum());
  return acc;
}

GradedCharSeries molien_pg(int rank, int order) { return GradedCharSeries(rank, order); }

std::map<int, Character> extract_pzn(const GradedCharSeries& pg, int n, Family family) {
  std::map<int, Character> out;
  for (int k = 0; k <= n; ++k) {
    LaurentPoly low = pg.slice(n, -k);
    if (k > 0 && !(low == pg.slice(n, k)))
      throw ConsistencyError("graded character is not symmetric in z");
    Character chi = character_from_laurent(family, pg.rank(), low);
    if (k > 0) out.emplace(k, chi);
    out.emplace(-k, std::move(chi));
  }
  return out;
}

PolySeries gottsche_series(int b0, int b1, int b2, int order) {
  if (b0 < 0 || b1 < 0 || b2 < 0) throw DomainError("negative Betti numbers");
  if (b1 % 2 != 0) throw DomainError("b1 must be even");
  PolySeries s = poly_series_one(0, order);
  for (int m = 1; m <= order; ++m) {
    for (int rep = 0; rep < b0; ++rep) {
      apply_geometric_monomial(s, z_exponent(0, 2 * m - 2), m);
      apply_geometric_monomial(s, z_exponent(0, 2 * m + 2), m);
    }
    for (int rep = 0; rep < b2; ++rep)
      apply_geometric_monomial(s, z_exponent(0, 2 * m), m);
    for (int rep = 0; rep < b1; ++rep) {
      apply_binomial_monomial(s, z_exponent(0, 2 * m - 1), 1, m);
      apply_binomial_monomial(s, z_exponent(0, 2 * m + 1), 1, m);
    }
  }
  return s;
}

Int k3_betti(const PolySeries& gottsche, int n, int degree) {
  if (n < 0 || n > gottsche.order()) throw DomainError("n beyond truncation order");
  return gottsche.coeff(n).coeff(z_exponent(0, degree));
}

std::vector<LaurentPoly> mq_series_polys(int rank, int order) {
  if (rank < 1 || rank > 11) throw DomainError("molien rank must be in 1..11");
  // Scalar prefactor (a_0 - a_1) / ((1-q)(1-q^2)...)^2, exactly the z^0 part
  // of the z-only factors.
  QSeries pre = ak_series(0, order) - ak_series(1, order);
  for (int m = 1; m <= order; ++m) {
    apply_geometric_scalar(pre, Rat(1), m);
    apply_geometric_scalar(pre, Rat(1), m);
  }
  std::vector<Int> s = as_integers(pre);

  PolySeries tpart = poly_series_one(rank, order);
  for (int i = 0; i < rank; ++i)
    for (int m = 1; m <= order; ++m) {
      apply_geometric_monomial(tpart, t_exponent(rank, i, 1), m);
      apply_geometric_monomial(tpart, t_exponent(rank, i, -1), m);
    }

  std::vector<LaurentPoly> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    LaurentPoly acc(rank);
    for (int a = 0; a <= n; ++a) {
      acc.accumulate_shifted(tpart.coeff(n - a), Exponent(rank), s[static_cast<std::size_t>(a)]);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<Character> mq_series(int rank, int order) {
  if (rank < 2) throw DomainError("mq_series needs rank >= 2 for the D-type coefficients");
  std::vector<LaurentPoly> polys = mq_series_polys(rank, order);
  std::vector<Character> out;
  out.reserve(polys.size());
  for (int n = 0; n < static_cast<int>(polys.size()); ++n) {
    Family fam = n <= 1 ? Family::D : Family::B;
    out.push_back(character_from_laurent(fam, rank, polys[static_cast<std::size_t>(n)]));
  }
  return out;
}

}  // namespace k3char
