#include "k3char/series.hpp"

namespace k3char {

PolySeries geometric_factor(const Exponent& mu, int m, int order) {
  if (m < 1) throw DomainError("geometric factor needs step m >= 1");
  PolySeries s = poly_series_one(mu.rank(), order);
  for (int k = 1; k * m <= order; ++k)
    s.coeff(k * m) = LaurentPoly::monomial(mu.scaled(k), 1);
  return s;
}

void apply_geometric_monomial(PolySeries& s, const Exponent& mu, int m) {
  if (m < 1) throw DomainError("geometric factor needs step m >= 1");
  for (int k = m; k <= s.order(); ++k) s.coeff(k).accumulate_shifted(s.coeff(k - m), mu, 1);
}

void apply_binomial_monomial(PolySeries& s, const Exponent& mu, const Int& sign, int m) {
  if (m < 1) throw DomainError("binomial factor needs step m >= 1");
  for (int k = s.order(); k >= m; --k) s.coeff(k).accumulate_shifted(s.coeff(k - m), mu, sign);
}

void apply_geometric_scalar(QSeries& s, const Rat& mu, int m) {
  if (m < 1) throw DomainError("geometric factor needs step m >= 1");
  for (int k = m; k <= s.order(); ++k) s.coeff(k) += mu * s.coeff(k - m);
}

void apply_binomial_scalar(QSeries& s, const Rat& mu, int m) {
  if (m < 1) throw DomainError("binomial factor needs step m >= 1");
  for (int k = s.order(); k >= m; --k) s.coeff(k) += mu * s.coeff(k - m);
}

}  // namespace k3char
