#include "k3char/qseries.hpp"

namespace k3char {

QSeries ak_series(int k, int order) {
  if (k < 0 || order < 0) throw DomainError("ak_series needs k >= 0 and order >= 0");
  QSeries s(order);
  for (long long l = 1;; ++l) {
    long long e = l * (l + 2 * k - 1) / 2;
    if (e > order) break;
    s.coeff(static_cast<int>(e)) += (l % 2 == 1) ? 1 : -1;
  }
  return s;
}

QSeries delta_series(int order) {
  if (order < 1) throw DomainError("delta_series needs order >= 1");
  QSeries s = QSeries::one(order - 1);
  for (int k = 1; k <= order - 1; ++k)
    for (int rep = 0; rep < 24; ++rep) apply_binomial_scalar(s, Rat(-1), k);
  QSeries out(order);
  for (int n = 1; n <= order; ++n) out.coeff(n) = s.coeff(n - 1);
  return out;
}

QSeries euler_series(int order) {
  QSeries s = QSeries::one(order);
  for (int k = 1; k <= order; ++k)
    for (int rep = 0; rep < 24; ++rep) apply_geometric_scalar(s, Rat(1), k);
  return s;
}

QSeries dim_series(int k, int order) {
  return euler_series(order) * (ak_series(k, order) - ak_series(k + 1, order));
}

QSeries eps_series(int order) {
  QSeries s(order);
  for (int n = 1; n <= order; ++n) {
    Int sum = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0 && (n / d) % 2 == 1) sum += Int(d) * d * d;
    s.coeff(n) = Rat(sum);
  }
  return s;
}

QSeries delta2_series(int order) {
  QSeries s(order);
  s.coeff(0) = Rat(-1, 8);
  for (int n = 1; n <= order; ++n) {
    Int sum = 0;
    for (int d = 1; d <= n; d += 2)
      if (n % d == 0) sum += d;
    s.coeff(n) = Rat(-3) * Rat(sum);
  }
  return s;
}

std::vector<Int> as_integers(const QSeries& s) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(s.order()) + 1);
  for (int k = 0; k <= s.order(); ++k) {
    const Rat& c = s.coeff(k);
    if (boost::multiprecision::denominator(c) != 1)
      throw ConsistencyError("series coefficient is not an integer");
    out.push_back(boost::multiprecision::numerator(c));
  }
  return out;
}

}  // namespace k3char
