#pragma once

#include <vector>

#include "k3char/laurent.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3char {

inline LaurentPoly coeff_mul(const LaurentPoly& a, const LaurentPoly& b) {
  return laurent_mul(a, b);
}
inline Rat coeff_mul(const Rat& a, const Rat& b) { return a * b; }
inline bool coeff_is_zero(const LaurentPoly& a) { return a.is_zero(); }
inline bool coeff_is_zero(const Rat& a) { return a == 0; }

// Power series in one formal variable truncated at a fixed order, with exact
// coefficients (Laurent polynomials or rationals).
template <class C>
class TruncatedSeries {
 public:
  TruncatedSeries() : order_(0), coeffs_(1) {}
  explicit TruncatedSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw DomainError("series order must be nonnegative");
  }

  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = unit();
    return s;
  }

  int order() const { return order_; }
  const C& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  C& coeff(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  TruncatedSeries truncated(int m) const {
    if (m > order_) throw DomainError("cannot extend a truncated series");
    TruncatedSeries s(m);
    for (int k = 0; k <= m; ++k) s.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
    return s;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order_, b.order_);
    TruncatedSeries s(n);
    for (int k = 0; k <= n; ++k) s.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return s;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order_, b.order_);
    TruncatedSeries s(n);
    for (int k = 0; k <= n; ++k) s.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return s;
  }

  // Truncated Cauchy product; coefficient convolutions are independent and
  // run in parallel.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order_, b.order_);
    TruncatedSeries s(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int k = 0; k <= n; ++k) {
      C acc{};
      for (int i = 0; i <= k; ++i) {
        const C& ai = a.coeffs_[static_cast<std::size_t>(i)];
        const C& bj = b.coeffs_[static_cast<std::size_t>(k - i)];
        if (coeff_is_zero(ai) || coeff_is_zero(bj)) continue;
        acc = acc + coeff_mul(ai, bj);
      }
      s.coeffs_[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return s;
  }

  bool operator==(const TruncatedSeries& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
  }

 private:
  static C unit();

  int order_;
  std::vector<C> coeffs_;
};

template <>
inline LaurentPoly TruncatedSeries<LaurentPoly>::unit() {
  return LaurentPoly::constant(0, 1);
}
template <>
inline Rat TruncatedSeries<Rat>::unit() {
  return Rat(1);
}

using PolySeries = TruncatedSeries<LaurentPoly>;
using QSeries = TruncatedSeries<Rat>;

// Identity series with the coefficient rank fixed up front, so in-place
// factor application can shift exponents without rank juggling.
inline PolySeries poly_series_one(int rank, int order) {
  PolySeries s(order);
  s.coeff(0) = LaurentPoly::constant(rank, 1);
  for (int k = 1; k <= order; ++k) s.coeff(k) = LaurentPoly(rank);
  return s;
}

// 1/(1 - mu t^m), truncated: the coefficient of t^{km} is mu^k.
PolySeries geometric_factor(const Exponent& mu, int m, int order);

// In-place multiply by 1/(1 - mu t^m) for a monomial mu: ascending degrees
// reuse already-updated entries, which is exactly the geometric recursion.
void apply_geometric_monomial(PolySeries& s, const Exponent& mu, int m);

// In-place multiply by (1 + sign * mu t^m).
void apply_binomial_monomial(PolySeries& s, const Exponent& mu, const Int& sign, int m);

void apply_geometric_scalar(QSeries& s, const Rat& mu, int m);
void apply_binomial_scalar(QSeries& s, const Rat& mu, int m);

template <class C>
TruncatedSeries<C> series_product(const std::vector<TruncatedSeries<C>>& factors, int order) {
  TruncatedSeries<C> acc = TruncatedSeries<C>::one(order);
  for (const auto& f : factors) {
    if (f.order() < order) throw DomainError("series factor truncated below requested order");
    acc = acc * f.truncated(order);
  }
  return acc;
}

}  // namespace k3char
