#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "k3char/exponent.hpp"
#include "k3char/ints.hpp"

namespace k3char {

// Sparse exact Laurent polynomial in t_1..t_r and z. Terms are kept sorted
// by exponent with no zero coefficients, so equality is representational.
class LaurentPoly {
 public:
  struct Term {
    Exponent e;
    Int c;
  };

  LaurentPoly() : rank_(0) {}
  explicit LaurentPoly(int rank) : rank_(rank) {
    if (rank < 0 || rank > Exponent::kMaxRank) throw DomainError("poly rank out of range");
  }

  static LaurentPoly constant(int rank, Int c) {
    LaurentPoly p(rank);
    if (c != 0) p.terms_.push_back({Exponent(rank), std::move(c)});
    return p;
  }
  static LaurentPoly monomial(Exponent e, Int c) {
    LaurentPoly p(e.rank());
    if (c != 0) p.terms_.push_back({std::move(e), std::move(c)});
    return p;
  }

  // Sorts and combines arbitrary term lists into canonical form.
  static LaurentPoly from_terms(int rank, std::vector<Term> raw) {
    LaurentPoly p(rank);
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.e < b.e; });
    for (auto& t : raw) {
      if (t.e.rank() != rank) throw DomainError("term rank mismatch");
      if (!p.terms_.empty() && p.terms_.back().e == t.e) {
        p.terms_.back().c += t.c;
        if (p.terms_.back().c == 0) p.terms_.pop_back();
      } else if (t.c != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool operator==(const LaurentPoly& o) const {
    if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].e == o.terms_[i].e) || terms_[i].c != o.terms_[i].c) return false;
    return true;
  }

  Int coeff(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& x) { return t.e < x; });
    if (it != terms_.end() && it->e == e) return it->c;
    return 0;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    *this = *this + o;
    return *this;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.rank_ != b.rank_) throw DomainError("poly rank mismatch in add");
    LaurentPoly out(a.rank_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    merge_into(out.terms_, a.terms_, b.terms_);
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + b.scaled(Int(-1));
  }

  LaurentPoly scaled(const Int& k) const {
    if (k == 0) return LaurentPoly(rank_);
    LaurentPoly out(rank_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.e, t.c * k});
    return out;
  }

  // Multiplies by the monomial mu*e, preserving term order: lexicographic
  // comparison is translation invariant.
  LaurentPoly shifted_scaled(const Exponent& e, const Int& k) const {
    if (k == 0) return LaurentPoly(rank_);
    LaurentPoly out(rank_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.e + e, t.c * k});
    return out;
  }

  // *this += src.shifted_scaled(shift, scale) in one merge pass, without the
  // intermediate copy; this is the hot step of the factored series products.
  void accumulate_shifted(const LaurentPoly& src, const Exponent& shift, const Int& scale);

  LaurentPoly mirrored() const {
    LaurentPoly out(rank_);
    out.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      out.terms_.push_back({-it->e, it->c});
    return out;
  }

  // Substitutes z -> 1/z, fixing the torus variables.
  LaurentPoly z_inverted() const {
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const auto& t : terms_) {
      Exponent e = t.e;
      e.set_z(-t.e.z());
      raw.push_back({std::move(e), t.c});
    }
    return from_terms(rank_, std::move(raw));
  }

  // Coefficient of z^zpow as a polynomial in the torus variables alone.
  LaurentPoly z_slice(int zpow) const {
    std::vector<Term> raw;
    for (const auto& t : terms_) {
      if (t.e.z() != zpow) continue;
      Exponent e = t.e;
      e.set_z(0);
      raw.push_back({std::move(e), t.c});
    }
    return from_terms(rank_, std::move(raw));
  }

  // Evaluates all torus variables at 1, keeping z: result has rank 0.
  LaurentPoly at_torus_ones() const {
    std::map<int, Int> by_z;
    for (const auto& t : terms_) by_z[t.e.z()] += t.c;
    std::vector<Term> raw;
    for (auto& [zp, c] : by_z)
      if (c != 0) raw.push_back({z_exponent(0, zp), std::move(c)});
    return from_terms(0, std::move(raw));
  }

  Int coeff_sum() const {
    Int s = 0;
    for (const auto& t : terms_) s += t.c;
    return s;
  }

  std::string to_string() const;

 private:
  static void merge_into(std::vector<Term>& out, const std::vector<Term>& a,
                         const std::vector<Term>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].e < b[j].e) {
        out.push_back(a[i++]);
      } else if (b[j].e < a[i].e) {
        out.push_back(b[j++]);
      } else {
        Int c = a[i].c + b[j].c;
        if (c != 0) out.push_back({a[i].e, std::move(c)});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
  }

  friend LaurentPoly laurent_mul_serial(const LaurentPoly&, const LaurentPoly&);
  friend LaurentPoly laurent_mul(const LaurentPoly&, const LaurentPoly&);

  int rank_;
  std::vector<Term> terms_;
};

LaurentPoly laurent_mul_serial(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly parse_laurent(const std::string& text, int rank);

}  // namespace k3char
