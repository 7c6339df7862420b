#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <string>

#include "k3char/ints.hpp"

namespace k3char {

// Monomial exponent vector: rank torus slots t_1..t_r followed by one slot
// for the grading variable z. Packed small so multi-million-term polynomials
// stay cache friendly.
class Exponent {
 public:
  static constexpr int kMaxRank = 15;
  static constexpr int kMaxMagnitude = 120;

  Exponent() : rank_(0) { slots_.fill(0); }

  explicit Exponent(int rank) : rank_(static_cast<std::uint8_t>(rank)) {
    if (rank < 0 || rank > kMaxRank) throw DomainError("exponent rank out of range");
    slots_.fill(0);
  }

  int rank() const { return rank_; }

  int t(int i) const { return slots_[static_cast<std::size_t>(i)]; }
  int z() const { return slots_[rank_]; }

  void set_t(int i, int v) {
    check_slot(i, v);
    slots_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(v);
  }
  void set_z(int v) {
    check_slot(rank_, v);
    slots_[rank_] = static_cast<std::int8_t>(v);
  }

  bool is_zero() const {
    for (int i = 0; i <= rank_; ++i)
      if (slots_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
  }

  Exponent operator+(const Exponent& o) const {
    if (rank_ != o.rank_) throw DomainError("exponent rank mismatch");
    Exponent out(rank_);
    for (int i = 0; i <= rank_; ++i) {
      int s = slots_[static_cast<std::size_t>(i)] + o.slots_[static_cast<std::size_t>(i)];
      if (s > kMaxMagnitude || s < -kMaxMagnitude)
        throw DomainError("exponent overflow; truncation order too large");
      out.slots_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(s);
    }
    return out;
  }

  Exponent operator-() const {
    Exponent out(rank_);
    for (int i = 0; i <= rank_; ++i)
      out.slots_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(-slots_[static_cast<std::size_t>(i)]);
    return out;
  }

  Exponent scaled(int k) const {
    Exponent out(rank_);
    for (int i = 0; i <= rank_; ++i) {
      int v = slots_[static_cast<std::size_t>(i)] * k;
      if (v > kMaxMagnitude || v < -kMaxMagnitude)
        throw DomainError("exponent overflow; truncation order too large");
      out.slots_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(v);
    }
    return out;
  }

  // Lexicographic on (t_1, ..., t_r, z); the z slot compares last.
  std::strong_ordering operator<=>(const Exponent& o) const {
    if (rank_ != o.rank_) return rank_ <=> o.rank_;
    for (int i = 0; i <= rank_; ++i) {
      if (slots_[static_cast<std::size_t>(i)] != o.slots_[static_cast<std::size_t>(i)])
        return slots_[static_cast<std::size_t>(i)] <=> o.slots_[static_cast<std::size_t>(i)];
    }
    return std::strong_ordering::equal;
  }
  bool operator==(const Exponent& o) const {
    return rank_ == o.rank_ &&
           std::memcmp(slots_.data(), o.slots_.data(), static_cast<std::size_t>(rank_) + 1) == 0;
  }

 private:
  void check_slot(int i, int v) const {
    if (i < 0 || i > rank_) throw DomainError("exponent slot out of range");
    if (v > kMaxMagnitude || v < -kMaxMagnitude)
      throw DomainError("exponent magnitude out of range");
  }

  std::array<std::int8_t, kMaxRank + 1> slots_;
  std::uint8_t rank_;
};

inline Exponent t_exponent(int rank, int i, int power = 1) {
  Exponent e(rank);
  e.set_t(i, power);
  return e;
}

inline Exponent z_exponent(int rank, int power) {
  Exponent e(rank);
  e.set_z(power);
  return e;
}

}  // namespace k3char
