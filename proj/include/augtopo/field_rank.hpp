#pragma once

#include <cstdint>
#include <ostream>

#include "augtopo/bigint.hpp"

namespace augtopo {

/**
 * Residue class modulo a prime.
 *
 * The modulus travels with the value. Elements built from plain integers
 * (Eigen's zero and one) carry modulus 0 and adopt the modulus of the other
 * operand on first use.
 */
class PrimeFieldElement {
 public:
  PrimeFieldElement() = default;
  PrimeFieldElement(int v) : value_(v), modulus_(0) {}  // NOLINT: Eigen builds scalars from int literals
  PrimeFieldElement(std::int64_t v, std::int64_t p) : value_(((v % p) + p) % p), modulus_(p) {}

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  PrimeFieldElement inverse() const {
    // Fermat: v^(p-2).
    std::int64_t result = 1, base = value_, e = modulus_ - 2;
    while (e > 0) {
      if (e & 1) result = result * base % modulus_;
      base = base * base % modulus_;
      e >>= 1;
    }
    return {result, modulus_};
  }

  friend PrimeFieldElement operator+(PrimeFieldElement a, PrimeFieldElement b) {
    const auto p = common(a, b);
    return {a.value_ + b.value_, p};
  }
  friend PrimeFieldElement operator-(PrimeFieldElement a, PrimeFieldElement b) {
    const auto p = common(a, b);
    return {a.value_ - b.value_, p};
  }
  friend PrimeFieldElement operator*(PrimeFieldElement a, PrimeFieldElement b) {
    const auto p = common(a, b);
    return {a.value_ * b.value_, p};
  }
  friend PrimeFieldElement operator/(PrimeFieldElement a, PrimeFieldElement b) {
    const auto p = common(a, b);
    return a * PrimeFieldElement(b.value_, p).inverse();
  }
  PrimeFieldElement operator-() const { return modulus_ == 0 ? PrimeFieldElement(int(-value_)) : PrimeFieldElement(-value_, modulus_); }
  PrimeFieldElement& operator+=(PrimeFieldElement o) { return *this = *this + o; }
  PrimeFieldElement& operator-=(PrimeFieldElement o) { return *this = *this - o; }
  PrimeFieldElement& operator*=(PrimeFieldElement o) { return *this = *this * o; }
  PrimeFieldElement& operator/=(PrimeFieldElement o) { return *this = *this / o; }

  friend bool operator==(PrimeFieldElement a, PrimeFieldElement b) {
    const auto p = a.modulus_ ? a.modulus_ : b.modulus_;
    if (p == 0) return a.value_ == b.value_;
    return ((a.value_ - b.value_) % p) == 0;
  }
  friend std::ostream& operator<<(std::ostream& os, PrimeFieldElement x) { return os << x.value_; }

 private:
  static std::int64_t common(PrimeFieldElement& a, PrimeFieldElement& b) {
    const auto p = a.modulus_ ? a.modulus_ : b.modulus_;
    if (p == 0) throw std::logic_error("prime field arithmetic without a modulus");
    return p;
  }
  std::int64_t value_ = 0;
  std::int64_t modulus_ = 0;
};

inline Rational field_inverse(const Rational& x) { return Rational(1) / x; }
inline PrimeFieldElement field_inverse(const PrimeFieldElement& x) { return PrimeFieldElement(1) / x; }

/// Rank by Gaussian elimination over a field scalar (Rational or PrimeFieldElement).
template <typename Field>
std::size_t field_rank(DenseMatrix<Field> a) {
  using Index = Eigen::Index;
  const Field zero(0);
  std::size_t rank = 0;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = -1;
    for (Index i = row; i < a.rows(); ++i)
      if (!(a(i, col) == zero)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    a.row(row).swap(a.row(pivot));
    const Field inv = field_inverse(a(row, col));
    for (Index i = row + 1; i < a.rows(); ++i) {
      if (a(i, col) == zero) continue;
      const Field factor = a(i, col) * inv;
      for (Index j = col; j < a.cols(); ++j)
        if (!(a(row, j) == zero)) a(i, j) -= factor * a(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace augtopo

namespace Eigen {
template <>
struct NumTraits<augtopo::PrimeFieldElement> : GenericNumTraits<augtopo::PrimeFieldElement> {
  typedef augtopo::PrimeFieldElement Real;
  typedef augtopo::PrimeFieldElement NonInteger;
  typedef augtopo::PrimeFieldElement Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
};
}  // namespace Eigen
