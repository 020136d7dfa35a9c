#pragma once

#include <cstdint>
#include <string>

namespace augtopo {

/// Coefficients for homology: the integers, the rationals, or a prime field.
class CoefficientRing {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static CoefficientRing integers() { return CoefficientRing(Kind::Integers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(Kind::Rationals, 0); }
  /// Throws TopologyError unless p is a prime below 2^31.
  static CoefficientRing prime_field(std::int64_t p);
  /// Accepts "Z", "Q", "Zp:<p>" and the short form "Z<p>".
  static CoefficientRing parse(const std::string& text);

  CoefficientRing() = default;

  Kind kind() const { return kind_; }
  std::int64_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  /// "Z", "Q", or "Z<p>".
  std::string name() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  CoefficientRing(Kind k, std::int64_t p) : kind_(k), p_(p) {}
  Kind kind_ = Kind::Integers;
  std::int64_t p_ = 0;
};

}  // namespace augtopo
