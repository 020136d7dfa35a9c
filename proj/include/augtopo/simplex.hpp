#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace augtopo {

/// Raised for malformed inputs and violated preconditions across the library.
class TopologyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest admissible vertex id; vertex sets are encoded as 64-bit masks.
inline constexpr int kMaxVertexId = 63;

/**
 * A finite set of vertex ids, stored as a bit mask.
 *
 * The default-constructed value is the empty simplex (dimension -1). The
 * ordering compares cardinality first and then the sorted vertex sequences
 * lexicographically; chain bases rely on it.
 */
class Simplex {
 public:
  constexpr Simplex() = default;
  Simplex(std::initializer_list<int> vertices) : Simplex(std::span<const int>(vertices.begin(), vertices.size())) {}
  explicit Simplex(std::span<const int> vertices) {
    for (int v : vertices) {
      if (v < 0) throw TopologyError("negative vertex id " + std::to_string(v));
      if (v > kMaxVertexId)
        throw TopologyError("vertex id " + std::to_string(v) + " exceeds " + std::to_string(kMaxVertexId));
      mask_ |= bit(v);
    }
  }
  explicit Simplex(const std::vector<int>& vertices) : Simplex(std::span<const int>(vertices)) {}

  static constexpr Simplex from_mask(std::uint64_t mask) {
    Simplex s;
    s.mask_ = mask;
    return s;
  }

  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int cardinality() const { return std::popcount(mask_); }
  constexpr int dim() const { return cardinality() - 1; }
  constexpr bool is_empty() const { return mask_ == 0; }
  constexpr bool contains(int v) const { return (mask_ >> v) & 1U; }
  constexpr bool is_subset_of(Simplex other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(Simplex other) const { return (mask_ & other.mask_) != 0; }

  constexpr Simplex operator|(Simplex o) const { return from_mask(mask_ | o.mask_); }
  constexpr Simplex operator&(Simplex o) const { return from_mask(mask_ & o.mask_); }
  constexpr Simplex without(Simplex o) const { return from_mask(mask_ & ~o.mask_); }
  constexpr Simplex with_vertex(int v) const { return from_mask(mask_ | bit(v)); }
  constexpr Simplex without_vertex(int v) const { return from_mask(mask_ & ~bit(v)); }

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  /// Largest vertex id, or -1 for the empty simplex.
  constexpr int max_vertex() const { return mask_ == 0 ? -1 : 63 - std::countl_zero(mask_); }
  constexpr int min_vertex() const { return mask_ == 0 ? -1 : std::countr_zero(mask_); }

  friend constexpr bool operator==(Simplex a, Simplex b) { return a.mask_ == b.mask_; }

  friend constexpr std::strong_ordering operator<=>(Simplex a, Simplex b) {
    if (auto c = a.cardinality() <=> b.cardinality(); c != 0) return c;
    const std::uint64_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return std::strong_ordering::equal;
    // Equal cardinality: the sequence holding the lowest differing vertex is smaller.
    return (a.mask_ & (diff & (~diff + 1))) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::uint64_t mask_ = 0;
};

/// "{1,2,3}" style rendering; the empty simplex renders as "{}".
inline std::string to_string(Simplex s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.vertices()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace augtopo
