#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "augtopo/simplex.hpp"

namespace augtopo {

/// Dimension extended by -infinity, the dimension of the void complex.
class ExtendedDim {
 public:
  static constexpr ExtendedDim neg_infinity() { return ExtendedDim(); }
  static constexpr ExtendedDim of(int d) { return ExtendedDim(d); }

  constexpr bool is_neg_infinity() const { return neg_inf_; }
  /// Finite value; only meaningful when !is_neg_infinity().
  constexpr int value() const { return value_; }

  friend constexpr bool operator==(ExtendedDim, ExtendedDim) = default;

 private:
  constexpr ExtendedDim() = default;
  constexpr explicit ExtendedDim(int d) : neg_inf_(false), value_(d) {}
  bool neg_inf_ = true;
  int value_ = 0;
};

/// dim(a*b) = dim a + dim b + 1 with -infinity absorbing.
constexpr ExtendedDim join_dim(ExtendedDim a, ExtendedDim b) {
  if (a.is_neg_infinity() || b.is_neg_infinity()) return ExtendedDim::neg_infinity();
  return ExtendedDim::of(a.value() + b.value() + 1);
}

std::string to_string(ExtendedDim d);

/**
 * A finite augmented simplicial complex.
 *
 * Two distinct empty-ish values exist: the void complex, which has no faces
 * at all, and {∅ₒ}, which holds only the empty simplex. Every non-void complex
 * contains the empty simplex and is closed under taking subsets.
 *
 * Faces are enumerated eagerly at construction and kept in canonical order
 * (cardinality, then lexicographic vertex sequence). Values are immutable.
 */
class Complex {
 public:
  /// The void complex.
  Complex() = default;

  static Complex void_complex() { return Complex(); }
  /// {∅ₒ}: the complex holding only the empty simplex.
  static Complex empty_simplex();

  /// Downward closure of the given facets plus ∅ₒ, or Void when void_flag is set.
  static Complex from_facets(const std::vector<std::vector<int>>& facets, bool void_flag = false);
  /// Downward closure of a list of simplices; an empty list yields {∅ₒ}.
  static Complex from_simplices(std::span<const Simplex> generators);
  /// Trusts that the masks form a downward-closed family (used by internal constructors).
  static Complex from_closed_masks(std::vector<std::uint64_t> masks);

  bool is_void() const { return void_; }
  ExtendedDim dim() const;
  bool contains(Simplex s) const;

  /// All faces in canonical order; ∅ₒ is first for non-void complexes.
  const std::vector<Simplex>& faces() const { return faces_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  std::vector<Simplex> faces_of_dim(int d) const;
  /// Position of s in faces(), or -1.
  std::ptrdiff_t index_of(Simplex s) const;

  std::size_t num_faces() const { return faces_.size(); }
  std::uint64_t vertex_mask() const { return vertex_mask_; }
  std::vector<int> vertices() const { return Simplex::from_mask(vertex_mask_).vertices(); }
  int num_vertices() const;

  const std::map<int, std::string>& labels() const { return labels_; }
  Complex with_labels(std::map<int, std::string> labels) const;

  /// Face-set equality; labels are presentation only and do not participate.
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.void_ == b.void_ && a.sorted_masks_ == b.sorted_masks_;
  }

 private:
  bool void_ = true;
  std::uint64_t vertex_mask_ = 0;
  std::vector<Simplex> faces_;
  std::vector<std::uint64_t> sorted_masks_;
  std::vector<Simplex> facets_;
  std::map<int, std::string> labels_;
};

// Constructors --------------------------------------------------------------

/// The full simplex σ̄ (all subsets of s); closure(∅ₒ) = {∅ₒ}.
Complex closure(Simplex s);
/// The boundary σ̇ (proper subsets of s); boundary of ∅ₒ is Void.
Complex simplex_boundary(Simplex s);

Complex link(const Complex& c, Simplex s);
Complex costar(const Complex& c, Simplex s);
Complex star_closed(const Complex& c, Simplex s);

/// Offset added to right-factor vertex ids by join(): 1 + max id of the left factor (0 if it has none).
int join_offset(const Complex& left);
Complex join(const Complex& a, const Complex& b);
/// Join on a shared vertex space: {σ₁ ∪ σ₂}. Requires disjoint vertex sets.
Complex join_disjoint(const Complex& a, const Complex& b);

/**
 * Ordered simplicial cartesian product.
 *
 * Product vertex (v', v'') gets id  index(v', frame_a) * |frame_b| + index(v'', frame_b),
 * where the frames default to the factors' own vertex lists. Passing explicit
 * frames lets sub-products of pairs share the vertex encoding of the full product.
 */
Complex product_ordered(const Complex& a, const Complex& b);
Complex product_ordered(const Complex& a, const Complex& b, std::span<const int> frame_a,
                        std::span<const int> frame_b);

/// Adds offset to every vertex id (labels follow).
Complex shift_vertices(const Complex& c, int offset);

Complex skeleton(const Complex& c, int p);
Complex delete_vertices(const Complex& c, Simplex vertices);
Complex union_of(const Complex& a, const Complex& b);
Complex intersection_of(const Complex& a, const Complex& b);

/// δ_Σ: vertices lying in every facet.
Simplex cone_points(const Complex& c);
Complex core(const Complex& c);

// Predicates ----------------------------------------------------------------

bool is_subcomplex(const Complex& sub, const Complex& c);
bool is_full_subcomplex(const Complex& sub, const Complex& c);
bool is_pure(const Complex& c);
bool is_strongly_connected(const Complex& c);
/// Maximal strongly connected components, each closed downward; ordered by their smallest facet.
std::vector<Complex> strongly_connected_components(const Complex& c);
/// Whether c minus sub is connected as a poset under inclusion (vacuously true when empty).
bool is_poset_connected(const Complex& c, const Complex& sub);

/// Face counts indexed from dimension -1; empty for Void.
std::vector<std::size_t> f_vector(const Complex& c);

bool is_isomorphic(const Complex& a, const Complex& b);

}  // namespace augtopo
