#pragma once

#include <string>
#include <utility>
#include <vector>

#include "augtopo/homology.hpp"

namespace augtopo {

/// Basis pair γ₁⊗γ₂ of C°(a)⊗C°(b); indices point into a.faces() and b.faces().
struct TensorGenerator {
  std::size_t left, right;
  friend auto operator<=>(const TensorGenerator&, const TensorGenerator&) = default;
};

/// C°(a)⊗C°(b) with ∂(γ₁⊗γ₂) = ∂γ₁⊗γ₂ + (-1)^{dim γ₁} γ₁⊗∂γ₂; degrees from -2.
struct TensorChainComplex {
  /// basis[q + 2], sorted by (left, right).
  std::vector<std::vector<TensorGenerator>> basis;
  /// boundary[q + 2] maps degree q to degree q - 1.
  std::vector<BoundaryMatrix> boundary;

  int top_degree() const { return static_cast<int>(basis.size()) - 3; }
  const std::vector<TensorGenerator>& basis_in(int q) const;
  const BoundaryMatrix& boundary_in(int q) const;
};

TensorChainComplex tensor_chain(const Complex& a, const Complex& b);

/// Per-degree integer matrices; maps[d + 1] sends source degree d to target degree d + shift.
struct ChainMap {
  int degree_shift = 0;
  std::vector<BoundaryMatrix> maps;
  const BoundaryMatrix& in_degree(int d) const;
};

/// γ = γ₁ ∪ γ₂ ↦ (-1)^{#γ₂} γ₁⊗γ₂ from C°(a∗b) to C°(a)⊗C°(b), degree -1.
ChainMap ez_join_map(const Complex& a, const Complex& b);

struct EzVerification {
  bool commutes = false;
  bool invertible = false;
  /// First degree where f∘∂ ≠ ∂⊗∘f, or where f fails to be unimodular.
  std::optional<int> failing_degree;
};
EzVerification verify_ez_join(const Complex& a, const Complex& b);

/// Ĥ_{q+1} = ⊕_{i+j=q} m1ᵢ⊗m2ⱼ ⊕ ⊕_{i+j=q-1} Tor(m1ᵢ, m2ⱼ); with_tor=false drops the Tor part.
GradedModule kunneth_join_predict(const GradedModule& m1, const GradedModule& m2, bool with_tor = true);

struct ComplexPair {
  Complex whole;
  Complex sub;  // Void allowed
};

struct KunnethReport {
  bool agrees = false;
  GradedModule predicted, computed;
  std::vector<int> mismatched_degrees;
};

/// The join pair (Γ₁∗Γ₂, (Γ₁∗Δ₂) ∪ (Δ₁∗Γ₂)) on the join's vertex encoding.
ComplexPair join_pair(const ComplexPair& x, const ComplexPair& y);
KunnethReport kunneth_join_verify(const ComplexPair& x, const ComplexPair& y, const CoefficientRing& ring,
                                  bool with_tor = true);

enum class ProductCase { BothAbsolute, LeftAbsolute, RightAbsolute, Relative };
std::string to_string(ProductCase c);

/// The product pair (X₁×Y₁, (X₁×Y₂) ∪ (X₂×Y₁)), all on the X₁×Y₁ vertex encoding.
ComplexPair product_pair(const ComplexPair& x, const ComplexPair& y);
/// Which of the four right-hand sides applies; a product that is Void or {∅ₒ} falls in Relative.
ProductCase product_case(const ComplexPair& x, const ComplexPair& y);
/// Prediction for degrees q ≥ 0 from Ĥ(X₁,X₂) and Ĥ(Y₁,Y₂).
GradedModule kunneth_product_predict(const GradedModule& hx, const GradedModule& hy, ProductCase which);
KunnethReport kunneth_product_verify(const ComplexPair& x, const ComplexPair& y, const CoefficientRing& ring);

struct LinkFormulaReport {
  bool agrees = false;
  Simplex product_simplex;   // the staircase chain in s1 × s2; empty when skipped
  bool product_side_checked = false;
  GradedModule product_link, predicted, join_link;
};

/// Compares Ĥ(Lk_{a×b} σ) (σ the staircase chain over s1×s2) with the tensor/Tor sum and Ĥ(Lk_{a∗b}(s1∪s2)).
LinkFormulaReport link_formula_verify(const Complex& a, const Complex& b, Simplex s1, Simplex s2,
                                      const CoefficientRing& ring);

}  // namespace augtopo
