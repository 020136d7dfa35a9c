#pragma once

#include <optional>
#include <string>
#include <vector>

#include "augtopo/coefficient_ring.hpp"
#include "augtopo/complex.hpp"

namespace augtopo {

enum class Tristate { False, True, Undefined };
std::string to_string(Tristate t);

struct BoundaryResult {
  Complex complex;
  /// False when the raw set {σ | Ĥ_n(c, cost σ) = 0} had to be closed downward.
  bool raw_was_closed = true;
};

/// Bd_G c = {σ | Ĥ_n(c, cost_c σ; G) = 0} with n = dim c; an empty set is Void.
BoundaryResult boundary_detailed(const Complex& c, const CoefficientRing& ring);
Complex boundary(const Complex& c, const CoefficientRing& ring);

/// Closure of the (n-1)-faces lying in exactly one facet; Void if there are none.
Complex pseudomanifold_boundary(const Complex& c);

bool is_pseudomanifold(const Complex& c);
bool is_quasi_manifold(const Complex& c, const CoefficientRing& ring);
bool is_homology_manifold(const Complex& c, const CoefficientRing& ring);
bool is_homology_sphere(const Complex& c, const CoefficientRing& ring);

/// Whether Ĥ_n(c, Bd c) is the ring itself; Undefined for Void. Throws for non-pseudomanifolds.
Tristate orientable(const Complex& c, const CoefficientRing& ring);

/// Strongly connected components of the boundary.
std::vector<Complex> boundary_components(const Complex& c, const CoefficientRing& ring);

struct ManifoldReport {
  CoefficientRing ring;
  bool is_pseudo = false;
  bool is_quasi = false;
  bool is_homology_manifold = false;
  bool is_homology_sphere = false;
  Complex boundary;
  bool boundary_raw_was_closed = true;
  Tristate orientable = Tristate::Undefined;
  std::vector<Complex> components;
};

ManifoldReport classify(const Complex& c, const CoefficientRing& ring);

struct FormulaCheck {
  bool holds = false;
  Complex lhs, rhs;
  /// First simplex in exactly one side, when they differ.
  std::optional<Simplex> witness;
};

/// Bd(a∗b) against ((Bd a)∗b) ∪ (a∗(Bd b)); both factors must be homology manifolds.
FormulaCheck verify_boundary_formula_join(const Complex& a, const Complex& b, const CoefficientRing& ring);
/// Bd(•×c) against •×(Bd c), with the product vertex encoding shared by both sides.
FormulaCheck verify_boundary_formula_point_product(const Complex& c, const CoefficientRing& ring);

}  // namespace augtopo
