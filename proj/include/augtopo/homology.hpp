#pragma once

#include <optional>
#include <vector>

#include <Eigen/SparseCore>

#include "augtopo/coefficient_ring.hpp"
#include "augtopo/complex.hpp"
#include "augtopo/graded_module.hpp"

namespace augtopo {

using BoundaryMatrix = Eigen::SparseMatrix<int>;

/**
 * Integral chain complex with degrees -1 .. top_degree().
 *
 * basis(d) lists simplices in canonical order; boundary(d) maps degree d to
 * degree d-1 (boundary(-1) is the zero map into nothing). Coefficient rings
 * only enter when homology is taken.
 */
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(std::vector<std::vector<Simplex>> bases, std::vector<BoundaryMatrix> boundaries);

  /// Largest degree with a basis slot; -2 when every degree is zero.
  int top_degree() const { return static_cast<int>(bases_.size()) - 2; }
  const std::vector<Simplex>& basis(int d) const;
  std::size_t rank(int d) const { return basis(d).size(); }
  /// Matrix of size rank(d-1) x rank(d); empty outside the stored range.
  const BoundaryMatrix& boundary(int d) const;

 private:
  std::vector<std::vector<Simplex>> bases_;
  std::vector<BoundaryMatrix> boundaries_;
};

/// C°(c): every face, with ∂{v} = ∅ₒ and ∂∅ₒ = 0. Void gives the zero complex.
ChainComplex augmental_chain(const Complex& c);
/// Quotient C°(c)/C°(sub); sub must be a subcomplex of c (Void allowed).
ChainComplex relative_chain(const Complex& c, const Complex& sub);

/// Ĥ_* of a chain complex; only_degree restricts the work to one degree.
GradedModule homology(const ChainComplex& cc, const CoefficientRing& ring, std::optional<int> only_degree = {});
GradedModule homology(const Complex& c, const CoefficientRing& ring);
GradedModule homology_pair(const Complex& c, const Complex& sub, const CoefficientRing& ring);
ModulePiece homology_pair_in_degree(const Complex& c, const Complex& sub, const CoefficientRing& ring, int degree);

/// Ĥ_*(c, cost_c s); s must be a face of c.
GradedModule local_homology(const Complex& c, Simplex s, const CoefficientRing& ring);

/// Rank of an integer matrix over the given ring (SNF over ℤ and ℚ-free routes over fields).
std::size_t matrix_rank(const BoundaryMatrix& m, const CoefficientRing& ring);
IntMatrix to_dense(const BoundaryMatrix& m);

}  // namespace augtopo
