#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "augtopo/bigint.hpp"
#include "augtopo/coefficient_ring.hpp"

namespace augtopo {

/// R^rank ⊕ ⊕ ℤ/dᵢ with d₁|d₂|…, every dᵢ ≥ 2. Torsion stays empty over fields.
struct ModulePiece {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  /// Isomorphic to the coefficient ring itself.
  bool is_ring_cyclic() const { return rank == 1 && torsion.empty(); }
  friend bool operator==(const ModulePiece&, const ModulePiece&) = default;
};

/// Rewrites any list of finite cyclic orders as invariant factors; orders of 1 vanish.
std::vector<BigInt> normalize_torsion(const std::vector<BigInt>& orders);

ModulePiece direct_sum(const ModulePiece& a, const ModulePiece& b);
ModulePiece tensor(const ModulePiece& a, const ModulePiece& b);
ModulePiece tor1(const ModulePiece& a, const ModulePiece& b);

std::string to_string(const ModulePiece& m, const std::string& ring_symbol = "Z");

/// Finitely generated graded module, degrees from -1 upward; absent degrees are zero.
class GradedModule {
 public:
  GradedModule() = default;
  explicit GradedModule(CoefficientRing ring) : ring_(ring) {}

  const CoefficientRing& ring() const { return ring_; }
  ModulePiece at(int degree) const;
  void set(int degree, ModulePiece piece);
  void add(int degree, const ModulePiece& piece);

  /// Nonzero degrees in increasing order.
  const std::map<int, ModulePiece>& pieces() const { return pieces_; }
  bool is_zero() const { return pieces_.empty(); }
  /// Highest nonzero degree, or -2 when zero.
  int top_degree() const;

  friend bool operator==(const GradedModule&, const GradedModule&) = default;

 private:
  CoefficientRing ring_;
  std::map<int, ModulePiece> pieces_;
};

nlohmann::json to_json(const GradedModule& m);
std::string to_string(const GradedModule& m);

/// Ĥ(·;F) from Ĥ(·;ℤ) for a field F (universal coefficients for homology).
GradedModule change_coefficients(const GradedModule& integral, const CoefficientRing& field);

/// Cohomology via universal coefficients: Hom(Ĥ_i, R) ⊕ Ext(Ĥ_{i-1}, R), from integral homology.
GradedModule cohomology_from_homology(const GradedModule& integral, const CoefficientRing& ring);

}  // namespace augtopo
