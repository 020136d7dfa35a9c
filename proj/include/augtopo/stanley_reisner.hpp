#pragma once

#include <optional>
#include <vector>

#include "augtopo/bigint.hpp"
#include "augtopo/coefficient_ring.hpp"
#include "augtopo/complex.hpp"

namespace augtopo {

/// Squarefree monomial ideal, each generator recorded by its support.
struct MonomialIdeal {
  std::vector<Simplex> generators;
  Simplex universe;
};

/// Minimal non-faces of c inside universe (default: the vertices of c).
std::vector<Simplex> non_simplices(const Complex& c, std::optional<Simplex> universe = {});
MonomialIdeal stanley_reisner_ideal(const Complex& c, std::optional<Simplex> universe = {});
/// Whether the squarefree monomial with this support lies in I_c, i.e. the support is not a face.
bool ideal_contains(const Complex& c, Simplex support);

struct HilbertData {
  /// H(0..N).
  std::vector<BigInt> coefficients;
  /// h(t) with Hilb(t) = h(t) / (1-t)^denominator_power.
  std::vector<BigInt> numerator;
  int denominator_power = 0;
  /// dim c + 1; empty for Void, whose ring is trivial.
  std::optional<int> krull_dimension;
};

HilbertData hilbert_function(const Complex& c, int truncation);

bool is_cohen_macaulay(const Complex& c, const CoefficientRing& ring);
bool is_buchsbaum(const Complex& c, const CoefficientRing& ring);
bool is_gorenstein(const Complex& c, const CoefficientRing& ring);
/// Every deletion of k-1 vertices is CM of unchanged dimension.
bool is_k_cohen_macaulay(const Complex& c, int k, const CoefficientRing& ring);
/// CM and Ĥ_{n-1}(cost δ) = 0 for every face δ.
bool is_two_cohen_macaulay(const Complex& c, const CoefficientRing& ring);

}  // namespace augtopo
