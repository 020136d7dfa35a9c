#pragma once

#include <optional>
#include <string>
#include <vector>

#include "augtopo/complex.hpp"

namespace augtopo {

struct IdentityFailure {
  std::string identity;
  std::string detail;
};

/**
 * Checks the simplicial-calculus identities on a and b:
 *   link-of-join, link-of-link, costar-of-union, link over ∪ and ∩,
 *   closed star ∩ costar, closed star as a join, and the purity criterion.
 * b is read on a's vertex universe for ∪/∩ and shifted past a for joins.
 * Returns every failure found (empty when all hold).
 */
std::vector<IdentityFailure> check_calculus_identities(const Complex& a, const Complex& b);

/// Complex' : the (d-1)-skeleton of a d-dimensional complex; {∅ₒ}' and Void' are Void.
Complex prime_of(const Complex& c);

}  // namespace augtopo
