#pragma once

#include <cstdint>
#include <random>

#include "augtopo/complex.hpp"

namespace augtopo {

/// Closure of `facets` random subsets of {0..vertices-1}, each of size 1..max_size.
Complex random_complex(std::mt19937_64& rng, int vertices, int max_size, int facets);

/// Closure of `facets` random (dim+1)-subsets of {0..vertices-1}; pure of dimension dim.
Complex random_pure_complex(std::mt19937_64& rng, int vertices, int dim, int facets);

/// Uniform integer in [lo, hi].
int uniform_int(std::mt19937_64& rng, int lo, int hi);

}  // namespace augtopo

namespace augtopo {

/// A random subcomplex of c: Void, {∅ₒ}, or the closure of a random subset of its facets.
Complex random_subcomplex(std::mt19937_64& rng, const Complex& c);

}  // namespace augtopo
