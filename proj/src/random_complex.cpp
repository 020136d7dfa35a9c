#include "augtopo/random_complex.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace augtopo {

namespace {

Simplex random_subset(std::mt19937_64& rng, int vertices, int size) {
  std::vector<int> ids(static_cast<std::size_t>(vertices));
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(static_cast<std::size_t>(size));
  return Simplex(ids);
}

}  // namespace

int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Complex random_complex(std::mt19937_64& rng, int vertices, int max_size, int facets) {
  if (vertices < 1 || vertices > kMaxVertexId + 1) throw TopologyError("random complex: bad vertex count");
  max_size = std::clamp(max_size, 1, vertices);
  std::vector<Simplex> gens;
  for (int k = 0; k < facets; ++k) gens.push_back(random_subset(rng, vertices, uniform_int(rng, 1, max_size)));
  return Complex::from_simplices(gens);
}

Complex random_pure_complex(std::mt19937_64& rng, int vertices, int dim, int facets) {
  if (dim < 0 || dim + 1 > vertices) throw TopologyError("random pure complex: bad dimension");
  std::vector<Simplex> gens;
  for (int k = 0; k < facets; ++k) gens.push_back(random_subset(rng, vertices, dim + 1));
  return Complex::from_simplices(gens);
}

}  // namespace augtopo

namespace augtopo {

Complex random_subcomplex(std::mt19937_64& rng, const Complex& c) {
  if (c.is_void()) return c;
  switch (uniform_int(rng, 0, 3)) {
    case 0:
      return Complex::void_complex();
    case 1:
      return Complex::empty_simplex();
    default:
      break;
  }
  std::vector<Simplex> keep;
  for (Simplex f : c.facets()) {
    if (uniform_int(rng, 0, 1))
      keep.push_back(f.without_vertex(f.max_vertex()));
    else if (uniform_int(rng, 0, 2) == 0)
      keep.push_back(f);
  }
  return Complex::from_simplices(keep);
}

}  // namespace augtopo
