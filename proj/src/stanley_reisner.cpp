#include "augtopo/stanley_reisner.hpp"

#include <algorithm>

#include "augtopo/homology.hpp"

namespace augtopo {

namespace {

Simplex resolve_universe(const Complex& c, std::optional<Simplex> universe) {
  const Simplex vertices = Simplex::from_mask(c.vertex_mask());
  if (!universe) return vertices;
  if (!vertices.is_subset_of(*universe)) throw TopologyError("universe does not contain every vertex of the complex");
  return *universe;
}

void require_non_void(const Complex& c, const char* what) {
  if (c.is_void()) throw TopologyError(std::string(what) + " is not defined for the void complex");
}

/// Ĥ_i(l) = 0 for all i below dim l.
bool vanishes_below_top(const Complex& l, const CoefficientRing& ring) {
  const GradedModule h = homology(l, ring);
  const int top = l.dim().value();
  return std::all_of(h.pieces().begin(), h.pieces().end(), [top](const auto& kv) { return kv.first >= top; });
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<Simplex> non_simplices(const Complex& c, std::optional<Simplex> universe) {
  if (c.is_void()) return {Simplex()};
  const Simplex w = resolve_universe(c, universe);
  std::vector<Simplex> out;
  for (Simplex f : c.faces())
    for (int v : w.without(f).vertices()) {
      const Simplex s = f.with_vertex(v);
      if (c.contains(s)) continue;
      const auto verts = s.vertices();
      if (std::all_of(verts.begin(), verts.end(), [&](int u) { return c.contains(s.without_vertex(u)); }))
        out.push_back(s);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MonomialIdeal stanley_reisner_ideal(const Complex& c, std::optional<Simplex> universe) {
  const Simplex w = c.is_void() && !universe ? Simplex() : resolve_universe(c, universe);
  return {non_simplices(c, universe), w};
}

bool ideal_contains(const Complex& c, Simplex support) { return !c.contains(support); }

HilbertData hilbert_function(const Complex& c, int truncation) {
  if (truncation < 0) throw TopologyError("truncation must be non-negative");
  HilbertData out;
  out.coefficients.assign(std::size_t(truncation + 1), BigInt(0));
  if (c.is_void()) return out;
  const auto f = f_vector(c);  // f[i] counts faces with i vertices
  const int d = c.dim().value() + 1;
  out.krull_dimension = d;
  out.denominator_power = d;
  out.coefficients[0] = 1;
  for (int m = 1; m <= truncation; ++m) {
    BigInt total = 0;
    for (std::size_t i = 1; i < f.size(); ++i) total += BigInt(f[i]) * binomial(m - 1, long(i) - 1);
    out.coefficients[std::size_t(m)] = total;
  }
  // h(t) = Σ_i f_{i-1} t^i (1-t)^{d-i}
  out.numerator.assign(std::size_t(d + 1), BigInt(0));
  for (int i = 0; i <= d; ++i)
    for (int k = 0; k <= d - i; ++k) {
      BigInt term = BigInt(f[std::size_t(i)]) * binomial(d - i, k);
      if (k % 2) term = -term;
      out.numerator[std::size_t(i + k)] += term;
    }
  while (out.numerator.size() > 1 && out.numerator.back() == 0) out.numerator.pop_back();
  return out;
}

bool is_cohen_macaulay(const Complex& c, const CoefficientRing& ring) {
  require_non_void(c, "Cohen-Macaulayness");
  return std::all_of(c.faces().begin(), c.faces().end(),
                     [&](Simplex s) { return vanishes_below_top(link(c, s), ring); });
}

bool is_buchsbaum(const Complex& c, const CoefficientRing& ring) {
  require_non_void(c, "the Buchsbaum property");
  if (!is_pure(c)) return false;
  return std::all_of(c.faces().begin(), c.faces().end(),
                     [&](Simplex s) { return s.is_empty() || vanishes_below_top(link(c, s), ring); });
}

bool is_gorenstein(const Complex& c, const CoefficientRing& ring) {
  require_non_void(c, "the Gorenstein property");
  const Complex g = core(c);
  for (Simplex s : g.faces()) {
    const Complex l = link(g, s);
    const int top = l.dim().value();
    const GradedModule h = homology(l, ring);
    if (!h.at(top).is_ring_cyclic()) return false;
    for (const auto& [d, piece] : h.pieces())
      if (d != top) return false;
  }
  return true;
}

bool is_k_cohen_macaulay(const Complex& c, int k, const CoefficientRing& ring) {
  require_non_void(c, "k-Cohen-Macaulayness");
  if (k < 1) throw TopologyError("k must be at least 1");
  const auto verts = c.vertices();
  const int remove = k - 1;
  if (remove > 0 && remove >= int(verts.size()))
    throw TopologyError("k-1 must be smaller than the number of vertices");
  const auto dim = c.dim();
  // Walk all (k-1)-subsets of the vertices via a selection vector.
  std::vector<bool> pick(verts.size(), false);
  std::fill(pick.begin(), pick.begin() + remove, true);
  do {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (pick[i]) mask |= Simplex::bit(verts[i]);
    const Complex rest = delete_vertices(c, Simplex::from_mask(mask));
    if (!(rest.dim() == dim) || !is_cohen_macaulay(rest, ring)) return false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

bool is_two_cohen_macaulay(const Complex& c, const CoefficientRing& ring) {
  if (!is_cohen_macaulay(c, ring)) return false;
  const int n = c.dim().value();
  for (Simplex d : c.faces()) {
    if (d.is_empty()) continue;
    if (!homology_pair_in_degree(costar(c, d), Complex::void_complex(), ring, n - 1).is_zero()) return false;
  }
  return true;
}

}  // namespace augtopo
