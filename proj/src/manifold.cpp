#include "augtopo/manifold.hpp"

#include <algorithm>
#include <map>

#include "augtopo/homology.hpp"

namespace augtopo {

namespace {

bool is_low_dim_manifold(const Complex& c) {
  // Below dimension 1 only Void, {∅ₒ}, • and •• qualify.
  return c.is_void() || (c.dim().value() <= 0 && c.num_vertices() <= 2);
}

bool is_two_points(const Complex& c) { return !c.is_void() && c.dim().value() == 0 && c.num_vertices() == 2; }

int top_dim(const Complex& c) { return c.dim().value(); }

std::optional<Simplex> first_difference(const Complex& a, const Complex& b) {
  for (Simplex s : a.faces())
    if (!b.contains(s)) return s;
  for (Simplex s : b.faces())
    if (!a.contains(s)) return s;
  if (a.is_void() != b.is_void()) return Simplex();
  return std::nullopt;
}

FormulaCheck compare(Complex lhs, Complex rhs) {
  FormulaCheck out;
  out.witness = first_difference(lhs, rhs);
  out.holds = !out.witness && lhs == rhs;
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  return out;
}

}  // namespace

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::True:
      return "true";
    case Tristate::False:
      return "false";
    case Tristate::Undefined:
      break;
  }
  return "undefined";
}

BoundaryResult boundary_detailed(const Complex& c, const CoefficientRing& ring) {
  if (c.is_void()) throw TopologyError("the boundary of the void complex is not defined");
  const int n = top_dim(c);
  std::vector<Simplex> raw;
  for (Simplex s : c.faces())
    if (homology_pair_in_degree(c, costar(c, s), ring, n).is_zero()) raw.push_back(s);
  BoundaryResult out;
  if (raw.empty()) {
    out.complex = Complex::void_complex();
    return out;
  }
  out.complex = Complex::from_simplices(raw);
  out.raw_was_closed = out.complex.num_faces() == raw.size();
  if (!c.labels().empty()) {
    std::map<int, std::string> labels;
    for (int v : out.complex.vertices())
      if (auto it = c.labels().find(v); it != c.labels().end()) labels.emplace(v, it->second);
    out.complex = out.complex.with_labels(std::move(labels));
  }
  return out;
}

Complex boundary(const Complex& c, const CoefficientRing& ring) { return boundary_detailed(c, ring).complex; }

Complex pseudomanifold_boundary(const Complex& c) {
  if (c.is_void()) return c;
  const int n = top_dim(c);
  std::vector<Simplex> ridges;
  for (Simplex r : c.faces_of_dim(n - 1)) {
    int count = 0;
    for (Simplex f : c.facets())
      if (f.dim() == n && r.is_subset_of(f)) ++count;
    if (count == 1) ridges.push_back(r);
  }
  if (ridges.empty()) return Complex::void_complex();
  return Complex::from_simplices(ridges);
}

bool is_pseudomanifold(const Complex& c) {
  if (c.is_void() || top_dim(c) <= 0) return is_low_dim_manifold(c);
  if (!is_pure(c)) return false;
  const int n = top_dim(c);
  for (Simplex r : c.faces_of_dim(n - 1)) {
    int count = 0;
    for (Simplex f : c.facets())
      if (r.is_subset_of(f)) ++count;
    if (count > 2) return false;
  }
  return is_strongly_connected(c);
}

bool is_quasi_manifold(const Complex& c, const CoefficientRing& ring) {
  if (c.is_void() || top_dim(c) <= 0) return is_low_dim_manifold(c);
  if (!is_pure(c)) return false;
  const int n = top_dim(c);
  for (Simplex r : c.faces_of_dim(n - 1)) {
    int count = 0;
    for (Simplex f : c.facets())
      if (r.is_subset_of(f)) ++count;
    if (count > 2) return false;
  }
  for (Simplex s : c.faces()) {
    const Complex lk = link(c, s);
    if (top_dim(lk) >= 1 && !homology_pair_in_degree(lk, Complex::void_complex(), ring, 0).is_zero()) return false;
  }
  return true;
}

bool is_homology_manifold(const Complex& c, const CoefficientRing& ring) {
  if (is_two_points(c)) return true;
  if (c.is_void()) return true;
  const int n = top_dim(c);
  if (!homology_pair_in_degree(c, Complex::void_complex(), ring, 0).is_zero()) return false;
  for (Simplex s : c.faces()) {
    if (s.is_empty()) continue;
    const GradedModule h = homology(link(c, s), ring);
    const int top = n - s.cardinality();
    for (const auto& [d, piece] : h.pieces())
      if (d != top || !piece.is_ring_cyclic()) return false;
  }
  return true;
}

bool is_homology_sphere(const Complex& c, const CoefficientRing& ring) {
  if (c.is_void()) return false;
  if (!is_homology_manifold(c, ring)) return false;
  const int n = top_dim(c);
  for (Simplex s : c.faces()) {
    const GradedModule h = homology(link(c, s), ring);
    const int top = n - s.cardinality();
    if (!h.at(top).is_ring_cyclic()) return false;
    for (const auto& [d, piece] : h.pieces())
      if (d != top) return false;
  }
  return true;
}

Tristate orientable(const Complex& c, const CoefficientRing& ring) {
  if (c.is_void()) return Tristate::Undefined;
  if (!is_pseudomanifold(c)) throw TopologyError("orientability is only defined for manifolds");
  const Complex bd = boundary(c, ring);
  const ModulePiece top = homology_pair_in_degree(c, bd, ring, top_dim(c));
  return top.is_ring_cyclic() ? Tristate::True : Tristate::False;
}

std::vector<Complex> boundary_components(const Complex& c, const CoefficientRing& ring) {
  return strongly_connected_components(boundary(c, ring));
}

ManifoldReport classify(const Complex& c, const CoefficientRing& ring) {
  ManifoldReport r;
  r.ring = ring;
  r.is_pseudo = is_pseudomanifold(c);
  r.is_quasi = is_quasi_manifold(c, ring);
  r.is_homology_manifold = is_homology_manifold(c, ring);
  r.is_homology_sphere = is_homology_sphere(c, ring);
  if (c.is_void()) {
    r.boundary = Complex::void_complex();
    return r;
  }
  const BoundaryResult bd = boundary_detailed(c, ring);
  r.boundary = bd.complex;
  r.boundary_raw_was_closed = bd.raw_was_closed;
  r.components = strongly_connected_components(bd.complex);
  if (r.is_pseudo) r.orientable = orientable(c, ring);
  return r;
}

FormulaCheck verify_boundary_formula_join(const Complex& a, const Complex& b, const CoefficientRing& ring) {
  if (!is_homology_manifold(a, ring) || !is_homology_manifold(b, ring))
    throw TopologyError("boundary formula needs homology manifolds over " + ring.name());
  if (a.is_void() || b.is_void()) throw TopologyError("boundary formula needs non-void factors");
  const int offset = join_offset(a);
  const Complex whole = join(a, b);
  const Complex lhs = boundary(whole, ring);
  const Complex shifted_b = shift_vertices(b, offset);
  const Complex rhs = union_of(join_disjoint(boundary(a, ring), shifted_b),
                               join_disjoint(a, shift_vertices(boundary(b, ring), offset)));
  return compare(lhs, rhs);
}

FormulaCheck verify_boundary_formula_point_product(const Complex& c, const CoefficientRing& ring) {
  if (c.is_void()) throw TopologyError("boundary formula needs a non-void factor");
  const Complex point = closure(Simplex{0});
  const std::vector<int> pframe{0};
  const std::vector<int> frame = c.vertices();
  const Complex lhs = boundary(product_ordered(point, c, pframe, frame), ring);
  const Complex bd = boundary(c, ring);
  const Complex rhs = bd.is_void() ? bd : product_ordered(point, bd, pframe, frame);
  return compare(lhs, rhs);
}

}  // namespace augtopo
