#include "augtopo/kunneth.hpp"

#include <algorithm>

#include "augtopo/smith.hpp"

namespace augtopo {

namespace {

const std::vector<TensorGenerator> kNoGenerators;
const BoundaryMatrix kZeroMap;

std::ptrdiff_t find_generator(const std::vector<TensorGenerator>& basis, TensorGenerator g) {
  auto it = std::lower_bound(basis.begin(), basis.end(), g);
  return (it != basis.end() && *it == g) ? it - basis.begin() : -1;
}

bool equal(const BoundaryMatrix& x, const BoundaryMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  BoundaryMatrix diff = x - y;
  diff.prune(0);
  return diff.nonZeros() == 0;
}

bool is_unimodular(const BoundaryMatrix& m) {
  if (m.rows() != m.cols()) return false;
  if (m.rows() == 0) return true;
  const auto snf = smith_normal_form(to_dense(m));
  return snf.rank() == std::size_t(m.rows()) &&
         std::all_of(snf.invariant_factors.begin(), snf.invariant_factors.end(), [](const BigInt& d) { return d == 1; });
}

GradedModule nonnegative_part(const GradedModule& m) {
  GradedModule out(m.ring());
  for (const auto& [d, piece] : m.pieces())
    if (d >= 0) out.set(d, piece);
  return out;
}

KunnethReport compare(GradedModule predicted, GradedModule computed) {
  KunnethReport r;
  std::vector<int> degrees;
  for (const auto& kv : predicted.pieces()) degrees.push_back(kv.first);
  for (const auto& kv : computed.pieces()) degrees.push_back(kv.first);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (int d : degrees)
    if (!(predicted.at(d) == computed.at(d))) r.mismatched_degrees.push_back(d);
  r.agrees = r.mismatched_degrees.empty();
  r.predicted = std::move(predicted);
  r.computed = std::move(computed);
  return r;
}

}  // namespace

const std::vector<TensorGenerator>& TensorChainComplex::basis_in(int q) const {
  if (q < -2 || q > top_degree()) return kNoGenerators;
  return basis[std::size_t(q + 2)];
}

const BoundaryMatrix& TensorChainComplex::boundary_in(int q) const {
  if (q < -2 || q > top_degree()) return kZeroMap;
  return boundary[std::size_t(q + 2)];
}

TensorChainComplex tensor_chain(const Complex& a, const Complex& b) {
  TensorChainComplex t;
  if (a.is_void() || b.is_void()) return t;
  const int top = a.dim().value() + b.dim().value();
  t.basis.resize(std::size_t(top + 3));
  for (std::size_t i = 0; i < a.num_faces(); ++i)
    for (std::size_t j = 0; j < b.num_faces(); ++j)
      t.basis[std::size_t(a.faces()[i].dim() + b.faces()[j].dim() + 2)].push_back({i, j});
  t.boundary.resize(t.basis.size());
  t.boundary[0] = BoundaryMatrix(0, Eigen::Index(t.basis[0].size()));
  for (std::size_t k = 1; k < t.basis.size(); ++k) {
    const auto& rows = t.basis[k - 1];
    const auto& cols = t.basis[k];
    std::vector<Eigen::Triplet<int>> entries;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Simplex g1 = a.faces()[cols[c].left];
      const Simplex g2 = b.faces()[cols[c].right];
      int sign = 1;
      for (int v : g1.vertices()) {
        const auto r = find_generator(rows, {std::size_t(a.index_of(g1.without_vertex(v))), cols[c].right});
        entries.emplace_back(int(r), int(c), sign);
        sign = -sign;
      }
      sign = (g1.dim() % 2 == 0) ? 1 : -1;
      for (int v : g2.vertices()) {
        const auto r = find_generator(rows, {cols[c].left, std::size_t(b.index_of(g2.without_vertex(v)))});
        entries.emplace_back(int(r), int(c), sign);
        sign = -sign;
      }
    }
    BoundaryMatrix m(Eigen::Index(rows.size()), Eigen::Index(cols.size()));
    m.setFromTriplets(entries.begin(), entries.end());
    t.boundary[k] = std::move(m);
  }
  return t;
}

const BoundaryMatrix& ChainMap::in_degree(int d) const {
  if (d < -1 || d + 1 >= int(maps.size())) return kZeroMap;
  return maps[std::size_t(d + 1)];
}

ChainMap ez_join_map(const Complex& a, const Complex& b) {
  if (a.is_void() || b.is_void()) throw TopologyError("the join map needs non-void factors");
  const int offset = join_offset(a);
  const std::uint64_t left_mask = offset >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << offset) - 1;
  const ChainComplex source = augmental_chain(join(a, b));
  const TensorChainComplex target = tensor_chain(a, b);
  ChainMap f;
  f.degree_shift = -1;
  for (int d = -1; d <= source.top_degree(); ++d) {
    const auto& cols = source.basis(d);
    const auto& rows = target.basis_in(d - 1);
    std::vector<Eigen::Triplet<int>> entries;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Simplex g1 = Simplex::from_mask(cols[c].mask() & left_mask);
      const Simplex g2 = Simplex::from_mask(cols[c].mask() >> offset);
      const auto r = find_generator(rows, {std::size_t(a.index_of(g1)), std::size_t(b.index_of(g2))});
      entries.emplace_back(int(r), int(c), g2.cardinality() % 2 == 0 ? 1 : -1);
    }
    BoundaryMatrix m(Eigen::Index(rows.size()), Eigen::Index(cols.size()));
    m.setFromTriplets(entries.begin(), entries.end());
    f.maps.push_back(std::move(m));
  }
  return f;
}

EzVerification verify_ez_join(const Complex& a, const Complex& b) {
  const ChainComplex source = augmental_chain(join(a, b));
  const TensorChainComplex target = tensor_chain(a, b);
  const ChainMap f = ez_join_map(a, b);
  EzVerification out;
  out.commutes = true;
  out.invertible = true;
  for (int d = -1; d <= source.top_degree(); ++d) {
    if (!is_unimodular(f.in_degree(d))) {
      out.invertible = false;
      if (!out.failing_degree) out.failing_degree = d;
    }
    if (d == -1) continue;
    const BoundaryMatrix lhs = f.in_degree(d - 1) * source.boundary(d);
    const BoundaryMatrix rhs = target.boundary_in(d - 1) * f.in_degree(d);
    if (!equal(lhs, rhs)) {
      out.commutes = false;
      if (!out.failing_degree) out.failing_degree = d;
    }
  }
  return out;
}

GradedModule kunneth_join_predict(const GradedModule& m1, const GradedModule& m2, bool with_tor) {
  if (!(m1.ring() == m2.ring())) throw TopologyError("Kunneth prediction needs modules over one ring");
  GradedModule out(m1.ring());
  for (const auto& [i, p] : m1.pieces())
    for (const auto& [j, q] : m2.pieces()) {
      out.add(i + j + 1, tensor(p, q));
      if (with_tor) out.add(i + j + 2, tor1(p, q));
    }
  return out;
}

ComplexPair join_pair(const ComplexPair& x, const ComplexPair& y) {
  if (!is_subcomplex(x.sub, x.whole) || !is_subcomplex(y.sub, y.whole))
    throw TopologyError("pair needs a subcomplex");
  if (x.whole.is_void() || y.whole.is_void()) return {Complex::void_complex(), Complex::void_complex()};
  const int offset = join_offset(x.whole);
  const Complex y_whole = shift_vertices(y.whole, offset);
  const Complex y_sub = shift_vertices(y.sub, offset);
  return {join(x.whole, y.whole), union_of(join_disjoint(x.whole, y_sub), join_disjoint(x.sub, y_whole))};
}

KunnethReport kunneth_join_verify(const ComplexPair& x, const ComplexPair& y, const CoefficientRing& ring,
                                  bool with_tor) {
  const ComplexPair p = join_pair(x, y);
  GradedModule predicted = kunneth_join_predict(homology_pair(x.whole, x.sub, ring),
                                                homology_pair(y.whole, y.sub, ring), with_tor);
  return compare(std::move(predicted), homology_pair(p.whole, p.sub, ring));
}

std::string to_string(ProductCase c) {
  switch (c) {
    case ProductCase::BothAbsolute:
      return "both-absolute";
    case ProductCase::LeftAbsolute:
      return "left-absolute";
    case ProductCase::RightAbsolute:
      return "right-absolute";
    case ProductCase::Relative:
      break;
  }
  return "relative";
}

ComplexPair product_pair(const ComplexPair& x, const ComplexPair& y) {
  if (!is_subcomplex(x.sub, x.whole) || !is_subcomplex(y.sub, y.whole))
    throw TopologyError("pair needs a subcomplex");
  const auto fx = x.whole.vertices();
  const auto fy = y.whole.vertices();
  return {product_ordered(x.whole, y.whole, fx, fy),
          union_of(product_ordered(x.whole, y.sub, fx, fy), product_ordered(x.sub, y.whole, fx, fy))};
}

ProductCase product_case(const ComplexPair& x, const ComplexPair& y) {
  const Complex whole = product_ordered(x.whole, y.whole);
  if (whole.is_void() || whole.num_vertices() == 0) return ProductCase::Relative;
  if (x.sub.is_void() && y.sub.is_void()) return ProductCase::BothAbsolute;
  if (x.sub.is_void()) return ProductCase::LeftAbsolute;
  if (y.sub.is_void()) return ProductCase::RightAbsolute;
  return ProductCase::Relative;
}

GradedModule kunneth_product_predict(const GradedModule& hx, const GradedModule& hy, ProductCase which) {
  if (!(hx.ring() == hy.ring())) throw TopologyError("Kunneth prediction needs modules over one ring");
  GradedModule out(hx.ring());
  for (const auto& [i, p] : hx.pieces())
    for (const auto& [j, q] : hy.pieces()) {
      if (i < 0 || j < 0) continue;
      out.add(i + j, tensor(p, q));
      out.add(i + j + 1, tor1(p, q));
    }
  const bool add_left = which == ProductCase::BothAbsolute || which == ProductCase::RightAbsolute;
  const bool add_right = which == ProductCase::BothAbsolute || which == ProductCase::LeftAbsolute;
  for (const auto& [d, p] : hx.pieces())
    if (add_left && d >= 0) out.add(d, p);
  for (const auto& [d, p] : hy.pieces())
    if (add_right && d >= 0) out.add(d, p);
  return out;
}

KunnethReport kunneth_product_verify(const ComplexPair& x, const ComplexPair& y, const CoefficientRing& ring) {
  const ComplexPair p = product_pair(x, y);
  GradedModule predicted = kunneth_product_predict(homology_pair(x.whole, x.sub, ring),
                                                   homology_pair(y.whole, y.sub, ring), product_case(x, y));
  return compare(std::move(predicted), nonnegative_part(homology_pair(p.whole, p.sub, ring)));
}

LinkFormulaReport link_formula_verify(const Complex& a, const Complex& b, Simplex s1, Simplex s2,
                                      const CoefficientRing& ring) {
  if (!a.contains(s1) || !b.contains(s2)) throw TopologyError("link formula needs faces of the factors");
  LinkFormulaReport r;
  const GradedModule h1 = homology(link(a, s1), ring);
  const GradedModule h2 = homology(link(b, s2), ring);
  r.predicted = kunneth_join_predict(h1, h2);
  const int offset = join_offset(a);
  r.join_link = homology(link(join(a, b), s1 | Simplex::from_mask(s2.mask() << offset)), ring);
  bool product_ok = true;
  if (!s1.is_empty() && !s2.is_empty()) {
    const auto fa = a.vertices();
    const auto fb = b.vertices();
    auto index = [](const std::vector<int>& frame, int v) {
      return int(std::lower_bound(frame.begin(), frame.end(), v) - frame.begin());
    };
    const auto u = s1.vertices();
    const auto w = s2.vertices();
    const int nb = int(fb.size());
    std::uint64_t mask = 0;
    // Staircase: run along s1 at the first vertex of s2, then along s2 at the last vertex of s1.
    for (int x : u) mask |= Simplex::bit(index(fa, x) * nb + index(fb, w.front()));
    for (int y : w) mask |= Simplex::bit(index(fa, u.back()) * nb + index(fb, y));
    r.product_simplex = Simplex::from_mask(mask);
    r.product_side_checked = true;
    r.product_link = homology(link(product_ordered(a, b), r.product_simplex), ring);
    product_ok = r.product_link == r.predicted;
  }
  r.agrees = product_ok && r.predicted == r.join_link;
  return r;
}

}  // namespace augtopo
