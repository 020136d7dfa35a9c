#include "augtopo/homology.hpp"

#include "augtopo/field_rank.hpp"
#include "augtopo/smith.hpp"

namespace augtopo {

namespace {

const std::vector<Simplex> kNoBasis;
const BoundaryMatrix kNoBoundary;

struct DegreeData {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1 of the incoming boundary
};

DegreeData boundary_data(const BoundaryMatrix& m, const CoefficientRing& ring, bool need_torsion) {
  if (m.nonZeros() == 0) return {};
  switch (ring.kind()) {
    case CoefficientRing::Kind::Integers: {
      const auto snf = smith_normal_form(to_dense(m));
      DegreeData out{snf.rank(), {}};
      if (need_torsion)
        for (const BigInt& d : snf.invariant_factors)
          if (d > 1) out.torsion.push_back(d);
      return out;
    }
    case CoefficientRing::Kind::Rationals:
    case CoefficientRing::Kind::PrimeField:
      return {matrix_rank(m, ring), {}};
  }
  return {};
}

}  // namespace

ChainComplex::ChainComplex(std::vector<std::vector<Simplex>> bases, std::vector<BoundaryMatrix> boundaries)
    : bases_(std::move(bases)), boundaries_(std::move(boundaries)) {
  if (bases_.size() != boundaries_.size()) throw std::invalid_argument("chain complex: basis/boundary count mismatch");
}

const std::vector<Simplex>& ChainComplex::basis(int d) const {
  if (d < -1 || d > top_degree()) return kNoBasis;
  return bases_[std::size_t(d + 1)];
}

const BoundaryMatrix& ChainComplex::boundary(int d) const {
  if (d < -1 || d > top_degree()) return kNoBoundary;
  return boundaries_[std::size_t(d + 1)];
}

IntMatrix to_dense(const BoundaryMatrix& m) {
  IntMatrix out = IntMatrix::Zero(m.rows(), m.cols());
  for (int k = 0; k < m.outerSize(); ++k)
    for (BoundaryMatrix::InnerIterator it(m, k); it; ++it) out(it.row(), it.col()) = it.value();
  return out;
}

std::size_t matrix_rank(const BoundaryMatrix& m, const CoefficientRing& ring) {
  if (m.nonZeros() == 0) return 0;
  switch (ring.kind()) {
    case CoefficientRing::Kind::Integers:
      return smith_normal_form(to_dense(m)).rank();
    case CoefficientRing::Kind::Rationals: {
      DenseMatrix<Rational> a = DenseMatrix<Rational>::Zero(m.rows(), m.cols());
      for (int k = 0; k < m.outerSize(); ++k)
        for (BoundaryMatrix::InnerIterator it(m, k); it; ++it) a(it.row(), it.col()) = Rational(it.value());
      return field_rank(std::move(a));
    }
    case CoefficientRing::Kind::PrimeField: {
      const auto p = ring.characteristic();
      DenseMatrix<PrimeFieldElement> a(m.rows(), m.cols());
      a.fill(PrimeFieldElement(0, p));
      for (int k = 0; k < m.outerSize(); ++k)
        for (BoundaryMatrix::InnerIterator it(m, k); it; ++it) a(it.row(), it.col()) = PrimeFieldElement(it.value(), p);
      return field_rank(std::move(a));
    }
  }
  return 0;
}

ChainComplex relative_chain(const Complex& c, const Complex& sub) {
  if (!is_subcomplex(sub, c)) throw TopologyError("relative chains need a subcomplex");
  if (c.is_void()) return {};
  const int top = c.dim().value();
  std::vector<std::vector<Simplex>> bases(std::size_t(top + 2));
  for (Simplex s : c.faces())
    if (sub.is_void() || !sub.contains(s)) bases[std::size_t(s.dim() + 1)].push_back(s);
  std::vector<BoundaryMatrix> boundaries(bases.size());
  boundaries[0] = BoundaryMatrix(0, Eigen::Index(bases[0].size()));
  for (std::size_t k = 1; k < bases.size(); ++k) {
    const auto& rows = bases[k - 1];
    const auto& cols = bases[k];
    std::vector<Eigen::Triplet<int>> entries;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int sign = 1;
      for (int v : cols[j].vertices()) {
        const Simplex face = cols[j].without_vertex(v);
        // Faces in the subcomplex are zero in the quotient.
        auto it = std::lower_bound(rows.begin(), rows.end(), face);
        if (it != rows.end() && *it == face) entries.emplace_back(int(it - rows.begin()), int(j), sign);
        sign = -sign;
      }
    }
    BoundaryMatrix m(Eigen::Index(rows.size()), Eigen::Index(cols.size()));
    m.setFromTriplets(entries.begin(), entries.end());
    boundaries[k] = std::move(m);
  }
  return ChainComplex(std::move(bases), std::move(boundaries));
}

ChainComplex augmental_chain(const Complex& c) { return relative_chain(c, Complex::void_complex()); }

GradedModule homology(const ChainComplex& cc, const CoefficientRing& ring, std::optional<int> only_degree) {
  GradedModule out(ring);
  const int top = cc.top_degree();
  const int lo = only_degree ? std::max(*only_degree, -1) : -1;
  const int hi = only_degree ? std::min(*only_degree, top) : top;
  for (int d = lo; d <= hi; ++d) {
    const DegreeData outgoing = boundary_data(cc.boundary(d), ring, false);
    const DegreeData incoming = boundary_data(cc.boundary(d + 1), ring, true);
    ModulePiece piece;
    piece.rank = cc.rank(d) - outgoing.rank - incoming.rank;
    piece.torsion = incoming.torsion;
    out.set(d, std::move(piece));
  }
  return out;
}

GradedModule homology(const Complex& c, const CoefficientRing& ring) { return homology(augmental_chain(c), ring); }

GradedModule homology_pair(const Complex& c, const Complex& sub, const CoefficientRing& ring) {
  return homology(relative_chain(c, sub), ring);
}

ModulePiece homology_pair_in_degree(const Complex& c, const Complex& sub, const CoefficientRing& ring, int degree) {
  return homology(relative_chain(c, sub), ring, degree).at(degree);
}

GradedModule local_homology(const Complex& c, Simplex s, const CoefficientRing& ring) {
  if (!c.contains(s)) throw TopologyError("local homology needs a face of the complex, got " + to_string(s));
  return homology_pair(c, costar(c, s), ring);
}

}  // namespace augtopo
