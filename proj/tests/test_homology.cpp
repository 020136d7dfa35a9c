#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "augtopo/corpus.hpp"
#include "augtopo/field_rank.hpp"
#include "augtopo/homology.hpp"
#include "augtopo/random_complex.hpp"
#include "augtopo/smith.hpp"
#include "test_util.hpp"

using namespace augtopo;
using testutil::cx;
using testutil::faces;

namespace {

/// Plain triple loop; Eigen's operator* trips over cpp_int's byte-container constructor.
IntMatrix times(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      BigInt sum = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) sum += a(i, k) * b(k, j);
      out(i, j) = sum;
    }
  return out;
}

/// Fraction-free Bareiss elimination.
BigInt determinant(IntMatrix m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.row(p).swap(m.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix filled(Eigen::Index rows, Eigen::Index cols, bool identity) {
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = identity && i == j ? 1 : 0;
  return m;
}

const CoefficientRing Z = CoefficientRing::integers();
const CoefficientRing Q = CoefficientRing::rationals();
const CoefficientRing Z2 = CoefficientRing::prime_field(2);

GradedModule module(CoefficientRing ring, std::map<int, ModulePiece> pieces) {
  GradedModule m(ring);
  for (auto& [d, p] : pieces) m.set(d, p);
  return m;
}

IntMatrix from_rows(const oracle::Matrix& rows) {
  IntMatrix m(Eigen::Index(rows.size()), Eigen::Index(rows.empty() ? 0 : rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(Eigen::Index(i), Eigen::Index(j)) = rows[i][j];
  return m;
}

std::vector<long long> as_ll(const std::vector<BigInt>& v) {
  std::vector<long long> out;
  for (const auto& x : v) out.push_back(static_cast<long long>(x));
  return out;
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  const auto snf = smith_normal_form(from_rows({{2, 4}, {-2, 6}}), true);
  CHECK(as_ll(snf.invariant_factors) == std::vector<long long>{2, 10});
  CHECK(as_ll(snf.invariant_factors) == oracle::invariant_factors({{2, 4}, {-2, 6}}));
  CHECK(smith_normal_form(filled(3, 3, true)).invariant_factors.size() == 3);
  CHECK(smith_normal_form(filled(3, 2, false)).invariant_factors.empty());
  CHECK(smith_normal_form(IntMatrix(0, 4)).invariant_factors.empty());
}

TEST_CASE("Smith normal form against determinantal divisors, with transforms") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const int r = uniform_int(rng, 1, 4), c = uniform_int(rng, 1, 4);
    oracle::Matrix rows(std::size_t(r), std::vector<long long>(std::size_t(c), 0));
    for (auto& row : rows)
      for (auto& x : row) x = uniform_int(rng, -6, 6) * (uniform_int(rng, 0, 2) ? 1 : 0);
    const IntMatrix m = from_rows(rows);
    const auto snf = smith_normal_form(m, true);
    CHECK(as_ll(snf.invariant_factors) == oracle::invariant_factors(rows));
    for (std::size_t k = 1; k < snf.invariant_factors.size(); ++k)
      CHECK(snf.invariant_factors[k] % snf.invariant_factors[k - 1] == 0);
    const IntMatrix d = times(times(snf.left, m), snf.right);
    CHECK(testutil::same(d, snf.diagonal));
    for (Eigen::Index i = 0; i < d.rows(); ++i)
      for (Eigen::Index j = 0; j < d.cols(); ++j)
        if (i != j) CHECK(d(i, j) == 0);
    CHECK(abs_value(determinant(snf.left)) == 1);
    CHECK(abs_value(determinant(snf.right)) == 1);
  }
}

TEST_CASE("Smith normal form does not overflow") {
  IntMatrix m(2, 2);
  m << BigInt("123456789012345678901234567890"), BigInt(6), BigInt(4), BigInt("987654321098765432109876543210");
  const auto snf = smith_normal_form(m, true);
  CHECK(testutil::same(times(times(snf.left, m), snf.right), snf.diagonal));
  CHECK(snf.invariant_factors.size() == 2);
}

TEST_CASE("field ranks") {
  DenseMatrix<Rational> q(2, 2);
  q << Rational(1), Rational(2), Rational(2), Rational(4);
  CHECK(field_rank(q) == 1);
  DenseMatrix<PrimeFieldElement> p(2, 2);
  p << PrimeFieldElement(2, 3), PrimeFieldElement(1, 3), PrimeFieldElement(1, 3), PrimeFieldElement(2, 3);
  // det = 3 ≡ 0 mod 3
  CHECK(field_rank(p) == 1);
  CHECK(PrimeFieldElement(3, 7).inverse() == PrimeFieldElement(5, 7));
}

TEST_CASE("coefficient rings") {
  CHECK(CoefficientRing::parse("Z") == Z);
  CHECK(CoefficientRing::parse("Q") == Q);
  CHECK(CoefficientRing::parse("Zp:2") == Z2);
  CHECK(CoefficientRing::parse("Z3").characteristic() == 3);
  CHECK_THROWS_AS(CoefficientRing::parse("Zp:4"), TopologyError);
  CHECK_THROWS_AS(CoefficientRing::parse("R"), TopologyError);
  CHECK(CoefficientRing::prime_field(5).name() == "Z5");
}

TEST_CASE("tensor and Tor of module pieces") {
  const ModulePiece z{1, {}}, z2{0, {2}}, z3{0, {3}};
  CHECK(tor1(z, z2).is_zero());
  CHECK(tor1(z2, z2) == z2);
  CHECK(tensor(ModulePiece{1, {2}}, z2) == ModulePiece{0, {2, 2}});
  CHECK(tensor(z2, z3).is_zero());
  CHECK(tensor(z, z) == z);
  CHECK(normalize_torsion({2, 3}) == std::vector<BigInt>{6});
  CHECK(normalize_torsion({4, 2, 3}) == std::vector<BigInt>{2, 12});
  CHECK(normalize_torsion({1}).empty());
}

TEST_CASE("augmental chain complexes") {
  const ChainComplex e = augmental_chain(Complex::empty_simplex());
  CHECK(e.rank(-1) == 1);
  CHECK(e.top_degree() == -1);
  CHECK(augmental_chain(Complex::void_complex()).top_degree() == -2);
  const ChainComplex b = augmental_chain(cx({{1, 2}}));
  CHECK(testutil::same(to_dense(b.boundary(1)), from_rows({{-1}, {1}})));
  CHECK(testutil::same(to_dense(b.boundary(0)), from_rows({{1, 1}})));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    const ChainComplex cc = augmental_chain(random_complex(rng, 6, 4, 4));
    for (int d = 0; d <= cc.top_degree(); ++d) {
      const BoundaryMatrix sq = cc.boundary(d) * cc.boundary(d + 1);
      CHECK(sq.norm() == 0);
    }
  }
}

TEST_CASE("homology examples") {
  CHECK(homology(Complex::empty_simplex(), Z) == module(Z, {{-1, {1, {}}}}));
  CHECK(homology(cx({{1}}), Z).is_zero());
  CHECK(homology(cx({{1}, {2}}), Z) == module(Z, {{0, {1, {}}}}));
  CHECK(homology(Complex::void_complex(), Z).is_zero());
  CHECK(homology(corpus("rp2_6"), Z) == module(Z, {{1, {0, {2}}}}));
  CHECK(homology(corpus("rp2_6"), Z2) == module(Z2, {{1, {1, {}}}, {2, {1, {}}}}));
  CHECK(homology(corpus("rp2_6"), Q).is_zero());
  CHECK(homology(corpus("theta"), Z) == module(Z, {{1, {2, {}}}}));
}

TEST_CASE("relative homology and the case table") {
  const Complex point = cx({{1}});
  CHECK(homology_pair(point, Complex::empty_simplex(), Z) == module(Z, {{0, {1, {}}}}));
  const Complex c = corpus("cylinder");
  CHECK(homology_pair(c, c, Z).is_zero());
  CHECK(homology_pair(cx({{1, 2}}), cx({{1}, {2}}), Z) == module(Z, {{1, {1, {}}}}));
  CHECK_THROWS_AS(homology_pair(cx({{1}}), cx({{2}}), Z), TopologyError);
  // Sub = {∅ₒ}: unreduced homology of the circle.
  CHECK(homology_pair(corpus("s1_3"), Complex::empty_simplex(), Z) == module(Z, {{0, {1, {}}}, {1, {1, {}}}}));
}

TEST_CASE("local homology examples") {
  CHECK(local_homology(cx({{1, 2}}), {1, 2}, Z) == module(Z, {{1, {1, {}}}}));
  CHECK(local_homology(corpus("rp2_6"), {}, Z) == homology(corpus("rp2_6"), Z));
  CHECK(local_homology(corpus("s1_3"), {1}, Z) == module(Z, {{1, {1, {}}}}));
  CHECK_THROWS_AS(local_homology(corpus("s1_3"), {1, 2, 3}, Z), TopologyError);
}

TEST_CASE("homology against the independent oracle") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const Complex c = random_complex(rng, 7, 4, 5);
    const Complex sub = random_subcomplex(rng, c);
    const auto fc = faces(c);
    const auto fs = sub.is_void() ? oracle::FaceSet{} : faces(sub);
    const GradedModule hz = homology_pair(c, sub, Z);
    for (long long p : {0LL, 2LL, 3LL}) {
      const CoefficientRing ring = p ? CoefficientRing::prime_field(p) : Q;
      const GradedModule h = homology_pair(c, sub, ring);
      for (int d = -1; d <= c.dim().value(); ++d) {
        CHECK((long long)h.at(d).rank == oracle::betti(fc, fs, d, p));
        if (p == 0) CHECK(hz.at(d).rank == h.at(d).rank);
      }
      // Universal coefficients: field homology from integral homology.
      CHECK(change_coefficients(hz, ring) == h);
    }
  }
}

TEST_CASE("Euler characteristic over Q") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    const Complex c = random_complex(rng, 7, 5, 5);
    const auto f = f_vector(c);
    long long chi_f = 0, chi_h = 0;
    for (std::size_t k = 0; k < f.size(); ++k) chi_f += (k % 2 ? 1 : -1) * (long long)f[k];
    const GradedModule h = homology(c, Q);
    for (const auto& [d, piece] : h.pieces()) chi_h += (d % 2 ? -1 : 1) * (long long)piece.rank;
    CHECK(chi_f == chi_h);
  }
}

TEST_CASE("cohomology by universal coefficients") {
  const GradedModule h = homology(corpus("rp2_6"), Z);
  CHECK(cohomology_from_homology(h, Z) == module(Z, {{2, {0, {2}}}}));
  CHECK(cohomology_from_homology(h, Z2) == module(Z2, {{1, {1, {}}}, {2, {1, {}}}}));
  CHECK(cohomology_from_homology(h, Q).is_zero());
  CHECK(to_json(h).dump() == R"([{"degree":1,"rank":0,"torsion":[2]}])");
}
