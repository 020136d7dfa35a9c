#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "augtopo/corpus.hpp"
#include "augtopo/kunneth.hpp"
#include "augtopo/random_complex.hpp"
#include "test_util.hpp"

using namespace augtopo;
using testutil::cx;
using testutil::faces;

namespace {
const CoefficientRing Z = CoefficientRing::integers();
const CoefficientRing Q = CoefficientRing::rationals();
const CoefficientRing Z2 = CoefficientRing::prime_field(2);
const CoefficientRing Z3 = CoefficientRing::prime_field(3);

ModulePiece free_of(std::size_t rank) { return ModulePiece{rank, {}}; }
ModulePiece cyclic(long long order) { return ModulePiece{0, {BigInt(order)}}; }

GradedModule graded(const CoefficientRing& ring, std::map<int, ModulePiece> pieces) {
  GradedModule m(ring);
  for (auto& [d, p] : pieces) m.set(d, p);
  return m;
}

long long oracle_field(const ComplexPair& p, int d, long long prime) {
  return oracle::betti(faces(p.whole), faces(p.sub), d, prime);
}
}  // namespace

TEST_CASE("tensor chain complex squares to zero") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Complex a = random_complex(rng, 4, 3, 3), b = random_complex(rng, 4, 3, 3);
    const TensorChainComplex t = tensor_chain(a, b);
    CHECK(t.top_degree() == a.dim().value() + b.dim().value());
    for (int q = -1; q < t.top_degree(); ++q) {
      const IntMatrix dd = to_dense(BoundaryMatrix(t.boundary_in(q) * t.boundary_in(q + 1)));
      CHECK(testutil::is_zero(dd));
    }
  }
}

TEST_CASE("join map on small generators") {
  const Complex e = Complex::empty_simplex();
  const ChainMap unit = ez_join_map(e, e);
  CHECK(unit.degree_shift == -1);
  const IntMatrix u = to_dense(unit.in_degree(-1));
  REQUIRE(u.size() == 1);
  CHECK(u(0, 0) == 1);

  // a = b = point: the edge [12] goes to -[1](x)[2]; the vertices keep their order.
  const Complex p = cx({{1}});
  const ChainMap f = ez_join_map(p, p);
  const IntMatrix f1 = to_dense(f.in_degree(1));
  REQUIRE(f1.size() == 1);
  CHECK(f1(0, 0) == -1);
  const IntMatrix f0 = to_dense(f.in_degree(0));
  REQUIRE(f0.rows() == 2);
  REQUIRE(f0.cols() == 2);
  CHECK(abs_value(BigInt(f0(0, 0) * f0(1, 1) - f0(0, 1) * f0(1, 0))) == 1);
  const EzVerification v = verify_ez_join(p, p);
  CHECK(v.commutes);
  CHECK(v.invertible);
  CHECK_FALSE(v.failing_degree.has_value());
  CHECK_THROWS_AS(ez_join_map(Complex::void_complex(), p), TopologyError);
}

TEST_CASE("join map is a chain isomorphism on random joins") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const int na = uniform_int(rng, 1, 5), nb = uniform_int(rng, 1, 10 - na);
    const Complex a = random_complex(rng, na, 4, 3), b = random_complex(rng, nb, 4, 3);
    const EzVerification v = verify_ez_join(a, b);
    CHECK(v.commutes);
    CHECK(v.invertible);
  }
}

TEST_CASE("join prediction") {
  const GradedModule s0 = homology(corpus("s0"), Z);
  CHECK(kunneth_join_predict(s0, s0) == graded(Z, {{1, free_of(1)}}));
  const GradedModule unit = homology(Complex::empty_simplex(), Z);
  for (const std::string name : {"theta", "rp2_6", "s1_4", "point", "void"}) {
    const GradedModule m = homology(corpus(name), Z);
    CHECK(kunneth_join_predict(unit, m) == m);
    CHECK(kunneth_join_predict(m, unit) == m);
  }
  const GradedModule rp2 = homology(corpus("rp2_6"), Z);
  CHECK(kunneth_join_predict(rp2, rp2) == graded(Z, {{3, cyclic(2)}, {4, cyclic(2)}}));
  CHECK(kunneth_join_predict(rp2, rp2, false) == graded(Z, {{3, cyclic(2)}}));
  CHECK_THROWS_AS(kunneth_join_predict(rp2, homology(corpus("rp2_6"), Q)), TopologyError);
}

TEST_CASE("join pairs") {
  // Theta as a relative join: (point, {o}) with three disjoint points.
  const ComplexPair x{cx({{1}}), Complex::empty_simplex()};
  const ComplexPair y{cx({{1}, {2}, {3}}), Complex::void_complex()};
  const KunnethReport r = kunneth_join_verify(x, y, Z);
  CHECK(r.agrees);
  CHECK(r.computed.at(1) == free_of(2));
  CHECK(r.computed == graded(Z, {{1, free_of(2)}}));

  const ComplexPair s0{corpus("s0"), Complex::void_complex()};
  const KunnethReport rs = kunneth_join_verify(s0, s0, Z);
  CHECK(rs.agrees);
  CHECK(rs.computed == graded(Z, {{1, free_of(1)}}));

  const ComplexPair ball{corpus("ball1"), corpus("s0")};
  CHECK(kunneth_join_verify(ball, s0, Z).agrees);

  const ComplexPair bad{corpus("s0"), corpus("ball1")};
  CHECK_THROWS_AS(join_pair(bad, s0), TopologyError);
}

TEST_CASE("join pairs against field Betti numbers") {
  std::mt19937_64 rng(91);
  for (int i = 0; i < 40; ++i) {
    const Complex a = random_complex(rng, 4, 3, 3), b = random_complex(rng, 4, 3, 3);
    const ComplexPair x{a, random_subcomplex(rng, a)}, y{b, random_subcomplex(rng, b)};
    const ComplexPair j = join_pair(x, y);
    for (const auto& [ring, prime] : {std::pair{Q, 0LL}, std::pair{Z2, 2LL}, std::pair{Z3, 3LL}}) {
      const KunnethReport r = kunneth_join_verify(x, y, ring);
      CHECK(r.agrees);
      CHECK(r.mismatched_degrees.empty());
      for (int d = -1; d <= 8; ++d) CHECK((long long)r.computed.at(d).rank == oracle_field(j, d, prime));
    }
    CHECK(kunneth_join_verify(x, y, Z).agrees);
  }
}

TEST_CASE("Tor term is needed for the projective plane") {
  const ComplexPair rp2{corpus("rp2_6"), Complex::void_complex()};
  const KunnethReport with = kunneth_join_verify(rp2, rp2, Z);
  CHECK(with.agrees);
  CHECK(with.computed.at(4) == cyclic(2));
  const KunnethReport without = kunneth_join_verify(rp2, rp2, Z, false);
  CHECK_FALSE(without.agrees);
  CHECK(without.mismatched_degrees == std::vector<int>{4});
}

TEST_CASE("product cases") {
  const Complex V = Complex::void_complex(), E = Complex::empty_simplex();
  const ComplexPair s0{corpus("s0"), V}, pt{cx({{1}}), V}, ball{corpus("ball1"), corpus("s0")};
  CHECK(product_case(s0, s0) == ProductCase::BothAbsolute);
  CHECK(product_case(pt, ball) == ProductCase::LeftAbsolute);
  CHECK(product_case(ball, pt) == ProductCase::RightAbsolute);
  CHECK(product_case(ball, ball) == ProductCase::Relative);
  CHECK(product_case(ComplexPair{E, V}, s0) == ProductCase::Relative);

  const KunnethReport c1 = kunneth_product_verify(s0, s0, Z);
  CHECK(c1.agrees);
  CHECK(c1.computed.at(0) == free_of(3));
  CHECK(c1.predicted.at(0) == free_of(3));

  const KunnethReport c2 = kunneth_product_verify(pt, ball, Z);
  CHECK(c2.agrees);
  CHECK(c2.computed.at(1) == free_of(1));
  CHECK(c2.predicted.at(1) == free_of(1));

  // Both subcomplexes {o}: reduced relative to {o} is unreduced homology.
  const ComplexPair s1{corpus("s1_3"), E}, th{corpus("theta"), E};
  const KunnethReport c4 = kunneth_product_verify(s1, th, Z);
  CHECK(c4.agrees);
  CHECK(c4.computed.at(0) == free_of(1));
  CHECK(c4.computed.at(1) == free_of(3));
  CHECK(c4.computed.at(2) == free_of(2));

  const ComplexPair rp2{corpus("rp2_6"), V};
  const KunnethReport tor = kunneth_product_verify(rp2, rp2, Z);
  CHECK(tor.agrees);
  CHECK(tor.computed.at(3) == cyclic(2));
}

TEST_CASE("product pairs on random inputs") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    const Complex a = random_complex(rng, 4, 3, 3), b = random_complex(rng, 4, 2, 3);
    const ComplexPair x{a, random_subcomplex(rng, a)}, y{b, random_subcomplex(rng, b)};
    for (const auto& ring : {Z, Q, Z2}) {
      const KunnethReport r = kunneth_product_verify(x, y, ring);
      INFO(to_string(product_case(x, y)));
      CHECK(r.agrees);
    }
  }
}

TEST_CASE("local link formula") {
  const Complex c4 = corpus("s1_4");
  for (Simplex e1 : c4.faces_of_dim(1))
    for (Simplex e2 : c4.faces_of_dim(1)) {
      const LinkFormulaReport r = link_formula_verify(c4, c4, e1, e2, Z);
      CHECK(r.agrees);
      CHECK(r.product_side_checked);
      CHECK(r.product_simplex.cardinality() == 3);
      CHECK(r.join_link == graded(Z, {{-1, free_of(1)}}));
      CHECK(r.product_link == r.join_link);
    }
  const Complex b = corpus("ball1");
  for (int v1 : b.vertices())
    for (int v2 : b.vertices()) {
      const LinkFormulaReport r = link_formula_verify(b, b, Simplex{v1}, Simplex{v2}, Q);
      CHECK(r.agrees);
      CHECK(r.product_link.is_zero());
    }
  const LinkFormulaReport empty = link_formula_verify(corpus("s0"), corpus("s0"), Simplex{}, Simplex{}, Z);
  CHECK(empty.agrees);
  CHECK_FALSE(empty.product_side_checked);
  CHECK(empty.join_link == graded(Z, {{1, free_of(1)}}));
}

TEST_CASE("link formula on random faces") {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 25; ++i) {
    const Complex a = random_complex(rng, 4, 3, 3), b = random_complex(rng, 4, 3, 2);
    const auto fa = a.faces(), fb = b.faces();
    const Simplex s1 = fa[std::size_t(uniform_int(rng, 0, int(fa.size()) - 1))];
    const Simplex s2 = fb[std::size_t(uniform_int(rng, 0, int(fb.size()) - 1))];
    for (const auto& ring : {Z, Q, Z2}) CHECK(link_formula_verify(a, b, s1, s2, ring).agrees);
  }
}
