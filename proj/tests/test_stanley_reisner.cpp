#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <random>

#include "augtopo/corpus.hpp"
#include "augtopo/homology.hpp"
#include "augtopo/manifold.hpp"
#include "augtopo/random_complex.hpp"
#include "augtopo/stanley_reisner.hpp"
#include "test_util.hpp"

using namespace augtopo;
using testutil::cx;
using testutil::faces;

namespace {
const CoefficientRing Z = CoefficientRing::integers();
const CoefficientRing Q = CoefficientRing::rationals();
const CoefficientRing Z2 = CoefficientRing::prime_field(2);
const CoefficientRing Z3 = CoefficientRing::prime_field(3);

std::vector<BigInt> big(std::vector<long long> v) { return {v.begin(), v.end()}; }

/// Every deletion of fewer than k vertices is CM of unchanged dimension.
bool k_cm_at_most(const Complex& c, int k, const CoefficientRing& ring) {
  const std::vector<int> vs = c.vertices();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << vs.size()); ++m) {
    if (std::popcount(m) >= k) continue;
    std::vector<int> drop;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (m >> i & 1) drop.push_back(vs[i]);
    const Complex d = delete_vertices(c, Simplex(drop));
    if (!(d.dim() == c.dim()) || !is_cohen_macaulay(d, ring)) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("non-simplices") {
  CHECK(non_simplices(cx({{1}, {2}})) == std::vector<Simplex>{{1, 2}});
  CHECK(non_simplices(Complex::void_complex()) == std::vector<Simplex>{Simplex{}});
  CHECK(non_simplices(corpus("s1_4")) == std::vector<Simplex>{{1, 2}, {3, 4}});
  CHECK(non_simplices(Complex::empty_simplex(), Simplex{1, 2, 3}) == std::vector<Simplex>{{1}, {2}, {3}});
  CHECK(non_simplices(cx({{1}}), Simplex{1, 2}) == std::vector<Simplex>{{2}});
  CHECK_THROWS_AS(non_simplices(cx({{1, 5}}), Simplex{1, 2}), TopologyError);
  CHECK(stanley_reisner_ideal(corpus("s1_3")).generators == std::vector<Simplex>{{1, 2, 3}});
}

TEST_CASE("ideal membership and lattice identities") {
  CHECK(ideal_contains(cx({{1}, {2}}), {1, 2}));
  CHECK_FALSE(ideal_contains(corpus("rp2_6"), {}));
  CHECK(ideal_contains(Complex::empty_simplex(), {1}));
  CHECK(ideal_contains(Complex::void_complex(), {}));

  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    const Complex a = random_complex(rng, 6, 4, 4), b = random_complex(rng, 6, 4, 4);
    for (std::uint64_t m = 0; m < 64; ++m) {
      const Simplex s = Simplex::from_mask(m);
      CHECK(ideal_contains(union_of(a, b), s) == (ideal_contains(a, s) && ideal_contains(b, s)));
      CHECK(ideal_contains(intersection_of(a, b), s) == (ideal_contains(a, s) || ideal_contains(b, s)));
    }
    // Minimal non-faces generate exactly the non-faces.
    const auto gens = non_simplices(a, Simplex::from_mask(63));
    for (std::uint64_t m = 0; m < 64; ++m) {
      const Simplex s = Simplex::from_mask(m);
      const bool generated = std::any_of(gens.begin(), gens.end(), [&](Simplex g) { return g.is_subset_of(s); });
      CHECK(generated == ideal_contains(a, s));
    }
  }
}

TEST_CASE("Hilbert functions") {
  CHECK(hilbert_function(cx({{1}}), 4).coefficients == big({1, 1, 1, 1, 1}));
  CHECK(hilbert_function(cx({{1, 2}}), 3).coefficients == big({1, 2, 3, 4}));
  const HilbertData v = hilbert_function(Complex::void_complex(), 3);
  CHECK(v.coefficients == big({0, 0, 0, 0}));
  CHECK_FALSE(v.krull_dimension.has_value());
  const HilbertData s1 = hilbert_function(corpus("s1_3"), 5);
  CHECK(s1.krull_dimension == 2);
  CHECK(s1.numerator == big({1, 1, 1}));

  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    const Complex c = random_complex(rng, 5, 4, 4);
    const HilbertData h = hilbert_function(c, 7);
    for (int m = 0; m <= 7; ++m)
      CHECK(h.coefficients[std::size_t(m)] == oracle::hilbert_count(faces(c), c.vertices(), m));
    // Numerator over (1-t)^d reproduces the series.
    std::vector<BigInt> series(8, 0);
    for (std::size_t k = 0; k < h.numerator.size(); ++k)
      for (int m = int(k); m <= 7; ++m) {
        BigInt binom = 1;  // C(m - k + d - 1, d - 1)
        const int top = m - int(k) + h.denominator_power - 1;
        for (int j = 1; j <= h.denominator_power - 1; ++j) binom = binom * (top - h.denominator_power + 1 + j) / j;
        series[std::size_t(m)] += h.numerator[k] * binom;
      }
    CHECK(series == h.coefficients);
  }
}

TEST_CASE("Cohen-Macaulay and Buchsbaum") {
  CHECK(is_cohen_macaulay(cx({{1}, {2}}), Q));
  CHECK_FALSE(is_cohen_macaulay(cx({{1, 2}, {3}}), Q));
  CHECK(is_cohen_macaulay(corpus("rp2_6"), Q));
  CHECK_FALSE(is_cohen_macaulay(corpus("rp2_6"), Z2));
  CHECK_THROWS_AS(is_cohen_macaulay(Complex::void_complex(), Q), TopologyError);

  CHECK(is_buchsbaum(corpus("rp2_6"), Q));
  const Complex two = cx({{1, 2, 3}, {4, 5, 6}});
  CHECK(is_buchsbaum(two, Q));
  CHECK_FALSE(is_cohen_macaulay(two, Q));
  CHECK_FALSE(is_buchsbaum(cx({{1, 2}, {3}}), Q));

  std::mt19937_64 rng(14);
  for (int i = 0; i < 40; ++i) {
    const Complex c = random_complex(rng, 6, 3, 5);
    if (is_cohen_macaulay(c, Q)) CHECK(is_buchsbaum(c, Q));
  }
}

TEST_CASE("Gorenstein") {
  CHECK(is_gorenstein(corpus("s1_3"), Q));
  CHECK(is_gorenstein(cx({{1, 2}}), Q));
  CHECK_FALSE(is_gorenstein(corpus("rp2_6"), Z2));
  CHECK_FALSE(is_gorenstein(corpus("rp2_6"), Q));
  CHECK(is_gorenstein(Complex::empty_simplex(), Q));
  CHECK(is_gorenstein(cx({{1}}), Q));
  CHECK(is_gorenstein(cx({{1}, {2}}), Q));
  CHECK_THROWS_AS(is_gorenstein(Complex::void_complex(), Q), TopologyError);
  // Gorenstein and homology sphere agree when the core is the whole complex.
  for (const auto& name : corpus_names()) {
    const Complex c = corpus(name);
    if (c.is_void() || c.num_vertices() > 8 || !cone_points(c).is_empty()) continue;
    INFO(name);
    CHECK(is_gorenstein(c, Q) == is_homology_sphere(c, Q));
  }
  // Join law over Q and Z3.
  const std::vector<Complex> pieces{corpus("s0"), corpus("s1_3"), corpus("ball1"), corpus("theta"), cx({{1, 2}, {3}})};
  for (const auto& ring : {Q, Z3})
    for (const Complex& a : pieces)
      for (const Complex& b : pieces) CHECK(is_gorenstein(join(a, b), ring) == (is_gorenstein(a, ring) && is_gorenstein(b, ring)));
}

TEST_CASE("k-Cohen-Macaulay") {
  CHECK(is_k_cohen_macaulay(corpus("s1_3"), 2, Q));
  CHECK_FALSE(is_k_cohen_macaulay(cx({{1, 2}}), 2, Q));
  CHECK(is_k_cohen_macaulay(corpus("rp2_6"), 1, Q));
  CHECK_THROWS_AS(is_k_cohen_macaulay(cx({{1, 2}}), 3, Q), TopologyError);
  CHECK(is_two_cohen_macaulay(corpus("s1_3"), Q));
  CHECK_FALSE(is_two_cohen_macaulay(cx({{1, 2}}), Q));

  std::mt19937_64 rng(40);
  for (int i = 0; i < 40; ++i) {
    const Complex c = random_complex(rng, 6, 3, 6);
    if (c.num_vertices() < 3) continue;
    for (const auto& ring : {Q, Z2}) {
      CHECK(is_k_cohen_macaulay(c, 1, ring) == is_cohen_macaulay(c, ring));
      CHECK(is_k_cohen_macaulay(c, 2, ring) == k_cm_at_most(c, 2, ring));
      CHECK(is_two_cohen_macaulay(c, ring) == is_k_cohen_macaulay(c, 2, ring));
    }
  }
}

TEST_CASE("skeleton law for Cohen-Macaulayness") {
  for (const auto& name : corpus_names()) {
    const Complex c = corpus(name);
    if (c.is_void() || c.dim().value() < 1 || c.num_vertices() > 8) continue;
    const int n = c.dim().value();
    const Complex prime = skeleton(c, n - 1);
    bool costars_vanish = true;
    for (Simplex d : c.faces())
      if (!homology_pair_in_degree(c, costar(c, d), Q, n - 1).is_zero()) costars_vanish = false;
    const bool prime_2cm = prime.num_vertices() > 1 && is_k_cohen_macaulay(prime, 2, Q);
    INFO(name);
    CHECK(is_cohen_macaulay(c, Q) == (prime_2cm && costars_vanish));
  }
}

TEST_CASE("Hilbert functions of joins and products") {
  constexpr int N = 9;
  std::mt19937_64 rng(77);
  for (int i = 0; i < 15; ++i) {
    const Complex a = random_complex(rng, 4, 3, 3), b = random_complex(rng, 4, 3, 3);
    const auto ha = hilbert_function(a, N).coefficients, hb = hilbert_function(b, N).coefficients;
    const auto hj = hilbert_function(join(a, b), N).coefficients;
    const auto hp = hilbert_function(product_ordered(a, b), N).coefficients;
    for (int m = 0; m <= N; ++m) {
      BigInt conv = 0;
      for (int k = 0; k <= m; ++k) conv += ha[std::size_t(k)] * hb[std::size_t(m - k)];
      CHECK(hj[std::size_t(m)] == conv);
      CHECK(hp[std::size_t(m)] == ha[std::size_t(m)] * hb[std::size_t(m)]);
    }
  }
}
