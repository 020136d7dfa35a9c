#include "augtopo/calculus.hpp"

namespace augtopo {

Complex prime_of(const Complex& c) {
  if (c.is_void() || c.dim().value() < 0) return Complex::void_complex();
  return skeleton(c, c.dim().value() - 1);
}

std::vector<IdentityFailure> check_calculus_identities(const Complex& a, const Complex& b) {
  std::vector<IdentityFailure> out;
  auto fail = [&](const char* name, const std::string& detail) { out.push_back({name, detail}); };
  if (a.is_void() || b.is_void()) return out;

  // Lk_{a∗b}(σ₁∪σ₂) = Lk_a σ₁ ∗ Lk_b σ₂
  const int offset = join_offset(a);
  const Complex ab = join(a, b);
  for (Simplex s1 : a.faces())
    for (Simplex s2 : b.faces()) {
      const Simplex s = s1 | Simplex::from_mask(s2.mask() << offset);
      if (!(link(ab, s) == join_disjoint(link(a, s1), shift_vertices(link(b, s2), offset)))) {
        fail("link-of-join", to_string(s1) + " " + to_string(s2));
        break;
      }
    }

  const Complex a_prime = prime_of(a);
  bool primes_agree = true;
  for (Simplex s : a.faces()) {
    const Complex lk = link(a, s);
    // Lk_{Lk σ} τ = Lk(σ∪τ) for τ disjoint from σ
    for (Simplex t : a.faces())
      if (!t.intersects(s) && !(link(lk, t) == link(a, s | t))) fail("link-of-link", to_string(s) + " " + to_string(t));
    // cost(δ₁∪δ₂) = cost δ₁ ∪ cost δ₂
    for (Simplex t : a.faces())
      if (!(costar(a, s | t) == union_of(costar(a, s), costar(a, t))))
        fail("costar-of-union", to_string(s) + " " + to_string(t));
    // Lk over ∪ and ∩ (b on the same vertex ids)
    if (!(link(union_of(a, b), s) == union_of(link(a, s), link(b, s)))) fail("link-of-union", to_string(s));
    if (!(link(intersection_of(a, b), s) == intersection_of(link(a, s), link(b, s))))
      fail("link-of-intersection", to_string(s));
    // closed star ∩ costar = σ̇ ∗ Lk σ
    const Complex st = star_closed(a, s);
    if (!(intersection_of(st, costar(a, s)) == join_disjoint(simplex_boundary(s), lk)))
      fail("star-costar", to_string(s));
    // closed star = σ̄ ∗ Lk σ
    if (!(st == join_disjoint(closure(s), lk))) fail("star-join", to_string(s));
    if (!s.is_empty() && !(prime_of(lk) == link(a_prime, s))) primes_agree = false;
  }
  // pure ⟺ (Lk δ)' = Lk_{a'} δ for all δ ≠ ∅ₒ
  if (is_pure(a) != primes_agree) fail("purity-criterion", is_pure(a) ? "pure but primes differ" : "impure but primes agree");
  return out;
}

}  // namespace augtopo
