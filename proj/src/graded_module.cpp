#include "augtopo/graded_module.hpp"

#include <algorithm>
#include <sstream>

namespace augtopo {

namespace {

std::vector<std::pair<BigInt, unsigned>> prime_powers(BigInt n) {
  std::vector<std::pair<BigInt, unsigned>> out;
  for (BigInt d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1U);
  return out;
}

}  // namespace

std::vector<BigInt> normalize_torsion(const std::vector<BigInt>& orders) {
  // Group prime-power parts by prime; the k-th largest powers multiply into the k-th factor from the top.
  std::map<BigInt, std::vector<BigInt>> by_prime;
  for (const BigInt& n : orders) {
    if (n <= 0) throw std::invalid_argument("torsion orders must be positive");
    for (const auto& [p, e] : prime_powers(n)) by_prime[p].push_back(boost::multiprecision::pow(p, e));
  }
  std::size_t count = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    count = std::max(count, powers.size());
  }
  std::vector<BigInt> factors(count, BigInt(1));
  for (const auto& [p, powers] : by_prime)
    for (std::size_t k = 0; k < powers.size(); ++k) factors[count - 1 - k] *= powers[k];
  return factors;
}

ModulePiece direct_sum(const ModulePiece& a, const ModulePiece& b) {
  std::vector<BigInt> t = a.torsion;
  t.insert(t.end(), b.torsion.begin(), b.torsion.end());
  return {a.rank + b.rank, normalize_torsion(t)};
}

ModulePiece tensor(const ModulePiece& a, const ModulePiece& b) {
  std::vector<BigInt> t;
  for (std::size_t k = 0; k < a.rank; ++k) t.insert(t.end(), b.torsion.begin(), b.torsion.end());
  for (std::size_t k = 0; k < b.rank; ++k) t.insert(t.end(), a.torsion.begin(), a.torsion.end());
  for (const BigInt& d : a.torsion)
    for (const BigInt& e : b.torsion) t.push_back(gcd(d, e));
  return {a.rank * b.rank, normalize_torsion(t)};
}

ModulePiece tor1(const ModulePiece& a, const ModulePiece& b) {
  std::vector<BigInt> t;
  for (const BigInt& d : a.torsion)
    for (const BigInt& e : b.torsion) t.push_back(gcd(d, e));
  return {0, normalize_torsion(t)};
}

std::string to_string(const ModulePiece& m, const std::string& ring_symbol) {
  if (m.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (m.rank > 0) {
    out << ring_symbol;
    if (m.rank > 1) out << '^' << m.rank;
    first = false;
  }
  for (const BigInt& d : m.torsion) {
    out << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return out.str();
}

ModulePiece GradedModule::at(int degree) const {
  auto it = pieces_.find(degree);
  return it == pieces_.end() ? ModulePiece{} : it->second;
}

void GradedModule::set(int degree, ModulePiece piece) {
  if (piece.is_zero())
    pieces_.erase(degree);
  else
    pieces_[degree] = std::move(piece);
}

void GradedModule::add(int degree, const ModulePiece& piece) { set(degree, direct_sum(at(degree), piece)); }

int GradedModule::top_degree() const { return pieces_.empty() ? -2 : pieces_.rbegin()->first; }

nlohmann::json to_json(const GradedModule& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [d, piece] : m.pieces()) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const BigInt& t : piece.torsion) {
      if (t <= BigInt(std::numeric_limits<std::int64_t>::max()))
        torsion.push_back(static_cast<std::int64_t>(t));
      else
        torsion.push_back(t.str());
    }
    out.push_back({{"degree", d}, {"rank", piece.rank}, {"torsion", std::move(torsion)}});
  }
  return out;
}

std::string to_string(const GradedModule& m) {
  if (m.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, piece] : m.pieces()) {
    out << (first ? "" : ", ") << "H" << d << " = " << to_string(piece, m.ring().name());
    first = false;
  }
  return out.str();
}

namespace {

std::size_t count_divisible(const std::vector<BigInt>& torsion, std::int64_t p) {
  return static_cast<std::size_t>(
      std::count_if(torsion.begin(), torsion.end(), [p](const BigInt& t) { return t % p == 0; }));
}

}  // namespace

GradedModule change_coefficients(const GradedModule& integral, const CoefficientRing& field) {
  if (integral.ring() != CoefficientRing::integers()) throw std::invalid_argument("expected integral homology");
  GradedModule out(field);
  if (!field.is_field()) return integral;
  for (const auto& [d, piece] : integral.pieces()) {
    std::size_t dim = piece.rank;
    if (field.kind() == CoefficientRing::Kind::PrimeField) {
      const auto p = field.characteristic();
      dim += count_divisible(piece.torsion, p);                    // Ĥ_d ⊗ ℤₚ
      out.add(d + 1, {count_divisible(piece.torsion, p), {}});      // Tor(Ĥ_d, ℤₚ) lands in d+1
    }
    out.add(d, {dim, {}});
  }
  return out;
}

GradedModule cohomology_from_homology(const GradedModule& integral, const CoefficientRing& ring) {
  if (integral.ring() != CoefficientRing::integers()) throw std::invalid_argument("expected integral homology");
  GradedModule out(ring);
  for (const auto& [d, piece] : integral.pieces()) {
    switch (ring.kind()) {
      case CoefficientRing::Kind::Integers:
        out.add(d, {piece.rank, {}});
        out.add(d + 1, {0, piece.torsion});  // Ext(Ĥ_d, ℤ) ≅ torsion of Ĥ_d
        break;
      case CoefficientRing::Kind::Rationals:
        out.add(d, {piece.rank, {}});
        break;
      case CoefficientRing::Kind::PrimeField: {
        const std::size_t k = count_divisible(piece.torsion, ring.characteristic());
        out.add(d, {piece.rank + k, {}});
        out.add(d + 1, {k, {}});
        break;
      }
    }
  }
  return out;
}

}  // namespace augtopo
