#include "augtopo/coefficient_ring.hpp"

#include "augtopo/simplex.hpp"

namespace augtopo {

CoefficientRing CoefficientRing::prime_field(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31)) throw TopologyError("prime field characteristic out of range");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw TopologyError(std::to_string(p) + " is not prime");
  return CoefficientRing(Kind::PrimeField, p);
}

CoefficientRing CoefficientRing::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  std::string digits;
  if (text.rfind("Zp:", 0) == 0)
    digits = text.substr(3);
  else if (text.size() > 1 && text[0] == 'Z')
    digits = text.substr(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
    throw TopologyError("unknown ring '" + text + "' (expected Z, Q or Zp:<p>)");
  return prime_field(std::stoll(digits));
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      break;
  }
  return "Z" + std::to_string(p_);
}

}  // namespace augtopo
