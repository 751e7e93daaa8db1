#include "dhecke/regime.hpp"

namespace dhecke {

RegimeReport validate_regime(const RootDatum& rd, const CoeffRing& s, Int q) {
  auto pp = prime_power(q);
  if (!pp) return {false, "q = " + std::to_string(q) + " is not a prime power"};
  if (pp->first == s.ell()) return {false, "ell equals the residue characteristic of F_q"};
  Int w = static_cast<Int>(rd.weyl_order());
  if (w % s.ell() == 0) return {false, "ell divides |W| = " + std::to_string(w)};
  if ((q - 1) % s.modulus() != 0)
    return {false, std::to_string(s.modulus()) + " does not divide q - 1 = " + std::to_string(q - 1)};
  return {};
}

void require_regime(const RootDatum& rd, const CoeffRing& s, Int q) {
  RegimeReport rep = validate_regime(rd, s, q);
  if (!rep.pass) throw RegimeError(rep.reason);
}

}  // namespace dhecke
