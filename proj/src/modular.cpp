#include "dhecke/modular.hpp"

#include <limits>

namespace dhecke {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<Int, int>> prime_power(Int n) {
  if (n < 2) return std::nullopt;
  Int p = n;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  int f = 0;
  Int m = n;
  while (m % p == 0) {
    m /= p;
    ++f;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, f);
}

Int ipow(Int base, int exp) {
  Int result = 1;
  for (int i = 0; i < exp; ++i) {
    if (result > std::numeric_limits<Int>::max() / (base < 0 ? -base : base))
      throw Error("integer overflow in ipow");
    result *= base;
  }
  return result;
}

int valuation(Int n, Int p) {
  if (n == 0) throw Error("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Int pow_mod(Int base, Int exp, Int m) {
  if (m == 1) return 0;
  Int result = 1;
  base = floor_mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::optional<Int> inverse_mod(Int a, Int m) {
  Int old_r = floor_mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  return floor_mod(old_s, m);
}

CoeffRing::CoeffRing(Int ell, int r) : ell_(ell), r_(r) {
  if (!is_prime(ell)) throw Error("coefficient characteristic " + std::to_string(ell) + " is not prime");
  if (r < 1) throw Error("coefficient exponent must be >= 1");
  Int m = 1;
  for (int i = 0; i < r; ++i) {
    if (m > (Int{1} << 62) / ell) throw Error("coefficient modulus exceeds 62 bits");
    m *= ell;
  }
  modulus_ = m;
}

Int CoeffRing::inv(Int a) const {
  auto v = inverse_mod(a, modulus_);
  if (!v) throw Error("non-unit: " + std::to_string(reduce(a)) + " in " + to_string());
  return *v;
}

int CoeffRing::val(Int a) const {
  a = reduce(a);
  if (a == 0) return r_;
  return valuation(a, ell_);
}

CoeffRing CoeffRing::reduced(int m) const {
  if (m > r_) throw Error("cannot reduce Z/" + std::to_string(ell_) + "^" + std::to_string(r_) +
                          " to a larger exponent");
  return CoeffRing(ell_, m);
}

std::string CoeffRing::to_string() const {
  return "Z/" + std::to_string(ell_) + "^" + std::to_string(r_);
}

CoeffRing make_coeff(Int ell, int r) { return CoeffRing(ell, r); }

}  // namespace dhecke
