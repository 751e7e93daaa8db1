#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhecke {

using Int = std::int64_t;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The standing hypotheses (q, ell, r, Weyl order) are violated.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (JSON descriptors, element files).
class InputError : public Error {
 public:
  using Error::Error;
};

bool is_prime(Int n);

/// Returns (p, f) with n = p^f, or nullopt when n is not a prime power.
std::optional<std::pair<Int, int>> prime_power(Int n);

Int ipow(Int base, int exp);

/// Exponent of p in n (n != 0).
int valuation(Int n, Int p);

/// Least non-negative residue.
inline Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Int mul_mod(Int a, Int b, Int m) {
  return static_cast<Int>(static_cast<__int128>(a) * b % m);
}

Int pow_mod(Int base, Int exp, Int m);

/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<Int> inverse_mod(Int a, Int m);

/// The coefficient ring Z/ell^r.
///
/// Elements are plain integers kept in [0, modulus). The modulus must fit
/// comfortably in 62 bits so products can go through __int128.
class CoeffRing {
 public:
  CoeffRing(Int ell, int r);

  Int ell() const { return ell_; }
  int r() const { return r_; }
  Int modulus() const { return modulus_; }

  Int reduce(Int a) const { return floor_mod(a, modulus_); }
  Int add(Int a, Int b) const { return reduce(a + b); }
  Int sub(Int a, Int b) const { return reduce(a - b); }
  Int neg(Int a) const { return reduce(-a); }
  Int mul(Int a, Int b) const { return mul_mod(reduce(a), reduce(b), modulus_); }
  Int pow(Int a, Int e) const { return pow_mod(reduce(a), e, modulus_); }

  bool is_unit(Int a) const { return reduce(a) % ell_ != 0; }
  /// Throws Error("non-unit") for zero divisors.
  Int inv(Int a) const;

  /// ell-adic valuation of a in this ring; r for zero.
  int val(Int a) const;

  /// The ring Z/ell^m for m <= r, the target of reduction.
  CoeffRing reduced(int m) const;

  bool operator==(const CoeffRing& o) const { return ell_ == o.ell_ && r_ == o.r_; }
  bool operator!=(const CoeffRing& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Int ell_;
  int r_;
  Int modulus_;
};

CoeffRing make_coeff(Int ell, int r);

}  // namespace dhecke
