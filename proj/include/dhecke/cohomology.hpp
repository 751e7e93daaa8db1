#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dhecke/abelian_group.hpp"
#include "dhecke/modular.hpp"
#include "dhecke/root_datum.hpp"

namespace dhecke {

/// x_A * y^e: the exterior part is a bitmask over the cyclic factors.
struct Monomial {
  std::uint32_t x = 0;
  std::vector<int> y;

  int degree() const;
  bool operator==(const Monomial& o) const { return x == o.x && y == o.y; }
  /// Degree first, then exterior mask, then exponents.
  bool operator<(const Monomial& o) const;
  std::string to_string() const;
};

/// Element of H*(T; Z/ell^r) in the basis of monomials x_A y^e. Supports
/// ell odd and r <= n_i for every factor Z/ell^{n_i} of T, where the ring is
/// the free algebra Lambda(x_1..x_d) (x) Z/ell^r[y_1..y_d].
///
/// y_i is the image of the i-th coordinate character T -> Z/ell^{n_i} under
/// the connecting map of 0 -> Z/ell^r -> Z/ell^{n_i + r} -> Z/ell^{n_i} -> 0.
class CohClass {
 public:
  CohClass(AbelianLGroup group, CoeffRing coeff);

  static CohClass one(const AbelianLGroup& g, const CoeffRing& s);
  static CohClass x(const AbelianLGroup& g, const CoeffRing& s, int i);
  static CohClass y(const AbelianLGroup& g, const CoeffRing& s, int i);
  static CohClass monomial(const AbelianLGroup& g, const CoeffRing& s, const Monomial& m, Int c = 1);

  const AbelianLGroup& group() const { return group_; }
  const CoeffRing& coeff() const { return coeff_; }
  const std::map<Monomial, Int>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of a homogeneous class (0 for the zero class); throws otherwise.
  int degree() const;
  /// Coefficient of a monomial.
  Int coefficient(const Monomial& m) const;
  /// Degree-k part.
  CohClass component(int k) const;

  void add_term(const Monomial& m, Int c);

  CohClass operator+(const CohClass& o) const;
  CohClass operator-(const CohClass& o) const;
  CohClass operator-() const;
  CohClass scaled(Int c) const;
  bool operator==(const CohClass& o) const;
  bool operator!=(const CohClass& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  AbelianLGroup group_;
  CoeffRing coeff_;
  std::map<Monomial, Int> terms_;
};

/// Throws RegimeError unless ell is odd and r <= n_i for all i.
void check_cohomology_regime(const AbelianLGroup& g, const CoeffRing& s);

/// Handle on the graded ring H*(T; S).
class CohRing {
 public:
  CohRing(AbelianLGroup group, CoeffRing coeff);

  const AbelianLGroup& group() const { return group_; }
  const CoeffRing& coeff() const { return coeff_; }
  int generators() const { return group_.rank(); }

  CohClass one() const { return CohClass::one(group_, coeff_); }
  CohClass x(int i) const { return CohClass::x(group_, coeff_, i); }
  CohClass y(int i) const { return CohClass::y(group_, coeff_, i); }

  /// Monomials of degree k in canonical order.
  std::vector<Monomial> basis(int k) const;
  std::size_t rank_in_degree(int k) const { return basis(k).size(); }

 private:
  AbelianLGroup group_;
  CoeffRing coeff_;
};

CohRing coh_ring(const AbelianLGroup& t, const CoeffRing& s);

/// Monomials of degree k on d generators.
std::vector<Monomial> monomial_basis(int d, int k);

/// Sign and mask of x_A ^ x_B (sign 0 when A and B meet).
int exterior_sign(std::uint32_t a, std::uint32_t b);

CohClass cup(const CohClass& a, const CohClass& b);
CohClass power(const CohClass& a, int e);

/// f^*: H*(target) -> H*(source) for f : T' -> T.
CohClass restrict(const GroupHom& f, const CohClass& a);

/// True when f is injective with each source generator mapped to a unit
/// multiple of ell^k times a distinct target generator.
bool is_factor_aligned(const GroupHom& f);

/// Transfer H*(T') -> H*(T) along an injective f : T' -> T. Factor-aligned
/// inclusions use the closed form; other subgroups go through the chain-level
/// transfer of the periodic resolution.
CohClass corestrict(const GroupHom& f, const CohClass& a);

/// Reduction of coefficients Z/ell^r -> Z/ell^m, m <= r.
CohClass coeff_change(const CohClass& a, int m);

/// Automorphism of T = (Z/ell^n)^rank given by the integer matrix of w on X_*.
GroupHom weyl_hom(const RootDatum& rd, int w, const AbelianLGroup& t);

/// Left action: w.a = (w^{-1})^* a, so (w1 w2).a = w1.(w2.a).
CohClass weyl_act(const RootDatum& rd, int w, const CohClass& a);
/// Pullback along w itself: (w1 w2)^* = w2^* o w1^*.
CohClass weyl_pullback(const RootDatum& rd, int w, const CohClass& a);

}  // namespace dhecke
