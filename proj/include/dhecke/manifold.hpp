#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dhecke/abelian_group.hpp"
#include "dhecke/linalg.hpp"

namespace dhecke {

/// Element of the exterior algebra on Hom(Z^delta, S), keyed by the bitmask
/// of the wedge factors e_i^* (in increasing order).
class ManifoldClass {
 public:
  ManifoldClass(int delta, CoeffRing s);

  static ManifoldClass one(int delta, const CoeffRing& s);
  /// The degree-1 class with the given values on the basis of Z^delta.
  static ManifoldClass linear(const CoeffRing& s, const std::vector<Int>& values);
  static ManifoldClass basis(int delta, const CoeffRing& s, std::uint32_t mask, Int c = 1);

  int delta() const { return delta_; }
  const CoeffRing& coeff() const { return s_; }
  const std::map<std::uint32_t, Int>& terms() const { return terms_; }
  Int coefficient(std::uint32_t mask) const;
  bool is_zero() const { return terms_.empty(); }
  /// Throws on mixed degrees; 0 for the zero class.
  int degree() const;

  void add(std::uint32_t mask, Int c);
  ManifoldClass operator+(const ManifoldClass& o) const;
  ManifoldClass operator-(const ManifoldClass& o) const;
  ManifoldClass scaled(Int c) const;
  bool operator==(const ManifoldClass& o) const { return delta_ == o.delta_ && s_ == o.s_ && terms_ == o.terms_; }
  bool operator!=(const ManifoldClass& o) const { return !(*this == o); }

  /// Image under Z/ell^r -> Z/ell^m.
  ManifoldClass reduced(int m) const;
  std::string to_string() const;

 private:
  int delta_;
  CoeffRing s_;
  std::map<std::uint32_t, Int> terms_;
};

ManifoldClass wedge(const ManifoldClass& a, const ManifoldClass& b);

struct Place {
  std::string label;
  AbelianLGroup target;
  /// rank(target) x delta; column j is the image of the j-th basis vector.
  std::vector<std::vector<Int>> matrix;
};

class TorusManifold {
 public:
  TorusManifold(int delta, std::vector<Place> places);

  int delta() const { return delta_; }
  const std::vector<Place>& places() const { return places_; }
  const Place& place(const std::string& label) const;

 private:
  int delta_;
  std::vector<Place> places_;
};

/// alpha o r_v, with alpha given by its values on the generators of T_v.
ManifoldClass congruence_class(const TorusManifold& m, const std::string& v, const std::vector<Int>& alpha,
                               const CoeffRing& s);
/// congruence_class(v, alpha) wedge omega.
ManifoldClass derived_act(const TorusManifold& m, const std::string& v, const std::vector<Int>& alpha,
                          const ManifoldClass& omega);

struct ExteriorChoice {
  std::string place;
  std::vector<Int> alpha;
};

struct ExteriorReport {
  /// Rank of the span of the k-fold wedges of the chosen classes.
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> expected;
  bool free = false;
  std::vector<std::string> witnesses;

  bool pass() const { return free; }
};

ExteriorReport exterior_generation_report(const TorusManifold& m, const CoeffRing& s,
                                          const std::vector<ExteriorChoice>& choices);

/// Basis of the exterior algebra ordered by degree, then mask.
std::vector<std::uint32_t> exterior_basis(int delta);
/// Matrix of a linear endomorphism in exterior_basis order.
ModMatrix endomorphism_matrix(int delta, const CoeffRing& s,
                              const std::function<ManifoldClass(const ManifoldClass&)>& f);

/// Checks that t[k] (over Z/p^{k+1}) reduces to t[k-1] and returns the top
/// level; throws with the first broken square otherwise.
ModMatrix limit_assemble(Int p, const std::vector<ModMatrix>& t);

}  // namespace dhecke
