#pragma once

#include <map>
#include <string>
#include <vector>

#include "dhecke/cohomology.hpp"
#include "dhecke/linalg.hpp"
#include "dhecke/root_datum.hpp"
#include "dhecke/toral_satake.hpp"

namespace dhecke {

/// (lambda, w) in X_* x| W.
struct AffineWeylElement {
  Coweight translation;
  int w = 0;

  bool operator==(const AffineWeylElement& o) const { return w == o.w && translation == o.translation; }
  bool operator<(const AffineWeylElement& o) const {
    return translation != o.translation ? translation < o.translation : w < o.w;
  }
};

/// (l1, w1)(l2, w2) = (l1 + w1 l2, w1 w2).
AffineWeylElement affine_multiply(const RootDatum& rd, const AffineWeylElement& a, const AffineWeylElement& b);

/// Element of S[W~], the Iwahori-Hecke algebra at q = 1.
class IwahoriElement {
 public:
  IwahoriElement(RootDatumPtr rd, CoeffRing s);

  static IwahoriElement basis(RootDatumPtr rd, const CoeffRing& s, const AffineWeylElement& sigma, Int c = 1);
  static IwahoriElement translation(RootDatumPtr rd, const CoeffRing& s, const Coweight& lambda);
  static IwahoriElement weyl(RootDatumPtr rd, const CoeffRing& s, int w);
  static IwahoriElement one(RootDatumPtr rd, const CoeffRing& s);

  const RootDatum& root_datum() const { return *rd_; }
  const RootDatumPtr& root_datum_ptr() const { return rd_; }
  const CoeffRing& coeff() const { return s_; }
  const std::map<AffineWeylElement, Int>& terms() const { return terms_; }
  Int coefficient(const AffineWeylElement& sigma) const;

  void add(const AffineWeylElement& sigma, Int c);
  IwahoriElement operator+(const IwahoriElement& o) const;
  IwahoriElement operator-(const IwahoriElement& o) const;
  IwahoriElement scaled(Int c) const;
  bool operator==(const IwahoriElement& o) const { return s_ == o.s_ && terms_ == o.terms_; }
  bool operator!=(const IwahoriElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  RootDatumPtr rd_;
  CoeffRing s_;
  std::map<AffineWeylElement, Int> terms_;
};

IwahoriElement iwahori_multiply(const IwahoriElement& a, const IwahoriElement& b);

/// (1/|W|) sum_w w.
IwahoriElement e_K(RootDatumPtr rd, const CoeffRing& s);
/// z in S[X_*]^W viewed in the center of S[W~].
IwahoriElement central_embed(RootDatumPtr rd, const CoeffRing& s, const LatticeAlgebraElement& z);

/// A character X_* -> k^x given by its values on the basis of X_*.
struct Character {
  CoeffRing k;
  std::vector<Int> values;

  Int operator()(const Coweight& lambda) const;
  bool operator==(const Character& o) const { return k == o.k && values == o.values; }
};

/// chi_t from the values of t on the basis of X^*(T^vee) = X_*.
Character chi_t(const CoeffRing& k, std::vector<Int> values);
/// (w chi)(lambda) = chi(w^{-1} lambda).
Character weyl_twist(const RootDatum& rd, int w, const Character& chi);
Int discriminant_eval(const LatticeAlgebraElement& f, const Character& chi);
/// No two of the characters w chi coincide.
bool has_free_orbit(const RootDatum& rd, const Character& chi);
/// chi(alpha^*) != 1 for every root.
bool is_strongly_regular(const RootDatum& rd, const Character& chi);

/// The |W|-dimensional representation with basis v_w:
/// lambda . v_w = chi(w^{-1} lambda) v_w and w' . v_w = v_{w' w}.
class InducedRep {
 public:
  InducedRep(RootDatumPtr rd, Character chi);

  const RootDatum& root_datum() const { return *rd_; }
  const Character& character() const { return chi_; }
  std::size_t dim() const { return rd_->weyl_order(); }

  ModMatrix translation(const Coweight& lambda) const;
  ModMatrix weyl(int w) const;
  ModMatrix act(const AffineWeylElement& sigma) const;
  ModMatrix act(const IwahoriElement& a) const;

 private:
  RootDatumPtr rd_;
  Character chi_;
};

InducedRep induced_rep(RootDatumPtr rd, const Character& chi);

struct MoritaReport {
  bool applicable = false;
  std::string reason;
  std::size_t end_rank = 0, end_expected = 0;
  /// Images of e_K S[W~] in Hom(V, V^K), of S[W~] e_K in Hom(V^K, V), and of
  /// e_K S[W~] e_K in End(V^K).
  std::size_t ik_rank = 0, ki_rank = 0, kk_rank = 0;
  std::size_t ik_expected = 0, ki_expected = 0, kk_expected = 1;

  bool pass() const {
    return applicable && end_rank == end_expected && ik_rank == ik_expected && ki_rank == ki_expected &&
           kk_rank == kk_expected;
  }
};

/// Ranks of the images of S[W~] (spanned by translations in a box times W)
/// in the endomorphisms of V_chi and its e_K-compressions.
MoritaReport morita_check(RootDatumPtr rd, const Character& chi);

/// Element of k[X_*] with Theta = 1 to order `precision` at chi and
/// Theta = 0 to that order at every other w chi. Precision 1 is Lagrange
/// interpolation; higher precision matches Taylor jets (Hermite).
LatticeAlgebraElement theta_projector(const RootDatum& rd, const Character& chi, int precision = 1);

/// Taylor coefficients of a group-algebra element at chi: the coefficient
/// of eps^j in sum_lambda c_lambda prod_i (chi_i + eps_i)^{lambda_i}, for
/// multi-indices |j| < precision (listed in the order of jet_indices).
std::vector<Int> jet(const LatticeAlgebraElement& f, const Character& chi, int precision);
std::vector<std::vector<int>> jet_indices(int rank, int precision);

/// Finite-support map W~ -> H*(T; S), stored as values at (sigma, 1).
class DerivedIwahoriElement {
 public:
  explicit DerivedIwahoriElement(ToralContext ctx);

  static DerivedIwahoriElement bracket(const ToralContext& ctx, const CohClass& h);
  static DerivedIwahoriElement from_iwahori(const ToralContext& ctx, const IwahoriElement& a);

  const ToralContext& context() const { return ctx_; }
  const std::map<AffineWeylElement, CohClass>& terms() const { return terms_; }
  CohClass value(const AffineWeylElement& sigma) const;

  void add(const AffineWeylElement& sigma, const CohClass& v);
  DerivedIwahoriElement operator+(const DerivedIwahoriElement& o) const;
  DerivedIwahoriElement scaled(Int c) const;
  bool operator==(const DerivedIwahoriElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const DerivedIwahoriElement& o) const { return !(*this == o); }

 private:
  ToralContext ctx_;
  std::map<AffineWeylElement, CohClass> terms_;
};

/// (a.b)(sigma) = sum_{s1 s2 = sigma} a(s1) cup w(s1).b(s2).
DerivedIwahoriElement derived_iwahori_multiply(const DerivedIwahoriElement& a, const DerivedIwahoriElement& b);

/// |W| e_K Theta <h> e_K computed in the derived model and rewritten as the
/// spherical element F with |W| e_K Theta <h> e_K = F e_K. Throws if the
/// product is not of that form.
ToralElement spherical_compress(const ToralContext& ctx, const LatticeAlgebraElement& theta, const CohClass& h);

/// Taylor jets at chi of a toral element, one class per jet index.
std::vector<CohClass> toral_jet(const ToralElement& f, const Character& chi, int precision);

}  // namespace dhecke
