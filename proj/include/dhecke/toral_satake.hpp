#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dhecke/cohomology.hpp"
#include "dhecke/linalg.hpp"
#include "dhecke/root_datum.hpp"

namespace dhecke {

/// Shared context of the toral algebra S[X_*] (x) H*(T; S).
struct ToralContext {
  std::shared_ptr<const RootDatum> rd;
  AbelianLGroup t;
  CoeffRing s;

  ToralContext(RootDatum rd, AbelianLGroup t, CoeffRing s);
  /// T = (Z/ell^v)^rank with ell^v the ell-part of q - 1.
  static ToralContext for_q(const RootDatum& rd, Int q, const CoeffRing& s);

  bool operator==(const ToralContext& o) const {
    return (rd == o.rd || rd->name() == o.rd->name()) && t == o.t && s == o.s;
  }
};

/// Finite-support map X_* -> H*(T; S). Keys are coweights in lexicographic
/// order; zero values are never stored.
class ToralElement {
 public:
  explicit ToralElement(ToralContext ctx);

  static ToralElement delta(const ToralContext& ctx, const Coweight& lambda, const CohClass& value);
  static ToralElement one(const ToralContext& ctx);

  const ToralContext& context() const { return ctx_; }
  const RootDatum& root_datum() const { return *ctx_.rd; }
  const std::map<Coweight, CohClass>& support() const { return support_; }
  CohClass value(const Coweight& lambda) const;
  bool is_zero() const { return support_.empty(); }

  void add(const Coweight& lambda, const CohClass& value);

  bool is_homogeneous() const;
  int degree() const;
  /// Largest |coordinate| in the support.
  Int support_radius() const;

  ToralElement operator+(const ToralElement& o) const;
  ToralElement operator-(const ToralElement& o) const;
  ToralElement scaled(Int c) const;
  bool operator==(const ToralElement& o) const;
  bool operator!=(const ToralElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  ToralContext ctx_;
  std::map<Coweight, CohClass> support_;
};

/// Limits on a product. Exceeding either raises an error; a negative value
/// means no limit.
struct ProductBounds {
  Int support = -1;
  int degree = -1;

  static ProductBounds unbounded() { return {}; }
};

ToralElement toral_convolve(const ToralElement& a, const ToralElement& b, const ProductBounds& bounds);

/// (w.a)(w lambda) = weyl_act(w, a(lambda)).
ToralElement toral_weyl_act(int w, const ToralElement& a);
bool is_spherical(const ToralElement& a);

/// The W-invariant element supported on W.lambda with value alpha at lambda.
ToralElement satake_basis(const ToralContext& ctx, const Coweight& lambda, const CohClass& alpha);

/// (1/|W|) sum_w w.a.
ToralElement symmetrize(const ToralElement& a);

struct InvariantTable {
  /// Dominant representatives of the orbits counted, in lexicographic order.
  std::vector<Coweight> shells;
  /// ranks[i][k]: rank of the invariants supported on the orbit of shells[i]
  /// in cohomological degree k.
  std::vector<std::vector<std::size_t>> ranks;
  /// Sum over shells, per degree.
  std::vector<std::size_t> totals;
};

/// Ranks of W-invariants over the orbits of dominant lambda with
/// |lambda|_inf <= n, degrees 0..d, by solving the invariance equations.
InvariantTable invariant_dims(const ToralContext& ctx, Int n, int d);

/// Matrix of a linear map on H^k(T; S) in the monomial basis (columns are
/// images of basis monomials).
ModMatrix weyl_matrix(const RootDatum& rd, int w, const AbelianLGroup& t, const CoeffRing& s, int k);

}  // namespace dhecke
