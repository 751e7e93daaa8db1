#pragma once

#include <memory>
#include <vector>

#include "dhecke/abelian_group.hpp"
#include "dhecke/cohomology.hpp"
#include "dhecke/linalg.hpp"

namespace dhecke {

/// Tensor product of the 2-periodic resolutions
///   ... -> R -N-> R -(t-1)-> R -> Z/ell^r
/// of the cyclic factors, over R = (Z/ell^r)[G]. Free generators of P_k are
/// the multi-indices J with |J| = k. A chain in P_k is a vector indexed by
/// (generator, group element) as j * |G| + g.
class PeriodicResolution {
 public:
  PeriodicResolution(AbelianLGroup group, CoeffRing coeff, int max_degree);

  const AbelianLGroup& group() const { return group_; }
  const CoeffRing& coeff() const { return coeff_; }
  int max_degree() const { return max_degree_; }
  std::size_t order() const { return order_; }

  const std::vector<std::vector<int>>& generators(int k) const { return gens_.at(static_cast<std::size_t>(k)); }
  std::size_t rank(int k) const { return generators(k).size(); }
  std::size_t dim(int k) const { return rank(k) * order_; }
  std::size_t generator_index(int k, const std::vector<int>& j) const;

  /// d_k : P_k -> P_{k-1} for 1 <= k <= max_degree.
  const ModMatrix& boundary(int k) const { return boundary_.at(static_cast<std::size_t>(k)); }
  Vec boundary_of_generator(int k, std::size_t j) const;
  /// The chain g.v in P_k.
  Vec translate(int k, const Vec& v, std::size_t g) const;
  /// Group element index of a + b.
  std::size_t group_add(std::size_t a, std::size_t b) const { return add_[a * order_ + b]; }

  /// Some x in P_k with d_k x = b; throws when b is not a boundary.
  Vec lift(int k, const Vec& b) const;
  Int augment(const Vec& v) const;
  /// Value of a cochain (one value per generator of P_k) on a chain.
  Int evaluate(int k, const Vec& cochain, const Vec& chain) const;

 private:
  AbelianLGroup group_;
  CoeffRing coeff_;
  int max_degree_;
  std::size_t order_;
  std::vector<std::size_t> add_;
  std::vector<std::vector<std::vector<int>>> gens_;
  std::vector<ModMatrix> boundary_;
  std::vector<std::unique_ptr<LocalElimination>> elim_;
};

/// Equivariant chain map P_{k + shift} -> Q_k given on free generators:
/// images[k][j] is the image of generator j of P_{k + shift}.
struct ChainMap {
  int shift = 0;
  std::vector<std::vector<Vec>> images;
};

/// Cohomology computed from cochains on the periodic resolution. The
/// monomial basis is realized by Yoneda products of the generator cochains
/// x_i = e_{1_i}^*, y_i = e_{2_i}^*, taken left to right.
class ChainOracle {
 public:
  ChainOracle(AbelianLGroup group, CoeffRing coeff, int max_degree);

  const PeriodicResolution& resolution() const { return res_; }
  int max_degree() const { return res_.max_degree(); }

  /// Lifts a degree-q cocycle v to a chain map P_{q + k} -> P_k, k <= steps.
  ChainMap lift_cocycle(const Vec& v, int q, int steps) const;
  /// The Yoneda composite u o v~ of cocycles of degrees p and q.
  Vec yoneda(const Vec& u, int p, const Vec& v, int q) const;
  Vec yoneda(const Vec& u, int p, const ChainMap& v_lift) const;

  /// Cochain of the basis monomial m.
  const Vec& basis_cochain(const Monomial& m) const;
  /// Whether the Yoneda monomials form a basis of the cochains in degree k.
  bool basis_invertible(int k) const;

  Vec to_cochain(const CohClass& a, int k) const;
  CohClass from_cochain(const Vec& c, int k) const;

  CohClass cup(const CohClass& a, const CohClass& b) const;

 private:
  PeriodicResolution res_;
  std::vector<std::vector<Monomial>> basis_;
  std::vector<ModMatrix> phi_;
  std::vector<std::unique_ptr<LocalElimination>> phi_elim_;
  std::map<Monomial, Vec> cochains_;
};

/// Chain map P(src) -> P(tgt) over f, degrees 0..max.
ChainMap lift_hom(const PeriodicResolution& src, const PeriodicResolution& tgt, const GroupHom& f, int max_degree);

/// Cochain restriction along f, computed with lift_hom.
CohClass chain_restrict(const ChainOracle& src, const ChainOracle& tgt, const GroupHom& f, const CohClass& a);
/// Cochain transfer along an injective f : sub -> whole, through a
/// comparison map from P(whole) (as a complex over f(sub)) to P(sub).
CohClass chain_corestrict(const ChainOracle& sub, const ChainOracle& whole, const GroupHom& f, const CohClass& a);

/// Convenience forms building the oracles on the fly.
CohClass chain_restrict(const GroupHom& f, const CohClass& a);
CohClass chain_corestrict(const GroupHom& f, const CohClass& a);

}  // namespace dhecke
