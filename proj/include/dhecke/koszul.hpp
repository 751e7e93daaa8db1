#pragma once

#include <string>
#include <vector>

#include "dhecke/linalg.hpp"
#include "dhecke/modular.hpp"

namespace dhecke {

/// Complex of free modules over B[x_0, ..., x_{R-1}] whose differentials are
/// linear forms in the variables. d[k][j] is the coefficient matrix of x_j in
/// d_k : P_k -> P_{k-1} (so d[0] is empty).
struct LinearComplex {
  CoeffRing base;
  int vars = 0;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<ModMatrix>> d;
  /// Basis labels per degree (for Koszul complexes, the wedge index sets).
  std::vector<std::vector<std::vector<int>>> labels;

  int length() const { return static_cast<int>(ranks.size()) - 1; }
};

/// Koszul complex B[x] (x) wedge^* span(e_i : i in on), with
/// d(e_J) = sum_k (-1)^k x_{J_k} e_{J - J_k}.
LinearComplex koszul_complex(const CoeffRing& base, int vars, const std::vector<int>& on);
/// d o d = 0 as polynomial matrices.
bool is_complex(const LinearComplex& c);

/// H^k(Hom(P, B)) for k <= max_degree, with x_j acting by 0 on B.
std::vector<ModuleStructure> hom_cohomology(const LinearComplex& p, int max_degree);

/// Constant-coefficient chain map F_k : P_{q+k} -> Q_k, k <= steps, lifting the
/// cocycle phi on P_q (Q must resolve B). Solved degree by degree.
std::vector<ModMatrix> lift_cocycle(const LinearComplex& p, const LinearComplex& q, const Vec& phi, int degree,
                                    int steps);

/// Yoneda composite of a in Hom(Q_a, B) with the lift of m in Hom(P_m, B).
Vec yoneda(const LinearComplex& p, const LinearComplex& q, const Vec& a, int a_degree, const Vec& m, int m_degree);

/// Ext_S^*(B, B) for S = B[x_0..x_{R-1}], on the Koszul resolution.
struct ExtAlgebra {
  LinearComplex resolution;
  std::vector<std::size_t> ranks;

  /// Cocycle of e_J^dual.
  Vec basis_element(const std::vector<int>& j) const;
  Vec multiply(const Vec& a, int p, const Vec& b, int q) const;
};

ExtAlgebra ext_self_algebra(const CoeffRing& base, int vars, int max_degree);

/// Ext_S^*(S/(x_u : u in U), B) as a module over Ext_S^*(B, B).
struct ExtModule {
  ExtAlgebra algebra;
  LinearComplex complex;
  std::vector<int> u;
  std::vector<std::size_t> ranks;

  Vec basis_element(const std::vector<int>& j) const;
  /// a . m for a in Ext^p(B, B), m in Ext^q(S/U, B).
  Vec act(const Vec& a, int p, const Vec& m, int q) const;
};

/// U is given by spanning vectors in B^R, each a unit multiple of a
/// coordinate vector; anything else throws InputError.
ExtModule ext_quotient_module(const CoeffRing& base, int vars, const std::vector<Vec>& u_span, int max_degree);
ExtModule ext_quotient_module(const CoeffRing& base, int vars, const std::vector<int>& u, int max_degree);

struct FreenessReport {
  std::vector<std::size_t> ranks;
  int generation_degree = 0;
  bool free = true;
  bool surjective = true;
  std::vector<std::string> witness_failures;

  bool pass() const { return free && surjective && witness_failures.empty(); }
};

/// Checks that Ext^*(S/U, B) is free of rank one over wedge(U^dual), generated
/// by its lowest degree, and that H^min (x) Ext^j(B, B) -> H^{min+j} is onto.
FreenessReport freeness_generation_check(const CoeffRing& base, int vars, const std::vector<int>& u, int max_degree);

/// S_n = Z/p^n[x_1..x_R]/((1 + x_i)^{p^N} - 1), the group ring of (Z/p^N)^R.
struct GroupRingSn {
  Int p;
  int n, big_n, rank;

  GroupRingSn(Int p, int n, int big_n, int rank);
};

struct GroupRingExtReport {
  /// Ext^i_{S_n}(Z/p^n, Z/p^n), i <= max_degree.
  std::vector<ModuleStructure> ext;
  /// Ext^i over the power-series model (Koszul resolution).
  std::vector<std::size_t> koszul_ranks;
  /// I_n / I_n^2 for the augmentation ideal I_n.
  ModuleStructure cotangent;
  /// Change of rings Ext^1_{S_n} -> Ext^1_{B[[x]]}.
  ModMatrix change_of_rings;
  bool surjective = false;
  bool ranks_match = false;
  bool cotangent_match = false;

  bool pass() const { return surjective && ranks_match && cotangent_match; }
};

GroupRingExtReport group_ring_ext(const GroupRingSn& s, int max_degree);

}  // namespace dhecke
