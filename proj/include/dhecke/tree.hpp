#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dhecke/cohomology.hpp"
#include "dhecke/toral_satake.hpp"

namespace dhecke {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Vertex of the tree of PGL2(Q_q): the class of the lattice spanned by
/// (q^a, 0) and (b, 1), with b = num * q^e taken mod q^a. Canonical form:
/// either num = 0 and e = a (b = 0, the apartment point a), or e < a and
/// num in [1, q^{a-e}) prime to q.
struct TreeVertex {
  int a = 0;
  int e = 0;
  Int num = 0;

  bool on_apartment() const { return num == 0; }
  bool operator==(const TreeVertex& o) const { return a == o.a && e == o.e && num == o.num; }
  bool operator<(const TreeVertex& o) const {
    if (a != o.a) return a < o.a;
    if (e != o.e) return e < o.e;
    return num < o.num;
  }
  std::string to_string() const;

  static TreeVertex apartment(int n) { return {n, n, 0}; }
};

/// 2x2 matrix over Q, row-major.
struct Mat2Q {
  Rational m[2][2];

  Mat2Q operator*(const Mat2Q& o) const;
  Mat2Q inverse() const;
  static Mat2Q identity();
};

int q_valuation(const Rational& x, Int q);

/// The lattice matrix [[q^a, b], [0, 1]] of a vertex.
Mat2Q vertex_matrix(Int q, const TreeVertex& v);
/// Canonical vertex of the lattice spanned by the columns of m.
TreeVertex vertex_of_matrix(Int q, const Mat2Q& m);
TreeVertex act(Int q, const Mat2Q& g, const TreeVertex& v);
int tree_distance(Int q, const TreeVertex& x, const TreeVertex& y);

/// g with g x = base and g y = apartment point n = d(x, y) >= 0: translate x
/// to the base, then reduce y with row operations over Z_(q) (Smith form).
struct CanonicalPosition {
  Mat2Q g;
  int n = 0;
};
CanonicalPosition canonical_isometry(Int q, const TreeVertex& x, const TreeVertex& y);

/// The ball of radius depth around the base vertex.
class BruhatTitsTree {
 public:
  BruhatTitsTree(Int q, int depth, std::size_t max_vertices = 200000);

  Int q() const { return q_; }
  int depth() const { return depth_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<TreeVertex>& vertices() const { return vertices_; }
  const TreeVertex& vertex(std::size_t i) const { return vertices_[i]; }
  /// Index of v, or size() when v is outside the ball.
  std::size_t index_of(const TreeVertex& v) const;
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adj_[i]; }
  int radius(std::size_t i) const { return dist_[i]; }

 private:
  Int q_;
  int depth_;
  std::vector<TreeVertex> vertices_;
  std::map<TreeVertex, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> dist_;
};

BruhatTitsTree build_tree(Int q, int depth);
std::vector<TreeVertex> tree_neighbors(Int q, const TreeVertex& v);

/// Gamma = ell-part of the Teichmuller torus diag(u, 1), cyclic of order
/// ell^v with ell^v || q - 1, acting by b -> u b.
class GammaAction {
 public:
  GammaAction(Int q, Int ell, int precision);

  Int q() const { return q_; }
  Int ell() const { return ell_; }
  int exponent() const { return v_; }
  Int order() const { return order_; }
  /// Teichmuller lift of the generator modulo q^precision.
  const BigInt& generator() const { return omega_; }
  const BigInt& precision_modulus() const { return qm_; }
  int precision() const { return precision_; }

  /// omega^i . v.
  TreeVertex act(Int i, const TreeVertex& v) const;
  /// Order of the stabilizer {u : u v = v}, a power of ell.
  Int stabilizer_order(const TreeVertex& v) const;
  /// The matrix diag(omega^i, 1).
  Mat2Q matrix(Int i) const;
  /// The exponent e with c = diag(omega^e, 1) in PGL2, to the working
  /// precision; throws when c is not in Gamma.
  Int identify(const Mat2Q& c) const;

 private:
  Int q_, ell_;
  int v_;
  Int order_;
  int precision_;
  BigInt qm_, omega_;
};

struct SplitnessReport {
  Int q, ell;
  int r, depth;
  std::size_t vertices = 0, off_apartment = 0;
  /// Stabilizer order -> number of vertices with that stabilizer.
  std::map<Int, std::size_t> stabilizer_orders;
  std::size_t checked_classes = 0;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
};

SplitnessReport splitness_check(Int q, Int ell, int r, int depth);

/// A G-invariant derived Hecke operator on the tree, stored by its values
/// h(base, n) in H*(Gamma; S) at the canonical pairs n >= 0.
class OracleElement {
 public:
  OracleElement(Int q, const AbelianLGroup& gamma, const CoeffRing& s);
  /// From a spherical toral element, through its values at dominant n.
  static OracleElement from_spherical(Int q, const ToralElement& f);

  Int q() const { return q_; }
  const AbelianLGroup& gamma() const { return gamma_; }
  const CoeffRing& coeff() const { return s_; }
  const std::map<int, CohClass>& values() const { return values_; }
  void set(int n, const CohClass& v);
  CohClass value(int n) const;
  int support_radius() const;

 private:
  Int q_;
  AbelianLGroup gamma_;
  CoeffRing s_;
  std::map<int, CohClass> values_;
};

struct ConvolutionEntry {
  int x = 0, z = 0;
  CohClass oracle;
  CohClass model;
  /// Sum of the contributions of the Gamma-orbits off the apartment.
  CohClass off_apartment;
  std::size_t orbits = 0;
  bool match() const { return oracle == model; }
};

struct ConvolutionReport {
  std::vector<ConvolutionEntry> entries;
  /// Every vertex: orbit size times stabilizer order = |Gamma|.
  bool orbit_partition_ok = true;
  bool pass() const;
};

/// (h1 * h2)(x, z) for apartment points x, z in [-window, window], summed over
/// the Gamma-orbits of the middle vertex, compared with the toral product.
ConvolutionReport oracle_convolve(const OracleElement& h1, const OracleElement& h2, Int ell, int window, int depth);

}  // namespace dhecke
