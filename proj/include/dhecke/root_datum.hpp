#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dhecke/modular.hpp"

namespace dhecke {

/// Coordinates of a cocharacter in the chosen basis of X_*.
using Coweight = std::vector<Int>;
/// Coordinates of a character in the dual basis of X^*.
using Weight = std::vector<Int>;

/// Small dense integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  Int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  IntMatrix operator*(const IntMatrix& o) const;
  std::vector<Int> operator*(const std::vector<Int>& v) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool operator<(const IntMatrix& o) const { return data_ < o.data_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

/// Element of the finite Weyl group: its integer matrix on X_* and the
/// shortlex-minimal word in the simple reflections.
struct WeylElement {
  IntMatrix matrix;
  std::vector<int> word;
};

/// A root datum for a split reductive group. Characters and cocharacters are
/// written in dual bases, so the pairing is the dot product.
class RootDatum {
 public:
  RootDatum(std::string name, int rank, std::vector<Weight> roots, std::vector<Coweight> coroots,
            std::vector<int> simple);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  const std::vector<Weight>& roots() const { return roots_; }
  const std::vector<Coweight>& coroots() const { return coroots_; }
  const std::vector<int>& simple() const { return simple_; }

  /// Weyl group in shortlex order of reduced words; index 0 is the identity.
  const std::vector<WeylElement>& weyl() const { return weyl_; }
  std::size_t weyl_order() const { return weyl_.size(); }
  int multiply(int a, int b) const { return mult_[static_cast<std::size_t>(a) * weyl_.size() + static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int index_of(const IntMatrix& m) const;
  /// Index of the simple reflection s_i (i indexes simple()).
  int simple_reflection(int i) const { return simple_refl_[static_cast<std::size_t>(i)]; }
  int longest_element() const;

  Coweight act(int w, const Coweight& lambda) const;
  /// Contragredient action on characters.
  Weight act_on_weight(int w, const Weight& chi) const;
  static Int pair(const Weight& chi, const Coweight& lambda);

  bool is_dominant(const Coweight& lambda) const;
  /// Indices of Weyl elements fixing lambda.
  std::vector<int> stabilizer(const Coweight& lambda) const;
  /// Distinct elements of the orbit W.lambda, sorted.
  std::vector<Coweight> orbit(const Coweight& lambda) const;

 private:
  std::string name_;
  int rank_;
  std::vector<Weight> roots_;
  std::vector<Coweight> coroots_;
  std::vector<int> simple_;
  std::vector<WeylElement> weyl_;
  std::vector<IntMatrix> weight_action_;
  std::vector<int> mult_, inv_, simple_refl_;
  std::map<IntMatrix, int> index_;
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

/// Catalog: "SL2", "PGL2", "SL3", "Sp4".
RootDatum build_root_datum(const std::string& name);

/// Dominant representative lambda+ and the first Weyl element w (in shortlex
/// order) with w.lambda = lambda+.
std::pair<Coweight, int> dominant_representative(const RootDatum& rd, const Coweight& lambda);

/// Divisibility of a root in X^*: the gcd of its coordinates.
Int root_divisibility(const RootDatum& rd, int root);
/// m_alpha * alpha^vee.
Coweight alpha_star(const RootDatum& rd, int root);

/// Finite-support element of the group algebra of X_*, in multiplicative
/// notation: exponent vectors are the keys.
using LatticeAlgebraElement = std::map<Coweight, Int>;

LatticeAlgebraElement lattice_multiply(const LatticeAlgebraElement& a, const LatticeAlgebraElement& b,
                                       const CoeffRing& ring);
LatticeAlgebraElement lattice_act(const RootDatum& rd, int w, const LatticeAlgebraElement& a);
bool lattice_is_invariant(const RootDatum& rd, const LatticeAlgebraElement& a);

/// The product over all roots of (1 - alpha^*) expanded in S[X_*].
LatticeAlgebraElement discriminant(const RootDatum& rd, const CoeffRing& ring);

/// A 2x2 matrix over a coefficient ring (row-major), standing for a point of
/// a rank-one dual group in its standard representation.
struct Mat2 {
  std::array<Int, 4> e{};
  Int operator()(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }
  bool operator==(const Mat2& o) const { return e == o.e; }
};

Mat2 mat2_mul(const Mat2& a, const Mat2& b, const CoeffRing& ring);
Int mat2_trace(const Mat2& a, const CoeffRing& ring);
Int mat2_det(const Mat2& a, const CoeffRing& ring);

/// Regular semisimple in the sense used for e_{psi,g}: non-scalar, and either
/// the discriminant tr^2 - 4 det is non-zero or g is diagonal with distinct
/// entries.
bool is_regular_semisimple(const Mat2& g, const CoeffRing& ring);

/// The map Lie(T^vee) -> Lie(Z_g) for a rank-one dual group (g of
/// determinant 1). psi is k times the standard character diag(x, 1/x) -> x;
/// the input is c * diag(1, -1). The value is c * U_{k-1}(tr g) * (2g - tr(g)).
Mat2 e_psi_g(Int psi, const Mat2& g, Int lie_coeff, const CoeffRing& ring);

}  // namespace dhecke
