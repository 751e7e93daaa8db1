#pragma once

#include <string>
#include <vector>

#include "dhecke/modular.hpp"

namespace dhecke {

/// A finite abelian ell-group given as an explicit product of cyclic factors
/// Z/ell^{n_1} x ... x Z/ell^{n_d}. The factors are kept as supplied (not
/// normalized), so homomorphism matrices refer to the caller's generators.
class AbelianLGroup {
 public:
  AbelianLGroup(Int ell, std::vector<int> exponents);

  static AbelianLGroup trivial(Int ell) { return AbelianLGroup(ell, {}); }
  static AbelianLGroup cyclic(Int ell, int n) { return AbelianLGroup(ell, {n}); }
  /// d copies of Z/ell^n.
  static AbelianLGroup homogeneous(Int ell, int n, int d);

  Int ell() const { return ell_; }
  /// Number of cyclic factors d.
  int rank() const { return static_cast<int>(exponents_.size()); }
  const std::vector<int>& exponents() const { return exponents_; }
  int exponent(int i) const { return exponents_[static_cast<std::size_t>(i)]; }
  Int factor_order(int i) const { return ipow(ell_, exponent(i)); }
  Int order() const;
  bool is_trivial() const { return exponents_.empty(); }

  /// Elements are coordinate vectors; these convert to and from a flat
  /// mixed-radix index in [0, order()).
  std::vector<Int> element(Int index) const;
  Int index(const std::vector<Int>& element) const;
  std::vector<Int> reduce(std::vector<Int> element) const;

  bool operator==(const AbelianLGroup& o) const { return ell_ == o.ell_ && exponents_ == o.exponents_; }
  bool operator!=(const AbelianLGroup& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Int ell_;
  std::vector<int> exponents_;
};

/// A homomorphism between explicit products of cyclic groups. Column j of
/// the matrix is the image of the j-th source generator.
class GroupHom {
 public:
  GroupHom(AbelianLGroup source, AbelianLGroup target, std::vector<std::vector<Int>> matrix);

  static GroupHom identity(const AbelianLGroup& g);
  /// Multiplication by m on a group whose factors are all regarded as
  /// factors of the target (used for inclusions ell^k Z/ell^n).
  static GroupHom scalar(const AbelianLGroup& g, Int m);

  const AbelianLGroup& source() const { return source_; }
  const AbelianLGroup& target() const { return target_; }
  /// Entry (i, j): coefficient of target generator i in the image of source
  /// generator j, reduced modulo the order of target factor i.
  Int entry(int i, int j) const { return matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<Int>>& matrix() const { return matrix_; }

  std::vector<Int> apply(const std::vector<Int>& x) const;

  /// this o inner.
  GroupHom compose(const GroupHom& inner) const;

  bool is_injective() const;
  /// Index of the image in the target.
  Int image_index() const;

  bool operator==(const GroupHom& o) const {
    return source_ == o.source_ && target_ == o.target_ && matrix_ == o.matrix_;
  }

 private:
  AbelianLGroup source_, target_;
  std::vector<std::vector<Int>> matrix_;
};

/// The ell-Sylow subgroup of F_q^x, a cyclic group of order ell^{v_ell(q-1)}.
AbelianLGroup ell_part(Int q, Int ell);

}  // namespace dhecke
