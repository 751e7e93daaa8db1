#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dhecke/modular.hpp"

namespace dhecke {

using Vec = std::vector<Int>;

/// Dense matrix over Z/p^k, acting on column vectors.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols, Int modulus);

  static ModMatrix identity(std::size_t n, Int modulus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int modulus() const { return modulus_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Stores a reduced copy of v at (i, j).
  void set(std::size_t i, std::size_t j, Int v) { data_[i * cols_ + j] = floor_mod(v, modulus_); }
  void add_to(std::size_t i, std::size_t j, Int v) {
    data_[i * cols_ + j] = floor_mod(data_[i * cols_ + j] + floor_mod(v, modulus_), modulus_);
  }

  ModMatrix operator*(const ModMatrix& o) const;
  ModMatrix operator+(const ModMatrix& o) const;
  ModMatrix operator-(const ModMatrix& o) const;
  ModMatrix scaled(Int c) const;
  Vec apply(const Vec& v) const;
  ModMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const ModMatrix& o) const;

  /// Same entries reduced into a smaller modulus dividing the current one.
  ModMatrix reduced(Int modulus) const;

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Int modulus_ = 1;
  std::vector<Int> data_;
};

/// Structure of a finitely generated Z/p^k-module, as the list of
/// exponents e with summands Z/p^e (each 1 <= e <= k), sorted ascending.
struct ModuleStructure {
  int k = 1;
  std::vector<int> exponents;

  /// Minimal number of generators.
  std::size_t generators() const { return exponents.size(); }
  /// Number of summands isomorphic to Z/p^k.
  std::size_t free_rank() const;
  bool is_free() const { return free_rank() == exponents.size(); }
  /// log_p of the cardinality.
  int length() const;
};

/// Gaussian elimination over the local ring Z/p^k with full
/// minimal-valuation pivoting: E * A * P = R with E invertible, P a column
/// permutation and R upper trapezoidal. The pivot valuations are the Smith
/// invariants of A.
class LocalElimination {
 public:
  LocalElimination(const ModMatrix& a, Int p);

  std::size_t rank() const { return pivots_.size(); }
  const std::vector<int>& pivot_valuations() const { return pivots_; }
  Int prime() const { return p_; }
  int exponent() const { return k_; }

  /// Some x with A x = b, or nullopt when inconsistent.
  std::optional<Vec> solve(const Vec& b) const;

  /// Generators of ker A together with their additive orders (as exponents
  /// of p); ker A is the direct sum of the cyclic groups they generate.
  std::vector<std::pair<Vec, int>> kernel_basis() const;

  /// Coordinates of a kernel vector with respect to kernel_basis().
  Vec kernel_coordinates(const Vec& x) const;

  /// Structure of the image (column space).
  ModuleStructure image_structure() const;
  /// Structure of the cokernel Z/p^k^rows / im A.
  ModuleStructure cokernel_structure() const;
  ModuleStructure kernel_structure() const;

  /// True when A is surjective.
  bool surjective() const;

 private:
  std::size_t rows_, cols_;
  Int p_;
  int k_;
  Int modulus_;
  ModMatrix transform_;
  ModMatrix reduced_;
  std::vector<std::size_t> colperm_;
  std::vector<int> pivots_;
};

/// Structure of ker(out) / im(in) for a composable pair in -> out with
/// out * in = 0 (checked).
ModuleStructure homology(const ModMatrix& in, const ModMatrix& out, Int p);

}  // namespace dhecke
