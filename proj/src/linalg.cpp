#include "dhecke/linalg.hpp"

#include <algorithm>
#include <utility>

namespace dhecke {

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, Int modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {}

ModMatrix ModMatrix::identity(std::size_t n, Int modulus) {
  ModMatrix m(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % modulus;
  return m;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  if (cols_ != o.rows_ || modulus_ != o.modulus_) throw Error("matrix shape mismatch in product");
  ModMatrix out(rows_, o.cols_, modulus_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t l = 0; l < cols_; ++l) {
      Int a = (*this)(i, l);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        Int b = o(l, j);
        if (b != 0) out(i, j) = (out(i, j) + mul_mod(a, b, modulus_)) % modulus_;
      }
    }
  }
  return out;
}

ModMatrix ModMatrix::operator+(const ModMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || modulus_ != o.modulus_) throw Error("matrix shape mismatch in sum");
  ModMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + o.data_[i]) % modulus_;
  return out;
}

ModMatrix ModMatrix::operator-(const ModMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || modulus_ != o.modulus_) throw Error("matrix shape mismatch in difference");
  ModMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = floor_mod(data_[i] - o.data_[i], modulus_);
  return out;
}

ModMatrix ModMatrix::scaled(Int c) const {
  ModMatrix out(*this);
  c = floor_mod(c, modulus_);
  for (auto& x : out.data_) x = mul_mod(x, c, modulus_);
  return out;
}

Vec ModMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error("vector length mismatch in matrix application");
  Vec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      Int a = (*this)(i, j);
      if (a != 0 && v[j] != 0) acc = (acc + mul_mod(a, floor_mod(v[j], modulus_), modulus_)) % modulus_;
    }
    out[i] = acc;
  }
  return out;
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix out(cols_, rows_, modulus_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool ModMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Int x) { return x == 0; });
}

bool ModMatrix::operator==(const ModMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && modulus_ == o.modulus_ && data_ == o.data_;
}

ModMatrix ModMatrix::reduced(Int modulus) const {
  if (modulus_ % modulus != 0) throw Error("reduction modulus must divide the current modulus");
  ModMatrix out(rows_, cols_, modulus);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] % modulus;
  return out;
}

Vec ModMatrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec ModMatrix::column(std::size_t j) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::size_t ModuleStructure::free_rank() const {
  return static_cast<std::size_t>(std::count(exponents.begin(), exponents.end(), k));
}

int ModuleStructure::length() const {
  int s = 0;
  for (int e : exponents) s += e;
  return s;
}

namespace {

int val_mod(Int a, Int p, int k) {
  if (a == 0) return k;
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

}  // namespace

LocalElimination::LocalElimination(const ModMatrix& a, Int p)
    : rows_(a.rows()), cols_(a.cols()), p_(p), modulus_(a.modulus()) {
  auto pp = prime_power(modulus_);
  if (modulus_ == 1) {
    k_ = 0;
  } else {
    if (!pp || pp->first != p) throw Error("elimination modulus is not a power of the given prime");
    k_ = pp->second;
  }
  reduced_ = a;
  transform_ = ModMatrix::identity(rows_, modulus_);
  colperm_.resize(cols_);
  for (std::size_t j = 0; j < cols_; ++j) colperm_[j] = j;

  ModMatrix& r = reduced_;
  ModMatrix& e = transform_;
  std::size_t s = 0;
  while (s < rows_ && s < cols_) {
    int best = k_;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = s; i < rows_ && best > 0; ++i) {
      for (std::size_t j = s; j < cols_; ++j) {
        Int x = r(i, j);
        if (x == 0) continue;
        int v = val_mod(x, p_, k_);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    }
    if (best >= k_) break;
    if (bi != s) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(r(s, j), r(bi, j));
      for (std::size_t j = 0; j < rows_; ++j) std::swap(e(s, j), e(bi, j));
    }
    if (bj != s) {
      for (std::size_t i = 0; i < rows_; ++i) std::swap(r(i, s), r(i, bj));
      std::swap(colperm_[s], colperm_[bj]);
    }
    Int piv = r(s, s);
    Int pv = ipow(p_, best);
    Int unit_inv = *inverse_mod(piv / pv, modulus_);
    for (std::size_t i = s + 1; i < rows_; ++i) {
      Int x = r(i, s);
      if (x == 0) continue;
      Int factor = mul_mod(x / pv, unit_inv, modulus_);
      for (std::size_t j = s; j < cols_; ++j)
        if (r(s, j) != 0) r(i, j) = floor_mod(r(i, j) - mul_mod(factor, r(s, j), modulus_), modulus_);
      for (std::size_t j = 0; j < rows_; ++j)
        if (e(s, j) != 0) e(i, j) = floor_mod(e(i, j) - mul_mod(factor, e(s, j), modulus_), modulus_);
    }
    pivots_.push_back(best);
    ++s;
  }
}

std::optional<Vec> LocalElimination::solve(const Vec& b) const {
  if (b.size() != rows_) throw Error("right-hand side length mismatch");
  Vec c = transform_.apply(b);
  const std::size_t rk = rank();
  for (std::size_t i = rk; i < rows_; ++i)
    if (c[i] != 0) return std::nullopt;
  Vec y(cols_, 0);
  for (std::size_t ii = rk; ii-- > 0;) {
    Int rhs = c[ii];
    for (std::size_t j = ii + 1; j < cols_; ++j)
      if (reduced_(ii, j) != 0 && y[j] != 0) rhs = floor_mod(rhs - mul_mod(reduced_(ii, j), y[j], modulus_), modulus_);
    Int pv = ipow(p_, pivots_[ii]);
    if (rhs % pv != 0) return std::nullopt;
    Int unit = reduced_(ii, ii) / pv;
    y[ii] = mul_mod(rhs / pv, *inverse_mod(unit, modulus_), modulus_);
  }
  Vec x(cols_, 0);
  for (std::size_t j = 0; j < cols_; ++j) x[colperm_[j]] = y[j];
  return x;
}

namespace {

// Solves N y = z for the unit upper triangular N obtained from R by dividing
// each pivot row by its pivot (rows beyond the rank are identity rows).
Vec unit_triangular_solve(const ModMatrix& r, const std::vector<int>& pivots, Int p, Int modulus, const Vec& z) {
  const std::size_t cols = r.cols();
  const std::size_t rk = pivots.size();
  Vec y(z);
  for (std::size_t ii = rk; ii-- > 0;) {
    Int pv = ipow(p, pivots[ii]);
    Int uinv = *inverse_mod(r(ii, ii) / pv, modulus);
    Int acc = y[ii];
    for (std::size_t j = ii + 1; j < cols; ++j) {
      Int rij = r(ii, j);
      if (rij == 0 || y[j] == 0) continue;
      // normalized entry rij / pivot is integral since v(rij) >= v(pivot)
      Int nij = mul_mod(rij / pv, uinv, modulus);
      acc = floor_mod(acc - mul_mod(nij, y[j], modulus), modulus);
    }
    y[ii] = acc;
  }
  return y;
}

}  // namespace

std::vector<std::pair<Vec, int>> LocalElimination::kernel_basis() const {
  std::vector<std::pair<Vec, int>> out;
  const std::size_t rk = rank();
  auto emit = [&](const Vec& z, int order) {
    Vec y = unit_triangular_solve(reduced_, pivots_, p_, modulus_, z);
    Vec x(cols_, 0);
    for (std::size_t j = 0; j < cols_; ++j) x[colperm_[j]] = y[j];
    out.emplace_back(std::move(x), order);
  };
  for (std::size_t i = 0; i < rk; ++i) {
    if (pivots_[i] == 0) continue;
    Vec z(cols_, 0);
    z[i] = ipow(p_, k_ - pivots_[i]);
    emit(z, pivots_[i]);
  }
  for (std::size_t j = rk; j < cols_; ++j) {
    Vec z(cols_, 0);
    z[j] = 1;
    emit(z, k_);
  }
  return out;
}

Vec LocalElimination::kernel_coordinates(const Vec& x) const {
  const std::size_t rk = rank();
  Vec y(cols_);
  for (std::size_t j = 0; j < cols_; ++j) y[j] = floor_mod(x[colperm_[j]], modulus_);
  // z = N y
  Vec z(cols_, 0);
  for (std::size_t ii = 0; ii < cols_; ++ii) {
    if (ii >= rk) {
      z[ii] = y[ii];
      continue;
    }
    Int pv = ipow(p_, pivots_[ii]);
    Int uinv = *inverse_mod(reduced_(ii, ii) / pv, modulus_);
    Int acc = y[ii];
    for (std::size_t j = ii + 1; j < cols_; ++j) {
      Int rij = reduced_(ii, j);
      if (rij == 0) continue;
      acc = floor_mod(acc + mul_mod(mul_mod(rij / pv, uinv, modulus_), y[j], modulus_), modulus_);
    }
    z[ii] = acc;
  }
  Vec coords;
  for (std::size_t i = 0; i < rk; ++i) {
    if (pivots_[i] == 0) {
      if (z[i] != 0) throw Error("vector is not in the kernel");
      continue;
    }
    Int step = ipow(p_, k_ - pivots_[i]);
    if (z[i] % step != 0) throw Error("vector is not in the kernel");
    coords.push_back(z[i] / step);
  }
  for (std::size_t j = rk; j < cols_; ++j) coords.push_back(z[j]);
  return coords;
}

ModuleStructure LocalElimination::image_structure() const {
  ModuleStructure s{k_, {}};
  for (int v : pivots_) s.exponents.push_back(k_ - v);
  std::sort(s.exponents.begin(), s.exponents.end());
  return s;
}

ModuleStructure LocalElimination::cokernel_structure() const {
  ModuleStructure s{k_, {}};
  for (int v : pivots_)
    if (v > 0) s.exponents.push_back(v);
  for (std::size_t i = rank(); i < rows_; ++i) s.exponents.push_back(k_);
  std::sort(s.exponents.begin(), s.exponents.end());
  return s;
}

ModuleStructure LocalElimination::kernel_structure() const {
  ModuleStructure s{k_, {}};
  for (int v : pivots_)
    if (v > 0) s.exponents.push_back(v);
  for (std::size_t j = rank(); j < cols_; ++j) s.exponents.push_back(k_);
  std::sort(s.exponents.begin(), s.exponents.end());
  return s;
}

bool LocalElimination::surjective() const {
  if (rank() != rows_) return false;
  return std::all_of(pivots_.begin(), pivots_.end(), [](int v) { return v == 0; });
}

ModuleStructure homology(const ModMatrix& in, const ModMatrix& out, Int p) {
  const Int m = out.modulus();
  if (in.rows() != out.cols()) throw Error("homology: shapes do not compose");
  if (in.cols() > 0 && !(out * in).is_zero()) throw Error("homology: composite is not zero");
  LocalElimination eo(out, p);
  auto basis = eo.kernel_basis();
  const std::size_t s = basis.size();
  const int k = eo.exponent();
  // presentation of ker(out)/im(in) on the kernel generators
  ModMatrix pres(s, in.cols() + s, m);
  for (std::size_t j = 0; j < in.cols(); ++j) {
    Vec coords = eo.kernel_coordinates(in.column(j));
    for (std::size_t i = 0; i < s; ++i) pres(i, j) = floor_mod(coords[i], m);
  }
  for (std::size_t i = 0; i < s; ++i) pres(i, in.cols() + i) = floor_mod(ipow(p, basis[i].second), m);
  ModuleStructure h{k, {}};
  if (s == 0) return h;
  LocalElimination ep(pres, p);
  for (std::size_t i = 0; i < s; ++i) {
    int e = i < ep.rank() ? ep.pivot_valuations()[i] : k;
    if (e > 0) h.exponents.push_back(e);
  }
  std::sort(h.exponents.begin(), h.exponents.end());
  return h;
}

}  // namespace dhecke
