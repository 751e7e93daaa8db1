#include "dhecke/abelian_group.hpp"

#include <set>

namespace dhecke {

AbelianLGroup::AbelianLGroup(Int ell, std::vector<int> exponents) : ell_(ell), exponents_(std::move(exponents)) {
  if (!is_prime(ell)) throw Error("group prime " + std::to_string(ell) + " is not prime");
  for (int n : exponents_)
    if (n < 1) throw Error("cyclic factor exponents must be positive");
}

AbelianLGroup AbelianLGroup::homogeneous(Int ell, int n, int d) {
  return AbelianLGroup(ell, std::vector<int>(static_cast<std::size_t>(d), n));
}

Int AbelianLGroup::order() const {
  Int o = 1;
  for (int i = 0; i < rank(); ++i) o *= factor_order(i);
  return o;
}

std::vector<Int> AbelianLGroup::element(Int index) const {
  std::vector<Int> e(exponents_.size());
  for (int i = 0; i < rank(); ++i) {
    Int n = factor_order(i);
    e[static_cast<std::size_t>(i)] = index % n;
    index /= n;
  }
  return e;
}

Int AbelianLGroup::index(const std::vector<Int>& element) const {
  Int idx = 0, stride = 1;
  for (int i = 0; i < rank(); ++i) {
    Int n = factor_order(i);
    idx += floor_mod(element[static_cast<std::size_t>(i)], n) * stride;
    stride *= n;
  }
  return idx;
}

std::vector<Int> AbelianLGroup::reduce(std::vector<Int> element) const {
  for (int i = 0; i < rank(); ++i)
    element[static_cast<std::size_t>(i)] = floor_mod(element[static_cast<std::size_t>(i)], factor_order(i));
  return element;
}

std::string AbelianLGroup::to_string() const {
  if (exponents_.empty()) return "1";
  std::string s;
  for (int i = 0; i < rank(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(factor_order(i));
  }
  return s;
}

GroupHom::GroupHom(AbelianLGroup source, AbelianLGroup target, std::vector<std::vector<Int>> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (source_.ell() != target_.ell()) throw Error("homomorphism between groups for different primes");
  if (static_cast<int>(matrix_.size()) != target_.rank()) throw Error("homomorphism matrix has wrong row count");
  for (int i = 0; i < target_.rank(); ++i) {
    auto& row = matrix_[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != source_.rank()) throw Error("homomorphism matrix has wrong column count");
    Int ti = target_.factor_order(i);
    for (int j = 0; j < source_.rank(); ++j) {
      Int& e = row[static_cast<std::size_t>(j)];
      e = floor_mod(e, ti);
      // the image of a generator of order ell^{n_j} must be killed by ell^{n_j}
      if (mul_mod(e, source_.factor_order(j), ti) != 0)
        throw Error("matrix entry does not respect the order of source generator " + std::to_string(j));
    }
  }
}

GroupHom GroupHom::identity(const AbelianLGroup& g) {
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(g.rank()), std::vector<Int>(static_cast<std::size_t>(g.rank()), 0));
  for (int i = 0; i < g.rank(); ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return GroupHom(g, g, std::move(m));
}

GroupHom GroupHom::scalar(const AbelianLGroup& g, Int s) {
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(g.rank()), std::vector<Int>(static_cast<std::size_t>(g.rank()), 0));
  for (int i = 0; i < g.rank(); ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = s;
  return GroupHom(g, g, std::move(m));
}

std::vector<Int> GroupHom::apply(const std::vector<Int>& x) const {
  std::vector<Int> y(static_cast<std::size_t>(target_.rank()), 0);
  for (int i = 0; i < target_.rank(); ++i) {
    Int ti = target_.factor_order(i);
    Int acc = 0;
    for (int j = 0; j < source_.rank(); ++j)
      acc = floor_mod(acc + mul_mod(matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                    floor_mod(x[static_cast<std::size_t>(j)], ti), ti),
                      ti);
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

GroupHom GroupHom::compose(const GroupHom& inner) const {
  if (inner.target_ != source_) throw Error("cannot compose: middle groups differ");
  const AbelianLGroup& a = inner.source_;
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(target_.rank()), std::vector<Int>(static_cast<std::size_t>(a.rank()), 0));
  for (int j = 0; j < a.rank(); ++j) {
    std::vector<Int> ej(static_cast<std::size_t>(a.rank()), 0);
    ej[static_cast<std::size_t>(j)] = 1;
    auto img = apply(inner.apply(ej));
    for (int i = 0; i < target_.rank(); ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = img[static_cast<std::size_t>(i)];
  }
  return GroupHom(a, target_, std::move(m));
}

bool GroupHom::is_injective() const {
  const Int n = source_.order();
  std::set<Int> seen;
  for (Int idx = 0; idx < n; ++idx) {
    if (!seen.insert(target_.index(apply(source_.element(idx)))).second) return false;
  }
  return true;
}

Int GroupHom::image_index() const {
  const Int n = source_.order();
  std::set<Int> img;
  for (Int idx = 0; idx < n; ++idx) img.insert(target_.index(apply(source_.element(idx))));
  return target_.order() / static_cast<Int>(img.size());
}

AbelianLGroup ell_part(Int q, Int ell) {
  if (!prime_power(q)) throw Error("q = " + std::to_string(q) + " is not a prime power");
  if (!is_prime(ell)) throw Error("ell = " + std::to_string(ell) + " is not prime");
  if (q % ell == 0) throw Error("ell divides q: ell must differ from the residue characteristic");
  int v = valuation(q - 1, ell);
  if (v == 0) return AbelianLGroup::trivial(ell);
  return AbelianLGroup::cyclic(ell, v);
}

}  // namespace dhecke
