#include "dhecke/cohomology.hpp"

#include <bit>
#include <numeric>

#include "dhecke/resolution.hpp"

namespace dhecke {

int Monomial::degree() const {
  int d = std::popcount(x);
  for (int e : y) d += 2 * e;
  return d;
}

bool Monomial::operator<(const Monomial& o) const {
  int a = degree(), b = o.degree();
  if (a != b) return a < b;
  if (x != o.x) return x < o.x;
  return y < o.y;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < y.size() || (x >> i) != 0; ++i)
    if ((x >> i) & 1U) s += (s.empty() ? "" : "*") + std::string("x") + std::to_string(i + 1);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    s += (s.empty() ? "" : "*") + std::string("y") + std::to_string(i + 1);
    if (y[i] > 1) s += "^" + std::to_string(y[i]);
  }
  return s.empty() ? "1" : s;
}

void check_cohomology_regime(const AbelianLGroup& g, const CoeffRing& s) {
  if (g.ell() != s.ell()) throw Error("group and coefficients are for different primes");
  if (s.ell() == 2) throw RegimeError("ell = 2 is outside the implemented regime");
  if (g.rank() > 31) throw Error("too many cyclic factors");
  for (int n : g.exponents())
    if (s.r() > n)
      throw RegimeError("coefficient exponent r = " + std::to_string(s.r()) + " exceeds a cyclic factor exponent " +
                        std::to_string(n));
}

CohClass::CohClass(AbelianLGroup group, CoeffRing coeff) : group_(std::move(group)), coeff_(std::move(coeff)) {
  check_cohomology_regime(group_, coeff_);
}

CohClass CohClass::monomial(const AbelianLGroup& g, const CoeffRing& s, const Monomial& m, Int c) {
  if (static_cast<int>(m.y.size()) != g.rank() || (g.rank() < 32 && (m.x >> g.rank()) != 0))
    throw Error("monomial does not match the number of generators");
  CohClass out(g, s);
  out.add_term(m, c);
  return out;
}

CohClass CohClass::one(const AbelianLGroup& g, const CoeffRing& s) {
  return monomial(g, s, Monomial{0, std::vector<int>(static_cast<std::size_t>(g.rank()), 0)});
}

CohClass CohClass::x(const AbelianLGroup& g, const CoeffRing& s, int i) {
  if (i < 0 || i >= g.rank()) throw Error("generator index out of range");
  return monomial(g, s, Monomial{1U << i, std::vector<int>(static_cast<std::size_t>(g.rank()), 0)});
}

CohClass CohClass::y(const AbelianLGroup& g, const CoeffRing& s, int i) {
  if (i < 0 || i >= g.rank()) throw Error("generator index out of range");
  Monomial m{0, std::vector<int>(static_cast<std::size_t>(g.rank()), 0)};
  m.y[static_cast<std::size_t>(i)] = 1;
  return monomial(g, s, m);
}

bool CohClass::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

int CohClass::degree() const {
  if (!is_homogeneous()) throw Error("class is not homogeneous");
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

Int CohClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

CohClass CohClass::component(int k) const {
  CohClass out(group_, coeff_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == k) out.terms_[m] = c;
  return out;
}

void CohClass::add_term(const Monomial& m, Int c) {
  c = coeff_.reduce(c);
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second = coeff_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

CohClass CohClass::operator+(const CohClass& o) const {
  if (group_ != o.group_ || coeff_ != o.coeff_) throw Error("adding classes over different groups or coefficients");
  CohClass out(*this);
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

CohClass CohClass::operator-(const CohClass& o) const { return *this + (-o); }

CohClass CohClass::operator-() const { return scaled(-1); }

CohClass CohClass::scaled(Int c) const {
  CohClass out(group_, coeff_);
  for (const auto& [m, v] : terms_) out.add_term(m, coeff_.mul(v, coeff_.reduce(c)));
  return out;
}

bool CohClass::operator==(const CohClass& o) const {
  return group_ == o.group_ && coeff_ == o.coeff_ && terms_ == o.terms_;
}

std::string CohClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (c != 1 || m.degree() == 0) s += std::to_string(c) + (m.degree() == 0 ? "" : "*");
    if (m.degree() > 0) s += m.to_string();
  }
  return s;
}

CohRing::CohRing(AbelianLGroup group, CoeffRing coeff) : group_(std::move(group)), coeff_(std::move(coeff)) {
  check_cohomology_regime(group_, coeff_);
}

std::vector<Monomial> CohRing::basis(int k) const { return monomial_basis(group_.rank(), k); }

CohRing coh_ring(const AbelianLGroup& t, const CoeffRing& s) { return CohRing(t, s); }

namespace {

void fill_exponents(std::vector<int>& e, std::size_t i, int remaining, std::uint32_t mask, std::vector<Monomial>& out) {
  if (i == e.size()) {
    if (remaining == 0) out.push_back(Monomial{mask, e});
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    e[i] = v;
    fill_exponents(e, i + 1, remaining - v, mask, out);
  }
  e[i] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(int d, int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  for (std::uint32_t mask = 0; mask < (1U << d); ++mask) {
    int rest = k - std::popcount(mask);
    if (rest < 0 || rest % 2) continue;
    std::vector<int> e(static_cast<std::size_t>(d), 0);
    if (d == 0) {
      if (rest == 0) out.push_back(Monomial{mask, e});
      continue;
    }
    fill_exponents(e, 0, rest / 2, mask, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int exterior_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  // count pairs (i in a, j in b) with i > j
  int inversions = 0;
  for (std::uint32_t bb = b; bb; bb &= bb - 1) {
    int j = std::countr_zero(bb);
    inversions += std::popcount(a >> (j + 1));
  }
  return inversions % 2 ? -1 : 1;
}

CohClass cup(const CohClass& a, const CohClass& b) {
  if (a.group() != b.group() || a.coeff() != b.coeff())
    throw Error("cup product of classes over different groups or coefficients");
  CohClass out(a.group(), a.coeff());
  const CoeffRing& s = a.coeff();
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int sign = exterior_sign(ma.x, mb.x);
      if (sign == 0) continue;
      Monomial m{ma.x | mb.x, ma.y};
      for (std::size_t i = 0; i < m.y.size(); ++i) m.y[i] += mb.y[i];
      out.add_term(m, s.mul(sign, s.mul(ca, cb)));
    }
  }
  return out;
}

CohClass power(const CohClass& a, int e) {
  CohClass out = CohClass::one(a.group(), a.coeff());
  for (int i = 0; i < e; ++i) out = cup(out, a);
  return out;
}

CohClass restrict(const GroupHom& f, const CohClass& a) {
  if (f.target() != a.group()) throw Error("restriction: class does not live on the target of the map");
  const AbelianLGroup& src = f.source();
  const AbelianLGroup& tgt = f.target();
  const CoeffRing& s = a.coeff();
  check_cohomology_regime(src, s);
  const Int ell = s.ell();
  std::vector<CohClass> img_x, img_y;
  for (int i = 0; i < tgt.rank(); ++i) {
    CohClass xi(src, s), yi(src, s);
    int ni = tgt.exponent(i);
    for (int j = 0; j < src.rank(); ++j) {
      Int m = f.entry(i, j);
      if (m == 0) continue;
      xi = xi + CohClass::x(src, s, j).scaled(m);
      int nj = src.exponent(j);
      Int c = nj >= ni ? s.mul(m, ipow(ell, nj - ni)) : m / ipow(ell, ni - nj);
      yi = yi + CohClass::y(src, s, j).scaled(c);
    }
    img_x.push_back(std::move(xi));
    img_y.push_back(std::move(yi));
  }
  CohClass out(src, s);
  for (const auto& [m, c] : a.terms()) {
    CohClass t = CohClass::one(src, s).scaled(c);
    for (int i = 0; i < tgt.rank(); ++i)
      if ((m.x >> i) & 1U) t = cup(t, img_x[static_cast<std::size_t>(i)]);
    for (int i = 0; i < tgt.rank(); ++i)
      if (int e = m.y[static_cast<std::size_t>(i)]; e > 0) t = cup(t, power(img_y[static_cast<std::size_t>(i)], e));
    out = out + t;
  }
  return out;
}

namespace {

struct Alignment {
  std::vector<int> target;  // pi(j)
  std::vector<Int> unit;    // u_j
  std::vector<int> shift;   // k_j = n_pi(j) - n'_j
};

std::optional<Alignment> alignment(const GroupHom& f) {
  const AbelianLGroup& src = f.source();
  const AbelianLGroup& tgt = f.target();
  const Int ell = src.ell();
  Alignment al;
  std::vector<bool> used(static_cast<std::size_t>(tgt.rank()), false);
  for (int j = 0; j < src.rank(); ++j) {
    int row = -1;
    for (int i = 0; i < tgt.rank(); ++i) {
      if (f.entry(i, j) == 0) continue;
      if (row >= 0) return std::nullopt;
      row = i;
    }
    if (row < 0 || used[static_cast<std::size_t>(row)]) return std::nullopt;
    used[static_cast<std::size_t>(row)] = true;
    Int v = f.entry(row, j);
    int k = tgt.exponent(row) - src.exponent(j);
    if (k < 0) return std::nullopt;
    Int pk = ipow(ell, k);
    if (v % pk != 0 || (v / pk) % ell == 0) return std::nullopt;
    al.target.push_back(row);
    al.unit.push_back(v / pk);
    al.shift.push_back(k);
  }
  return al;
}

}  // namespace

bool is_factor_aligned(const GroupHom& f) { return alignment(f).has_value(); }

CohClass corestrict(const GroupHom& f, const CohClass& a) {
  if (f.source() != a.group()) throw Error("corestriction: class does not live on the source of the map");
  if (!f.is_injective()) throw Error("corestriction needs an injective map");
  const AbelianLGroup& src = f.source();
  const AbelianLGroup& tgt = f.target();
  const CoeffRing& s = a.coeff();
  check_cohomology_regime(tgt, s);
  auto al = alignment(f);
  if (!al) return chain_corestrict(f, a);

  const Int ell = s.ell();
  std::vector<bool> hit(static_cast<std::size_t>(tgt.rank()), false);
  for (int t : al->target) hit[static_cast<std::size_t>(t)] = true;
  // a target factor meeting the subgroup trivially contributes Cores(1) = ell^{n_i} = 0
  for (int i = 0; i < tgt.rank(); ++i)
    if (!hit[static_cast<std::size_t>(i)]) return CohClass(tgt, s);

  CohClass out(tgt, s);
  for (const auto& [m, c] : a.terms()) {
    Int coef = c;
    int sign = 1;
    Monomial image{0, std::vector<int>(static_cast<std::size_t>(tgt.rank()), 0)};
    for (int j = 0; j < src.rank(); ++j) {
      const auto jj = static_cast<std::size_t>(j);
      int e = m.y[jj];
      bool has_x = (m.x >> j) & 1U;
      // transport along the diagonal automorphism u_j^{-1}
      Int uinv = s.inv(al->unit[jj]);
      coef = s.mul(coef, s.pow(uinv, e + (has_x ? 1 : 0)));
      const int i = al->target[jj];
      image.y[static_cast<std::size_t>(i)] = e;
      if (has_x) {
        sign *= exterior_sign(image.x, 1U << i);
        image.x |= 1U << i;
      } else {
        coef = s.mul(coef, ipow(ell, std::min(al->shift[jj], s.r())) % s.modulus());
      }
    }
    out.add_term(image, s.mul(sign, coef));
  }
  return out;
}

CohClass coeff_change(const CohClass& a, int m) {
  if (m > a.coeff().r()) throw Error("coefficient change needs m <= r");
  if (m < 1) throw Error("coefficient change needs m >= 1");
  CohClass out(a.group(), a.coeff().reduced(m));
  for (const auto& [mono, c] : a.terms()) out.add_term(mono, c);
  return out;
}

GroupHom weyl_hom(const RootDatum& rd, int w, const AbelianLGroup& t) {
  if (t.rank() != rd.rank()) throw Error("dimension mismatch: torus rank differs from the root datum rank");
  for (int i = 1; i < t.rank(); ++i)
    if (t.exponent(i) != t.exponent(0)) throw Error("Weyl action needs T = (Z/ell^n)^rank with equal factors");
  const IntMatrix& mat = rd.weyl()[static_cast<std::size_t>(w)].matrix;
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(t.rank()), std::vector<Int>(static_cast<std::size_t>(t.rank())));
  for (int i = 0; i < t.rank(); ++i)
    for (int j = 0; j < t.rank(); ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mat(i, j);
  return GroupHom(t, t, std::move(m));
}

CohClass weyl_act(const RootDatum& rd, int w, const CohClass& a) {
  return restrict(weyl_hom(rd, rd.inverse(w), a.group()), a);
}

CohClass weyl_pullback(const RootDatum& rd, int w, const CohClass& a) {
  return restrict(weyl_hom(rd, w, a.group()), a);
}

}  // namespace dhecke
