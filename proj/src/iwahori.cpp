#include "dhecke/iwahori.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dhecke {

AffineWeylElement affine_multiply(const RootDatum& rd, const AffineWeylElement& a, const AffineWeylElement& b) {
  Coweight t = rd.act(a.w, b.translation);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] += a.translation[i];
  return {t, rd.multiply(a.w, b.w)};
}

IwahoriElement::IwahoriElement(RootDatumPtr rd, CoeffRing s) : rd_(std::move(rd)), s_(std::move(s)) {}

IwahoriElement IwahoriElement::basis(RootDatumPtr rd, const CoeffRing& s, const AffineWeylElement& sigma, Int c) {
  IwahoriElement e(std::move(rd), s);
  e.add(sigma, c);
  return e;
}

IwahoriElement IwahoriElement::translation(RootDatumPtr rd, const CoeffRing& s, const Coweight& lambda) {
  return basis(std::move(rd), s, {lambda, 0});
}

IwahoriElement IwahoriElement::weyl(RootDatumPtr rd, const CoeffRing& s, int w) {
  Coweight zero(static_cast<std::size_t>(rd->rank()), 0);
  return basis(std::move(rd), s, {zero, w});
}

IwahoriElement IwahoriElement::one(RootDatumPtr rd, const CoeffRing& s) { return weyl(std::move(rd), s, 0); }

Int IwahoriElement::coefficient(const AffineWeylElement& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? 0 : it->second;
}

void IwahoriElement::add(const AffineWeylElement& sigma, Int c) {
  if (static_cast<int>(sigma.translation.size()) != rd_->rank()) throw Error("translation has the wrong rank");
  if (sigma.w < 0 || static_cast<std::size_t>(sigma.w) >= rd_->weyl_order()) throw Error("Weyl index out of range");
  c = s_.reduce(c);
  if (c == 0) return;
  Int& slot = terms_[sigma];
  slot = s_.add(slot, c);
  if (slot == 0) terms_.erase(sigma);
}

IwahoriElement IwahoriElement::operator+(const IwahoriElement& o) const {
  if (s_ != o.s_ || rd_->name() != o.rd_->name()) throw Error("adding Iwahori elements over different data");
  IwahoriElement out(*this);
  for (const auto& [k, c] : o.terms_) out.add(k, c);
  return out;
}

IwahoriElement IwahoriElement::operator-(const IwahoriElement& o) const { return *this + o.scaled(-1); }

IwahoriElement IwahoriElement::scaled(Int c) const {
  IwahoriElement out(rd_, s_);
  for (const auto& [k, v] : terms_) out.add(k, s_.mul(v, c));
  return out;
}

std::string IwahoriElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + "*(";
    for (std::size_t i = 0; i < k.translation.size(); ++i) s += (i ? "," : "") + std::to_string(k.translation[i]);
    s += ";w" + std::to_string(k.w) + ")";
  }
  return s;
}

IwahoriElement iwahori_multiply(const IwahoriElement& a, const IwahoriElement& b) {
  if (a.coeff() != b.coeff() || a.root_datum().name() != b.root_datum().name())
    throw Error("multiplying Iwahori elements over different data");
  IwahoriElement out(a.root_datum_ptr(), a.coeff());
  const CoeffRing& s = a.coeff();
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add(affine_multiply(a.root_datum(), ka, kb), s.mul(ca, cb));
  return out;
}

IwahoriElement e_K(RootDatumPtr rd, const CoeffRing& s) {
  const Int w = static_cast<Int>(rd->weyl_order());
  if (!s.is_unit(w)) throw RegimeError("|W| = " + std::to_string(w) + " is not a unit in " + s.to_string());
  Int inv = s.inv(w);
  IwahoriElement out(rd, s);
  Coweight zero(static_cast<std::size_t>(rd->rank()), 0);
  for (std::size_t x = 0; x < rd->weyl_order(); ++x) out.add({zero, static_cast<int>(x)}, inv);
  return out;
}

IwahoriElement central_embed(RootDatumPtr rd, const CoeffRing& s, const LatticeAlgebraElement& z) {
  if (!lattice_is_invariant(*rd, z)) throw Error("central_embed: element is not W-invariant");
  IwahoriElement out(rd, s);
  for (const auto& [l, c] : z) out.add({l, 0}, c);
  return out;
}

Int Character::operator()(const Coweight& lambda) const {
  if (lambda.size() != values.size()) throw Error("character evaluated on a coweight of the wrong rank");
  Int v = 1 % k.modulus();
  for (std::size_t i = 0; i < values.size(); ++i) {
    Int base = lambda[i] >= 0 ? values[i] : k.inv(values[i]);
    v = k.mul(v, k.pow(base, lambda[i] >= 0 ? lambda[i] : -lambda[i]));
  }
  return v;
}

Character chi_t(const CoeffRing& k, std::vector<Int> values) {
  for (auto& v : values) {
    v = k.reduce(v);
    if (!k.is_unit(v)) throw Error("character values must be units");
  }
  return Character{k, std::move(values)};
}

Character weyl_twist(const RootDatum& rd, int w, const Character& chi) {
  Character out{chi.k, {}};
  int winv = rd.inverse(w);
  for (int i = 0; i < rd.rank(); ++i) {
    Coweight e(static_cast<std::size_t>(rd.rank()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    out.values.push_back(chi(rd.act(winv, e)));
  }
  return out;
}

Int discriminant_eval(const LatticeAlgebraElement& f, const Character& chi) {
  Int s = 0;
  for (const auto& [l, c] : f) s = chi.k.add(s, chi.k.mul(c, chi(l)));
  return s;
}

bool has_free_orbit(const RootDatum& rd, const Character& chi) {
  std::set<std::vector<Int>> seen;
  for (std::size_t w = 0; w < rd.weyl_order(); ++w)
    if (!seen.insert(weyl_twist(rd, static_cast<int>(w), chi).values).second) return false;
  return true;
}

bool is_strongly_regular(const RootDatum& rd, const Character& chi) {
  for (std::size_t a = 0; a < rd.roots().size(); ++a)
    if (chi(alpha_star(rd, static_cast<int>(a))) == 1 % chi.k.modulus()) return false;
  return true;
}

InducedRep::InducedRep(RootDatumPtr rd, Character chi) : rd_(std::move(rd)), chi_(std::move(chi)) {
  if (static_cast<int>(chi_.values.size()) != rd_->rank()) throw Error("character rank does not match the root datum");
}

ModMatrix InducedRep::translation(const Coweight& lambda) const {
  ModMatrix m(dim(), dim(), chi_.k.modulus());
  for (std::size_t w = 0; w < dim(); ++w) m(w, w) = chi_(rd_->act(rd_->inverse(static_cast<int>(w)), lambda));
  return m;
}

ModMatrix InducedRep::weyl(int w) const {
  ModMatrix m(dim(), dim(), chi_.k.modulus());
  for (std::size_t v = 0; v < dim(); ++v) m(static_cast<std::size_t>(rd_->multiply(w, static_cast<int>(v))), v) = 1;
  return m;
}

ModMatrix InducedRep::act(const AffineWeylElement& sigma) const { return translation(sigma.translation) * weyl(sigma.w); }

ModMatrix InducedRep::act(const IwahoriElement& a) const {
  if (a.coeff() != chi_.k) throw Error("Iwahori element and representation use different coefficients");
  ModMatrix m(dim(), dim(), chi_.k.modulus());
  for (const auto& [sigma, c] : a.terms()) m = m + act(sigma).scaled(c);
  return m;
}

InducedRep induced_rep(RootDatumPtr rd, const Character& chi) { return InducedRep(std::move(rd), chi); }

namespace {

void box_points(int rank, Int n, Coweight& cur, int i, std::vector<Coweight>& out) {
  if (i == rank) {
    out.push_back(cur);
    return;
  }
  for (Int v = -n; v <= n; ++v) {
    cur[static_cast<std::size_t>(i)] = v;
    box_points(rank, n, cur, i + 1, out);
  }
}

std::vector<Coweight> box(int rank, Int n) {
  std::vector<Coweight> out;
  Coweight cur(static_cast<std::size_t>(rank), 0);
  box_points(rank, n, cur, 0, out);
  return out;
}

std::size_t span_rank(const std::vector<ModMatrix>& ms, Int p) {
  if (ms.empty()) return 0;
  const std::size_t n = ms[0].rows() * ms[0].cols();
  ModMatrix big(n, ms.size(), ms[0].modulus());
  for (std::size_t j = 0; j < ms.size(); ++j)
    for (std::size_t r = 0; r < ms[j].rows(); ++r)
      for (std::size_t c = 0; c < ms[j].cols(); ++c) big(r * ms[j].cols() + c, j) = ms[j](r, c);
  LocalElimination e(big, p);
  return e.rank();
}

}  // namespace

MoritaReport morita_check(RootDatumPtr rd, const Character& chi) {
  MoritaReport rep;
  const std::size_t w = rd->weyl_order();
  rep.end_expected = w * w;
  rep.ik_expected = w;
  rep.ki_expected = w;
  if (!is_strongly_regular(*rd, chi)) {
    rep.reason = "character is fixed by a reflection (discriminant vanishes)";
  } else if (!has_free_orbit(*rd, chi)) {
    rep.reason = "Weyl orbit of the character is not free";
  } else {
    rep.applicable = true;
  }
  InducedRep v(rd, chi);
  const CoeffRing& k = chi.k;
  ModMatrix ek = v.act(e_K(rd, k));
  std::vector<ModMatrix> end, ik, ki, kk;
  for (const auto& l : box(rd->rank(), static_cast<Int>(w)))
    for (std::size_t x = 0; x < w; ++x) {
      ModMatrix m = v.act(AffineWeylElement{l, static_cast<int>(x)});
      end.push_back(m);
      ik.push_back(ek * m);
      ki.push_back(m * ek);
      kk.push_back(ek * m * ek);
    }
  rep.end_rank = span_rank(end, k.ell());
  rep.ik_rank = span_rank(ik, k.ell());
  rep.ki_rank = span_rank(ki, k.ell());
  rep.kk_rank = span_rank(kk, k.ell());
  return rep;
}

std::vector<std::vector<int>> jet_indices(int rank, int precision) {
  std::vector<std::vector<int>> out;
  if (rank < 1) throw Error("jet_indices: rank must be positive");
  std::vector<int> cur(static_cast<std::size_t>(rank), 0);
  // all j with |j| < precision, by total degree then lexicographically descending
  for (int total = 0; total < precision; ++total) {
    std::vector<std::vector<int>> level;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == cur.size()) {
        cur[i] = left;
        level.push_back(cur);
        return;
      }
      for (int v = left; v >= 0; --v) {
        cur[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, total);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

// coefficient of eps^j in (a + eps)^lambda
Int taylor_coefficient(const CoeffRing& k, Int a, Int lambda, int j) {
  Int num = 1 % k.modulus(), fact = 1 % k.modulus();
  for (int i = 0; i < j; ++i) {
    num = k.mul(num, k.reduce(lambda - i));
    fact = k.mul(fact, i + 1);
  }
  Int e = lambda - j;
  Int power = e >= 0 ? k.pow(a, e) : k.pow(k.inv(a), -e);
  return k.mul(k.mul(num, k.inv(fact)), power);
}

Int jet_entry(const Character& chi, const Coweight& lambda, const std::vector<int>& j) {
  Int v = 1 % chi.k.modulus();
  for (std::size_t i = 0; i < lambda.size(); ++i)
    v = chi.k.mul(v, taylor_coefficient(chi.k, chi.values[i], lambda[i], j[i]));
  return v;
}

void check_precision(const Character& chi, int precision) {
  if (precision < 1) throw Error("jet precision must be at least 1");
  if (precision > chi.k.ell()) throw Error("jet precision must not exceed the residue characteristic");
}

}  // namespace

std::vector<Int> jet(const LatticeAlgebraElement& f, const Character& chi, int precision) {
  check_precision(chi, precision);
  auto idx = jet_indices(static_cast<int>(chi.values.size()), precision);
  std::vector<Int> out(idx.size(), 0);
  for (std::size_t t = 0; t < idx.size(); ++t)
    for (const auto& [l, c] : f) out[t] = chi.k.add(out[t], chi.k.mul(c, jet_entry(chi, l, idx[t])));
  return out;
}

LatticeAlgebraElement theta_projector(const RootDatum& rd, const Character& chi, int precision) {
  check_precision(chi, precision);
  if (!has_free_orbit(rd, chi)) throw Error("orbit not free");
  const CoeffRing& k = chi.k;
  std::vector<Character> orbit;
  for (std::size_t w = 0; w < rd.weyl_order(); ++w) orbit.push_back(weyl_twist(rd, static_cast<int>(w), chi));
  auto idx = jet_indices(rd.rank(), precision);
  const std::size_t n = orbit.size() * idx.size();
  // candidates by sup-norm, then lexicographically descending
  std::vector<Coweight> cand;
  for (Int radius = 0; cand.size() < 64 * n && radius <= 64; ++radius)
    for (const auto& l : box(rd.rank(), radius)) {
      Int norm = 0;
      for (Int c : l) norm = std::max(norm, c < 0 ? -c : c);
      if (norm == radius) cand.push_back(l);
    }
  std::stable_sort(cand.begin(), cand.end(), [](const Coweight& a, const Coweight& b) {
    Int na = 0, nb = 0;
    for (Int c : a) na = std::max(na, c < 0 ? -c : c);
    for (Int c : b) nb = std::max(nb, c < 0 ? -c : c);
    if (na != nb) return na < nb;
    return a > b;
  });
  auto column = [&](const Coweight& l) {
    Vec col;
    for (const auto& o : orbit)
      for (const auto& j : idx) col.push_back(jet_entry(o, l, j));
    return col;
  };
  std::vector<Coweight> chosen;
  std::vector<Vec> cols;
  auto unit_rank = [&](const std::vector<Vec>& cs) {
    ModMatrix m(n, cs.size(), k.modulus());
    for (std::size_t j = 0; j < cs.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) m(i, j) = cs[j][i];
    LocalElimination e(m, k.ell());
    return static_cast<std::size_t>(
        std::count(e.pivot_valuations().begin(), e.pivot_valuations().end(), 0));
  };
  for (const auto& l : cand) {
    if (chosen.size() == n) break;
    cols.push_back(column(l));
    if (unit_rank(cols) == cols.size()) {
      chosen.push_back(l);
    } else {
      cols.pop_back();
    }
  }
  if (chosen.size() != n) throw Error("theta_projector: interpolation system is singular");
  ModMatrix m(n, n, k.modulus());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  Vec rhs(n, 0);
  rhs[0] = 1 % k.modulus();  // identity Weyl element, zeroth jet
  auto sol = LocalElimination(m, k.ell()).solve(rhs);
  if (!sol) throw Error("theta_projector: interpolation system is singular");
  LatticeAlgebraElement theta;
  for (std::size_t j = 0; j < n; ++j)
    if ((*sol)[j] != 0) theta[chosen[j]] = (*sol)[j];
  return theta;
}

DerivedIwahoriElement::DerivedIwahoriElement(ToralContext ctx) : ctx_(std::move(ctx)) {}

DerivedIwahoriElement DerivedIwahoriElement::bracket(const ToralContext& ctx, const CohClass& h) {
  DerivedIwahoriElement e(ctx);
  e.add({Coweight(static_cast<std::size_t>(ctx.rd->rank()), 0), 0}, h);
  return e;
}

DerivedIwahoriElement DerivedIwahoriElement::from_iwahori(const ToralContext& ctx, const IwahoriElement& a) {
  if (a.coeff() != ctx.s) throw Error("Iwahori element has different coefficients");
  DerivedIwahoriElement e(ctx);
  for (const auto& [sigma, c] : a.terms()) e.add(sigma, CohClass::one(ctx.t, ctx.s).scaled(c));
  return e;
}

CohClass DerivedIwahoriElement::value(const AffineWeylElement& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? CohClass(ctx_.t, ctx_.s) : it->second;
}

void DerivedIwahoriElement::add(const AffineWeylElement& sigma, const CohClass& v) {
  if (v.group() != ctx_.t || v.coeff() != ctx_.s) throw Error("value lives over the wrong group or coefficients");
  if (v.is_zero()) return;
  auto it = terms_.find(sigma);
  if (it == terms_.end()) {
    terms_.emplace(sigma, v);
    return;
  }
  it->second = it->second + v;
  if (it->second.is_zero()) terms_.erase(it);
}

DerivedIwahoriElement DerivedIwahoriElement::operator+(const DerivedIwahoriElement& o) const {
  DerivedIwahoriElement out(*this);
  for (const auto& [k, v] : o.terms_) out.add(k, v);
  return out;
}

DerivedIwahoriElement DerivedIwahoriElement::scaled(Int c) const {
  DerivedIwahoriElement out(ctx_);
  for (const auto& [k, v] : terms_) out.add(k, v.scaled(c));
  return out;
}

DerivedIwahoriElement derived_iwahori_multiply(const DerivedIwahoriElement& a, const DerivedIwahoriElement& b) {
  if (!(a.context() == b.context())) throw Error("multiplying derived Iwahori elements over different contexts");
  const RootDatum& rd = *a.context().rd;
  DerivedIwahoriElement out(a.context());
  for (const auto& [s1, v1] : a.terms())
    for (const auto& [s2, v2] : b.terms()) out.add(affine_multiply(rd, s1, s2), cup(v1, weyl_act(rd, s1.w, v2)));
  return out;
}

ToralElement spherical_compress(const ToralContext& ctx, const LatticeAlgebraElement& theta, const CohClass& h) {
  const RootDatum& rd = *ctx.rd;
  const Int w = static_cast<Int>(rd.weyl_order());
  auto ek = DerivedIwahoriElement::from_iwahori(ctx, e_K(ctx.rd, ctx.s));
  IwahoriElement th(ctx.rd, ctx.s);
  for (const auto& [l, c] : theta) th.add({l, 0}, c);
  auto p = derived_iwahori_multiply(
      derived_iwahori_multiply(
          derived_iwahori_multiply(ek, DerivedIwahoriElement::from_iwahori(ctx, th)),
          DerivedIwahoriElement::bracket(ctx, h)),
      ek);
  p = p.scaled(w);
  ToralElement f(ctx);
  for (const auto& [sigma, v] : p.terms())
    if (sigma.w == 0) f.add(sigma.translation, v.scaled(w));
  // p must equal f e_K
  DerivedIwahoriElement fe(ctx);
  for (const auto& [l, v] : f.support()) fe.add({l, 0}, v);
  fe = derived_iwahori_multiply(fe, ek);
  if (fe != p) throw Error("spherical_compress: product is not of the form F e_K");
  return f;
}

std::vector<CohClass> toral_jet(const ToralElement& f, const Character& chi, int precision) {
  check_precision(chi, precision);
  const ToralContext& ctx = f.context();
  if (chi.k != ctx.s) throw Error("character and element use different coefficients");
  auto idx = jet_indices(ctx.rd->rank(), precision);
  std::vector<CohClass> out(idx.size(), CohClass(ctx.t, ctx.s));
  for (std::size_t t = 0; t < idx.size(); ++t)
    for (const auto& [l, v] : f.support()) out[t] = out[t] + v.scaled(jet_entry(chi, l, idx[t]));
  return out;
}

}  // namespace dhecke
