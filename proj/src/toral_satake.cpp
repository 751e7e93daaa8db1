#include "dhecke/toral_satake.hpp"

#include <algorithm>
#include <set>

#include "dhecke/abelian_group.hpp"

namespace dhecke {

ToralContext::ToralContext(RootDatum rd_in, AbelianLGroup t_in, CoeffRing s_in)
    : rd(std::make_shared<const RootDatum>(std::move(rd_in))), t(std::move(t_in)), s(std::move(s_in)) {
  if (t.rank() != rd->rank()) throw Error("torus rank does not match the root datum");
  check_cohomology_regime(t, s);
}

ToralContext ToralContext::for_q(const RootDatum& rd, Int q, const CoeffRing& s) {
  AbelianLGroup c = ell_part(q, s.ell());
  if (c.is_trivial()) throw RegimeError("ell does not divide q - 1");
  return ToralContext(rd, AbelianLGroup::homogeneous(s.ell(), c.exponent(0), rd.rank()), s);
}

ToralElement::ToralElement(ToralContext ctx) : ctx_(std::move(ctx)) {}

ToralElement ToralElement::delta(const ToralContext& ctx, const Coweight& lambda, const CohClass& value) {
  ToralElement e(ctx);
  e.add(lambda, value);
  return e;
}

ToralElement ToralElement::one(const ToralContext& ctx) {
  return delta(ctx, Coweight(static_cast<std::size_t>(ctx.rd->rank()), 0), CohClass::one(ctx.t, ctx.s));
}

CohClass ToralElement::value(const Coweight& lambda) const {
  auto it = support_.find(lambda);
  return it == support_.end() ? CohClass(ctx_.t, ctx_.s) : it->second;
}

void ToralElement::add(const Coweight& lambda, const CohClass& value) {
  if (static_cast<int>(lambda.size()) != ctx_.rd->rank()) throw Error("coweight has the wrong rank");
  if (value.group() != ctx_.t || value.coeff() != ctx_.s) throw Error("value lives over the wrong group or coefficients");
  if (value.is_zero()) return;
  auto it = support_.find(lambda);
  if (it == support_.end()) {
    support_.emplace(lambda, value);
    return;
  }
  it->second = it->second + value;
  if (it->second.is_zero()) support_.erase(it);
}

bool ToralElement::is_homogeneous() const {
  std::set<int> degs;
  for (const auto& [l, v] : support_) {
    if (!v.is_homogeneous()) return false;
    degs.insert(v.degree());
  }
  return degs.size() <= 1;
}

int ToralElement::degree() const {
  if (!is_homogeneous()) throw Error("element is not homogeneous");
  return support_.empty() ? 0 : support_.begin()->second.degree();
}

Int ToralElement::support_radius() const {
  Int r = 0;
  for (const auto& [l, v] : support_)
    for (Int c : l) r = std::max(r, c < 0 ? -c : c);
  return r;
}

ToralElement ToralElement::operator+(const ToralElement& o) const {
  if (!(ctx_ == o.ctx_)) throw Error("adding toral elements over different contexts");
  ToralElement out(*this);
  for (const auto& [l, v] : o.support_) out.add(l, v);
  return out;
}

ToralElement ToralElement::operator-(const ToralElement& o) const { return *this + o.scaled(-1); }

ToralElement ToralElement::scaled(Int c) const {
  ToralElement out(ctx_);
  for (const auto& [l, v] : support_) out.add(l, v.scaled(c));
  return out;
}

bool ToralElement::operator==(const ToralElement& o) const { return ctx_ == o.ctx_ && support_ == o.support_; }

std::string ToralElement::to_string() const {
  if (support_.empty()) return "0";
  std::string s;
  for (const auto& [l, v] : support_) {
    if (!s.empty()) s += " + ";
    s += "d(";
    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
    s += ")*[" + v.to_string() + "]";
  }
  return s;
}

ToralElement toral_convolve(const ToralElement& a, const ToralElement& b, const ProductBounds& bounds) {
  if (!(a.context() == b.context())) throw Error("convolving toral elements over different contexts");
  ToralElement out(a.context());
  for (const auto& [la, va] : a.support()) {
    for (const auto& [lb, vb] : b.support()) {
      Coweight l(la);
      for (std::size_t i = 0; i < l.size(); ++i) l[i] += lb[i];
      CohClass c = cup(va, vb);
      if (c.is_zero()) continue;
      if (bounds.support >= 0)
        for (Int x : l)
          if (x > bounds.support || -x > bounds.support)
            throw Error("product support exceeds the bound " + std::to_string(bounds.support));
      if (bounds.degree >= 0)
        for (const auto& [m, coef] : c.terms())
          if (m.degree() > bounds.degree)
            throw Error("product degree exceeds the bound " + std::to_string(bounds.degree));
      out.add(l, c);
    }
  }
  return out;
}

ToralElement toral_weyl_act(int w, const ToralElement& a) {
  ToralElement out(a.context());
  for (const auto& [l, v] : a.support()) out.add(a.root_datum().act(w, l), weyl_act(a.root_datum(), w, v));
  return out;
}

bool is_spherical(const ToralElement& a) {
  for (std::size_t w = 1; w < a.root_datum().weyl_order(); ++w)
    if (toral_weyl_act(static_cast<int>(w), a) != a) return false;
  return true;
}

ToralElement satake_basis(const ToralContext& ctx, const Coweight& lambda, const CohClass& alpha) {
  const RootDatum& rd = *ctx.rd;
  if (!rd.is_dominant(lambda)) throw Error("satake_basis: lambda is not dominant");
  for (int w : rd.stabilizer(lambda))
    if (weyl_act(rd, w, alpha) != alpha) throw Error("satake_basis: class is not invariant under the stabilizer of lambda");
  ToralElement out(ctx);
  std::set<Coweight> seen;
  for (std::size_t w = 0; w < rd.weyl_order(); ++w) {
    Coweight mu = rd.act(static_cast<int>(w), lambda);
    if (!seen.insert(mu).second) continue;
    out.add(mu, weyl_act(rd, static_cast<int>(w), alpha));
  }
  return out;
}

ToralElement symmetrize(const ToralElement& a) {
  const RootDatum& rd = a.root_datum();
  const CoeffRing& s = a.context().s;
  const Int w = static_cast<Int>(rd.weyl_order());
  if (!s.is_unit(w)) throw RegimeError("|W| = " + std::to_string(w) + " is not invertible in " + s.to_string());
  ToralElement out(a.context());
  for (std::size_t x = 0; x < rd.weyl_order(); ++x) out = out + toral_weyl_act(static_cast<int>(x), a);
  return out.scaled(s.inv(w));
}

ModMatrix weyl_matrix(const RootDatum& rd, int w, const AbelianLGroup& t, const CoeffRing& s, int k) {
  auto basis = monomial_basis(t.rank(), k);
  ModMatrix m(basis.size(), basis.size(), s.modulus());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    CohClass img = weyl_act(rd, w, CohClass::monomial(t, s, basis[j]));
    for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = img.coefficient(basis[i]);
  }
  return m;
}

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

}  // namespace

InvariantTable invariant_dims(const ToralContext& ctx, Int n, int d) {
  const RootDatum& rd = *ctx.rd;
  const CoeffRing& s = ctx.s;
  std::vector<Coweight> pts;
  Coweight cur(static_cast<std::size_t>(rd.rank()), 0);
  box_points(rd.rank(), n, cur, 0, pts);
  InvariantTable table;
  for (const auto& p : pts)
    if (rd.is_dominant(p)) table.shells.push_back(p);
  table.totals.assign(static_cast<std::size_t>(d + 1), 0);
  std::vector<std::vector<ModMatrix>> act(rd.weyl_order());
  for (std::size_t w = 0; w < rd.weyl_order(); ++w)
    for (int k = 0; k <= d; ++k) act[w].push_back(weyl_matrix(rd, static_cast<int>(w), ctx.t, s, k));
  for (const auto& shell : table.shells) {
    std::vector<Coweight> orbit = rd.orbit(shell);
    std::vector<std::size_t> row;
    for (int k = 0; k <= d; ++k) {
      const std::size_t b = monomial_basis(ctx.t.rank(), k).size();
      const std::size_t unknowns = orbit.size() * b;
      // value(w mu) - w.value(mu) = 0 for every w and mu
      ModMatrix c(rd.weyl_order() * orbit.size() * b, unknowns, s.modulus());
      std::size_t r = 0;
      for (std::size_t w = 0; w < rd.weyl_order(); ++w) {
        const ModMatrix& a = act[w][static_cast<std::size_t>(k)];
        for (std::size_t mi = 0; mi < orbit.size(); ++mi) {
          Coweight wm = rd.act(static_cast<int>(w), orbit[mi]);
          std::size_t wi = static_cast<std::size_t>(std::lower_bound(orbit.begin(), orbit.end(), wm) - orbit.begin());
          for (std::size_t i = 0; i < b; ++i, ++r) {
            c.add_to(r, wi * b + i, 1);
            for (std::size_t j = 0; j < b; ++j) c.add_to(r, mi * b + j, -a(i, j));
          }
        }
      }
      LocalElimination e(c, s.ell());
      std::size_t rank = e.kernel_structure().generators();
      row.push_back(rank);
      table.totals[static_cast<std::size_t>(k)] += rank;
    }
    table.ranks.push_back(std::move(row));
  }
  return table;
}

}  // namespace dhecke
