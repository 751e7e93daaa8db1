#include "dhecke/manifold.hpp"

#include <algorithm>
#include <bit>

namespace dhecke {

namespace {

void check_delta(int delta) {
  if (delta < 0 || delta > 20) throw InputError("delta must lie in [0, 20]");
}

/// Sign of e_a ^ e_b against the sorted product.
int wedge_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t bits = b; bits; bits &= bits - 1) {
    std::uint32_t low = bits & (~bits + 1);
    swaps += std::popcount(a & ~((low << 1) - 1));
  }
  return swaps % 2 ? -1 : 1;
}

}  // namespace

ManifoldClass::ManifoldClass(int delta, CoeffRing s) : delta_(delta), s_(std::move(s)) { check_delta(delta); }

ManifoldClass ManifoldClass::one(int delta, const CoeffRing& s) { return basis(delta, s, 0); }

ManifoldClass ManifoldClass::linear(const CoeffRing& s, const std::vector<Int>& values) {
  ManifoldClass c(static_cast<int>(values.size()), s);
  for (std::size_t i = 0; i < values.size(); ++i) c.add(1u << i, values[i]);
  return c;
}

ManifoldClass ManifoldClass::basis(int delta, const CoeffRing& s, std::uint32_t mask, Int c) {
  ManifoldClass out(delta, s);
  out.add(mask, c);
  return out;
}

Int ManifoldClass::coefficient(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? 0 : it->second;
}

int ManifoldClass::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int k = std::popcount(m);
    if (d >= 0 && k != d) throw Error("class is not homogeneous");
    d = k;
  }
  return d < 0 ? 0 : d;
}

void ManifoldClass::add(std::uint32_t mask, Int c) {
  if (delta_ < 32 && (mask >> delta_) != 0) throw Error("wedge index beyond delta");
  c = s_.reduce(c);
  if (c == 0) return;
  Int& slot = terms_[mask];
  slot = s_.add(slot, c);
  if (slot == 0) terms_.erase(mask);
}

ManifoldClass ManifoldClass::operator+(const ManifoldClass& o) const {
  if (delta_ != o.delta_ || s_ != o.s_) throw Error("adding classes on different manifolds");
  ManifoldClass out(*this);
  for (const auto& [m, c] : o.terms_) out.add(m, c);
  return out;
}

ManifoldClass ManifoldClass::operator-(const ManifoldClass& o) const { return *this + o.scaled(-1); }

ManifoldClass ManifoldClass::scaled(Int c) const {
  ManifoldClass out(delta_, s_);
  for (const auto& [m, v] : terms_) out.add(m, s_.mul(v, c));
  return out;
}

ManifoldClass ManifoldClass::reduced(int m) const {
  ManifoldClass out(delta_, s_.reduced(m));
  for (const auto& [k, v] : terms_) out.add(k, v);
  return out;
}

std::string ManifoldClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c);
    for (int i = 0; i < delta_; ++i)
      if (m >> i & 1u) out += "*e" + std::to_string(i + 1);
  }
  return out;
}

ManifoldClass wedge(const ManifoldClass& a, const ManifoldClass& b) {
  if (a.delta() != b.delta() || a.coeff() != b.coeff()) throw Error("wedge of classes on different manifolds");
  ManifoldClass out(a.delta(), a.coeff());
  const CoeffRing& s = a.coeff();
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      out.add(ma | mb, s.mul(s.mul(ca, cb), wedge_sign(ma, mb)));
    }
  return out;
}

TorusManifold::TorusManifold(int delta, std::vector<Place> places) : delta_(delta), places_(std::move(places)) {
  check_delta(delta);
  for (auto& p : places_) {
    if (p.matrix.size() != static_cast<std::size_t>(p.target.rank()))
      throw InputError("place " + p.label + ": matrix needs one row per factor of T_v");
    for (std::size_t i = 0; i < p.matrix.size(); ++i) {
      if (p.matrix[i].size() != static_cast<std::size_t>(delta))
        throw InputError("place " + p.label + ": matrix needs delta columns");
      for (auto& c : p.matrix[i]) c = floor_mod(c, p.target.factor_order(static_cast<int>(i)));
    }
    for (const auto& o : places_)
      if (&o != &p && o.label == p.label) throw InputError("duplicate place " + p.label);
  }
}

const Place& TorusManifold::place(const std::string& label) const {
  for (const auto& p : places_)
    if (p.label == label) return p;
  throw InputError("unknown place " + label);
}

ManifoldClass congruence_class(const TorusManifold& m, const std::string& v, const std::vector<Int>& alpha,
                               const CoeffRing& s) {
  const Place& p = m.place(v);
  if (alpha.size() != static_cast<std::size_t>(p.target.rank()))
    throw InputError("character needs one value per factor of T_v");
  if (p.target.rank() > 0 && p.target.ell() != s.ell()) throw InputError("T_v and S are for different primes");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    // alpha is defined on Z/ell^n_i only if ell^n_i alpha_i = 0 in S
    if (s.mul(alpha[i], p.target.factor_order(static_cast<int>(i))) != 0)
      throw InputError("character value " + std::to_string(alpha[i]) + " is not killed by the factor order");
  }
  std::vector<Int> values(static_cast<std::size_t>(m.delta()), 0);
  for (int j = 0; j < m.delta(); ++j)
    for (std::size_t i = 0; i < alpha.size(); ++i)
      values[static_cast<std::size_t>(j)] =
          s.add(values[static_cast<std::size_t>(j)], s.mul(alpha[i], p.matrix[i][static_cast<std::size_t>(j)]));
  return ManifoldClass::linear(s, values);
}

ManifoldClass derived_act(const TorusManifold& m, const std::string& v, const std::vector<Int>& alpha,
                          const ManifoldClass& omega) {
  if (omega.delta() != m.delta()) throw Error("class lives on a different manifold");
  return wedge(congruence_class(m, v, alpha, omega.coeff()), omega);
}

std::vector<std::uint32_t> exterior_basis(int delta) {
  check_delta(delta);
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << delta); ++m) out.push_back(m);
  std::stable_sort(out.begin(), out.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  return out;
}

ModMatrix endomorphism_matrix(int delta, const CoeffRing& s,
                              const std::function<ManifoldClass(const ManifoldClass&)>& f) {
  auto basis = exterior_basis(delta);
  ModMatrix out(basis.size(), basis.size(), s.modulus());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    ManifoldClass img = f(ManifoldClass::basis(delta, s, basis[j]));
    if (img.coeff() != s || img.delta() != delta) throw Error("endomorphism changes the coefficients");
    for (std::size_t i = 0; i < basis.size(); ++i) out(i, j) = img.coefficient(basis[i]);
  }
  return out;
}

ExteriorReport exterior_generation_report(const TorusManifold& m, const CoeffRing& s,
                                          const std::vector<ExteriorChoice>& choices) {
  const int d = m.delta();
  std::vector<ManifoldClass> classes;
  for (const auto& c : choices) classes.push_back(congruence_class(m, c.place, c.alpha, s));
  ExteriorReport rep;
  rep.free = true;
  const auto basis = exterior_basis(d);
  // wedges of the chosen classes applied to 1, grouped by degree
  std::vector<std::vector<ManifoldClass>> by_degree(static_cast<std::size_t>(d) + 1);
  const std::size_t n = classes.size();
  if (n > 20) throw InputError("too many chosen classes");
  for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
    int k = std::popcount(sub);
    if (k > d) continue;
    ManifoldClass w = ManifoldClass::one(d, s);
    for (std::size_t i = 0; i < n; ++i)
      if (sub >> i & 1u) w = wedge(classes[i], w);
    by_degree[static_cast<std::size_t>(k)].push_back(w);
  }
  for (int k = 0; k <= d; ++k) {
    std::vector<std::uint32_t> deg;
    for (auto b : basis)
      if (std::popcount(b) == k) deg.push_back(b);
    const auto& ws = by_degree[static_cast<std::size_t>(k)];
    rep.expected.push_back(deg.size());
    if (ws.empty()) {
      rep.ranks.push_back(0);
      rep.free = false;
      rep.witnesses.push_back("degree " + std::to_string(k) + ": no wedges of the chosen classes");
      continue;
    }
    ModMatrix mat(deg.size(), ws.size(), s.modulus());
    for (std::size_t j = 0; j < ws.size(); ++j)
      for (std::size_t i = 0; i < deg.size(); ++i) mat(i, j) = ws[j].coefficient(deg[i]);
    LocalElimination e(mat, s.ell());
    rep.ranks.push_back(e.rank());
    if (!e.surjective()) {
      rep.free = false;
      std::string w = "degree " + std::to_string(k) + ": span of wedges has invariants";
      for (int v : e.pivot_valuations()) w += " " + std::to_string(v);
      w += " (rank " + std::to_string(e.rank()) + " of " + std::to_string(deg.size()) + ")";
      rep.witnesses.push_back(w);
    }
  }
  return rep;
}

ModMatrix limit_assemble(Int p, const std::vector<ModMatrix>& t) {
  if (t.empty()) throw Error("limit_assemble needs at least one level");
  for (std::size_t k = 0; k < t.size(); ++k) {
    Int mod = ipow(p, static_cast<int>(k) + 1);
    if (t[k].modulus() != mod) throw Error("level " + std::to_string(k + 1) + " is not over Z/p^" + std::to_string(k + 1));
    if (k == 0) continue;
    if (t[k].rows() != t[k - 1].rows() || t[k].cols() != t[k - 1].cols())
      throw Error("levels " + std::to_string(k) + " and " + std::to_string(k + 1) + " have different shapes");
    ModMatrix down = t[k].reduced(t[k - 1].modulus());
    for (std::size_t i = 0; i < down.rows(); ++i)
      for (std::size_t j = 0; j < down.cols(); ++j)
        if (down(i, j) != t[k - 1](i, j))
          throw Error("incompatible levels: t_" + std::to_string(k + 1) + " does not reduce to t_" +
                      std::to_string(k) + " at entry (" + std::to_string(i) + ", " + std::to_string(j) + "): " +
                      std::to_string(down(i, j)) + " vs " + std::to_string(t[k - 1](i, j)));
  }
  return t.back();
}

}  // namespace dhecke
