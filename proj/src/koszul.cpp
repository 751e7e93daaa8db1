#include "dhecke/koszul.hpp"

#include <algorithm>
#include <functional>

#include "dhecke/abelian_group.hpp"
#include "dhecke/resolution.hpp"

namespace dhecke {

namespace {

std::vector<std::vector<int>> subsets(const std::vector<int>& on, std::size_t size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < on.size(); ++i) {
      cur.push_back(on[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

ModMatrix zero_matrix(std::size_t r, std::size_t c, Int m) { return ModMatrix(r, c, m); }

}  // namespace

LinearComplex koszul_complex(const CoeffRing& base, int vars, const std::vector<int>& on) {
  if (vars < 0) throw Error("negative number of variables");
  std::vector<int> sorted(on);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("repeated Koszul variable");
  for (int v : sorted)
    if (v < 0 || v >= vars) throw Error("Koszul variable out of range");
  LinearComplex c{base, vars, {}, {}, {}};
  const Int m = base.modulus();
  for (std::size_t k = 0; k <= sorted.size(); ++k) {
    c.labels.push_back(subsets(sorted, k));
    c.ranks.push_back(c.labels.back().size());
  }
  c.d.emplace_back();
  for (std::size_t k = 1; k <= sorted.size(); ++k) {
    std::vector<ModMatrix> dk(static_cast<std::size_t>(vars), zero_matrix(c.ranks[k - 1], c.ranks[k], m));
    const auto& lower = c.labels[k - 1];
    for (std::size_t col = 0; col < c.ranks[k]; ++col) {
      const auto& j = c.labels[k][col];
      for (std::size_t t = 0; t < j.size(); ++t) {
        std::vector<int> rest(j);
        rest.erase(rest.begin() + static_cast<long>(t));
        auto row = static_cast<std::size_t>(std::find(lower.begin(), lower.end(), rest) - lower.begin());
        dk[static_cast<std::size_t>(j[t])].set(row, col, t % 2 ? -1 : 1);
      }
    }
    c.d.push_back(std::move(dk));
  }
  return c;
}

bool is_complex(const LinearComplex& c) {
  for (int k = 2; k <= c.length(); ++k)
    for (int a = 0; a < c.vars; ++a)
      for (int b = a; b < c.vars; ++b) {
        const auto& lo = c.d[static_cast<std::size_t>(k - 1)];
        const auto& hi = c.d[static_cast<std::size_t>(k)];
        ModMatrix s = lo[static_cast<std::size_t>(a)] * hi[static_cast<std::size_t>(b)];
        if (a != b) s = s + lo[static_cast<std::size_t>(b)] * hi[static_cast<std::size_t>(a)];
        if (!s.is_zero()) return false;
      }
  return true;
}

std::vector<ModuleStructure> hom_cohomology(const LinearComplex& p, int max_degree) {
  const Int m = p.base.modulus();
  auto rank = [&](int k) -> std::size_t {
    return k < 0 || k > p.length() ? 0 : p.ranks[static_cast<std::size_t>(k)];
  };
  // the coboundary Hom(P_{k-1}, B) -> Hom(P_k, B) is the transpose of the
  // constant part of d_k, which is zero for a linear complex
  auto coboundary = [&](int k) { return zero_matrix(rank(k), std::max<std::size_t>(rank(k - 1), 1), m); };
  std::vector<ModuleStructure> out;
  for (int k = 0; k <= max_degree; ++k) {
    if (rank(k) == 0) {
      out.push_back(ModuleStructure{p.base.r(), {}});
      continue;
    }
    out.push_back(homology(coboundary(k), coboundary(k + 1), p.base.ell()));
  }
  return out;
}

std::vector<ModMatrix> lift_cocycle(const LinearComplex& p, const LinearComplex& q, const Vec& phi, int degree,
                                    int steps) {
  if (p.vars != q.vars || p.base != q.base) throw Error("chain lift between complexes over different rings");
  if (degree < 0 || degree > p.length()) throw Error("cocycle degree out of range");
  if (phi.size() != p.ranks[static_cast<std::size_t>(degree)]) throw Error("cocycle has the wrong length");
  if (q.ranks.empty() || q.ranks[0] != 1) throw Error("target complex must resolve the base ring");
  const Int m = p.base.modulus();
  std::vector<ModMatrix> f;
  ModMatrix f0(1, phi.size(), m);
  for (std::size_t j = 0; j < phi.size(); ++j) f0.set(0, j, phi[j]);
  f.push_back(f0);
  for (int k = 1; k <= steps; ++k) {
    const int src = degree + k;
    if (src > p.length() || k > q.length()) break;
    const std::size_t rows = q.ranks[static_cast<std::size_t>(k)];
    const std::size_t cols = p.ranks[static_cast<std::size_t>(src)];
    const std::size_t below = q.ranks[static_cast<std::size_t>(k - 1)];
    // q.d[k][v] * F_k = F_{k-1} * p.d[src][v] for every variable v
    ModMatrix sys(static_cast<std::size_t>(q.vars) * below * cols, rows * cols, m);
    Vec rhs(sys.rows(), 0);
    for (int v = 0; v < q.vars; ++v) {
      const ModMatrix& dq = q.d[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)];
      ModMatrix target = f.back() * p.d[static_cast<std::size_t>(src)][static_cast<std::size_t>(v)];
      for (std::size_t r = 0; r < below; ++r)
        for (std::size_t b = 0; b < cols; ++b) {
          std::size_t eq = (static_cast<std::size_t>(v) * below + r) * cols + b;
          rhs[eq] = target(r, b);
          for (std::size_t a = 0; a < rows; ++a)
            if (dq(r, a)) sys(eq, a * cols + b) = dq(r, a);
        }
    }
    auto x = LocalElimination(sys, p.base.ell()).solve(rhs);
    if (!x) throw Error("chain lift failed in degree " + std::to_string(k));
    ModMatrix fk(rows, cols, m);
    for (std::size_t a = 0; a < rows; ++a)
      for (std::size_t b = 0; b < cols; ++b) fk.set(a, b, (*x)[a * cols + b]);
    f.push_back(std::move(fk));
  }
  return f;
}

Vec yoneda(const LinearComplex& p, const LinearComplex& q, const Vec& a, int a_degree, const Vec& m, int m_degree) {
  const std::size_t total = static_cast<std::size_t>(a_degree + m_degree);
  if (a_degree + m_degree > p.length()) return Vec{};
  auto f = lift_cocycle(p, q, m, m_degree, a_degree);
  const ModMatrix& fa = f.at(static_cast<std::size_t>(a_degree));
  if (a.size() != fa.rows()) throw Error("Yoneda factor has the wrong length");
  Vec out(p.ranks[total], 0);
  for (std::size_t b = 0; b < out.size(); ++b)
    for (std::size_t r = 0; r < a.size(); ++r) out[b] = p.base.add(out[b], p.base.mul(a[r], fa(r, b)));
  return out;
}

namespace {

Vec dual_basis(const LinearComplex& c, const std::vector<int>& j) {
  std::vector<int> s(j);
  std::sort(s.begin(), s.end());
  if (s.size() >= c.labels.size()) throw Error("wedge index beyond the complex");
  const auto& lab = c.labels[s.size()];
  auto it = std::find(lab.begin(), lab.end(), s);
  if (it == lab.end()) throw Error("wedge index not in the complex");
  Vec v(lab.size(), 0);
  v[static_cast<std::size_t>(it - lab.begin())] = 1;
  return v;
}

std::vector<std::size_t> generator_counts(const std::vector<ModuleStructure>& h) {
  std::vector<std::size_t> out;
  for (const auto& s : h) out.push_back(s.generators());
  return out;
}

}  // namespace

Vec ExtAlgebra::basis_element(const std::vector<int>& j) const { return dual_basis(resolution, j); }

Vec ExtAlgebra::multiply(const Vec& a, int p, const Vec& b, int q) const {
  Vec out = yoneda(resolution, resolution, a, p, b, q);
  if (out.empty() && p + q <= static_cast<int>(ranks.size()) - 1) out.assign(ranks[static_cast<std::size_t>(p + q)], 0);
  return out;
}

ExtAlgebra ext_self_algebra(const CoeffRing& base, int vars, int max_degree) {
  std::vector<int> all(static_cast<std::size_t>(vars));
  for (int i = 0; i < vars; ++i) all[static_cast<std::size_t>(i)] = i;
  ExtAlgebra e{koszul_complex(base, vars, all), {}};
  if (!is_complex(e.resolution)) throw Error("Koszul differential does not square to zero");
  e.ranks = generator_counts(hom_cohomology(e.resolution, max_degree));
  return e;
}

Vec ExtModule::basis_element(const std::vector<int>& j) const { return dual_basis(complex, j); }

Vec ExtModule::act(const Vec& a, int p, const Vec& m, int q) const {
  Vec out = yoneda(complex, algebra.resolution, a, p, m, q);
  if (out.empty() && p + q <= static_cast<int>(ranks.size()) - 1) out.assign(ranks[static_cast<std::size_t>(p + q)], 0);
  return out;
}

ExtModule ext_quotient_module(const CoeffRing& base, int vars, const std::vector<int>& u, int max_degree) {
  ExtModule e{ext_self_algebra(base, vars, max_degree), koszul_complex(base, vars, u), {}, {}};
  if (!is_complex(e.complex)) throw Error("Koszul differential does not square to zero");
  e.u = u;
  std::sort(e.u.begin(), e.u.end());
  e.ranks = generator_counts(hom_cohomology(e.complex, max_degree));
  return e;
}

ExtModule ext_quotient_module(const CoeffRing& base, int vars, const std::vector<Vec>& u_span, int max_degree) {
  std::vector<int> u;
  for (const auto& v : u_span) {
    if (static_cast<int>(v.size()) != vars) throw InputError("spanning vector has the wrong length");
    int hit = -1;
    for (int i = 0; i < vars; ++i) {
      Int c = base.reduce(v[static_cast<std::size_t>(i)]);
      if (c == 0) continue;
      if (hit >= 0 || !base.is_unit(c)) throw InputError("U not coordinate-aligned");
      hit = i;
    }
    if (hit < 0) continue;
    if (std::find(u.begin(), u.end(), hit) == u.end()) u.push_back(hit);
  }
  return ext_quotient_module(base, vars, u, max_degree);
}

FreenessReport freeness_generation_check(const CoeffRing& base, int vars, const std::vector<int>& u, int max_degree) {
  ExtModule mod = ext_quotient_module(base, vars, u, max_degree);
  FreenessReport rep;
  rep.ranks = mod.ranks;
  rep.generation_degree = -1;
  for (std::size_t k = 0; k < mod.ranks.size(); ++k)
    if (mod.ranks[k] > 0) {
      rep.generation_degree = static_cast<int>(k);
      break;
    }
  if (rep.generation_degree < 0) {
    rep.free = false;
    rep.witness_failures.push_back("module is zero");
    return rep;
  }
  const int g = rep.generation_degree;
  const Int m = base.modulus();
  const auto& gens = mod.complex.labels[static_cast<std::size_t>(g)];
  for (int j = 0; g + j <= max_degree && g + j <= mod.complex.length(); ++j) {
    const auto& alg = mod.algebra.resolution.labels[static_cast<std::size_t>(j)];
    const std::size_t target = mod.ranks[static_cast<std::size_t>(g + j)];
    // pairing H^g (x) Ext^j(B, B) -> H^{g+j}, one column per pair of basis elements
    ModMatrix pairing(target, gens.size() * alg.size(), m);
    ModMatrix on_gen(target, alg.size(), m);
    for (std::size_t s = 0; s < gens.size(); ++s)
      for (std::size_t a = 0; a < alg.size(); ++a) {
        Vec img = mod.act(mod.algebra.basis_element(alg[a]), j, mod.basis_element(gens[s]), g);
        for (std::size_t i = 0; i < target; ++i) {
          pairing(i, s * alg.size() + a) = img[i];
          if (s == 0) on_gen(i, a) = img[i];
        }
        bool inside = std::all_of(alg[a].begin(), alg[a].end(), [&](int v) {
          return std::find(mod.u.begin(), mod.u.end(), v) != mod.u.end();
        });
        bool zero = std::all_of(img.begin(), img.end(), [](Int c) { return c == 0; });
        if (!inside && !zero)
          rep.witness_failures.push_back("degree " + std::to_string(j) + ": a direction outside U acts nontrivially");
      }
    LocalElimination ep(pairing, base.ell());
    if (target > 0 && !ep.surjective()) {
      rep.surjective = false;
      rep.witness_failures.push_back("pairing not surjective onto degree " + std::to_string(g + j));
    }
    // freeness: a -> a . generator is onto with image free of the expected rank
    LocalElimination eg(on_gen, base.ell());
    std::size_t expect = mod.ranks[static_cast<std::size_t>(g + j)];
    auto img = eg.image_structure();
    if (gens.size() != 1 || img.generators() != expect || !img.is_free() || (target > 0 && !eg.surjective())) {
      rep.free = false;
      rep.witness_failures.push_back("not free of rank one in degree " + std::to_string(g + j));
    }
  }
  return rep;
}

GroupRingSn::GroupRingSn(Int p_in, int n_in, int big_n_in, int rank_in) : p(p_in), n(n_in), big_n(big_n_in), rank(rank_in) {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (p == 2) throw RegimeError("p must be odd");
  if (rank < 1 || rank > 2) throw InputError("group ring rank must be 1 or 2");
  if (n < 1 || big_n < n) throw InputError("need 1 <= n <= N");
}

GroupRingExtReport group_ring_ext(const GroupRingSn& s, int max_degree) {
  if (max_degree < 1) throw Error("group_ring_ext needs max_degree >= 1");
  const AbelianLGroup g = AbelianLGroup::homogeneous(s.p, s.big_n, s.rank);
  const CoeffRing b(s.p, s.n);
  const Int m = b.modulus();
  PeriodicResolution res(g, b, max_degree + 1);
  GroupRingExtReport rep;

  // Hom_{S_n}(P_k, B) = B^{rank P_k}; coboundary from the augmented boundary
  auto coboundary = [&](int k) {
    if (k == 0) return ModMatrix(res.rank(0), 1, m);
    ModMatrix c(res.rank(k), res.rank(k - 1), m);
    for (std::size_t j = 0; j < res.rank(k); ++j) {
      Vec db = res.boundary_of_generator(k, j);
      for (std::size_t i = 0; i < res.rank(k - 1); ++i) {
        Vec e(res.rank(k - 1), 0);
        e[i] = 1;
        c(j, i) = res.evaluate(k - 1, e, db);
      }
    }
    return c;
  };
  for (int k = 0; k <= max_degree; ++k) rep.ext.push_back(homology(coboundary(k), coboundary(k + 1), s.p));

  ExtAlgebra koszul = ext_self_algebra(b, s.rank, max_degree);
  rep.koszul_ranks = koszul.ranks;

  // chain lift of the identity from the Koszul resolution (over the power
  // series ring, acting through S -> S_n) to P in degree 1: e_i -> f_1(e_i)
  // with d f_1(e_i) = x_i e_0 = (t_i - 1) e_0
  const std::size_t order = res.order();
  ModMatrix f1(res.rank(1), static_cast<std::size_t>(s.rank), m);
  for (int i = 0; i < s.rank; ++i) {
    std::vector<Int> t(static_cast<std::size_t>(s.rank), 0);
    t[static_cast<std::size_t>(i)] = 1;
    Vec rhs(res.dim(0), 0);
    rhs[static_cast<std::size_t>(g.index(t))] = 1;
    rhs[0] = b.sub(rhs[0], 1);
    Vec lift = res.lift(1, rhs);
    for (std::size_t j = 0; j < res.rank(1); ++j) {
      Int c = 0;
      for (std::size_t h = 0; h < order; ++h) c = b.add(c, lift[j * order + h]);
      f1(j, static_cast<std::size_t>(i)) = c;
    }
  }
  // Ext^1_{S_n} -> Ext^1 over the power series ring: phi -> phi o f_1, on cocycles
  LocalElimination z(coboundary(2), s.p);
  auto cocycles = z.kernel_basis();
  ModMatrix map(static_cast<std::size_t>(s.rank), cocycles.size(), m);
  for (std::size_t c = 0; c < cocycles.size(); ++c)
    for (int i = 0; i < s.rank; ++i) {
      Int v = 0;
      for (std::size_t j = 0; j < res.rank(1); ++j) v = b.add(v, b.mul(cocycles[c].first[j], f1(j, static_cast<std::size_t>(i))));
      map(static_cast<std::size_t>(i), c) = v;
    }
  rep.change_of_rings = map;
  rep.surjective = LocalElimination(map, s.p).surjective();
  rep.ranks_match = rep.ext.size() > 1 && rep.koszul_ranks.size() > 1 &&
                    rep.ext[1].generators() == rep.koszul_ranks[1] && rep.ext[1].is_free();

  // I_n / I_n^2 inside B[G]: I_n spanned by g - 1, I_n^2 by (g - 1)(h - 1)
  ModMatrix ideal(order, order, m), square(order, order * order, m);
  for (std::size_t x = 0; x < order; ++x) {
    ideal.add_to(x, x, 1);
    ideal.add_to(0, x, -1);
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t col = x * order + y;
      square.add_to(res.group_add(x, y), col, 1);
      square.add_to(x, col, -1);
      square.add_to(y, col, -1);
      square.add_to(0, col, 1);
    }
  }
  // I/I^2 = B^order / (ker + preimage of I^2) for the map e_x -> x - 1
  LocalElimination ei(ideal, s.p);
  auto rel = ei.kernel_basis();
  ModMatrix full(order, order * order + rel.size(), m);
  for (std::size_t c = 0; c < order * order; ++c) {
    auto x = ei.solve(square.column(c));
    if (!x) throw Error("augmentation ideal square escapes the ideal");
    for (std::size_t i = 0; i < order; ++i) full(i, c) = (*x)[i];
  }
  for (std::size_t r = 0; r < rel.size(); ++r)
    for (std::size_t i = 0; i < order; ++i) full(i, order * order + r) = rel[r].first[i];
  rep.cotangent = LocalElimination(full, s.p).cokernel_structure();
  rep.cotangent_match = rep.ext.size() > 1 && rep.cotangent.exponents == rep.ext[1].exponents;
  return rep;
}

}  // namespace dhecke
