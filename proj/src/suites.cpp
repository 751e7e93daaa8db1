#include "dhecke/suites.hpp"

#include <map>
#include <memory>
#include <random>

#include "dhecke/iwahori.hpp"
#include "dhecke/koszul.hpp"
#include "dhecke/manifold.hpp"
#include "dhecke/regime.hpp"
#include "dhecke/resolution.hpp"
#include "dhecke/tree.hpp"

namespace dhecke {

bool SuiteReport::check(bool ok, const Json& witness) {
  if (ok) {
    ++passed_;
  } else {
    ++failed_;
    witnesses_.push_back(witness);
  }
  return ok;
}

Json SuiteReport::to_json() const {
  Json out;
  out["suite"] = suite_;
  out["checks_passed"] = passed_;
  out["checks_failed"] = failed_;
  out["witnesses"] = witnesses_;
  if (!details_.empty()) out["details"] = details_;
  return out;
}

namespace {

int degree_or(const RunConfig& cfg, int fallback) { return cfg.max_degree >= 0 ? cfg.max_degree : fallback; }

std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

std::vector<Coweight> box(int rank, Int radius) {
  std::vector<Coweight> pts{{}};
  for (int i = 0; i < rank; ++i) {
    std::vector<Coweight> next;
    for (const auto& p : pts)
      for (Int v = -radius; v <= radius; ++v) {
        Coweight c = p;
        c.push_back(v);
        next.push_back(std::move(c));
      }
    pts = std::move(next);
  }
  return pts;
}

std::vector<CohClass> classes_up_to(const AbelianLGroup& t, const CoeffRing& s, int d) {
  std::vector<CohClass> out;
  CohRing ring = coh_ring(t, s);
  for (int k = 0; k <= d; ++k)
    for (const auto& m : ring.basis(k)) out.push_back(CohClass::monomial(t, s, m));
  return out;
}

Json group_json(const AbelianLGroup& g) {
  std::vector<Int> orders;
  for (int i = 0; i < g.rank(); ++i) orders.push_back(g.factor_order(i));
  return orders;
}

}  // namespace

SuiteReport suite_satake_oracle(const RunConfig& cfg) {
  SuiteReport rep("satake-oracle");
  if (cfg.group != "PGL2") throw RegimeError("satake-oracle needs group PGL2 (the tree of PGL2)");
  RootDatum rd = build_root_datum("PGL2");
  CoeffRing s(cfg.ell, cfg.r);
  require_regime(rd, s, cfg.q);
  ToralContext ctx = ToralContext::for_q(rd, cfg.q, s);
  const int window = std::min(cfg.support, cfg.depth - 1);
  if (window < 0) throw InputError("depth must be at least 1");

  std::vector<ToralElement> basis;
  for (Int lam : {Int(-1), Int(0), Int(1)})
    for (const auto& a : classes_up_to(ctx.t, s, degree_or(cfg, 1))) {
      try {
        // the element with value a at lam, through its dominant representative
        auto [mu, w] = dominant_representative(rd, {lam});
        basis.push_back(satake_basis(ctx, mu, weyl_act(rd, w, a)));
      } catch (const InputError&) {
        throw;
      } catch (const Error&) {
        // a is not invariant under the stabilizer of lam
      }
    }
  rep.note("basis_size", basis.size());
  rep.note("window", window);
  std::size_t entries = 0;
  for (const auto& a : basis)
    for (const auto& b : basis) {
      auto conv = oracle_convolve(OracleElement::from_spherical(cfg.q, a), OracleElement::from_spherical(cfg.q, b),
                                  cfg.ell, window, cfg.depth);
      Json pair = {{"a", to_json(a)}, {"b", to_json(b)}};
      rep.check(conv.orbit_partition_ok, Json{{"pair", pair}, {"failure", "orbit sizes do not partition Gamma"}});
      const ConvolutionEntry* bad = nullptr;
      const ConvolutionEntry* leak = nullptr;
      for (const auto& e : conv.entries) {
        ++entries;
        if (!bad && !e.match()) bad = &e;
        if (!leak && !e.off_apartment.is_zero()) leak = &e;
      }
      rep.check(!bad, bad ? Json{{"pair", pair},
                                 {"x", bad->x},
                                 {"z", bad->z},
                                 {"oracle", to_json(bad->oracle)},
                                 {"model", to_json(bad->model)}}
                          : Json());
      rep.check(!leak, leak ? Json{{"pair", pair},
                                   {"x", leak->x},
                                   {"z", leak->z},
                                   {"off_apartment", to_json(leak->off_apartment)}}
                            : Json());
    }
  rep.note("entries_compared", entries);
  return rep;
}

SuiteReport suite_commutativity(const RunConfig& cfg) {
  SuiteReport rep("commutativity");
  RootDatum rd = build_root_datum(cfg.group);
  CoeffRing s(cfg.ell, cfg.r);
  require_regime(rd, s, cfg.q);
  ToralContext ctx = ToralContext::for_q(rd, cfg.q, s);
  const int dmax = degree_or(cfg, 2);
  CohRing ring = coh_ring(ctx.t, s);
  std::mt19937_64 rng(cfg.seed);
  auto pick = [&](Int n) { return static_cast<Int>(rng() % static_cast<std::uint64_t>(n)); };
  auto random_element = [&](int deg) {
    auto basis = ring.basis(deg);
    ToralElement a(ctx);
    if (basis.empty()) return a;
    for (int i = 0; i < 3; ++i) {
      Coweight l;
      for (int k = 0; k < rd.rank(); ++k) l.push_back(pick(2 * cfg.support + 1) - cfg.support);
      a.add(l, CohClass::monomial(ctx.t, s, basis[static_cast<std::size_t>(pick(static_cast<Int>(basis.size())))],
                                  pick(s.modulus())));
    }
    return symmetrize(a);
  };
  std::size_t nonzero = 0;
  for (int trial = 0; trial < cfg.samples; ++trial) {
    int da = static_cast<int>(pick(dmax + 1)), db = static_cast<int>(pick(dmax + 1));
    ToralElement a = random_element(da), b = random_element(db);
    ToralElement ab = toral_convolve(a, b, ProductBounds::unbounded());
    ToralElement ba = toral_convolve(b, a, ProductBounds::unbounded());
    if (!ab.is_zero()) ++nonzero;
    rep.check(ab == ba.scaled((da * db) % 2 ? -1 : 1),
              Json{{"a", to_json(a)}, {"b", to_json(b)}, {"degrees", {da, db}}});
    rep.check(is_spherical(ab), Json{{"a", to_json(a)}, {"b", to_json(b)}, {"failure", "product not spherical"}});
  }
  rep.note("group", cfg.group);
  rep.note("nonzero_products", nonzero);
  return rep;
}

SuiteReport suite_presentation(const RunConfig& cfg) {
  SuiteReport rep("presentation");
  if (cfg.group != "PGL2") throw RegimeError("presentation table is stated for PGL2");
  RootDatum rd = build_root_datum("PGL2");
  CoeffRing s(cfg.ell, cfg.r);
  require_regime(rd, s, cfg.q);
  ToralContext ctx = ToralContext::for_q(rd, cfg.q, s);
  Json table = Json::array();
  for (Int n = std::min<Int>(2, cfg.support); n <= cfg.support; ++n) {
    InvariantTable t = invariant_dims(ctx, n, 2);
    std::vector<std::size_t> expect{static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n),
                                    static_cast<std::size_t>(n)};
    rep.check(t.totals == expect, Json{{"N", n}, {"dims", t.totals}, {"expected", expect}});
    table.push_back({{"N", n}, {"dims", t.totals}});
  }
  rep.note("table", table);
  return rep;
}

SuiteReport suite_splitness(const RunConfig& cfg) {
  SuiteReport rep("splitness");
  if (cfg.group != "PGL2") throw RegimeError("splitness runs on the tree of PGL2");
  auto r = splitness_check(cfg.q, cfg.ell, cfg.r, cfg.depth);
  for (std::size_t i = r.failures.size(); i < r.checked_classes; ++i) rep.check(true, Json());
  for (const auto& f : r.failures) rep.check(false, f);
  Json orders = Json::object();
  for (const auto& [o, n] : r.stabilizer_orders) orders[std::to_string(o)] = n;
  rep.note("vertices", r.vertices);
  rep.note("off_apartment", r.off_apartment);
  rep.note("stabilizer_orders", orders);
  rep.note("checked_classes", r.checked_classes);
  return rep;
}

SuiteReport suite_iwahori(const RunConfig& cfg) {
  SuiteReport rep("iwahori");
  auto rd = std::make_shared<const RootDatum>(build_root_datum(cfg.group));
  CoeffRing s(cfg.ell, cfg.r);
  require_regime(*rd, s, cfg.q);
  const int rank = rd->rank();

  auto one = IwahoriElement::one(rd, s);
  for (int i = 0; i < static_cast<int>(rd->simple().size()); ++i) {
    auto t = IwahoriElement::weyl(rd, s, rd->simple_reflection(i));
    rep.check(iwahori_multiply(t, t) == one, Json{{"failure", "T_s^2 != 1"}, {"simple", i}});
  }
  auto ek = e_K(rd, s);
  rep.check(iwahori_multiply(ek, ek) == ek, Json{{"failure", "e_K not idempotent"}});

  // central elements: orbit sums of dominant coweights of length <= 3
  const Int box_radius = rank == 1 ? 3 : 1;
  std::vector<IwahoriElement> probes;
  for (const auto& l : box(rank, box_radius))
    for (std::size_t w = 0; w < rd->weyl_order(); ++w)
      probes.push_back(IwahoriElement::basis(rd, s, {l, static_cast<int>(w)}));
  std::size_t centrals = 0;
  for (const auto& l : box(rank, 3)) {
    if (!rd->is_dominant(l)) continue;
    LatticeAlgebraElement z;
    for (const auto& m : rd->orbit(l)) z[m] = 1;
    auto zc = central_embed(rd, s, z);
    ++centrals;
    bool ok = true;
    for (const auto& g : probes) ok = ok && iwahori_multiply(zc, g) == iwahori_multiply(g, zc);
    rep.check(ok, Json{{"failure", "orbit sum not central"}, {"lambda", l}});
    rep.check(iwahori_multiply(iwahori_multiply(ek, zc), ek) == iwahori_multiply(ek, zc),
              Json{{"failure", "e_K z e_K != e_K z"}, {"lambda", l}});
  }
  rep.note("central_elements", centrals);

  std::vector<Int> values = cfg.chi;
  if (values.empty()) values.assign(static_cast<std::size_t>(rank), 2);
  if (values.size() != static_cast<std::size_t>(rank)) throw InputError("--chi needs one value per rank");
  Character chi = [&] {
    try {
      return chi_t(s, values);
    } catch (const Error& e) {
      throw InputError(std::string("--chi: ") + e.what());
    }
  }();
  rep.note("chi", values);

  InducedRep v(rd, chi);
  std::vector<AffineWeylElement> sp;
  for (const auto& l : box(rank, 1))
    for (std::size_t w = 0; w < rd->weyl_order(); ++w) sp.push_back({l, static_cast<int>(w)});
  for (const auto& a : sp)
    for (const auto& b : sp)
      rep.check(v.act(a) * v.act(b) == v.act(affine_multiply(*rd, a, b)),
                Json{{"failure", "V_chi is not a representation"},
                     {"a", {a.translation, a.w}},
                     {"b", {b.translation, b.w}}});
  for (const auto& l : box(rank, 2)) {
    ModMatrix m = v.translation(l);
    bool ok = true;
    for (std::size_t i = 0; i < v.dim(); ++i)
      for (std::size_t j = 0; j < v.dim(); ++j) {
        Int expect = i == j ? weyl_twist(*rd, static_cast<int>(i), chi)(l) : 0;
        ok = ok && m(i, j) == expect;
      }
    rep.check(ok, Json{{"failure", "translation does not act by w chi on v_w"}, {"lambda", l}});
  }
  rep.check(LocalElimination(v.act(ek), s.ell()).rank() == 1, Json{{"failure", "e_K V_chi is not of rank 1"}});

  MoritaReport mr = morita_check(rd, chi);
  Json morita = {{"end_rank", mr.end_rank}, {"end_expected", mr.end_expected}, {"kk_rank", mr.kk_rank}};
  if (mr.applicable) {
    rep.check(mr.pass(), Json{{"failure", "endomorphism ranks"}, {"morita", morita}});
    morita["status"] = "checked";
  } else {
    morita["status"] = "not-applicable";
    morita["reason"] = mr.reason;
  }
  rep.note("morita", morita);

  if (!has_free_orbit(*rd, chi)) {
    rep.note("theta", "not-applicable: W-orbit of chi is not free");
    return rep;
  }
  ToralContext ctx = ToralContext::for_q(*rd, cfg.q, s);
  auto jets_ok = [&](const std::vector<Int>& vals, bool at_chi) {
    for (std::size_t t = 0; t < vals.size(); ++t)
      if (vals[t] != ((at_chi && t == 0) ? 1 : 0)) return false;
    return true;
  };
  for (int m = 1; m <= cfg.precision; ++m) {
    auto theta = theta_projector(*rd, chi, m);
    for (std::size_t w = 0; w < rd->weyl_order(); ++w)
      rep.check(jets_ok(jet(theta, weyl_twist(*rd, static_cast<int>(w), chi), m), w == 0),
                Json{{"failure", "theta interpolation"}, {"precision", m}, {"w", w}});
    for (const auto& h : classes_up_to(ctx.t, s, degree_or(cfg, 1))) {
      ToralElement f = spherical_compress(ctx, theta, h);
      ToralElement expect(ctx);
      for (const auto& [l, c] : theta)
        for (std::size_t w = 0; w < rd->weyl_order(); ++w)
          expect.add(rd->act(static_cast<int>(w), l), weyl_act(*rd, static_cast<int>(w), h).scaled(c));
      Json wit{{"precision", m}, {"h", to_json(h)}, {"compressed", to_json(f)}};
      rep.check(f == expect && f.support_radius() <= 3, wit);
      auto tj = toral_jet(f, chi, m);
      bool ok = tj[0] == h;
      for (std::size_t t = 1; t < tj.size(); ++t) ok = ok && tj[t].is_zero();
      rep.check(ok, wit);
    }
  }
  return rep;
}

SuiteReport suite_koszul(const RunConfig& cfg) {
  SuiteReport rep("koszul");
  CoeffRing base(cfg.ell, cfg.r);
  const int top = std::max(4, cfg.vars);
  for (int r = 0; r <= top; ++r) {
    auto e = ext_self_algebra(base, r, r);
    std::vector<std::size_t> expect;
    for (int i = 0; i <= r; ++i) expect.push_back(binom(r, i));
    rep.check(e.ranks == expect, Json{{"R", r}, {"ranks", e.ranks}, {"expected", expect}});
    if (r == cfg.vars) rep.note("ext_ranks", e.ranks);
  }

  for (auto [r, delta] : {std::pair<int, int>{2, 1}, {3, 1}, {3, 2}}) {
    std::vector<int> u;
    for (int i = r - delta; i < r; ++i) u.push_back(i);
    auto m = ext_quotient_module(base, r, u, r);
    std::vector<std::size_t> expect;
    for (int i = 0; i <= r; ++i) expect.push_back(binom(delta, i));
    Json where{{"R", r}, {"delta", delta}};
    rep.check(m.ranks == expect, Json{{"case", where}, {"ranks", m.ranks}});
    // variables outside U act by zero on the quotient module
    bool factors = true;
    for (int var = 0; var < r - delta; ++var)
      for (int q = 0; q < r; ++q)
        for (std::size_t j = 0; j < m.ranks[static_cast<std::size_t>(q)]; ++j) {
          Vec x(m.ranks[static_cast<std::size_t>(q)], 0);
          x[j] = 1;
          Vec img = m.act(m.algebra.basis_element({var}), 1, x, q);
          for (Int c : img) factors = factors && c == 0;
        }
    rep.check(factors, Json{{"case", where}, {"failure", "action does not factor through wedge(U)"}});
    auto fr = freeness_generation_check(base, r, u, r);
    rep.check(fr.pass(), Json{{"case", where}, {"ranks", fr.ranks}, {"failures", fr.witness_failures}});
  }

  Json group_rings = Json::array();
  for (int n = 1; n <= 2; ++n)
    for (int rank = 1; rank <= 2; ++rank) {
      auto g = group_ring_ext(GroupRingSn(cfg.ell, n, n, rank), degree_or(cfg, 2));
      Json where{{"p", cfg.ell}, {"n", n}, {"N", n}, {"R", rank}};
      rep.check(g.surjective, Json{{"case", where}, {"failure", "change of rings not onto Ext^1"}});
      rep.check(g.ranks_match, Json{{"case", where}, {"failure", "Ext ranks differ from the power-series side"}});
      rep.check(g.cotangent_match, Json{{"case", where}, {"failure", "I/I^2 differs from Ext^1"}});
      std::vector<std::size_t> gens;
      for (const auto& h : g.ext) gens.push_back(h.generators());
      group_rings.push_back({{"case", where}, {"ext_generators", gens}});
    }
  rep.note("group_rings", group_rings);
  return rep;
}

namespace {

TorusManifold default_manifold(int delta, Int ell, int n) {
  std::vector<std::vector<Int>> id(static_cast<std::size_t>(delta), std::vector<Int>(static_cast<std::size_t>(delta), 0));
  for (int i = 0; i < delta; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return TorusManifold(delta, {Place{"v", AbelianLGroup::homogeneous(ell, n, delta), id},
                               Place{"w", AbelianLGroup::cyclic(ell, 1), {std::vector<Int>(static_cast<std::size_t>(delta), 1)}}});
}

/// The characters alpha = ell^{max(0, level - n_i)} e_i of a place, one per factor.
std::vector<std::vector<Int>> basis_characters(const Place& p, int level) {
  std::vector<std::vector<Int>> out;
  for (int i = 0; i < p.target.rank(); ++i) {
    std::vector<Int> a(static_cast<std::size_t>(p.target.rank()), 0);
    a[static_cast<std::size_t>(i)] = ipow(p.target.ell(), std::max(0, level - p.target.exponent(i)));
    out.push_back(a);
  }
  return out;
}

void manifold_checks(SuiteReport& rep, const TorusManifold& m, Int ell, int levels, std::mt19937_64& rng) {
  const int d = m.delta();
  Json where{{"delta", d}};
  for (int n = 1; n <= levels; ++n) {
    CoeffRing s(ell, n);
    std::vector<ExteriorChoice> choices;
    for (const auto& p : m.places())
      for (const auto& a : basis_characters(p, n)) choices.push_back({p.label, a});
    auto er = exterior_generation_report(m, s, choices);
    rep.check(er.pass(), Json{{"manifold", where}, {"level", n}, {"ranks", er.ranks}, {"witnesses", er.witnesses}});
  }
  // the first place carries the action used below
  const Place& p = m.places().front();
  auto random_alpha = [&](int level) {
    std::vector<Int> a;
    for (const auto& c : basis_characters(p, level)) {
      Int k = static_cast<Int>(rng() % static_cast<std::uint64_t>(ipow(ell, level)));
      Int step = 0;
      for (Int x : c) step += x;
      a.push_back(k * step);
    }
    return a;
  };
  for (int n = 2; n <= levels; ++n) {
    CoeffRing s(ell, n);
    for (int t = 0; t < 10; ++t) {
      auto alpha = random_alpha(n);
      ManifoldClass omega(d, s);
      for (std::uint32_t k = 0; k < (1u << d); ++k) omega.add(k, static_cast<Int>(rng() % static_cast<std::uint64_t>(s.modulus())));
      auto lhs = derived_act(m, p.label, alpha, omega).reduced(n - 1);
      auto rhs = derived_act(m, p.label, alpha, omega.reduced(n - 1));
      rep.check(lhs == rhs, Json{{"manifold", where}, {"level", n}, {"alpha", alpha}, {"omega", omega.to_string()}});
    }
  }
  auto alpha = random_alpha(levels);
  std::vector<ModMatrix> acts;
  for (int n = 1; n <= levels; ++n) {
    CoeffRing s(ell, n);
    acts.push_back(endomorphism_matrix(d, s, [&](const ManifoldClass& w) { return derived_act(m, p.label, alpha, w); }));
  }
  ModMatrix lim = limit_assemble(ell, acts);
  bool round_trip = true;
  for (int n = 1; n <= levels; ++n) round_trip = round_trip && lim.reduced(ipow(ell, n)) == acts[static_cast<std::size_t>(n - 1)];
  rep.check(round_trip, Json{{"manifold", where}, {"failure", "limit does not reduce to its levels"}, {"alpha", alpha}});
  if (levels >= 2) {
    auto broken = acts;
    ModMatrix& top = broken.back();
    top(0, 0) = floor_mod(top(0, 0) + 1, top.modulus());
    bool caught = false;
    try {
      limit_assemble(ell, broken);
    } catch (const Error&) {
      caught = true;
    }
    rep.check(caught, Json{{"manifold", where}, {"failure", "incompatible levels were accepted"}});
  }
}

}  // namespace

SuiteReport suite_manifold(const RunConfig& cfg) {
  SuiteReport rep("manifold");
  std::mt19937_64 rng(cfg.seed);
  const int levels = std::max(1, cfg.r);
  if (cfg.manifold) {
    TorusManifold m = manifold_from_json(*cfg.manifold);
    if (m.places().empty()) throw InputError("/places: at least one place is needed");
    for (const auto& p : m.places())
      if (p.target.rank() > 0 && p.target.ell() != cfg.ell)
        throw InputError("place " + p.label + " is not an ell-group for ell = " + std::to_string(cfg.ell));
    manifold_checks(rep, m, cfg.ell, levels, rng);
    rep.note("manifold", to_json(m));
    return rep;
  }
  for (int delta = 1; delta <= 3; ++delta) {
    TorusManifold m = default_manifold(delta, cfg.ell, levels);
    manifold_checks(rep, m, cfg.ell, levels, rng);
    if (delta >= 2) {
      // a single class cannot generate a free module of rank 2^delta
      auto er = exterior_generation_report(m, CoeffRing(cfg.ell, 1), {{"w", {1}}});
      rep.check(!er.pass(), Json{{"delta", delta}, {"failure", "one class reported as generating"}});
    }
  }
  rep.note("levels", levels);
  return rep;
}

namespace {

/// Homomorphisms src -> tgt: the identity-like inclusions plus a seeded sample.
std::vector<GroupHom> sample_homs(const AbelianLGroup& src, const AbelianLGroup& tgt, std::mt19937_64& rng,
                                  int count) {
  std::vector<GroupHom> out;
  const Int ell = src.ell();
  auto valid = [&](const std::vector<std::vector<Int>>& m) {
    for (int i = 0; i < tgt.rank(); ++i)
      for (int j = 0; j < src.rank(); ++j)
        if (floor_mod(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * src.factor_order(j),
                      tgt.factor_order(i)) != 0)
          return false;
    return true;
  };
  auto push = [&](const std::vector<std::vector<Int>>& m) {
    if (!valid(m)) return;
    GroupHom f(src, tgt, m);
    for (const auto& g : out)
      if (g == f) return;
    out.push_back(f);
  };
  // aligned maps: generator j to ell^k times generator j
  if (src.rank() <= tgt.rank()) {
    std::vector<std::vector<Int>> m(static_cast<std::size_t>(tgt.rank()), std::vector<Int>(static_cast<std::size_t>(src.rank()), 0));
    for (int j = 0; j < src.rank(); ++j)
      m[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] =
          ipow(ell, std::max(0, tgt.exponent(j) - src.exponent(j)));
    push(m);
  }
  const std::vector<Int> entries{0, 1, -1, 2, ell, ell + 1};
  for (int tries = 0; tries < 200 && static_cast<int>(out.size()) < count; ++tries) {
    std::vector<std::vector<Int>> m(static_cast<std::size_t>(tgt.rank()), std::vector<Int>(static_cast<std::size_t>(src.rank())));
    for (auto& row : m)
      for (auto& c : row) c = entries[rng() % entries.size()];
    // scale columns so the map is well defined
    for (int j = 0; j < src.rank(); ++j)
      for (int i = 0; i < tgt.rank(); ++i) {
        Int& c = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (tgt.exponent(i) > src.exponent(j)) c *= ipow(ell, tgt.exponent(i) - src.exponent(j));
      }
    push(m);
  }
  return out;
}

}  // namespace

SuiteReport suite_cohomology(const RunConfig& cfg) {
  SuiteReport rep("cohomology");
  const Int ell = cfg.ell;
  const int dmax = degree_or(cfg, 4);
  std::mt19937_64 rng(cfg.seed);
  const std::vector<std::vector<int>> shapes{{}, {1}, {2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
  std::map<std::pair<std::vector<int>, int>, std::unique_ptr<ChainOracle>> cache;
  auto oracle = [&](const AbelianLGroup& g, const CoeffRing& s) -> const ChainOracle& {
    auto& slot = cache[{g.exponents(), s.r()}];
    if (!slot) slot = std::make_unique<ChainOracle>(g, s, dmax);
    return *slot;
  };
  auto admissible = [](const std::vector<int>& e, int r) {
    for (int x : e)
      if (x < r) return false;
    return true;
  };
  std::size_t cups = 0, restrictions = 0, transfers = 0, aligned = 0;
  for (int r = 1; r <= 2; ++r) {
    CoeffRing s(ell, r);
    Json ring{{"coeff", s.modulus()}};
    for (const auto& e : shapes) {
      if (!admissible(e, r) || e.empty()) continue;
      AbelianLGroup g(ell, e);
      const ChainOracle& o = oracle(g, s);
      auto classes = classes_up_to(g, s, dmax);
      for (const auto& a : classes)
        for (const auto& b : classes) {
          if (a.degree() + b.degree() > dmax) continue;
          ++cups;
          rep.check(cup(a, b) == o.cup(a, b),
                    Json{{"op", "cup"}, {"group", group_json(g)}, {"coeff", s.modulus()}, {"a", to_json(a)}, {"b", to_json(b)}});
        }
    }
    for (const auto& es : shapes)
      for (const auto& et : shapes) {
        if (!admissible(es, r) || !admissible(et, r)) continue;
        AbelianLGroup src(ell, es), tgt(ell, et);
        const ChainOracle& os = oracle(src, s);
        const ChainOracle& ot = oracle(tgt, s);
        auto src_classes = classes_up_to(src, s, dmax);
        auto tgt_classes = classes_up_to(tgt, s, dmax);
        for (const auto& f : sample_homs(src, tgt, rng, 4)) {
          Json fj{{"source", group_json(src)}, {"target", group_json(tgt)}, {"matrix", f.matrix()}, {"coeff", s.modulus()}};
          for (const auto& a : tgt_classes) {
            ++restrictions;
            rep.check(restrict(f, a) == chain_restrict(os, ot, f, a), Json{{"op", "restrict"}, {"map", fj}, {"a", to_json(a)}});
          }
          if (!f.is_injective()) continue;
          if (is_factor_aligned(f)) ++aligned;
          const Int index = tgt.order() / src.order();
          for (const auto& a : src_classes) {
            ++transfers;
            rep.check(corestrict(f, a) == chain_corestrict(os, ot, f, a),
                      Json{{"op", "corestrict"}, {"map", fj}, {"a", to_json(a)}});
          }
          for (const auto& a : tgt_classes) {
            rep.check(corestrict(f, restrict(f, a)) == a.scaled(index),
                      Json{{"op", "cores-res-index"}, {"map", fj}, {"a", to_json(a)}});
            for (const auto& b : src_classes) {
              if (a.degree() + b.degree() > dmax) continue;
              rep.check(corestrict(f, cup(restrict(f, a), b)) == cup(a, corestrict(f, b)),
                        Json{{"op", "projection-formula"}, {"map", fj}, {"a", to_json(a)}, {"b", to_json(b)}});
            }
          }
        }
      }
    // zero transfer from G1 into G1 x G2 whenever ell^r divides |G2|
    for (int n1 = 1; n1 <= 2; ++n1)
      for (int n2 = 1; n2 <= 2; ++n2) {
        if (n1 < r || n2 < r) continue;
        AbelianLGroup g1(ell, {n1}), t(ell, {n1, n2});
        GroupHom f(g1, t, {{1}, {0}});
        const ChainOracle& o1 = oracle(g1, s);
        const ChainOracle& ot = oracle(t, s);
        for (const auto& a : classes_up_to(g1, s, dmax)) {
          Json wit{{"op", "zero-transfer"}, {"G1", group_json(g1)}, {"T", group_json(t)}, {"a", to_json(a)}, {"coeff", s.modulus()}};
          rep.check(corestrict(f, a).is_zero(), wit);
          rep.check(chain_corestrict(o1, ot, f, a).is_zero(), wit);
        }
      }
  }
  rep.note("cup_pairs", cups);
  rep.note("restrictions", restrictions);
  rep.note("transfers", transfers);
  rep.note("aligned_transfer_maps", aligned);
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"satake-oracle", "commutativity", "presentation", "splitness",
                                              "iwahori",       "koszul",        "manifold",     "cohomology"};
  return names;
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
  if (name == "satake-oracle") return suite_satake_oracle(cfg);
  if (name == "commutativity") return suite_commutativity(cfg);
  if (name == "presentation") return suite_presentation(cfg);
  if (name == "splitness") return suite_splitness(cfg);
  if (name == "iwahori") return suite_iwahori(cfg);
  if (name == "koszul") return suite_koszul(cfg);
  if (name == "manifold") return suite_manifold(cfg);
  if (name == "cohomology") return suite_cohomology(cfg);
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace dhecke
