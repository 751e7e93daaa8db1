#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "dhecke/iwahori.hpp"

using namespace dhecke;

namespace {

RootDatumPtr datum(const std::string& name) { return std::make_shared<const RootDatum>(build_root_datum(name)); }

ModMatrix mat(Int m, std::vector<std::vector<Int>> rows) {
  ModMatrix out(rows.size(), rows[0].size(), m);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) out.set(i, j, rows[i][j]);
  return out;
}

std::vector<AffineWeylElement> spanning(const RootDatum& rd, Int radius) {
  std::vector<AffineWeylElement> out;
  std::vector<Coweight> pts{{}};
  for (int i = 0; i < rd.rank(); ++i) {
    std::vector<Coweight> next;
    for (const auto& p : pts)
      for (Int v = -radius; v <= radius; ++v) {
        Coweight q = p;
        q.push_back(v);
        next.push_back(q);
      }
    pts = next;
  }
  for (const auto& p : pts)
    for (std::size_t w = 0; w < rd.weyl_order(); ++w) out.push_back({p, static_cast<int>(w)});
  return out;
}

}  // namespace

TEST(Iwahori, ReflectionsSquareToOne) {
  for (const char* name : {"SL2", "PGL2", "SL3", "Sp4"}) {
    auto rd = datum(name);
    CoeffRing s(5, 2);
    for (int i = 0; i < static_cast<int>(rd->simple().size()); ++i) {
      auto t = IwahoriElement::weyl(rd, s, rd->simple_reflection(i));
      EXPECT_EQ(iwahori_multiply(t, t), IwahoriElement::one(rd, s)) << name;
    }
  }
}

TEST(Iwahori, SemidirectLaw) {
  auto rd = datum("PGL2");
  CoeffRing s(3, 1);
  int sw = rd->simple_reflection(0);
  auto t = IwahoriElement::weyl(rd, s, sw);
  for (Int l = -3; l <= 3; ++l) {
    auto d = IwahoriElement::translation(rd, s, {l});
    EXPECT_EQ(iwahori_multiply(iwahori_multiply(t, d), t), IwahoriElement::translation(rd, s, {-l}));
    EXPECT_EQ(iwahori_multiply(d, IwahoriElement::translation(rd, s, {2})),
              IwahoriElement::translation(rd, s, {l + 2}));
  }
}

TEST(Iwahori, IdempotentAndCenter) {
  CoeffRing s(3, 1);
  auto pgl = datum("PGL2");
  auto ek = e_K(pgl, s);
  EXPECT_EQ(ek, (IwahoriElement::one(pgl, s) + IwahoriElement::weyl(pgl, s, pgl->simple_reflection(0))).scaled(2));
  for (const char* name : {"PGL2", "SL3", "Sp4"}) {
    auto rd = datum(name);
    CoeffRing k(name == std::string("PGL2") ? 3 : 5, 1);
    auto e = e_K(rd, k);
    EXPECT_EQ(iwahori_multiply(e, e), e) << name;
    LatticeAlgebraElement z;
    for (const auto& l : rd->orbit(Coweight(static_cast<std::size_t>(rd->rank()), 1))) z[l] = 1;
    auto zc = central_embed(rd, k, z);
    for (const auto& sigma : spanning(*rd, rd->rank() == 1 ? 3 : 1)) {
      auto g = IwahoriElement::basis(rd, k, sigma);
      EXPECT_EQ(iwahori_multiply(zc, g), iwahori_multiply(g, zc)) << name;
    }
    EXPECT_EQ(iwahori_multiply(iwahori_multiply(e, zc), e), iwahori_multiply(e, zc));
  }
  EXPECT_THROW(e_K(pgl, CoeffRing(2, 1)), RegimeError);
  EXPECT_THROW(central_embed(pgl, s, {{{1}, 1}}), Error);
}

TEST(Character, DiscriminantExamples) {
  auto rd = datum("PGL2");
  CoeffRing k(7, 1);
  auto f = discriminant(*rd, k);
  EXPECT_EQ(discriminant_eval(f, chi_t(k, {2})), 3);
  EXPECT_EQ(discriminant_eval(f, chi_t(k, {1})), 0);
  EXPECT_EQ(discriminant_eval(f, chi_t(k, {6})), 0);
  EXPECT_EQ(weyl_twist(*rd, rd->simple_reflection(0), chi_t(k, {2})).values, Vec{4});
  EXPECT_EQ(weyl_twist(*rd, rd->simple_reflection(0), chi_t(k, {6})), chi_t(k, {6}));
  EXPECT_THROW(chi_t(k, {0}), Error);
}

TEST(Character, DiscriminantDetectsReflectionFixedCharacters) {
  CoeffRing k(7, 1);
  for (const char* name : {"PGL2", "SL2"}) {
    auto rd = datum(name);
    auto f = discriminant(*rd, k);
    for (Int a = 1; a < 7; ++a) {
      auto chi = chi_t(k, {a});
      bool fixed = false;
      for (std::size_t w = 1; w < rd->weyl_order(); ++w)
        fixed = fixed || weyl_twist(*rd, static_cast<int>(w), chi) == chi;
      EXPECT_EQ(discriminant_eval(f, chi) != 0, is_strongly_regular(*rd, chi)) << name << " " << a;
      if (name == std::string("PGL2")) EXPECT_EQ(discriminant_eval(f, chi) != 0, !fixed) << a;
    }
  }
  auto sl3 = datum("SL3");
  CoeffRing k13(13, 1);
  auto f = discriminant(*sl3, k13);
  for (Int a = 1; a < 13; ++a)
    for (Int b = 1; b < 13; ++b) {
      auto chi = chi_t(k13, {a, b});
      EXPECT_EQ(discriminant_eval(f, chi) != 0, is_strongly_regular(*sl3, chi));
    }
}

TEST(InducedRep, PGL2Matrices) {
  auto rd = datum("PGL2");
  CoeffRing k(7, 1);
  InducedRep v(rd, chi_t(k, {2}));
  int sw = rd->simple_reflection(0);
  EXPECT_EQ(v.translation({1}), mat(7, {{2, 0}, {0, 4}}));
  EXPECT_EQ(v.weyl(sw), mat(7, {{0, 1}, {1, 0}}));
  EXPECT_EQ(LocalElimination(v.act(e_K(rd, k)), 7).rank(), 1u);
}

TEST(InducedRep, DefiningRelations) {
  for (const char* name : {"PGL2", "SL3", "Sp4"}) {
    auto rd = datum(name);
    CoeffRing k(13, 1);
    Character chi = chi_t(k, std::vector<Int>(static_cast<std::size_t>(rd->rank()), 2));
    if (rd->rank() == 2) chi.values[1] = 5;
    InducedRep v(rd, chi);
    auto sp = spanning(*rd, 1);
    for (const auto& a : sp)
      for (const auto& b : sp) EXPECT_EQ(v.act(a) * v.act(b), v.act(affine_multiply(*rd, a, b))) << name;
    EXPECT_EQ(LocalElimination(v.act(e_K(rd, k)), 13).rank(), 1u);
  }
}

TEST(Morita, PGL2Ranks) {
  auto rd = datum("PGL2");
  CoeffRing k(7, 1);
  auto rep = morita_check(rd, chi_t(k, {2}));
  EXPECT_TRUE(rep.applicable);
  EXPECT_EQ(rep.end_rank, 4u);
  EXPECT_EQ(rep.ik_rank, 2u);
  EXPECT_EQ(rep.ki_rank, 2u);
  EXPECT_EQ(rep.kk_rank, 1u);
  EXPECT_TRUE(rep.pass());
  auto bad = morita_check(rd, chi_t(k, {1}));
  EXPECT_FALSE(bad.applicable);
  EXPECT_LT(bad.end_rank, 4u);
  EXPECT_FALSE(bad.reason.empty());
}

TEST(Morita, RankTwoRegular) {
  auto rd = datum("SL3");
  CoeffRing k(13, 1);
  auto rep = morita_check(rd, chi_t(k, {2, 5}));
  ASSERT_TRUE(rep.applicable) << rep.reason;
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.end_rank, 36u);
}

TEST(Theta, PGL2Interpolation) {
  auto rd = datum("PGL2");
  CoeffRing k(7, 1);
  auto chi = chi_t(k, {2});
  LatticeAlgebraElement expect{{{1}, 3}, {{0}, 2}};
  EXPECT_EQ(theta_projector(*rd, chi, 1), expect);
  EXPECT_THROW(theta_projector(*rd, chi_t(k, {6}), 1), Error);
}

TEST(Theta, JetConditions) {
  CoeffRing k(7, 1);
  for (const char* name : {"PGL2", "SL3"}) {
    auto rd = datum(name);
    Character chi = chi_t(k, std::vector<Int>(static_cast<std::size_t>(rd->rank()), 2));
    if (rd->rank() == 2) chi.values[1] = 3;
    ASSERT_TRUE(has_free_orbit(*rd, chi)) << name;
    for (int m = 1; m <= (rd->rank() == 1 ? 3 : 2); ++m) {
      auto theta = theta_projector(*rd, chi, m);
      auto jets = jet_indices(rd->rank(), m);
      for (std::size_t w = 0; w < rd->weyl_order(); ++w) {
        auto values = jet(theta, weyl_twist(*rd, static_cast<int>(w), chi), m);
        for (std::size_t t = 0; t < jets.size(); ++t)
          EXPECT_EQ(values[t], (w == 0 && t == 0) ? 1 : 0) << name << " m=" << m << " w=" << w << " t=" << t;
      }
    }
  }
}

TEST(Theta, JetMatchesDirectExpansion) {
  // (2 + e)^3 = 8 + 12 e + 6 e^2 + e^3 and (2 + e)^-1 = 1/2 - e/4 + ...
  CoeffRing k(7, 1);
  auto chi = chi_t(k, {2});
  EXPECT_EQ(jet({{{3}, 1}}, chi, 3), (Vec{1, 5, 6}));
  EXPECT_EQ(jet({{{-1}, 1}}, chi, 2), (Vec{4, k.neg(k.inv(4))}));
}

namespace {

ToralContext f7_ctx() { return ToralContext::for_q(build_root_datum("PGL2"), 29, CoeffRing(7, 1)); }

}  // namespace

TEST(DerivedIwahori, CrossedProductExamples) {
  auto c = f7_ctx();
  CohClass x = CohClass::x(c.t, c.s, 0), y = CohClass::y(c.t, c.s, 0);
  auto bx = DerivedIwahoriElement::bracket(c, x), by = DerivedIwahoriElement::bracket(c, y);
  EXPECT_EQ(derived_iwahori_multiply(bx, by), DerivedIwahoriElement::bracket(c, cup(x, y)));
  int sw = c.rd->simple_reflection(0);
  auto s = DerivedIwahoriElement::from_iwahori(c, IwahoriElement::weyl(c.rd, c.s, sw));
  EXPECT_EQ(derived_iwahori_multiply(derived_iwahori_multiply(s, bx), s),
            DerivedIwahoriElement::bracket(c, weyl_act(*c.rd, sw, x)));
}

TEST(DerivedIwahori, Associative) {
  for (auto c : {f7_ctx(), ToralContext::for_q(build_root_datum("SL3"), 11, CoeffRing(5, 1))}) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coin(0, 4);
    auto sp = spanning(*c.rd, 1);
    std::vector<CohClass> vals;
    for (int k = 0; k <= 2; ++k)
      for (const auto& m : coh_ring(c.t, c.s).basis(k)) vals.push_back(CohClass::monomial(c.t, c.s, m));
    auto sample = [&] {
      DerivedIwahoriElement e(c);
      for (int i = 0; i < 3; ++i)
        e.add(sp[rng() % sp.size()], vals[rng() % vals.size()].scaled(coin(rng) + 1));
      return e;
    };
    for (int trial = 0; trial < 10; ++trial) {
      auto a = sample(), b = sample(), d = sample();
      EXPECT_EQ(derived_iwahori_multiply(derived_iwahori_multiply(a, b), d),
                derived_iwahori_multiply(a, derived_iwahori_multiply(b, d)));
    }
  }
}

TEST(DerivedIwahori, SphericalCompressionMatchesSatakeImage) {
  auto c = f7_ctx();
  auto chi = chi_t(c.s, {2});
  CohClass x = CohClass::x(c.t, c.s, 0);
  for (int m = 1; m <= 2; ++m) {
    auto theta = theta_projector(*c.rd, chi, m);
    ToralElement f = spherical_compress(c, theta, x);
    EXPECT_TRUE(is_spherical(f));
    EXPECT_LE(f.support_radius(), 3);
    auto jets = toral_jet(f, chi, m);
    EXPECT_EQ(jets[0], x);
    for (std::size_t t = 1; t < jets.size(); ++t) EXPECT_TRUE(jets[t].is_zero());
    ToralElement expect(c);
    int sw = c.rd->simple_reflection(0);
    for (const auto& [l, v] : theta) {
      expect.add(l, x.scaled(v));
      expect.add(c.rd->act(sw, l), weyl_act(*c.rd, sw, x).scaled(v));
    }
    EXPECT_EQ(f, expect);
  }
}
