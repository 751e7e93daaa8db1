#include <gtest/gtest.h>

#include "dhecke/cohomology.hpp"
#include "dhecke/resolution.hpp"

using namespace dhecke;

namespace {

AbelianLGroup z(int n) { return AbelianLGroup::cyclic(3, n); }

}  // namespace

TEST(CohRing, Ranks) {
  CohRing r = coh_ring(z(2), CoeffRing(3, 1));
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(r.rank_in_degree(k), 1u);
  CohRing r2 = coh_ring(AbelianLGroup::homogeneous(3, 2, 2), CoeffRing(3, 1));
  EXPECT_EQ(r2.rank_in_degree(2), 3u);
  CohRing triv = coh_ring(AbelianLGroup::trivial(3), CoeffRing(3, 1));
  EXPECT_EQ(triv.rank_in_degree(0), 1u);
  EXPECT_EQ(triv.rank_in_degree(1), 0u);
  EXPECT_THROW(coh_ring(z(1), CoeffRing(3, 2)), RegimeError);
  EXPECT_THROW(coh_ring(AbelianLGroup::cyclic(2, 2), CoeffRing(2, 1)), RegimeError);
}

TEST(Cup, SignsAndSquares) {
  CohRing r = coh_ring(AbelianLGroup::homogeneous(3, 1, 2), CoeffRing(3, 1));
  EXPECT_TRUE(cup(r.x(0), r.x(0)).is_zero());
  EXPECT_EQ(cup(r.x(0), r.x(1)), -cup(r.x(1), r.x(0)));
  EXPECT_EQ(cup(r.y(0), r.y(0)).terms().begin()->first.y, (std::vector<int>{2, 0}));
}

TEST(Restrict, Examples) {
  CoeffRing s(3, 1);
  GroupHom incl(z(1), z(2), {{3}});
  EXPECT_TRUE(restrict(incl, CohClass::x(z(2), s, 0)).is_zero());
  GroupHom id = GroupHom::identity(z(2));
  CohClass a = CohClass::x(z(2), s, 0) + CohClass::y(z(2), s, 0);
  EXPECT_EQ(restrict(id, a), a);
  GroupHom inv(z(2), z(2), {{-1}});
  EXPECT_EQ(restrict(inv, CohClass::x(z(2), s, 0)), -CohClass::x(z(2), s, 0));
  EXPECT_EQ(restrict(inv, CohClass::y(z(2), s, 0)), -CohClass::y(z(2), s, 0));
}

TEST(Restrict, InversionMatchesChainLevel) {
  CoeffRing s(3, 1);
  GroupHom inv(z(2), z(2), {{-1}});
  ChainOracle o(z(2), s, 4);
  for (int k = 0; k <= 4; ++k) EXPECT_TRUE(o.basis_invertible(k));
  EXPECT_EQ(chain_restrict(o, o, inv, CohClass::y(z(2), s, 0)), -CohClass::y(z(2), s, 0));
  EXPECT_EQ(chain_restrict(o, o, inv, CohClass::x(z(2), s, 0)), -CohClass::x(z(2), s, 0));
}

TEST(Corestrict, Examples) {
  CoeffRing s(3, 1);
  GroupHom incl(z(1), z(2), {{3}});
  EXPECT_TRUE(corestrict(incl, CohClass::one(z(1), s)).is_zero());
  CoeffRing s9(3, 2);
  GroupHom incl9(z(2), z(3), {{3}});
  EXPECT_EQ(corestrict(incl9, CohClass::one(z(2), s9)), CohClass::one(z(3), s9).scaled(3));
  // Cores(x') is the character z -> x'(3z), i.e. the generator x
  EXPECT_EQ(corestrict(incl, CohClass::x(z(1), s, 0)), CohClass::x(z(2), s, 0));
  // Cores o Res = index = 0 over Z/3
  CohClass x = CohClass::x(z(2), s, 0);
  EXPECT_TRUE(corestrict(incl, restrict(incl, x)).is_zero());
  // first factor of Z/3 x Z/3
  AbelianLGroup t = AbelianLGroup::homogeneous(3, 1, 2);
  GroupHom g1(z(1), t, {{1}, {0}});
  for (int k = 0; k <= 3; ++k)
    for (const auto& m : monomial_basis(1, k))
      EXPECT_TRUE(corestrict(g1, CohClass::monomial(z(1), s, m)).is_zero());
}

TEST(Corestrict, MatchesChainTransfer) {
  CoeffRing s(3, 1);
  AbelianLGroup t(3, {1, 2});
  AbelianLGroup h(3, {1, 1});
  GroupHom f(h, t, {{1, 0}, {0, 3}});
  ChainOracle os(h, s, 3), ow(t, s, 3);
  for (int k = 0; k <= 3; ++k)
    for (const auto& m : monomial_basis(2, k)) {
      CohClass a = CohClass::monomial(h, s, m);
      EXPECT_EQ(corestrict(f, a), chain_corestrict(os, ow, f, a)) << m.to_string();
    }
}

TEST(Corestrict, NonAlignedFallsBackToChains) {
  CoeffRing s(3, 1);
  AbelianLGroup t = AbelianLGroup::homogeneous(3, 1, 2);
  GroupHom diag(z(1), t, {{1}, {1}});
  EXPECT_FALSE(is_factor_aligned(diag));
  // Cores o Res = [T : H] = 3 = 0
  CohClass a = CohClass::x(t, s, 0);
  EXPECT_TRUE(corestrict(diag, restrict(diag, a)).is_zero());
  CohClass one = CohClass::one(z(1), s);
  EXPECT_TRUE(corestrict(diag, one).is_zero());
}

TEST(CoeffChange, Examples) {
  CoeffRing s9(3, 2);
  AbelianLGroup t = z(2);
  EXPECT_EQ(coeff_change(CohClass::x(t, s9, 0), 1), CohClass::x(t, CoeffRing(3, 1), 0));
  EXPECT_TRUE(coeff_change(CohClass::x(t, s9, 0).scaled(3), 1).is_zero());
  EXPECT_THROW(coeff_change(CohClass::x(t, s9, 0), 3), Error);
}

TEST(WeylAct, RankOneAndA2) {
  CoeffRing s(3, 1);
  RootDatum pgl2 = build_root_datum("PGL2");
  CohClass x = CohClass::x(z(2), s, 0), y = CohClass::y(z(2), s, 0);
  EXPECT_EQ(weyl_act(pgl2, 1, x), -x);
  EXPECT_EQ(weyl_act(pgl2, 1, y), -y);
  EXPECT_EQ(weyl_act(pgl2, 0, x), x);

  RootDatum sl3 = build_root_datum("SL3");
  AbelianLGroup t = AbelianLGroup::homogeneous(3, 1, 2);
  int w = sl3.multiply(sl3.simple_reflection(0), sl3.simple_reflection(1));
  CohClass a = CohClass::x(t, s, 0) + CohClass::y(t, s, 1).scaled(2) + cup(CohClass::x(t, s, 1), CohClass::y(t, s, 0));
  CohClass b = a;
  int order = 0;
  do {
    b = weyl_act(sl3, w, b);
    ++order;
  } while (b != a && order < 10);
  EXPECT_EQ(order, 3);
}

TEST(WeylAct, LeftActionAndContravariantPullback) {
  CoeffRing s(3, 1);
  RootDatum sl3 = build_root_datum("SL3");
  AbelianLGroup t = AbelianLGroup::homogeneous(3, 1, 2);
  CohClass a = cup(CohClass::x(t, s, 0), CohClass::y(t, s, 1)) + CohClass::x(t, s, 1);
  for (std::size_t w1 = 0; w1 < sl3.weyl_order(); ++w1)
    for (std::size_t w2 = 0; w2 < sl3.weyl_order(); ++w2) {
      int w12 = sl3.multiply(static_cast<int>(w1), static_cast<int>(w2));
      EXPECT_EQ(weyl_act(sl3, w12, a), weyl_act(sl3, static_cast<int>(w1), weyl_act(sl3, static_cast<int>(w2), a)));
      EXPECT_EQ(weyl_pullback(sl3, w12, a),
                weyl_pullback(sl3, static_cast<int>(w2), weyl_pullback(sl3, static_cast<int>(w1), a)));
    }
}

TEST(ChainOracle, CupMatchesYoneda) {
  for (auto [exps, r] : {std::pair<std::vector<int>, int>{{1}, 1}, {{2}, 2}, {{1, 2}, 1}}) {
    AbelianLGroup g(3, exps);
    CoeffRing s(3, r);
    ChainOracle o(g, s, 4);
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; p + q <= 4; ++q)
        for (const auto& a : monomial_basis(g.rank(), p))
          for (const auto& b : monomial_basis(g.rank(), q)) {
            CohClass ca = CohClass::monomial(g, s, a), cb = CohClass::monomial(g, s, b);
            EXPECT_EQ(cup(ca, cb), o.cup(ca, cb)) << a.to_string() << " * " << b.to_string();
          }
  }
}
