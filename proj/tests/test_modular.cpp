#include <gtest/gtest.h>

#include <random>

#include "dhecke/abelian_group.hpp"
#include "dhecke/modular.hpp"
#include "dhecke/regime.hpp"

using namespace dhecke;

TEST(CoeffRing, OrderAndInverse) {
  CoeffRing r = make_coeff(3, 2);
  EXPECT_EQ(r.modulus(), 9);
  EXPECT_EQ(make_coeff(3, 1).inv(2), 2);
  EXPECT_THROW(r.inv(3), Error);
  try {
    r.inv(3);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("non-unit"), std::string::npos);
  }
}

TEST(CoeffRing, RejectsBadParameters) {
  EXPECT_THROW(make_coeff(4, 1), Error);
  EXPECT_THROW(make_coeff(3, 0), Error);
}

TEST(CoeffRing, RingAxiomsOnSamples) {
  std::mt19937_64 rng(7);
  for (auto [ell, r] : {std::pair<Int, int>{3, 1}, {3, 2}, {5, 3}, {7, 2}}) {
    CoeffRing s(ell, r);
    std::uniform_int_distribution<Int> d(-1000, 1000);
    for (int i = 0; i < 200; ++i) {
      Int a = d(rng), b = d(rng), c = d(rng);
      EXPECT_EQ(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)));
      EXPECT_EQ(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c)));
      EXPECT_EQ(s.add(a, s.neg(a)), 0);
      if (s.is_unit(a)) EXPECT_EQ(s.mul(a, s.inv(a)), 1);
    }
  }
}

TEST(CoeffRing, Valuation) {
  CoeffRing s(3, 3);
  EXPECT_EQ(s.val(9), 2);
  EXPECT_EQ(s.val(0), 3);
  EXPECT_EQ(s.val(2), 0);
}

TEST(EllPart, Examples) {
  EXPECT_EQ(ell_part(19, 3).order(), 9);
  EXPECT_EQ(ell_part(19, 3).rank(), 1);
  EXPECT_EQ(ell_part(7, 3).order(), 3);
  EXPECT_TRUE(ell_part(7, 5).is_trivial());
  EXPECT_THROW(ell_part(9, 3), Error);
  EXPECT_THROW(ell_part(12, 5), Error);
}

TEST(EllPart, OrderIsEllPartOfQMinusOne) {
  for (Int q : {3, 4, 5, 7, 8, 9, 11, 13, 16, 19, 25, 27, 31, 37, 43, 49, 64, 73, 81, 97}) {
    for (Int ell : {3, 5, 7}) {
      if (q % ell == 0) continue;
      Int expect = 1, m = q - 1;
      while (m % ell == 0) {
        m /= ell;
        expect *= ell;
      }
      EXPECT_EQ(ell_part(q, ell).order(), expect) << q << " " << ell;
    }
  }
}

TEST(GroupHom, ComposeIsMatrixProduct) {
  AbelianLGroup a(3, {1, 2}), b(3, {2, 2}), c(3, {2});
  GroupHom f(a, b, {{3, 1}, {6, 4}});
  GroupHom g(b, c, {{2, 5}});
  GroupHom gf = g.compose(f);
  for (Int idx = 0; idx < a.order(); ++idx) {
    auto e = a.element(idx);
    EXPECT_EQ(gf.apply(e), g.apply(f.apply(e)));
  }
  EXPECT_EQ(gf.entry(0, 0), floor_mod(2 * 3 + 5 * 6, 9));
  EXPECT_EQ(gf.entry(0, 1), floor_mod(2 * 1 + 5 * 4, 9));
}

TEST(GroupHom, RejectsOrderViolation) {
  AbelianLGroup z3(3, {1}), z9(3, {2});
  EXPECT_THROW(GroupHom(z3, z9, {{1}}), Error);
  EXPECT_NO_THROW(GroupHom(z3, z9, {{3}}));
  EXPECT_TRUE(GroupHom(z3, z9, {{3}}).is_injective());
  EXPECT_FALSE(GroupHom(z9, z3, {{1}}).is_injective());
}

TEST(Regime, Examples) {
  RootDatum a1 = build_root_datum("SL2");
  EXPECT_TRUE(validate_regime(a1, CoeffRing(3, 1), 7).pass);
  auto r2 = validate_regime(a1, CoeffRing(2, 1), 7);
  EXPECT_FALSE(r2.pass);
  EXPECT_NE(r2.reason.find("divides |W|"), std::string::npos);
  auto r3 = validate_regime(a1, CoeffRing(3, 2), 7);
  EXPECT_FALSE(r3.pass);
  EXPECT_NE(r3.reason.find("9 does not divide"), std::string::npos);
  EXPECT_FALSE(validate_regime(a1, CoeffRing(3, 1), 9).pass);
  EXPECT_THROW(require_regime(a1, CoeffRing(3, 2), 7), RegimeError);
}

TEST(Regime, PassImpliesOddEllForEvenWeylOrder) {
  for (const char* name : {"SL2", "PGL2", "SL3", "Sp4"}) {
    RootDatum rd = build_root_datum(name);
    for (Int ell : {2, 3, 5, 7})
      for (int r = 1; r <= 2; ++r)
        for (Int q : {3, 4, 5, 7, 8, 9, 13, 19, 31, 37, 49, 73}) {
          if (validate_regime(rd, CoeffRing(ell, r), q).pass && rd.weyl_order() % 2 == 0) EXPECT_NE(ell, 2);
        }
  }
}
