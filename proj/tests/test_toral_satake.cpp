#include <gtest/gtest.h>

#include <random>

#include "dhecke/toral_satake.hpp"

using namespace dhecke;

namespace {

ToralContext pgl2_ctx() { return ToralContext::for_q(build_root_datum("PGL2"), 7, CoeffRing(3, 1)); }

ToralElement d(const ToralContext& c, Int n, const CohClass& v) { return ToralElement::delta(c, {n}, v); }

}  // namespace

TEST(ToralConvolve, GroupAlgebraExamples) {
  auto c = pgl2_ctx();
  CohClass one = CohClass::one(c.t, c.s);
  auto u = ProductBounds::unbounded();
  EXPECT_EQ(toral_convolve(d(c, 1, one), d(c, -1, one), u), ToralElement::one(c));
  ToralElement t1 = d(c, 1, one) + d(c, -1, one);
  ToralElement expect = d(c, 2, one) + d(c, -2, one) + d(c, 0, one).scaled(2);
  EXPECT_EQ(toral_convolve(t1, t1, u), expect);
  ToralElement dx = d(c, 0, CohClass::x(c.t, c.s, 0));
  EXPECT_TRUE(toral_convolve(dx, dx, u).is_zero());
}

TEST(ToralConvolve, BoundsAreEnforced) {
  auto c = pgl2_ctx();
  CohClass y = CohClass::y(c.t, c.s, 0);
  ToralElement a = d(c, 2, y);
  EXPECT_THROW(toral_convolve(a, a, ProductBounds{3, -1}), Error);
  EXPECT_THROW(toral_convolve(a, a, ProductBounds{-1, 3}), Error);
  EXPECT_NO_THROW(toral_convolve(a, a, ProductBounds{4, 4}));
}

TEST(SatakeBasis, Examples) {
  auto c = pgl2_ctx();
  CohClass x = CohClass::x(c.t, c.s, 0);
  EXPECT_EQ(satake_basis(c, {0}, CohClass::one(c.t, c.s)), ToralElement::one(c));
  ToralElement h = satake_basis(c, {1}, x);
  EXPECT_EQ(h.value({1}), x);
  EXPECT_EQ(h.value({-1}), -x);
  EXPECT_TRUE(is_spherical(h));
  EXPECT_THROW(satake_basis(c, {0}, x), Error);
  EXPECT_THROW(satake_basis(c, {-1}, x), Error);
}

TEST(Symmetrize, Examples) {
  auto c = pgl2_ctx();
  CohClass one = CohClass::one(c.t, c.s);
  EXPECT_EQ(symmetrize(d(c, 1, one)), (d(c, 1, one) + d(c, -1, one)).scaled(2));
  ToralElement inv = satake_basis(c, {2}, CohClass::y(c.t, c.s, 0));
  EXPECT_EQ(symmetrize(inv), inv);
  EXPECT_TRUE(symmetrize(d(c, 0, CohClass::x(c.t, c.s, 0))).is_zero());
  ToralElement a = d(c, 1, CohClass::x(c.t, c.s, 0)) + d(c, 0, one);
  EXPECT_EQ(symmetrize(symmetrize(a)), symmetrize(a));
}

TEST(InvariantDims, PGL2Presentation) {
  auto c = pgl2_ctx();
  for (Int n = 2; n <= 4; ++n) {
    InvariantTable t = invariant_dims(c, n, 2);
    EXPECT_EQ(t.totals, (std::vector<std::size_t>{static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n),
                                                  static_cast<std::size_t>(n)}));
  }
}

TEST(Spherical, ClosedUnderConvolutionAndIdentity) {
  auto c = pgl2_ctx();
  std::vector<ToralElement> gens;
  CohClass one = CohClass::one(c.t, c.s), x = CohClass::x(c.t, c.s, 0), y = CohClass::y(c.t, c.s, 0);
  for (Int n = 0; n <= 3; ++n) {
    gens.push_back(satake_basis(c, {n}, one));
    if (n > 0) {
      gens.push_back(satake_basis(c, {n}, x));
      gens.push_back(satake_basis(c, {n}, y));
    }
  }
  ToralElement id = satake_basis(c, {0}, one);
  for (const auto& a : gens) {
    EXPECT_EQ(toral_convolve(id, a, ProductBounds::unbounded()), a);
    EXPECT_EQ(toral_convolve(a, id, ProductBounds::unbounded()), a);
    for (const auto& b : gens) EXPECT_TRUE(is_spherical(toral_convolve(a, b, ProductBounds{6, 4})));
  }
}

TEST(Spherical, GradedCommutativityHigherRank) {
  std::mt19937_64 rng(3);
  struct Case {
    const char* name;
    Int q;
    Int ell;
  };
  for (Case cs : {Case{"SL3", 11, 5}, Case{"Sp4", 7, 3}}) {
    ToralContext c = ToralContext::for_q(build_root_datum(cs.name), cs.q, CoeffRing(cs.ell, 1));
    auto random_element = [&](int deg) {
      ToralElement a(c);
      auto basis = monomial_basis(2, deg);
      for (int i = 0; i < 3; ++i) {
        Coweight l{static_cast<Int>(rng() % 5) - 2, static_cast<Int>(rng() % 5) - 2};
        a.add(l, CohClass::monomial(c.t, c.s, basis[rng() % basis.size()], static_cast<Int>(rng() % cs.ell)));
      }
      return symmetrize(a);
    };
    for (int trial = 0; trial < 10; ++trial) {
      int da = static_cast<int>(rng() % 3), db = static_cast<int>(rng() % 3);
      ToralElement a = random_element(da), b = random_element(db);
      ASSERT_TRUE(is_spherical(a));
      ToralElement ab = toral_convolve(a, b, ProductBounds::unbounded());
      ToralElement ba = toral_convolve(b, a, ProductBounds::unbounded());
      EXPECT_EQ(ab, ba.scaled((da * db) % 2 ? -1 : 1));
      EXPECT_TRUE(is_spherical(ab));
    }
  }
}
