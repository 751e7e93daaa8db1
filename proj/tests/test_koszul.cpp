#include <gtest/gtest.h>

#include <random>

#include "dhecke/koszul.hpp"

using namespace dhecke;

namespace {

std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

Vec neg(const CoeffRing& b, Vec v) {
  for (auto& c : v) c = b.neg(c);
  return v;
}

}  // namespace

TEST(Koszul, DifferentialSquaresToZero) {
  CoeffRing b(3, 2);
  for (int r = 0; r <= 4; ++r) {
    std::vector<int> all;
    for (int i = 0; i < r; ++i) all.push_back(i);
    EXPECT_TRUE(is_complex(koszul_complex(b, r, all)));
    EXPECT_TRUE(is_complex(koszul_complex(b, r + 1, all)));
  }
  EXPECT_THROW(koszul_complex(b, 2, {0, 0}), Error);
  EXPECT_THROW(koszul_complex(b, 2, {2}), Error);
}

TEST(Koszul, BrokenSignsAreDetected) {
  CoeffRing b(5, 1);
  auto c = koszul_complex(b, 2, {0, 1});
  c.d[2][0] = c.d[2][0].scaled(-1);
  EXPECT_FALSE(is_complex(c));
}

TEST(ExtSelf, RanksAreBinomial) {
  CoeffRing b(3, 1);
  for (int r = 0; r <= 4; ++r) {
    auto e = ext_self_algebra(b, r, 4);
    for (int i = 0; i <= 4; ++i) EXPECT_EQ(e.ranks[static_cast<std::size_t>(i)], binom(r, i)) << r << " " << i;
  }
  EXPECT_EQ(ext_self_algebra(b, 3, 3).ranks, (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_EQ(ext_self_algebra(b, 0, 2).ranks, (std::vector<std::size_t>{1, 0, 0}));
}

TEST(ExtSelf, ContractionProductsAnticommute) {
  CoeffRing b(5, 2);
  auto e = ext_self_algebra(b, 3, 3);
  Vec e0 = e.basis_element({0}), e1 = e.basis_element({1}), e2 = e.basis_element({2});
  Vec p01 = e.multiply(e0, 1, e1, 1), p10 = e.multiply(e1, 1, e0, 1);
  EXPECT_EQ(p01, neg(b, p10));
  EXPECT_NE(p01, Vec(3, 0));
  EXPECT_EQ(e.multiply(e0, 1, e0, 1), Vec(3, 0));
  Vec top = e.multiply(e.multiply(e0, 1, e1, 1), 2, e2, 1);
  EXPECT_EQ(top.size(), 1u);
  EXPECT_TRUE(b.is_unit(top[0]));
  // the degree-2 products span Ext^2
  std::vector<Vec> prods{p01, e.multiply(e0, 1, e2, 1), e.multiply(e1, 1, e2, 1)};
  ModMatrix m(3, 3, b.modulus());
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) m(i, j) = prods[j][i];
  EXPECT_TRUE(LocalElimination(m, 5).surjective());
}

TEST(ExtSelf, LiftIsAChainMap) {
  CoeffRing b(3, 2);
  auto e = ext_self_algebra(b, 3, 3);
  const auto& k = e.resolution;
  for (int q = 0; q <= 3; ++q)
    for (std::size_t j = 0; j < k.ranks[static_cast<std::size_t>(q)]; ++j) {
      Vec phi(k.ranks[static_cast<std::size_t>(q)], 0);
      phi[j] = 1;
      auto f = lift_cocycle(k, k, phi, q, 3);
      for (std::size_t s = 1; s < f.size(); ++s)
        for (int v = 0; v < 3; ++v)
          EXPECT_EQ(k.d[s][static_cast<std::size_t>(v)] * f[s],
                    f[s - 1] * k.d[s + static_cast<std::size_t>(q)][static_cast<std::size_t>(v)]);
    }
}

TEST(ExtQuotient, Examples) {
  CoeffRing b(3, 1);
  auto m = ext_quotient_module(b, 2, std::vector<int>{1}, 2);
  EXPECT_EQ(m.ranks, (std::vector<std::size_t>{1, 1, 0}));
  Vec one = m.basis_element({});
  EXPECT_EQ(m.act(m.algebra.basis_element({0}), 1, one, 0), Vec{0});
  Vec img = m.act(m.algebra.basis_element({1}), 1, one, 0);
  ASSERT_EQ(img.size(), 1u);
  EXPECT_TRUE(b.is_unit(img[0]));

  auto whole = ext_quotient_module(b, 3, std::vector<int>{0, 1, 2}, 3);
  EXPECT_EQ(whole.ranks, whole.algebra.ranks);
  auto zero = ext_quotient_module(b, 2, std::vector<int>{}, 2);
  EXPECT_EQ(zero.ranks, (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_EQ(zero.act(zero.algebra.basis_element({0}), 1, zero.basis_element({}), 0), Vec{});
}

TEST(ExtQuotient, SpanningVectors) {
  CoeffRing b(3, 2);
  auto m = ext_quotient_module(b, 2, std::vector<Vec>{{0, 4}}, 2);
  EXPECT_EQ(m.u, std::vector<int>{1});
  EXPECT_THROW(ext_quotient_module(b, 2, std::vector<Vec>{{1, 1}}, 2), InputError);
  EXPECT_THROW(ext_quotient_module(b, 2, std::vector<Vec>{{0, 3}}, 2), InputError);
}

TEST(ExtQuotient, ActionIsAssociative) {
  CoeffRing b(5, 1);
  auto m = ext_quotient_module(b, 4, std::vector<int>{1, 2, 3}, 4);
  std::mt19937 rng(7);
  auto random_vec = [&](std::size_t n) {
    Vec v(n);
    for (auto& c : v) c = static_cast<Int>(rng() % 5);
    return v;
  };
  for (int trial = 0; trial < 20; ++trial) {
    int p = static_cast<int>(rng() % 2) + 1, q = static_cast<int>(rng() % 2), r = 1;
    Vec a = random_vec(m.algebra.ranks[static_cast<std::size_t>(p)]);
    Vec c = random_vec(m.algebra.ranks[static_cast<std::size_t>(r)]);
    Vec x = random_vec(m.ranks[static_cast<std::size_t>(q)]);
    Vec lhs = m.act(m.algebra.multiply(a, p, c, r), p + r, x, q);
    Vec rhs = m.act(a, p, m.act(c, r, x, q), q + r);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Freeness, Examples) {
  CoeffRing b(3, 1);
  auto r1 = freeness_generation_check(b, 2, {1}, 2);
  EXPECT_TRUE(r1.pass());
  EXPECT_EQ(r1.ranks, (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(r1.generation_degree, 0);
  auto r2 = freeness_generation_check(b, 3, {1, 2}, 3);
  EXPECT_TRUE(r2.pass());
  EXPECT_EQ(r2.ranks, (std::vector<std::size_t>{1, 2, 1, 0}));
  auto r0 = freeness_generation_check(b, 3, {}, 3);
  EXPECT_TRUE(r0.pass());
  EXPECT_EQ(r0.ranks, (std::vector<std::size_t>{1, 0, 0, 0}));
  auto deep = freeness_generation_check(CoeffRing(3, 3), 4, {0, 2, 3}, 4);
  EXPECT_TRUE(deep.pass());
}

TEST(GroupRingExt, CyclicExamples) {
  auto r = group_ring_ext(GroupRingSn(3, 1, 1, 1), 4);
  ASSERT_EQ(r.ext.size(), 5u);
  for (const auto& h : r.ext) EXPECT_EQ(h.exponents, std::vector<int>{1});
  EXPECT_EQ(r.cotangent.exponents, std::vector<int>{1});
  EXPECT_TRUE(r.surjective);
  EXPECT_TRUE(r.pass());

  auto r2 = group_ring_ext(GroupRingSn(3, 1, 2, 1), 2);
  EXPECT_EQ(r2.ext[1].generators(), 1u);
  EXPECT_EQ(r2.koszul_ranks[1], 1u);
  EXPECT_TRUE(r2.surjective);
  EXPECT_TRUE(r2.pass());
}

TEST(GroupRingExt, RankTwoAndHigherPrecision) {
  auto r = group_ring_ext(GroupRingSn(3, 2, 2, 1), 3);
  EXPECT_EQ(r.ext[1].exponents, std::vector<int>{2});
  EXPECT_TRUE(r.pass());
  auto r2 = group_ring_ext(GroupRingSn(3, 1, 1, 2), 2);
  EXPECT_EQ(r2.ext[1].generators(), 2u);
  EXPECT_EQ(r2.ext[2].generators(), 3u);
  EXPECT_EQ(r2.cotangent.exponents, (std::vector<int>{1, 1}));
  EXPECT_TRUE(r2.pass());
}

TEST(GroupRingExt, Errors) {
  EXPECT_THROW(GroupRingSn(2, 1, 1, 1), RegimeError);
  EXPECT_THROW(GroupRingSn(3, 1, 1, 3), InputError);
  EXPECT_THROW(GroupRingSn(3, 2, 1, 1), InputError);
}
