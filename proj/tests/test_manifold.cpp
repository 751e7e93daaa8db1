#include <gtest/gtest.h>

#include <random>

#include "dhecke/manifold.hpp"

using namespace dhecke;

namespace {

TorusManifold two_place() {
  return TorusManifold(2, {Place{"v", AbelianLGroup::homogeneous(3, 2, 2), {{1, 0}, {0, 1}}},
                           Place{"w", AbelianLGroup::cyclic(3, 1), {{1, 1}}}});
}

}  // namespace

TEST(ManifoldClass, WedgeSigns) {
  CoeffRing s(5, 1);
  auto e1 = ManifoldClass::basis(3, s, 1), e2 = ManifoldClass::basis(3, s, 2), e3 = ManifoldClass::basis(3, s, 4);
  EXPECT_EQ(wedge(e1, e2), ManifoldClass::basis(3, s, 3));
  EXPECT_EQ(wedge(e2, e1), ManifoldClass::basis(3, s, 3, -1));
  EXPECT_EQ(wedge(e3, wedge(e1, e2)), ManifoldClass::basis(3, s, 7));
  EXPECT_EQ(wedge(e2, wedge(e1, e3)), ManifoldClass::basis(3, s, 7, -1));
  EXPECT_TRUE(wedge(e1, e1).is_zero());
  EXPECT_EQ(wedge(ManifoldClass::one(3, s), e3), e3);
}

TEST(ManifoldClass, WedgeAssociativeAndGradedCommutative) {
  CoeffRing s(3, 2);
  std::mt19937 rng(5);
  auto random_class = [&] {
    ManifoldClass c(4, s);
    for (std::uint32_t m = 0; m < 16; ++m) c.add(m, static_cast<Int>(rng() % 9));
    return c;
  };
  auto homogeneous = [&](int k) {
    ManifoldClass c(4, s);
    for (std::uint32_t m = 0; m < 16; ++m)
      if (std::popcount(m) == k) c.add(m, static_cast<Int>(rng() % 9));
    return c;
  };
  for (int t = 0; t < 20; ++t) {
    auto a = random_class(), b = random_class(), c = random_class();
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
    int p = static_cast<int>(rng() % 3), q = static_cast<int>(rng() % 3);
    auto x = homogeneous(p), y = homogeneous(q);
    EXPECT_EQ(wedge(x, y), wedge(y, x).scaled((p * q) % 2 ? -1 : 1));
  }
}

TEST(Congruence, Examples) {
  auto m = two_place();
  CoeffRing s(3, 1);
  EXPECT_EQ(congruence_class(m, "v", {1, 0}, s), ManifoldClass::linear(s, {1, 0}));
  EXPECT_TRUE(congruence_class(m, "v", {0, 0}, s).is_zero());
  EXPECT_EQ(congruence_class(m, "w", {2}, s), ManifoldClass::linear(s, {2, 2}));
  EXPECT_THROW(congruence_class(m, "u", {1}, s), InputError);
  // Z/3 -> Z/9 must land in 3 Z/9
  EXPECT_THROW(congruence_class(m, "w", {1}, CoeffRing(3, 2)), InputError);
  EXPECT_EQ(congruence_class(m, "w", {3}, CoeffRing(3, 2)), ManifoldClass::linear(CoeffRing(3, 2), {3, 3}));
  EXPECT_THROW(TorusManifold(2, {Place{"v", AbelianLGroup::cyclic(3, 1), {{1}}}}), InputError);
}

TEST(DerivedAct, Examples) {
  auto m = two_place();
  CoeffRing s(3, 2);
  auto one = ManifoldClass::one(2, s);
  EXPECT_EQ(derived_act(m, "v", {1, 0}, one), congruence_class(m, "v", {1, 0}, s));
  EXPECT_TRUE(derived_act(m, "v", {1, 4}, derived_act(m, "v", {1, 4}, one)).is_zero());
  auto ab = derived_act(m, "v", {1, 0}, derived_act(m, "w", {3}, one));
  auto ba = derived_act(m, "w", {3}, derived_act(m, "v", {1, 0}, one));
  EXPECT_EQ(ab, ba.scaled(-1));
  // scalars commute with the action
  auto omega = ManifoldClass::linear(s, {2, 5});
  EXPECT_EQ(derived_act(m, "v", {1, 1}, omega.scaled(4)), derived_act(m, "v", {1, 1}, omega).scaled(4));
}

TEST(DerivedAct, CoefficientChangeIntertwines) {
  auto m = two_place();
  CoeffRing s9(3, 2), s3(3, 1);
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Int> alpha{static_cast<Int>(rng() % 9), static_cast<Int>(rng() % 9)};
    ManifoldClass omega(2, s9);
    for (std::uint32_t k = 0; k < 4; ++k) omega.add(k, static_cast<Int>(rng() % 9));
    EXPECT_EQ(derived_act(m, "v", alpha, omega).reduced(1), derived_act(m, "v", alpha, omega.reduced(1)));
  }
}

TEST(Exterior, GenerationReports) {
  auto m = two_place();
  CoeffRing s(3, 1);
  auto good = exterior_generation_report(m, s, {{"v", {1, 0}}, {"v", {0, 1}}});
  EXPECT_TRUE(good.pass());
  EXPECT_EQ(good.ranks, (std::vector<std::size_t>{1, 2, 1}));
  auto mixed = exterior_generation_report(m, s, {{"v", {1, 0}}, {"w", {1}}});
  EXPECT_TRUE(mixed.pass());
  auto bad = exterior_generation_report(m, s, {{"v", {1, 1}}, {"w", {1}}});
  EXPECT_FALSE(bad.pass());
  EXPECT_EQ(bad.ranks, (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_FALSE(bad.witnesses.empty());
  TorusManifold line(1, {Place{"v", AbelianLGroup::cyclic(3, 1), {{1}}}});
  auto one = exterior_generation_report(line, s, {{"v", {1}}});
  EXPECT_TRUE(one.pass());
  EXPECT_EQ(one.ranks, (std::vector<std::size_t>{1, 1}));
  // over Z/9 a class divisible by 3 does not generate
  auto deep = exterior_generation_report(m, CoeffRing(3, 2), {{"v", {1, 0}}, {"w", {3}}});
  EXPECT_FALSE(deep.pass());
}

TEST(LimitAssemble, Examples) {
  TorusManifold m(2, {Place{"v", AbelianLGroup::homogeneous(3, 3, 2), {{1, 2}, {0, 1}}}});
  std::vector<ModMatrix> acts, ids;
  const std::vector<Int> alpha{4, 7};
  for (int n = 1; n <= 3; ++n) {
    CoeffRing s(3, n);
    acts.push_back(endomorphism_matrix(2, s, [&](const ManifoldClass& w) { return derived_act(m, "v", alpha, w); }));
    ids.push_back(ModMatrix::identity(4, s.modulus()));
  }
  auto lim = limit_assemble(3, acts);
  EXPECT_EQ(lim, acts.back());
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(lim.reduced(ipow(3, n)), acts[static_cast<std::size_t>(n - 1)]);
  EXPECT_EQ(limit_assemble(3, ids), ids.back());
  auto broken = acts;
  broken[1](1, 0) = (broken[1](1, 0) + 1) % 9;
  try {
    limit_assemble(3, broken);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("t_2 does not reduce to t_1"), std::string::npos);
  }
}
