#include <gtest/gtest.h>

#include "dhecke/tree.hpp"

using namespace dhecke;

namespace {

std::size_t ball_size(Int q, int depth) {
  std::size_t n = 1, p = 1;
  for (int i = 0; i < depth; ++i) {
    n += static_cast<std::size_t>(q + 1) * p;
    p *= static_cast<std::size_t>(q);
  }
  return n;
}

ToralContext ctx7() { return ToralContext::for_q(build_root_datum("PGL2"), 7, CoeffRing(3, 1)); }

}  // namespace

TEST(Tree, VertexCounts) {
  EXPECT_EQ(build_tree(7, 1).size(), 9u);
  EXPECT_EQ(build_tree(7, 2).size(), 65u);
  EXPECT_EQ(build_tree(3, 3).size(), ball_size(3, 3));
  EXPECT_EQ(build_tree(13, 2).size(), ball_size(13, 2));
  EXPECT_THROW(build_tree(9, 1), InputError);
  EXPECT_THROW(BruhatTitsTree(97, 3, 1000), Error);
}

TEST(Tree, RegularAndDistancesAgreeWithBfs) {
  auto t = build_tree(5, 3);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.radius(i) < 3) EXPECT_EQ(t.neighbors(i).size(), 6u);
    EXPECT_EQ(tree_distance(5, TreeVertex::apartment(0), t.vertex(i)), t.radius(i));
    for (std::size_t j : t.neighbors(i)) EXPECT_EQ(tree_distance(5, t.vertex(i), t.vertex(j)), 1);
  }
  // all-pairs distances from BFS inside the ball (balls are geodesically convex)
  for (std::size_t s = 0; s < t.size(); s += 7) {
    std::vector<int> d(t.size(), -1);
    std::vector<std::size_t> queue{s};
    d[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (std::size_t j : t.neighbors(queue[h]))
        if (d[j] < 0) {
          d[j] = d[queue[h]] + 1;
          queue.push_back(j);
        }
    for (std::size_t j = 0; j < t.size(); ++j) EXPECT_EQ(tree_distance(5, t.vertex(s), t.vertex(j)), d[j]);
  }
}

TEST(Tree, MatrixRoundTrip) {
  auto t = build_tree(7, 2);
  for (const auto& v : t.vertices()) EXPECT_EQ(vertex_of_matrix(7, vertex_matrix(7, v)), v);
}

TEST(Tree, CanonicalIsometry) {
  const Int q = 5;
  auto t = build_tree(q, 2);
  for (const auto& x : t.vertices())
    for (const auto& y : t.vertices()) {
      auto cp = canonical_isometry(q, x, y);
      EXPECT_EQ(cp.n, tree_distance(q, x, y));
      EXPECT_EQ(act(q, cp.g, x), TreeVertex::apartment(0));
      EXPECT_EQ(act(q, cp.g, y), TreeVertex::apartment(cp.n));
    }
}

TEST(Gamma, FixedPointsAreTheApartment) {
  for (auto [q, ell] : {std::pair<Int, Int>{7, 3}, {13, 3}, {19, 3}, {11, 5}}) {
    auto t = build_tree(q, 2);
    GammaAction g(q, ell, 16);
    for (const auto& v : t.vertices()) {
      Int o = g.stabilizer_order(v);
      EXPECT_EQ(o == g.order(), v.on_apartment()) << q << " " << v.to_string();
      if (!v.on_apartment()) EXPECT_EQ(o, 1);
    }
  }
  GammaAction g19(19, 3, 16);
  EXPECT_EQ(g19.order(), 9);
}

TEST(Gamma, FirstStepMultipliesDirection) {
  GammaAction g(7, 3, 12);
  Int u = static_cast<Int>(g.generator() % 7);
  EXPECT_EQ(pow_mod(u, 3, 7), 1);
  EXPECT_NE(u, 1);
  for (Int t = 1; t < 7; ++t) EXPECT_EQ(g.act(1, TreeVertex{1, 0, t}), (TreeVertex{1, 0, mul_mod(u, t, 7)}));
}

TEST(Gamma, TeichmullerLift) {
  GammaAction g(13, 3, 10);
  BigInt w = g.generator();
  EXPECT_EQ(boost::multiprecision::powm(w, BigInt(3), g.precision_modulus()), BigInt(1));
  EXPECT_EQ(g.identify(g.matrix(2)), 2);
}

TEST(Splitness, Examples) {
  auto r = splitness_check(7, 3, 1, 2);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.vertices, 65u);
  EXPECT_EQ(r.off_apartment, 60u);
  EXPECT_EQ(r.stabilizer_orders.at(1), 60u);
  EXPECT_EQ(r.stabilizer_orders.at(3), 5u);
  auto r19 = splitness_check(19, 3, 2, 2);
  EXPECT_TRUE(r19.pass());
  EXPECT_EQ(r19.stabilizer_orders.size(), 2u);
  EXPECT_THROW(splitness_check(7, 3, 2, 2), RegimeError);
}

TEST(Splitness, TransferFromTrivialGroupIsTheIndex) {
  AbelianLGroup g = AbelianLGroup::cyclic(3, 1);
  CoeffRing s(3, 1);
  AbelianLGroup triv = AbelianLGroup::trivial(3);
  EXPECT_TRUE(corestrict(GroupHom(triv, g, {{}}), CohClass::one(triv, s)).is_zero());
  EXPECT_EQ(corestrict(GroupHom::identity(g), CohClass::x(g, s, 0)), CohClass::x(g, s, 0));
}

TEST(OracleConvolve, ClassicalT1Squared) {
  auto c = ctx7();
  CohClass one = CohClass::one(c.t, c.s);
  auto t1 = OracleElement::from_spherical(7, satake_basis(c, {1}, one));
  auto rep = oracle_convolve(t1, t1, 3, 1, 2);
  EXPECT_TRUE(rep.pass());
  for (const auto& e : rep.entries) {
    EXPECT_TRUE(e.off_apartment.is_zero());
    if (e.x == e.z) EXPECT_EQ(e.oracle, one.scaled(2));
    if (std::abs(e.x - e.z) == 2) EXPECT_EQ(e.oracle, one);
    if (std::abs(e.x - e.z) == 1) EXPECT_TRUE(e.oracle.is_zero());
  }
}

TEST(OracleConvolve, Identity) {
  auto c = ctx7();
  auto id = OracleElement::from_spherical(7, ToralElement::one(c));
  auto h = OracleElement::from_spherical(7, satake_basis(c, {1}, CohClass::y(c.t, c.s, 0)));
  auto rep = oracle_convolve(id, h, 3, 1, 2);
  EXPECT_TRUE(rep.pass());
  for (const auto& e : rep.entries) {
    int n = e.z - e.x;
    CohClass expect = n == 1 ? CohClass::y(c.t, c.s, 0) : n == -1 ? -CohClass::y(c.t, c.s, 0) : CohClass(c.t, c.s);
    EXPECT_EQ(e.oracle, expect);
  }
}

TEST(OracleConvolve, DegreeOnePair) {
  auto c = ctx7();
  CohClass x = CohClass::x(c.t, c.s, 0);
  auto h = OracleElement::from_spherical(7, satake_basis(c, {1}, x));
  auto rep = oracle_convolve(h, h, 3, 1, 2);
  EXPECT_TRUE(rep.pass());
  for (const auto& e : rep.entries)
    for (const auto& f : rep.entries)
      if (e.z - e.x == -(f.z - f.x)) EXPECT_EQ(e.oracle.component(2), -f.oracle.component(2));
}

TEST(OracleConvolve, OracleEqualsModelOnBasisPairs) {
  for (auto [q, ell, r] : {std::tuple<Int, Int, int>{7, 3, 1}, {19, 3, 2}}) {
    auto c = ToralContext::for_q(build_root_datum("PGL2"), q, CoeffRing(ell, r));
    std::vector<ToralElement> basis;
    for (int lam = 0; lam <= 1; ++lam)
      for (int k = 0; k <= 2; ++k)
        for (const auto& m : monomial_basis(1, k)) {
          CohClass a = CohClass::monomial(c.t, c.s, m);
          try {
            basis.push_back(satake_basis(c, {lam}, a));
          } catch (const Error&) {
            // not invariant under the stabilizer of lam
          }
        }
    ASSERT_GE(basis.size(), 4u);
    for (const auto& a : basis)
      for (const auto& b : basis) {
        auto rep = oracle_convolve(OracleElement::from_spherical(q, a), OracleElement::from_spherical(q, b), ell, 1, 2);
        EXPECT_TRUE(rep.orbit_partition_ok);
        for (const auto& e : rep.entries) {
          EXPECT_TRUE(e.match()) << q << " " << a.to_string() << " * " << b.to_string() << " at (" << e.x << ","
                                 << e.z << "): " << e.oracle.to_string() << " vs " << e.model.to_string();
          EXPECT_TRUE(e.off_apartment.is_zero());
        }
      }
  }
}

TEST(OracleConvolve, WindowGuard) {
  auto c = ctx7();
  auto h = OracleElement::from_spherical(7, satake_basis(c, {2}, CohClass::one(c.t, c.s)));
  EXPECT_THROW(oracle_convolve(h, h, 3, 1, 2), Error);
}
