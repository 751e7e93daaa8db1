#include <gtest/gtest.h>

#include "dhecke/root_datum.hpp"

using namespace dhecke;

TEST(RootDatum, Catalog) {
  RootDatum sl2 = build_root_datum("SL2");
  EXPECT_EQ(sl2.rank(), 1);
  EXPECT_EQ(sl2.roots()[0], (Weight{2}));
  EXPECT_EQ(RootDatum::pair(sl2.roots()[0], sl2.coroots()[0]), 2);
  RootDatum pgl2 = build_root_datum("PGL2");
  EXPECT_EQ(pgl2.coroots()[0], (Coweight{2}));
  RootDatum sl3 = build_root_datum("SL3");
  EXPECT_EQ(sl3.weyl_order(), 6u);
  EXPECT_EQ(sl3.roots().size(), 6u);
  EXPECT_EQ(build_root_datum("Sp4").weyl_order(), 8u);
  EXPECT_THROW(build_root_datum("E8"), InputError);
}

TEST(RootDatum, RejectsInconsistentData) {
  EXPECT_THROW(RootDatum("bad", 1, {{1}, {-1}}, {{1}, {-1}}, {0}), Error);
  EXPECT_THROW(RootDatum("bad", 1, {{2}}, {{1}}, {0}), Error);
}

TEST(RootDatum, WeylGroupFaithfulAndPermutesAlphaStar) {
  for (const char* name : {"SL2", "PGL2", "SL3", "Sp4"}) {
    RootDatum rd = build_root_datum(name);
    std::set<std::vector<Int>> mats;
    for (const auto& w : rd.weyl()) {
      std::vector<Int> flat;
      for (int i = 0; i < rd.rank(); ++i)
        for (int j = 0; j < rd.rank(); ++j) flat.push_back(w.matrix(i, j));
      mats.insert(flat);
    }
    EXPECT_EQ(mats.size(), rd.weyl_order());
    std::set<Coweight> stars;
    for (std::size_t a = 0; a < rd.roots().size(); ++a) stars.insert(alpha_star(rd, static_cast<int>(a)));
    for (std::size_t w = 0; w < rd.weyl_order(); ++w) {
      std::set<Coweight> moved;
      for (const auto& s : stars) moved.insert(rd.act(static_cast<int>(w), s));
      EXPECT_EQ(moved, stars);
    }
  }
}

TEST(RootDatum, DominantRepresentative) {
  RootDatum pgl2 = build_root_datum("PGL2");
  auto [lp, w] = dominant_representative(pgl2, {-3});
  EXPECT_EQ(lp, (Coweight{3}));
  EXPECT_EQ(pgl2.weyl()[static_cast<std::size_t>(w)].word, (std::vector<int>{0}));
  auto [z, w0] = dominant_representative(pgl2, {0});
  EXPECT_EQ(z, (Coweight{0}));
  EXPECT_EQ(w0, 0);

  RootDatum sl3 = build_root_datum("SL3");
  Coweight anti{-1, -1};
  ASSERT_LT(RootDatum::pair(sl3.roots()[0], anti), 0);
  ASSERT_LT(RootDatum::pair(sl3.roots()[1], anti), 0);
  auto [dom, wd] = dominant_representative(sl3, anti);
  int longest = sl3.longest_element();
  EXPECT_EQ(wd, longest);
  EXPECT_EQ(dom, sl3.act(longest, anti));
  EXPECT_TRUE(sl3.is_dominant(dom));
}

TEST(RootDatum, DominantRepresentativeIdempotent) {
  for (const char* name : {"SL2", "PGL2", "SL3", "Sp4"}) {
    RootDatum rd = build_root_datum(name);
    for (Int a = -3; a <= 3; ++a)
      for (Int b = -3; b <= 3; ++b) {
        Coweight l = rd.rank() == 1 ? Coweight{a} : Coweight{a, b};
        auto [lp, w] = dominant_representative(rd, l);
        EXPECT_EQ(rd.act(w, l), lp);
        auto [again, w2] = dominant_representative(rd, lp);
        EXPECT_EQ(again, lp);
        EXPECT_EQ(w2, 0);
      }
  }
}

TEST(Discriminant, RankOneExamples) {
  CoeffRing s(3, 2);
  RootDatum sl2 = build_root_datum("SL2");
  EXPECT_EQ(root_divisibility(sl2, 0), 2);
  EXPECT_EQ(alpha_star(sl2, 0), (Coweight{2}));
  LatticeAlgebraElement expect{{{-2}, s.neg(1)}, {{0}, 2}, {{2}, s.neg(1)}};
  EXPECT_EQ(discriminant(sl2, s), expect);
  RootDatum pgl2 = build_root_datum("PGL2");
  EXPECT_EQ(root_divisibility(pgl2, 0), 1);
  EXPECT_EQ(alpha_star(pgl2, 0), (Coweight{2}));
  EXPECT_EQ(discriminant(pgl2, s), expect);
}

TEST(Discriminant, WeylInvariantInCorootLattice) {
  CoeffRing s(5, 1);
  for (const char* name : {"SL3", "Sp4"}) {
    RootDatum rd = build_root_datum(name);
    auto f = discriminant(rd, s);
    EXPECT_TRUE(lattice_is_invariant(rd, f));
    EXPECT_FALSE(f.empty());
  }
}

TEST(EPsiG, Examples) {
  CoeffRing s9(3, 2);
  Mat2 g{{2, 0, 0, 5}};
  Mat2 out = e_psi_g(1, g, 1, s9);
  EXPECT_EQ(out, (Mat2{{6, 0, 0, 3}}));
  EXPECT_THROW(e_psi_g(1, Mat2{{1, 0, 0, 1}}, 1, s9), Error);

  CoeffRing f7(7, 1);
  Int a = 3, ainv = 5;  // 3 * 5 = 15 = 1
  Mat2 d{{a, 0, 0, ainv}};
  Mat2 e = e_psi_g(1, d, 1, f7);
  Int tr = a + ainv;
  EXPECT_EQ(e, (Mat2{{f7.reduce(2 * a - tr), 0, 0, f7.reduce(2 * ainv - tr)}}));
}

TEST(EPsiG, CommutesWithG) {
  CoeffRing f(7, 1);
  for (Int a = 0; a < 7; ++a)
    for (Int b = 0; b < 7; ++b)
      for (Int c = 0; c < 7; ++c) {
        // complete to determinant 1 where possible
        if (a == 0) continue;
        Int dd = f.mul(f.add(1, f.mul(b, c)), f.inv(a));
        Mat2 g{{a, b, c, dd}};
        if (!is_regular_semisimple(g, f)) continue;
        for (Int k = -2; k <= 3; ++k) {
          Mat2 e = e_psi_g(k, g, 2, f);
          EXPECT_EQ(mat2_mul(e, g, f), mat2_mul(g, e, f));
        }
      }
}
