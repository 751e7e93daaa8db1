#include "dhecke/resolution.hpp"

#include <algorithm>

namespace dhecke {

namespace {

void multi_indices(std::size_t d, int k, std::vector<int>& cur, std::size_t i, std::vector<std::vector<int>>& out) {
  if (i + 1 == d) {
    cur[i] = k;
    out.push_back(cur);
    return;
  }
  for (int v = k; v >= 0; --v) {
    cur[i] = v;
    multi_indices(d, k - v, cur, i + 1, out);
  }
}

}  // namespace

PeriodicResolution::PeriodicResolution(AbelianLGroup group, CoeffRing coeff, int max_degree)
    : group_(std::move(group)), coeff_(std::move(coeff)), max_degree_(max_degree) {
  if (group_.ell() != coeff_.ell()) throw Error("resolution: group and coefficients are for different primes");
  if (max_degree_ < 0) throw Error("resolution: negative degree bound");
  order_ = static_cast<std::size_t>(group_.order());
  add_.resize(order_ * order_);
  for (std::size_t a = 0; a < order_; ++a) {
    auto ea = group_.element(static_cast<Int>(a));
    for (std::size_t b = 0; b < order_; ++b) {
      auto eb = group_.element(static_cast<Int>(b));
      for (std::size_t i = 0; i < ea.size(); ++i) eb[i] += ea[i];
      add_[a * order_ + b] = static_cast<std::size_t>(group_.index(eb));
    }
  }
  const auto d = static_cast<std::size_t>(group_.rank());
  for (int k = 0; k <= max_degree_; ++k) {
    std::vector<std::vector<int>> g;
    if (d == 0) {
      if (k == 0) g.emplace_back();
    } else {
      std::vector<int> cur(d, 0);
      multi_indices(d, k, cur, 0, g);
    }
    gens_.push_back(std::move(g));
  }
  const Int m = coeff_.modulus();
  boundary_.emplace_back(0, dim(0), m);
  elim_.emplace_back();
  for (int k = 1; k <= max_degree_; ++k) {
    ModMatrix b(dim(k - 1), dim(k), m);
    for (std::size_t j = 0; j < rank(k); ++j) {
      Vec col = boundary_of_generator(k, j);
      for (std::size_t g = 0; g < order_; ++g) {
        Vec t = translate(k - 1, col, g);
        for (std::size_t i = 0; i < t.size(); ++i)
          if (t[i]) b(i, j * order_ + g) = t[i];
      }
    }
    elim_.push_back(std::make_unique<LocalElimination>(b, coeff_.ell()));
    boundary_.push_back(std::move(b));
  }
}

std::size_t PeriodicResolution::generator_index(int k, const std::vector<int>& j) const {
  const auto& g = generators(k);
  auto it = std::find(g.begin(), g.end(), j);
  if (it == g.end()) throw Error("not a generator multi-index");
  return static_cast<std::size_t>(it - g.begin());
}

Vec PeriodicResolution::boundary_of_generator(int k, std::size_t j) const {
  Vec out(dim(k - 1), 0);
  const auto& jj = generators(k)[j];
  const Int m = coeff_.modulus();
  int prefix = 0;
  for (std::size_t i = 0; i < jj.size(); ++i) {
    if (jj[i] > 0) {
      Int sign = prefix % 2 ? -1 : 1;
      std::vector<int> lower(jj);
      --lower[i];
      std::size_t base = generator_index(k - 1, lower) * order_;
      std::vector<Int> t(jj.size(), 0);
      if (jj[i] % 2) {
        // t_i - 1
        t[i] = 1;
        out[base + static_cast<std::size_t>(group_.index(t))] =
            floor_mod(out[base + static_cast<std::size_t>(group_.index(t))] + sign, m);
        out[base] = floor_mod(out[base] - sign, m);
      } else {
        // norm of the i-th factor
        for (Int e = 0; e < group_.factor_order(static_cast<int>(i)); ++e) {
          t[i] = e;
          auto idx = base + static_cast<std::size_t>(group_.index(t));
          out[idx] = floor_mod(out[idx] + sign, m);
        }
      }
    }
    prefix += jj[i];
  }
  return out;
}

Vec PeriodicResolution::translate(int k, const Vec& v, std::size_t g) const {
  Vec out(dim(k), 0);
  for (std::size_t j = 0; j < rank(k); ++j)
    for (std::size_t h = 0; h < order_; ++h) {
      Int c = v[j * order_ + h];
      if (c) out[j * order_ + group_add(h, g)] = c;
    }
  return out;
}

Vec PeriodicResolution::lift(int k, const Vec& b) const {
  auto x = elim_.at(static_cast<std::size_t>(k))->solve(b);
  if (!x) throw Error("chain lift failed: right-hand side is not a boundary in degree " + std::to_string(k));
  return *x;
}

Int PeriodicResolution::augment(const Vec& v) const {
  Int s = 0;
  for (Int c : v) s = coeff_.add(s, c);
  return s;
}

Int PeriodicResolution::evaluate(int k, const Vec& cochain, const Vec& chain) const {
  Int s = 0;
  for (std::size_t j = 0; j < rank(k); ++j) {
    if (cochain[j] == 0) continue;
    Int t = 0;
    for (std::size_t h = 0; h < order_; ++h) t += chain[j * order_ + h];
    s = coeff_.add(s, coeff_.mul(cochain[j], coeff_.reduce(t)));
  }
  return s;
}

namespace {

// Applies an equivariant map, given by the images of generators (in a
// complex with `out_dim` coordinates and translation `tr`), to a chain whose
// group coordinates are first sent through `move`.
template <class Translate, class Move>
Vec apply_equivariant(const std::vector<Vec>& images, const Vec& chain, std::size_t src_order, std::size_t out_dim,
                      Int modulus, Translate tr, Move move) {
  Vec out(out_dim, 0);
  for (std::size_t j = 0; j < images.size(); ++j)
    for (std::size_t h = 0; h < src_order; ++h) {
      Int c = chain[j * src_order + h];
      if (c == 0) continue;
      Vec t = tr(images[j], move(j, h));
      for (std::size_t i = 0; i < out_dim; ++i)
        if (t[i]) out[i] = floor_mod(out[i] + mul_mod(c, t[i], modulus), modulus);
    }
  return out;
}

}  // namespace

ChainOracle::ChainOracle(AbelianLGroup group, CoeffRing coeff, int max_degree)
    : res_(group, coeff, max_degree) {
  check_cohomology_regime(group, coeff);
  const int d = group.rank();
  const int top = max_degree;
  std::vector<ChainMap> x_lift, y_lift;
  for (int i = 0; i < d; ++i) {
    std::vector<int> one(static_cast<std::size_t>(d), 0), two(static_cast<std::size_t>(d), 0);
    one[static_cast<std::size_t>(i)] = 1;
    two[static_cast<std::size_t>(i)] = 2;
    if (top >= 1) {
      Vec xi(res_.rank(1), 0);
      xi[res_.generator_index(1, one)] = 1;
      x_lift.push_back(lift_cocycle(xi, 1, top - 1));
    }
    if (top >= 2) {
      Vec yi(res_.rank(2), 0);
      yi[res_.generator_index(2, two)] = 1;
      y_lift.push_back(lift_cocycle(yi, 2, top - 2));
    }
  }
  const Int m = coeff.modulus();
  for (int k = 0; k <= top; ++k) {
    basis_.push_back(monomial_basis(d, k));
    ModMatrix phi(res_.rank(k), basis_.back().size(), m);
    for (std::size_t col = 0; col < basis_.back().size(); ++col) {
      const Monomial& mono = basis_.back()[col];
      Vec c;
      if (k == 0) {
        c = Vec{1 % m};
      } else {
        // peel off the last generator: y's after x's, highest index last
        Monomial rest = mono;
        const ChainMap* last = nullptr;
        int last_deg = 0;
        for (int i = d - 1; i >= 0 && !last; --i)
          if (rest.y[static_cast<std::size_t>(i)] > 0) {
            --rest.y[static_cast<std::size_t>(i)];
            last = &y_lift[static_cast<std::size_t>(i)];
            last_deg = 2;
          }
        for (int i = d - 1; i >= 0 && !last; --i)
          if ((rest.x >> i) & 1U) {
            rest.x &= ~(1U << i);
            last = &x_lift[static_cast<std::size_t>(i)];
            last_deg = 1;
          }
        c = yoneda(cochains_.at(rest), k - last_deg, *last);
      }
      for (std::size_t r = 0; r < c.size(); ++r) phi(r, col) = c[r];
      cochains_.emplace(mono, std::move(c));
    }
    phi_elim_.push_back(std::make_unique<LocalElimination>(phi, coeff.ell()));
    phi_.push_back(std::move(phi));
  }
}

ChainMap ChainOracle::lift_cocycle(const Vec& v, int q, int steps) const {
  const Int m = res_.coeff().modulus();
  const std::size_t n = res_.order();
  ChainMap cm;
  cm.shift = q;
  for (int k = 0; k <= steps && q + k <= res_.max_degree(); ++k) {
    std::vector<Vec> imgs;
    for (std::size_t j = 0; j < res_.rank(q + k); ++j) {
      if (k == 0) {
        Vec e(res_.dim(0), 0);
        e[0] = floor_mod(v[j], m);
        imgs.push_back(std::move(e));
        continue;
      }
      Vec db = res_.boundary_of_generator(q + k, j);
      Vec b = apply_equivariant(
          cm.images[static_cast<std::size_t>(k - 1)], db, n, res_.dim(k - 1), m,
          [&](const Vec& img, std::size_t g) { return res_.translate(k - 1, img, g); },
          [](std::size_t, std::size_t h) { return h; });
      imgs.push_back(res_.lift(k, b));
    }
    cm.images.push_back(std::move(imgs));
  }
  return cm;
}

Vec ChainOracle::yoneda(const Vec& u, int p, const ChainMap& v_lift) const {
  const auto& imgs = v_lift.images.at(static_cast<std::size_t>(p));
  Vec w(imgs.size(), 0);
  for (std::size_t j = 0; j < imgs.size(); ++j) w[j] = res_.evaluate(p, u, imgs[j]);
  return w;
}

Vec ChainOracle::yoneda(const Vec& u, int p, const Vec& v, int q) const {
  if (p + q > res_.max_degree()) throw Error("Yoneda product beyond the resolution's degree bound");
  return yoneda(u, p, lift_cocycle(v, q, p));
}

const Vec& ChainOracle::basis_cochain(const Monomial& m) const { return cochains_.at(m); }

bool ChainOracle::basis_invertible(int k) const {
  const auto& e = *phi_elim_.at(static_cast<std::size_t>(k));
  return e.rank() == phi_[static_cast<std::size_t>(k)].rows() && e.surjective() &&
         phi_[static_cast<std::size_t>(k)].rows() == phi_[static_cast<std::size_t>(k)].cols();
}

Vec ChainOracle::to_cochain(const CohClass& a, int k) const {
  const CoeffRing& s = res_.coeff();
  Vec out(res_.rank(k), 0);
  for (const auto& [m, c] : a.terms()) {
    if (m.degree() != k) throw Error("to_cochain: class has a term outside degree " + std::to_string(k));
    const Vec& b = cochains_.at(m);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.add(out[i], s.mul(c, b[i]));
  }
  return out;
}

CohClass ChainOracle::from_cochain(const Vec& c, int k) const {
  auto z = phi_elim_.at(static_cast<std::size_t>(k))->solve(c);
  if (!z) throw Error("cochain is not in the span of the monomial cochains");
  CohClass out(res_.group(), res_.coeff());
  const auto& b = basis_[static_cast<std::size_t>(k)];
  for (std::size_t i = 0; i < b.size(); ++i) out.add_term(b[i], (*z)[i]);
  return out;
}

CohClass ChainOracle::cup(const CohClass& a, const CohClass& b) const {
  CohClass out(res_.group(), res_.coeff());
  for (int p = 0; p <= max_degree(); ++p) {
    CohClass ap = a.component(p);
    if (ap.is_zero()) continue;
    for (int q = 0; p + q <= max_degree(); ++q) {
      CohClass bq = b.component(q);
      if (bq.is_zero()) continue;
      out = out + from_cochain(yoneda(to_cochain(ap, p), p, to_cochain(bq, q), q), p + q);
    }
  }
  return out;
}

ChainMap lift_hom(const PeriodicResolution& src, const PeriodicResolution& tgt, const GroupHom& f, int max_degree) {
  if (f.source() != src.group() || f.target() != tgt.group()) throw Error("lift_hom: groups do not match the map");
  const Int m = tgt.coeff().modulus();
  std::vector<std::size_t> image(src.order());
  for (std::size_t h = 0; h < src.order(); ++h)
    image[h] = static_cast<std::size_t>(tgt.group().index(f.apply(src.group().element(static_cast<Int>(h)))));
  ChainMap cm;
  for (int k = 0; k <= max_degree; ++k) {
    std::vector<Vec> imgs;
    for (std::size_t j = 0; j < src.rank(k); ++j) {
      if (k == 0) {
        Vec e(tgt.dim(0), 0);
        e[0] = 1 % m;
        imgs.push_back(std::move(e));
        continue;
      }
      Vec b = apply_equivariant(
          cm.images[static_cast<std::size_t>(k - 1)], src.boundary_of_generator(k, j), src.order(), tgt.dim(k - 1), m,
          [&](const Vec& img, std::size_t g) { return tgt.translate(k - 1, img, g); },
          [&](std::size_t, std::size_t h) { return image[h]; });
      imgs.push_back(tgt.lift(k, b));
    }
    cm.images.push_back(std::move(imgs));
  }
  return cm;
}

CohClass chain_restrict(const ChainOracle& src, const ChainOracle& tgt, const GroupHom& f, const CohClass& a) {
  int top = 0;
  for (const auto& [m, c] : a.terms()) top = std::max(top, m.degree());
  ChainMap psi = lift_hom(src.resolution(), tgt.resolution(), f, top);
  CohClass out(f.source(), a.coeff());
  for (int k = 0; k <= top; ++k) {
    CohClass ak = a.component(k);
    if (ak.is_zero()) continue;
    Vec u = tgt.to_cochain(ak, k);
    Vec r(src.resolution().rank(k), 0);
    for (std::size_t j = 0; j < r.size(); ++j)
      r[j] = tgt.resolution().evaluate(k, u, psi.images[static_cast<std::size_t>(k)][j]);
    out = out + src.from_cochain(r, k);
  }
  return out;
}

CohClass chain_corestrict(const ChainOracle& sub, const ChainOracle& whole, const GroupHom& f, const CohClass& a) {
  const PeriodicResolution& ps = sub.resolution();
  const PeriodicResolution& pw = whole.resolution();
  if (f.source() != ps.group() || f.target() != pw.group()) throw Error("corestriction: groups do not match the map");
  if (!f.is_injective()) throw Error("corestriction needs an injective map");
  const Int m = pw.coeff().modulus();
  // g = rep[coset[g]] + f(sub_elt[g])
  const std::size_t n = pw.order();
  std::vector<std::size_t> in_image(n, n);
  for (std::size_t h = 0; h < ps.order(); ++h)
    in_image[static_cast<std::size_t>(pw.group().index(f.apply(ps.group().element(static_cast<Int>(h)))))] = h;
  std::vector<std::size_t> coset(n, n), sub_elt(n, 0), reps;
  for (std::size_t g = 0; g < n; ++g) {
    if (coset[g] != n) continue;
    auto neg = pw.group().element(static_cast<Int>(g));
    for (auto& c : neg) c = -c;
    const auto gneg = static_cast<std::size_t>(pw.group().index(neg));
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t diff = pw.group_add(x, gneg);
      if (in_image[diff] != n) {
        coset[x] = reps.size();
        sub_elt[x] = in_image[diff];
      }
    }
    reps.push_back(g);
  }
  int top = 0;
  for (const auto& [mono, c] : a.terms()) top = std::max(top, mono.degree());
  // rho[k][j][c]: image of rep_c * e_J in P(sub)_k
  std::vector<std::vector<std::vector<Vec>>> rho;
  for (int k = 0; k <= top; ++k) {
    std::vector<std::vector<Vec>> level(pw.rank(k));
    for (std::size_t j = 0; j < pw.rank(k); ++j) {
      for (std::size_t c = 0; c < reps.size(); ++c) {
        if (k == 0) {
          Vec e(ps.dim(0), 0);
          e[0] = 1 % m;
          level[j].push_back(std::move(e));
          continue;
        }
        Vec db = pw.translate(k - 1, pw.boundary_of_generator(k, j), reps[c]);
        Vec b(ps.dim(k - 1), 0);
        for (std::size_t jj = 0; jj < pw.rank(k - 1); ++jj)
          for (std::size_t g = 0; g < n; ++g) {
            Int coef = db[jj * n + g];
            if (coef == 0) continue;
            Vec t = ps.translate(k - 1, rho[static_cast<std::size_t>(k - 1)][jj][coset[g]], sub_elt[g]);
            for (std::size_t i = 0; i < t.size(); ++i)
              if (t[i]) b[i] = floor_mod(b[i] + mul_mod(coef, t[i], m), m);
          }
        level[j].push_back(ps.lift(k, b));
      }
    }
    rho.push_back(std::move(level));
  }
  CohClass out(f.target(), a.coeff());
  for (int k = 0; k <= top; ++k) {
    CohClass ak = a.component(k);
    if (ak.is_zero()) continue;
    Vec u = sub.to_cochain(ak, k);
    Vec t(pw.rank(k), 0);
    for (std::size_t j = 0; j < t.size(); ++j)
      for (std::size_t c = 0; c < reps.size(); ++c)
        t[j] = floor_mod(t[j] + ps.evaluate(k, u, rho[static_cast<std::size_t>(k)][j][c]), m);
    out = out + whole.from_cochain(t, k);
  }
  return out;
}

namespace {

int top_degree(const CohClass& a) {
  int top = 0;
  for (const auto& [m, c] : a.terms()) top = std::max(top, m.degree());
  return top;
}

}  // namespace

CohClass chain_restrict(const GroupHom& f, const CohClass& a) {
  int top = top_degree(a);
  ChainOracle src(f.source(), a.coeff(), top), tgt(f.target(), a.coeff(), top);
  return chain_restrict(src, tgt, f, a);
}

CohClass chain_corestrict(const GroupHom& f, const CohClass& a) {
  int top = top_degree(a);
  ChainOracle sub(f.source(), a.coeff(), top), whole(f.target(), a.coeff(), top);
  return chain_corestrict(sub, whole, f, a);
}

}  // namespace dhecke
