#include "dhecke/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "dhecke/regime.hpp"
#include "dhecke/resolution.hpp"

namespace dhecke {

namespace bmp = boost::multiprecision;

std::string TreeVertex::to_string() const {
  if (on_apartment()) return "[" + std::to_string(a) + "]";
  return "[" + std::to_string(a) + "; " + std::to_string(num) + "*q^" + std::to_string(e) + "]";
}

Mat2Q Mat2Q::operator*(const Mat2Q& o) const {
  Mat2Q r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
  return r;
}

Mat2Q Mat2Q::inverse() const {
  Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det == 0) throw Error("singular matrix");
  Mat2Q r;
  r.m[0][0] = m[1][1] / det;
  r.m[0][1] = -m[0][1] / det;
  r.m[1][0] = -m[1][0] / det;
  r.m[1][1] = m[0][0] / det;
  return r;
}

Mat2Q Mat2Q::identity() {
  Mat2Q r;
  r.m[0][0] = 1;
  r.m[1][1] = 1;
  r.m[0][1] = 0;
  r.m[1][0] = 0;
  return r;
}

namespace {

int int_valuation(BigInt n, Int q) {
  int v = 0;
  while (n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

Rational qpow(Int q, int k) {
  Rational r = 1;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) r *= q;
  return k < 0 ? Rational(1) / r : r;
}

BigInt bigpow(Int q, int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= q;
  return r;
}

Int to_int(const BigInt& b) {
  if (b > BigInt(std::numeric_limits<Int>::max()) || b < BigInt(std::numeric_limits<Int>::min()))
    throw Error("tree coordinate exceeds 64 bits");
  return static_cast<Int>(b);
}

/// x mod q^k for a q-integral rational x.
BigInt residue(const Rational& x, Int q, int k) {
  BigInt mod = bigpow(q, k);
  BigInt n = bmp::numerator(x), d = bmp::denominator(x);
  if (d % q == 0) throw Error("residue of a non-integral element");
  BigInt dn = d % mod;
  if (dn < 0) dn += mod;
  // inverse of d mod q^k through the extended Euclidean algorithm
  BigInt r0 = mod, r1 = dn, t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt qt = r0 / r1;
    BigInt r2 = r0 - qt * r1;
    r0 = r1;
    r1 = r2;
    BigInt t2 = t0 - qt * t1;
    t0 = t1;
    t1 = t2;
  }
  BigInt out = (n % mod) * (t0 % mod) % mod;
  if (out < 0) out += mod;
  return out;
}

/// Canonical vertex with given a and b (any rational).
TreeVertex make_vertex(Int q, int a, const Rational& b) {
  if (b == 0) return TreeVertex::apartment(a);
  int e = q_valuation(b, q);
  if (e >= a) return TreeVertex::apartment(a);
  BigInt n = residue(b / qpow(q, e), q, a - e);
  return {a, e, to_int(n)};
}

}  // namespace

int q_valuation(const Rational& x, Int q) {
  if (x == 0) throw Error("valuation of zero");
  return int_valuation(bmp::numerator(x), q) - int_valuation(bmp::denominator(x), q);
}

Mat2Q vertex_matrix(Int q, const TreeVertex& v) {
  Mat2Q r;
  r.m[0][0] = qpow(q, v.a);
  r.m[0][1] = Rational(v.num) * qpow(q, v.e);
  r.m[1][0] = 0;
  r.m[1][1] = 1;
  return r;
}

TreeVertex vertex_of_matrix(Int q, const Mat2Q& in) {
  Mat2Q m = in;
  if (m.m[1][0] != 0) {
    if (m.m[1][1] == 0 || q_valuation(m.m[1][0], q) < q_valuation(m.m[1][1], q))
      for (int i = 0; i < 2; ++i) std::swap(m.m[i][0], m.m[i][1]);
    if (m.m[1][0] != 0) {
      Rational t = m.m[1][0] / m.m[1][1];
      for (int i = 0; i < 2; ++i) m.m[i][0] -= t * m.m[i][1];
    }
  }
  if (m.m[0][0] == 0 || m.m[1][1] == 0) throw Error("singular lattice");
  Rational alpha = m.m[0][0] / m.m[1][1];
  Rational beta = m.m[0][1] / m.m[1][1];
  return make_vertex(q, q_valuation(alpha, q), beta);
}

TreeVertex act(Int q, const Mat2Q& g, const TreeVertex& v) { return vertex_of_matrix(q, g * vertex_matrix(q, v)); }

int tree_distance(Int q, const TreeVertex& x, const TreeVertex& y) {
  Mat2Q n = vertex_matrix(q, x).inverse() * vertex_matrix(q, y);
  int vmin = std::numeric_limits<int>::max();
  for (const auto& row : n.m)
    for (const auto& c : row)
      if (c != 0) vmin = std::min(vmin, q_valuation(c, q));
  Rational det = n.m[0][0] * n.m[1][1] - n.m[0][1] * n.m[1][0];
  return q_valuation(det, q) - 2 * vmin;
}

CanonicalPosition canonical_isometry(Int q, const TreeVertex& x, const TreeVertex& y) {
  Mat2Q g1 = vertex_matrix(q, x).inverse();
  Mat2Q n = g1 * vertex_matrix(q, y);
  Mat2Q l = Mat2Q::identity();
  int bi = -1, bj = -1, bv = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (n.m[i][j] == 0) continue;
      int v = q_valuation(n.m[i][j], q);
      if (bi < 0 || v < bv) {
        bi = i;
        bj = j;
        bv = v;
      }
    }
  if (bi == 1) {
    std::swap(n.m[0], n.m[1]);
    std::swap(l.m[0], l.m[1]);
  }
  if (bj == 1)
    for (int i = 0; i < 2; ++i) std::swap(n.m[i][0], n.m[i][1]);
  Rational t = n.m[1][0] / n.m[0][0];
  for (int j = 0; j < 2; ++j) {
    n.m[1][j] -= t * n.m[0][j];
    l.m[1][j] -= t * l.m[0][j];
  }
  Rational c = n.m[0][1] / n.m[0][0];
  for (int i = 0; i < 2; ++i) n.m[i][1] -= c * n.m[i][0];
  CanonicalPosition out;
  out.n = q_valuation(n.m[1][1], q) - q_valuation(n.m[0][0], q);
  out.g = l * g1;
  if (out.n > 0) {
    Mat2Q s;
    s.m[0][0] = 0;
    s.m[0][1] = 1;
    s.m[1][0] = 1;
    s.m[1][1] = 0;
    out.g = s * out.g;
  }
  return out;
}

std::vector<TreeVertex> tree_neighbors(Int q, const TreeVertex& v) {
  std::vector<TreeVertex> out;
  for (Int t = 0; t < q; ++t) {
    if (v.on_apartment()) {
      out.push_back(t == 0 ? TreeVertex::apartment(v.a + 1) : TreeVertex{v.a + 1, v.a, t});
    } else {
      Int mod = ipow(q, v.a + 1 - v.e);
      out.push_back({v.a + 1, v.e, floor_mod(v.num + t * ipow(q, v.a - v.e), mod)});
    }
  }
  if (v.on_apartment() || v.e >= v.a - 1) {
    out.push_back(TreeVertex::apartment(v.a - 1));
  } else {
    out.push_back({v.a - 1, v.e, floor_mod(v.num, ipow(q, v.a - 1 - v.e))});
  }
  return out;
}

BruhatTitsTree::BruhatTitsTree(Int q, int depth, std::size_t max_vertices) : q_(q), depth_(depth) {
  if (!is_prime(q)) throw InputError("the tree oracle needs a prime q");
  if (depth < 0) throw InputError("negative tree depth");
  // 1 + (q + 1)(q^depth - 1)/(q - 1)
  double expect = 1;
  for (int i = 0; i < depth; ++i) expect += static_cast<double>(q + 1) * std::pow(static_cast<double>(q), i);
  if (expect > static_cast<double>(max_vertices))
    throw Error("tree of depth " + std::to_string(depth) + " exceeds the vertex budget");
  vertices_.push_back(TreeVertex::apartment(0));
  index_[vertices_[0]] = 0;
  dist_.push_back(0);
  adj_.emplace_back();
  for (std::size_t head = 0; head < vertices_.size(); ++head) {
    const int d = dist_[head];
    for (const auto& nb : tree_neighbors(q, vertices_[head])) {
      auto it = index_.find(nb);
      std::size_t j;
      if (it == index_.end()) {
        if (d == depth) continue;
        j = vertices_.size();
        index_[nb] = j;
        vertices_.push_back(nb);
        dist_.push_back(d + 1);
        adj_.emplace_back();
      } else {
        j = it->second;
      }
      if (std::find(adj_[head].begin(), adj_[head].end(), j) == adj_[head].end()) {
        adj_[head].push_back(j);
        adj_[j].push_back(head);
      }
    }
  }
}

std::size_t BruhatTitsTree::index_of(const TreeVertex& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? vertices_.size() : it->second;
}

BruhatTitsTree build_tree(Int q, int depth) { return BruhatTitsTree(q, depth); }

GammaAction::GammaAction(Int q, Int ell, int precision) : q_(q), ell_(ell), v_(0), order_(1), precision_(precision) {
  if (!is_prime(q)) throw InputError("the tree oracle needs a prime q");
  if (!is_prime(ell) || ell == q) throw InputError("ell must be a prime different from q");
  if (precision < 1) throw Error("precision must be positive");
  Int m = q - 1;
  while (m % ell == 0) {
    m /= ell;
    ++v_;
    order_ *= ell;
  }
  // an element of exact order ell^v in F_q^x
  Int zeta = 1;
  for (Int g = 2; g < q || q == 2; ++g) {
    Int cand = pow_mod(g, (q - 1) / order_, q);
    if (order_ == 1 || pow_mod(cand, order_ / ell, q) != 1) {
      zeta = cand;
      break;
    }
  }
  qm_ = bigpow(q, precision);
  omega_ = bmp::powm(BigInt(zeta), bigpow(q, precision - 1), qm_);
}

TreeVertex GammaAction::act(Int i, const TreeVertex& v) const {
  if (v.on_apartment()) return v;
  BigInt mod = bigpow(q_, v.a - v.e);
  if (v.a - v.e > precision_) throw Error("vertex deeper than the Teichmuller precision");
  BigInt u = bmp::powm(omega_, BigInt(floor_mod(i, order_)), mod);
  return {v.a, v.e, to_int(u * BigInt(v.num) % mod)};
}

Int GammaAction::stabilizer_order(const TreeVertex& v) const {
  Int count = 0;
  for (Int i = 0; i < order_; ++i)
    if (act(i, v) == v) ++count;
  return count;
}

Mat2Q GammaAction::matrix(Int i) const {
  Mat2Q r;
  r.m[0][0] = Rational(bmp::powm(omega_, BigInt(floor_mod(i, order_)), qm_));
  r.m[0][1] = 0;
  r.m[1][0] = 0;
  r.m[1][1] = 1;
  return r;
}

Int GammaAction::identify(const Mat2Q& c) const {
  const int need = precision_ / 2;
  if (c.m[1][1] == 0) throw Error("element does not lie in the torus");
  auto small = [&](const Rational& x) { return x == 0 || q_valuation(x, q_) >= need; };
  if (!small(c.m[0][1] / c.m[1][1]) || !small(c.m[1][0] / c.m[1][1]))
    throw Error("stabilizer element does not conjugate into the torus");
  Rational ratio = c.m[0][0] / c.m[1][1];
  for (Int i = 0; i < order_; ++i) {
    Rational w(bmp::powm(omega_, BigInt(i), qm_));
    if (small(ratio - w)) return i;
  }
  throw Error("stabilizer element does not conjugate into Gamma");
}

namespace {

int teichmuller_precision(int depth) { return 4 * depth + 8; }

/// H^*(Z/ell^j; S) through chain-level oracles, cached per group.
class OracleCache {
 public:
  OracleCache(Int ell, const CoeffRing& s, int max_degree) : ell_(ell), s_(s), max_degree_(max_degree) {}

  const ChainOracle& get(const AbelianLGroup& g) {
    auto it = cache_.find(g.exponents());
    if (it == cache_.end())
      it = cache_.emplace(g.exponents(), std::make_unique<ChainOracle>(g, s_, max_degree_)).first;
    return *it->second;
  }

 private:
  Int ell_;
  CoeffRing s_;
  int max_degree_;
  std::map<std::vector<int>, std::unique_ptr<ChainOracle>> cache_;
};

int log_ell(Int n, Int ell) {
  int k = 0;
  while (n > 1) {
    n /= ell;
    ++k;
  }
  return k;
}

AbelianLGroup stabilizer_group(Int ell, Int order) {
  return order == 1 ? AbelianLGroup::trivial(ell) : AbelianLGroup::cyclic(ell, log_ell(order, ell));
}

/// Degree-0 coefficient, the restriction to the trivial group.
CohClass to_trivial(const CohClass& a, Int ell) {
  AbelianLGroup triv = AbelianLGroup::trivial(ell);
  Monomial unit{0, std::vector<int>(static_cast<std::size_t>(a.group().rank()), 0)};
  return CohClass::one(triv, a.coeff()).scaled(a.coefficient(unit));
}

int top_degree(const CohClass& a) {
  int d = 0;
  for (const auto& [m, c] : a.terms()) d = std::max(d, m.degree());
  return d;
}

}  // namespace

SplitnessReport splitness_check(Int q, Int ell, int r, int depth) {
  CoeffRing s(ell, r);
  require_regime(build_root_datum("PGL2"), s, q);
  SplitnessReport rep{q, ell, r, depth, 0, 0, {}, 0, {}};
  BruhatTitsTree tree(q, depth);
  GammaAction gamma(q, ell, teichmuller_precision(depth));
  AbelianLGroup big = stabilizer_group(ell, gamma.order());
  OracleCache oracles(ell, s, 4);
  rep.vertices = tree.size();
  for (const auto& z : tree.vertices()) {
    Int o = gamma.stabilizer_order(z);
    ++rep.stabilizer_orders[o];
    if (z.on_apartment()) {
      if (o != gamma.order()) rep.failures.push_back("apartment vertex " + z.to_string() + " is not fixed by Gamma");
      continue;
    }
    ++rep.off_apartment;
    if (o == 1) {
      // Cores(1) = [Gamma : 1]
      ++rep.checked_classes;
      if (s.reduce(gamma.order()) != 0) rep.failures.push_back("Cores(1) from " + z.to_string() + " is nonzero");
      continue;
    }
    AbelianLGroup sub = stabilizer_group(ell, o);
    GroupHom incl(sub, big, {{gamma.order() / o}});
    for (int k = 0; k <= 3; ++k)
      for (const auto& m : monomial_basis(1, k)) {
        ++rep.checked_classes;
        CohClass c = chain_corestrict(oracles.get(sub), oracles.get(big), incl, CohClass::monomial(sub, s, m));
        if (!c.is_zero())
          rep.failures.push_back("Cores(" + m.to_string() + ") from " + z.to_string() + " is nonzero");
      }
  }
  return rep;
}

OracleElement::OracleElement(Int q, const AbelianLGroup& gamma, const CoeffRing& s) : q_(q), gamma_(gamma), s_(s) {
  if (gamma.rank() != 1) throw Error("Gamma must be cyclic");
}

OracleElement OracleElement::from_spherical(Int q, const ToralElement& f) {
  if (f.root_datum().name() != "PGL2") throw Error("the tree oracle handles PGL2 only");
  if (!is_spherical(f)) throw Error("oracle elements come from spherical elements");
  OracleElement h(q, f.context().t, f.context().s);
  for (const auto& [l, v] : f.support())
    if (l[0] >= 0) h.set(static_cast<int>(l[0]), v);
  return h;
}

void OracleElement::set(int n, const CohClass& v) {
  if (n < 0) throw Error("canonical pairs have n >= 0");
  if (v.group() != gamma_ || v.coeff() != s_) throw Error("value lives over the wrong group");
  if (v.is_zero()) {
    values_.erase(n);
  } else {
    values_.insert_or_assign(n, v);
  }
}

CohClass OracleElement::value(int n) const {
  auto it = values_.find(n);
  return it == values_.end() ? CohClass(gamma_, s_) : it->second;
}

int OracleElement::support_radius() const { return values_.empty() ? 0 : values_.rbegin()->first; }

bool ConvolutionReport::pass() const {
  if (!orbit_partition_ok) return false;
  return std::all_of(entries.begin(), entries.end(), [](const ConvolutionEntry& e) { return e.match(); });
}

ConvolutionReport oracle_convolve(const OracleElement& h1, const OracleElement& h2, Int ell, int window, int depth) {
  if (h1.q() != h2.q() || h1.gamma() != h2.gamma() || h1.coeff() != h2.coeff())
    throw Error("oracle elements over different data");
  const Int q = h1.q();
  const CoeffRing& s = h1.coeff();
  const int r1 = h1.support_radius(), r2 = h2.support_radius();
  if (window < 0 || window + r1 > depth) throw Error("window exceeds support guarantee");
  BruhatTitsTree tree(q, depth);
  GammaAction gamma(q, ell, teichmuller_precision(depth));
  const AbelianLGroup& big = h1.gamma();
  if (big != stabilizer_group(ell, gamma.order())) throw Error("Gamma does not match q and ell");
  int top = 0;
  for (const auto& [n, v] : h1.values()) top = std::max(top, top_degree(v));
  int top2 = 0;
  for (const auto& [n, v] : h2.values()) top2 = std::max(top2, top_degree(v));
  OracleCache oracles(ell, s, std::max(1, top + top2));

  ConvolutionReport rep;
  // orbits of the middle vertex, shared by all pairs
  std::vector<std::size_t> orbit_of(tree.size(), tree.size());
  std::vector<std::size_t> reps;
  std::vector<Int> stab(tree.size(), 0);
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (orbit_of[i] != tree.size()) continue;
    orbit_of[i] = i;
    reps.push_back(i);
    std::size_t size = 1;
    for (Int k = 1; k < gamma.order(); ++k) {
      std::size_t j = tree.index_of(gamma.act(k, tree.vertex(i)));
      if (j == tree.size()) throw Error("Gamma moves a vertex out of the ball");
      if (orbit_of[j] == tree.size()) {
        orbit_of[j] = i;
        ++size;
      }
    }
    stab[i] = gamma.stabilizer_order(tree.vertex(i));
    if (static_cast<Int>(size) * stab[i] != gamma.order()) rep.orbit_partition_ok = false;
  }

  // value of h at (x, y) restricted to the stabilizer of y in Gamma
  auto pull = [&](const OracleElement& h, const TreeVertex& x, const TreeVertex& y, Int o) {
    CanonicalPosition cp = canonical_isometry(q, x, y);
    CohClass v = h.value(cp.n);
    if (o == 1) return to_trivial(v, ell);
    AbelianLGroup sub = stabilizer_group(ell, o);
    Int gen = gamma.order() / o;
    Mat2Q c = cp.g * gamma.matrix(gen) * cp.g.inverse();
    Int e = gamma.identify(c);
    GroupHom f(sub, big, {{e}});
    return chain_restrict(oracles.get(sub), oracles.get(big), f, v);
  };

  auto rd = build_root_datum("PGL2");
  ToralContext ctx(rd, big, s);
  auto model_of = [&](const OracleElement& h) {
    ToralElement f(ctx);
    int sw = rd.simple_reflection(0);
    for (const auto& [n, v] : h.values()) {
      f.add({n}, v);
      if (n > 0) f.add({-n}, weyl_act(rd, sw, v));
    }
    return f;
  };
  ToralElement model = toral_convolve(model_of(h1), model_of(h2), ProductBounds::unbounded());

  for (int x = -window; x <= window; ++x)
    for (int z = -window; z <= window; ++z) {
      TreeVertex vx = TreeVertex::apartment(x), vz = TreeVertex::apartment(z);
      ConvolutionEntry entry{x, z, CohClass(big, s), model.value({z - x}), CohClass(big, s), 0};
      for (std::size_t i : reps) {
        const TreeVertex& y = tree.vertex(i);
        int d1 = tree_distance(q, vx, y), d2 = tree_distance(q, y, vz);
        if (h1.value(d1).is_zero() || h2.value(d2).is_zero()) continue;
        ++entry.orbits;
        const Int o = stab[i];
        CohClass a = pull(h1, vx, y, o), b = pull(h2, y, vz, o);
        CohClass term(big, s);
        if (o == 1) {
          // Cores from the trivial group multiplies by the index
          Int c0 = s.mul(a.coefficient(Monomial{0, {}}), b.coefficient(Monomial{0, {}}));
          term = CohClass::one(big, s).scaled(s.mul(c0, gamma.order()));
        } else {
          AbelianLGroup sub = stabilizer_group(ell, o);
          CohClass prod = oracles.get(sub).cup(a, b);
          term = o == gamma.order() ? prod
                                    : chain_corestrict(oracles.get(sub), oracles.get(big),
                                                       GroupHom(sub, big, {{gamma.order() / o}}), prod);
        }
        entry.oracle = entry.oracle + term;
        if (!y.on_apartment()) entry.off_apartment = entry.off_apartment + term;
      }
      rep.entries.push_back(std::move(entry));
    }
  return rep;
}

}  // namespace dhecke
