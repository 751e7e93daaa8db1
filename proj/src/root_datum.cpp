#include "dhecke/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace dhecke {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error("integer matrix shape mismatch");
  IntMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      Int a = (*this)(i, l);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(l, j);
    }
  return out;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("integer matrix/vector shape mismatch");
  std::vector<Int> out(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

namespace {

constexpr std::size_t kMaxWeylOrder = 4096;

// s_alpha on X_*: lambda -> lambda - <alpha, lambda> alpha^vee.
IntMatrix coweight_reflection(const Weight& alpha, const Coweight& coroot) {
  const int n = static_cast<int>(alpha.size());
  IntMatrix m = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) -= coroot[static_cast<std::size_t>(i)] * alpha[static_cast<std::size_t>(j)];
  return m;
}

Weight reflect_weight(const Weight& chi, const Weight& alpha, const Coweight& coroot) {
  Int c = RootDatum::pair(chi, coroot);
  Weight out(chi);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * alpha[i];
  return out;
}

Coweight reflect_coweight(const Coweight& lambda, const Weight& alpha, const Coweight& coroot) {
  Int c = RootDatum::pair(alpha, lambda);
  Coweight out(lambda);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * coroot[i];
  return out;
}

}  // namespace

RootDatum::RootDatum(std::string name, int rank, std::vector<Weight> roots, std::vector<Coweight> coroots,
                     std::vector<int> simple)
    : name_(std::move(name)), rank_(rank), roots_(std::move(roots)), coroots_(std::move(coroots)), simple_(std::move(simple)) {
  if (rank_ < 0) throw Error("root datum rank must be non-negative");
  if (roots_.size() != coroots_.size()) throw Error("root datum: roots and coroots differ in number");
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (static_cast<int>(roots_[i].size()) != rank_ || static_cast<int>(coroots_[i].size()) != rank_)
      throw Error("root datum: coordinate vector of wrong length");
    if (pair(roots_[i], coroots_[i]) != 2)
      throw Error("root datum: <alpha, alpha^vee> != 2 for root " + std::to_string(i));
  }
  std::set<Weight> root_set(roots_.begin(), roots_.end());
  if (root_set.size() != roots_.size()) throw Error("root datum: repeated root");
  // every reflection permutes roots and coroots compatibly
  for (std::size_t a = 0; a < roots_.size(); ++a) {
    for (std::size_t b = 0; b < roots_.size(); ++b) {
      Weight rb = reflect_weight(roots_[b], roots_[a], coroots_[a]);
      Coweight cb = reflect_coweight(coroots_[b], roots_[a], coroots_[a]);
      auto it = std::find(roots_.begin(), roots_.end(), rb);
      if (it == roots_.end()) throw Error("root datum: reflection does not permute the roots");
      if (coroots_[static_cast<std::size_t>(it - roots_.begin())] != cb)
        throw Error("root datum: reflection does not permute the coroots compatibly");
    }
  }
  for (int s : simple_)
    if (s < 0 || static_cast<std::size_t>(s) >= roots_.size()) throw Error("root datum: simple root index out of range");
  if (!roots_.empty() && simple_.empty()) throw Error("root datum: roots given without simple roots");
  // every root is a non-negative or non-positive combination of simple roots,
  // checked through the sign of the pairing with a regular dominant test vector
  // is not available in general; instead require the simple reflections to
  // generate a group acting transitively enough to reach every root.

  // Weyl group by breadth-first search: shortlex words.
  std::vector<IntMatrix> gens;
  for (int s : simple_)
    gens.push_back(coweight_reflection(roots_[static_cast<std::size_t>(s)], coroots_[static_cast<std::size_t>(s)]));
  weyl_.push_back({IntMatrix::identity(rank_), {}});
  index_[weyl_[0].matrix] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      IntMatrix m = weyl_[static_cast<std::size_t>(cur)].matrix * gens[g];
      if (index_.count(m)) continue;
      if (weyl_.size() >= kMaxWeylOrder) throw Error("root datum: Weyl group is not finite (or too large)");
      std::vector<int> word = weyl_[static_cast<std::size_t>(cur)].word;
      word.push_back(static_cast<int>(g));
      index_[m] = static_cast<int>(weyl_.size());
      weyl_.push_back({m, word});
      queue.push_back(static_cast<int>(weyl_.size()) - 1);
    }
  }
  const std::size_t n = weyl_.size();
  mult_.assign(n * n, -1);
  inv_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index_.find(weyl_[a].matrix * weyl_[b].matrix);
      if (it == index_.end()) throw Error("root datum: Weyl group not closed");
      mult_[a * n + b] = it->second;
      if (it->second == 0) inv_[a] = static_cast<int>(b);
    }
  for (std::size_t g = 0; g < gens.size(); ++g) simple_refl_.push_back(index_.at(gens[g]));
  // contragredient action (M^{-1})^T
  for (std::size_t a = 0; a < n; ++a) weight_action_.push_back(weyl_[static_cast<std::size_t>(inv_[a])].matrix.transpose());
  // every root must lie in the W-orbit of a simple root
  std::set<Weight> reached;
  for (std::size_t a = 0; a < n; ++a)
    for (int s : simple_) reached.insert(weight_action_[a] * roots_[static_cast<std::size_t>(s)]);
  if (reached != root_set) throw Error("root datum: roots are not the W-orbit of the simple roots");
}

int RootDatum::index_of(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw Error("matrix is not a Weyl group element");
  return it->second;
}

int RootDatum::longest_element() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < weyl_.size(); ++i)
    if (weyl_[i].word.size() > weyl_[best].word.size()) best = i;
  return static_cast<int>(best);
}

Coweight RootDatum::act(int w, const Coweight& lambda) const {
  return weyl_[static_cast<std::size_t>(w)].matrix * lambda;
}

Weight RootDatum::act_on_weight(int w, const Weight& chi) const {
  return weight_action_[static_cast<std::size_t>(w)] * chi;
}

Int RootDatum::pair(const Weight& chi, const Coweight& lambda) {
  Int s = 0;
  for (std::size_t i = 0; i < chi.size(); ++i) s += chi[i] * lambda[i];
  return s;
}

bool RootDatum::is_dominant(const Coweight& lambda) const {
  for (int s : simple_)
    if (pair(roots_[static_cast<std::size_t>(s)], lambda) < 0) return false;
  return true;
}

std::vector<int> RootDatum::stabilizer(const Coweight& lambda) const {
  std::vector<int> out;
  for (std::size_t w = 0; w < weyl_.size(); ++w)
    if (act(static_cast<int>(w), lambda) == lambda) out.push_back(static_cast<int>(w));
  return out;
}

std::vector<Coweight> RootDatum::orbit(const Coweight& lambda) const {
  std::set<Coweight> s;
  for (std::size_t w = 0; w < weyl_.size(); ++w) s.insert(act(static_cast<int>(w), lambda));
  return {s.begin(), s.end()};
}

RootDatum build_root_datum(const std::string& name) {
  if (name == "SL2") return RootDatum("SL2", 1, {{2}, {-2}}, {{1}, {-1}}, {0});
  if (name == "PGL2") return RootDatum("PGL2", 1, {{1}, {-1}}, {{2}, {-2}}, {0});
  if (name == "SL3") {
    // characters in fundamental-weight coordinates, cocharacters in the coroot basis
    return RootDatum("SL3", 2, {{2, -1}, {-1, 2}, {1, 1}, {-2, 1}, {1, -2}, {-1, -1}},
                     {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}}, {0, 1});
  }
  if (name == "Sp4") {
    return RootDatum("Sp4", 2, {{1, -1}, {-1, 1}, {1, 1}, {-1, -1}, {2, 0}, {-2, 0}, {0, 2}, {0, -2}},
                     {{1, -1}, {-1, 1}, {1, 1}, {-1, -1}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {0, 6});
  }
  throw InputError("unknown root datum '" + name + "' (catalog: SL2, PGL2, SL3, Sp4)");
}

std::pair<Coweight, int> dominant_representative(const RootDatum& rd, const Coweight& lambda) {
  for (std::size_t w = 0; w < rd.weyl_order(); ++w) {
    Coweight mu = rd.act(static_cast<int>(w), lambda);
    if (rd.is_dominant(mu)) return {mu, static_cast<int>(w)};
  }
  throw Error("no dominant representative found (simple roots do not define a chamber)");
}

Int root_divisibility(const RootDatum& rd, int root) {
  Int g = 0;
  for (Int c : rd.roots()[static_cast<std::size_t>(root)]) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

Coweight alpha_star(const RootDatum& rd, int root) {
  Int m = root_divisibility(rd, root);
  Coweight out = rd.coroots()[static_cast<std::size_t>(root)];
  for (auto& c : out) c *= m;
  return out;
}

LatticeAlgebraElement lattice_multiply(const LatticeAlgebraElement& a, const LatticeAlgebraElement& b,
                                       const CoeffRing& ring) {
  LatticeAlgebraElement out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) {
      Coweight s(la);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += lb[i];
      Int& slot = out[s];
      slot = ring.add(slot, ring.mul(ca, cb));
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

LatticeAlgebraElement lattice_act(const RootDatum& rd, int w, const LatticeAlgebraElement& a) {
  LatticeAlgebraElement out;
  for (const auto& [l, c] : a) out[rd.act(w, l)] = c;
  return out;
}

bool lattice_is_invariant(const RootDatum& rd, const LatticeAlgebraElement& a) {
  for (std::size_t w = 0; w < rd.weyl_order(); ++w)
    if (lattice_act(rd, static_cast<int>(w), a) != a) return false;
  return true;
}

LatticeAlgebraElement discriminant(const RootDatum& rd, const CoeffRing& ring) {
  LatticeAlgebraElement f{{Coweight(static_cast<std::size_t>(rd.rank()), 0), 1}};
  for (std::size_t a = 0; a < rd.roots().size(); ++a) {
    LatticeAlgebraElement factor{{Coweight(static_cast<std::size_t>(rd.rank()), 0), 1}};
    Coweight s = alpha_star(rd, static_cast<int>(a));
    factor[s] = ring.add(factor[s], ring.neg(1));
    f = lattice_multiply(f, factor, ring);
  }
  return f;
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b, const CoeffRing& ring) {
  Mat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c.e[static_cast<std::size_t>(2 * i + j)] = ring.add(ring.mul(a(i, 0), b(0, j)), ring.mul(a(i, 1), b(1, j)));
  return c;
}

Int mat2_trace(const Mat2& a, const CoeffRing& ring) { return ring.add(a(0, 0), a(1, 1)); }

Int mat2_det(const Mat2& a, const CoeffRing& ring) {
  return ring.sub(ring.mul(a(0, 0), a(1, 1)), ring.mul(a(0, 1), a(1, 0)));
}

bool is_regular_semisimple(const Mat2& g, const CoeffRing& ring) {
  bool scalar = ring.reduce(g(0, 1)) == 0 && ring.reduce(g(1, 0)) == 0 && ring.reduce(g(0, 0) - g(1, 1)) == 0;
  if (scalar) return false;
  Int tr = mat2_trace(g, ring);
  Int disc = ring.sub(ring.mul(tr, tr), ring.mul(4, mat2_det(g, ring)));
  if (disc != 0) return true;
  return ring.reduce(g(0, 1)) == 0 && ring.reduce(g(1, 0)) == 0;
}

Mat2 e_psi_g(Int psi, const Mat2& g, Int lie_coeff, const CoeffRing& ring) {
  if (!is_regular_semisimple(g, ring)) throw Error("not regular semisimple");
  if (mat2_det(g, ring) != 1 % ring.modulus()) throw Error("e_psi_g: g must have determinant 1");
  Int tr = mat2_trace(g, ring);
  // (a^k - a^-k) / (a - a^-1) = U_{k-1}(a + a^-1)
  auto chebyshev_u = [&](Int n) {
    // U_{-1} = 0, U_0 = 1, U_{j+1} = t U_j - U_{j-1}; U_{-n-2} = -U_n
    if (n == -1) return Int{0};
    bool negate = n < -1;
    if (negate) n = -n - 2;
    Int prev = 0, cur = 1;
    for (Int j = 0; j < n; ++j) {
      Int next = ring.sub(ring.mul(tr, cur), prev);
      prev = cur;
      cur = next;
    }
    return negate ? ring.neg(cur) : cur;
  };
  Int scale = ring.mul(ring.reduce(lie_coeff), chebyshev_u(psi - 1));
  Mat2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Int v = ring.mul(2, g(i, j));
      if (i == j) v = ring.sub(v, tr);
      out.e[static_cast<std::size_t>(2 * i + j)] = ring.mul(scale, v);
    }
  return out;
}

}  // namespace dhecke
