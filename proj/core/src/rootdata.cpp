#include "rootharm/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rootharm {

Weight Weight::operator+(const Weight& o) const {
  Weight r;
  for (int i = 0; i < kMaxRank; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r;
  for (int i = 0; i < kMaxRank; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r;
  for (int i = 0; i < kMaxRank; ++i) r.c[i] = -c[i];
  return r;
}

Weight Weight::operator*(int s) const {
  Weight r;
  for (int i = 0; i < kMaxRank; ++i) r.c[i] = c[i] * s;
  return r;
}

// ---------------------------------------------------------------------------
// Weyl group

namespace {

IntMatrix identity_matrix() {
  IntMatrix m{};
  for (int i = 0; i < kMaxRank; ++i) m[i][i] = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r{};
  for (int i = 0; i < kMaxRank; ++i)
    for (int k = 0; k < kMaxRank; ++k) {
      if (!a[i][k]) continue;
      for (int j = 0; j < kMaxRank; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

std::string matrix_key(const IntMatrix& m) {
  return std::string(reinterpret_cast<const char*>(m.data()), sizeof(IntMatrix));
}

}  // namespace

int WeylGroup::find(const IntMatrix& act) const {
  auto it = index_.find(matrix_key(act));
  if (it == index_.end()) throw std::logic_error("matrix is not a Weyl group element");
  return it->second;
}

int WeylGroup::multiply(int a, int b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  return find(matmul(elems_[a].act, elems_[b].act));
}

Weight WeylGroup::act(int w, const Weight& mu) const {
  const IntMatrix& m = elems_[w].act;
  Weight r;
  for (int i = 0; i < rank_; ++i) {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += m[i][j] * mu.c[j];
    r.c[i] = s;
  }
  return r;
}

Spectral WeylGroup::act(int w, const Spectral& lambda) const {
  const IntMatrix& m = elems_[w].act;
  Spectral r(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (m[i][j]) r[i] += Scalar(long(m[i][j])) * lambda[j];
  return r;
}

CoVector WeylGroup::coact(int w, const CoVector& xi) const {
  const IntMatrix& m = elems_[w].coact;
  CoVector r(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (m[i][j]) r[i] += Scalar(long(m[i][j])) * xi[j];
  return r;
}

bool WeylGroup::bruhat_leq(int u, int w) const {
  // Lifting property: for a right descent s of w, u ≤ w iff min(u, us) ≤ ws.
  while (true) {
    if (length(u) > length(w)) return false;
    if (w == 0) return u == 0;
    if (u == w) return true;
    int s = -1;
    for (int i = 0; i < rank_; ++i)
      if (has_right_descent(w, i)) {
        s = i;
        break;
      }
    if (has_right_descent(u, s)) u = right_[u][s];
    w = right_[w][s];
  }
}

std::string WeylGroup::word_string(int w) const {
  if (elems_[w].word.empty()) return "e";
  std::string s;
  for (int i : elems_[w].word) s += "s" + std::to_string(i + 1);
  return s;
}

// ---------------------------------------------------------------------------
// Root datum construction

namespace {

struct CartanData {
  std::string type;
  int rank;
  IntMatrix a{};                  // a[i][j] = <alpha_i, alpha_j^vee>
  std::vector<Rational> lengths;  // (alpha_i, alpha_i)
  bool bc = false;
};

CartanData cartan_data(const std::string& type, int n) {
  CartanData d;
  d.type = type;
  d.rank = n;
  auto chain = [&](int m) {
    for (int i = 0; i < m; ++i) {
      d.a[i][i] = 2;
      if (i + 1 < m) d.a[i][i + 1] = d.a[i + 1][i] = -1;
    }
  };
  d.lengths.assign(n, Rational(2));
  if (type == "A") {
    if (n < 1 || n > kMaxRank) throw std::invalid_argument("unsupported rank for type A");
    chain(n);
  } else if (type == "B") {
    if (n < 2 || n > kMaxRank) throw std::invalid_argument("unsupported rank for type B");
    chain(n);
    d.a[n - 2][n - 1] = -2;
    d.lengths[n - 1] = 1;
  } else if (type == "C" || type == "BC") {
    if (n < 1 || n > kMaxRank) throw std::invalid_argument("unsupported rank for type " + type);
    if (type == "C" && n < 2) throw std::invalid_argument("type C needs rank >= 2");
    chain(n);
    if (n >= 2) d.a[n - 1][n - 2] = -2;
    for (int i = 0; i + 1 < n; ++i) d.lengths[i] = 1;
    d.bc = type == "BC";
  } else if (type == "D") {
    if (n < 3 || n > kMaxRank) throw std::invalid_argument("unsupported rank for type D");
    chain(n - 1);
    d.a[n - 1][n - 1] = 2;
    d.a[n - 3][n - 1] = d.a[n - 1][n - 3] = -1;
  } else if (type == "G") {
    if (n != 2) throw std::invalid_argument("type G requires rank 2");
    d.a[0][0] = d.a[1][1] = 2;
    d.a[0][1] = -1;
    d.a[1][0] = -3;
    d.lengths = {Rational(2, 3), Rational(2)};
  } else if (type == "F") {
    if (n != 4) throw std::invalid_argument("type F requires rank 4");
    chain(4);
    d.a[1][2] = -2;
    d.lengths = {2, 2, 1, 1};
  } else {
    throw std::invalid_argument("unsupported Cartan type '" + type + "'");
  }
  for (auto& l : d.lengths) l.canonicalize();
  return d;
}

using RMat = std::array<std::array<Rational, kMaxRank>, kMaxRank>;

RMat invert(const IntMatrix& m, int n) {
  // Gauss-Jordan over Q
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  RMat r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] = a[i][n + j];
  return r;
}

}  // namespace

RootDatum RootDatum::build(std::string_view type, int rank) {
  std::string t(type);
  for (auto& ch : t) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (t == "G2") t = "G";
  if (t == "F4") t = "F";
  CartanData cd = cartan_data(t, rank);
  const int n = rank;

  auto d = std::make_shared<Data>();
  d->type = t;
  d->rank = n;
  d->reduced = !cd.bc;
  d->label = (t == "G" ? "G" : t == "F" ? "F" : t) + std::to_string(n);
  d->cartan = cd.a;

  // Gram matrix of the fundamental weights: (w_i, w_j) = (A^{-1})_{ij} (alpha_j, alpha_j) / 2
  RMat ainv = invert(cd.a, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      d->gram[i][j] = ainv[i][j] * cd.lengths[j] / 2;
      d->gram[i][j].canonicalize();
    }
  IntMatrix at{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at[i][j] = cd.a[j][i];
  d->to_root_coords = invert(at, n);

  // Weyl group by breadth-first search over right multiplication by simple reflections.
  WeylGroup& W = d->weyl;
  W.rank_ = n;
  std::vector<IntMatrix> sact(n), scoact(n);
  for (int i = 0; i < n; ++i) {
    IntMatrix m = identity_matrix(), c = identity_matrix();
    for (int j = 0; j < n; ++j) m[j][i] -= cd.a[i][j];  // s_i(l)_j = l_j - l_i a_ij
    for (int j = 0; j < n; ++j) c[i][j] -= cd.a[i][j];  // s_i(y)_i = y_i - sum_j a_ij y_j
    sact[i] = m;
    scoact[i] = c;
  }
  W.elems_.push_back({identity_matrix(), identity_matrix(), {}, 0, 0});
  W.index_.emplace(matrix_key(identity_matrix()), 0);
  for (std::size_t head = 0; head < W.elems_.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      IntMatrix m = matmul(W.elems_[head].act, sact[i]);
      std::string key = matrix_key(m);
      if (W.index_.count(key)) continue;
      WeylElement e;
      e.act = m;
      e.coact = matmul(W.elems_[head].coact, scoact[i]);
      e.word = W.elems_[head].word;
      e.word.push_back(i);
      e.length = W.elems_[head].length + 1;
      W.index_.emplace(key, static_cast<int>(W.elems_.size()));
      W.elems_.push_back(std::move(e));
    }
  }
  const int size = W.size();
  W.simple_.resize(n);
  for (int i = 0; i < n; ++i) W.simple_[i] = W.find(sact[i]);
  W.right_.assign(size, {});
  W.left_.assign(size, {});
  for (int w = 0; w < size; ++w)
    for (int i = 0; i < n; ++i) {
      W.right_[w][i] = W.find(matmul(W.elems_[w].act, sact[i]));
      W.left_[w][i] = W.find(matmul(sact[i], W.elems_[w].act));
    }
  for (int w = 0; w < size; ++w) {
    int inv = 0;
    for (auto it = W.elems_[w].word.rbegin(); it != W.elems_[w].word.rend(); ++it)
      inv = W.right_[inv][*it];
    W.elems_[w].inverse = inv;
    if (W.elems_[w].length > W.elems_[W.longest_].length) W.longest_ = w;
  }

  // Roots of the reduced system generated from the simple roots, plus halves for BC.
  std::set<Weight> rootset;
  for (int i = 0; i < n; ++i) {
    Weight a;
    for (int j = 0; j < n; ++j) a.c[j] = cd.a[i][j];
    d->simple.push_back(a);
    for (int w = 0; w < size; ++w) rootset.insert(W.act(w, a));
  }
  auto norm2 = [&](const Weight& x) {
    Rational s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += x.c[i] * d->gram[i][j] * x.c[j];
    s.canonicalize();
    return s;
  };
  if (cd.bc) {
    std::vector<Weight> halves;
    for (const auto& r : rootset)
      if (norm2(r) == 2) {
        Weight h;
        for (int j = 0; j < n; ++j) {
          if (r.c[j] % 2) throw std::logic_error("long root not divisible in the weight lattice");
          h.c[j] = r.c[j] / 2;
        }
        halves.push_back(h);
      }
    rootset.insert(halves.begin(), halves.end());
  }

  std::set<Rational> lengths;
  for (const auto& r : rootset) lengths.insert(norm2(r));
  std::vector<Rational> lens(lengths.begin(), lengths.end());
  if (lens.size() == 1)
    d->orbit_names = {"k"};
  else if (lens.size() == 2)
    d->orbit_names = {"k_s", "k_l"};
  else
    d->orbit_names = {"k_s", "k_m", "k_l"};

  for (const auto& r : rootset) {
    Root root;
    root.weight = r;
    root.norm2 = norm2(r);
    root.orbit =
        static_cast<int>(std::find(lens.begin(), lens.end(), root.norm2) - lens.begin());
    // root coordinates b = (A^T)^{-1} r; coroot c_i = b_i (alpha_i,alpha_i)/(r,r)
    bool pos = false, neg = false;
    for (int i = 0; i < n; ++i) {
      Rational b = 0;
      for (int j = 0; j < n; ++j) b += d->to_root_coords[i][j] * r.c[j];
      if (b > 0) pos = true;
      if (b < 0) neg = true;
      Rational c = b * cd.lengths[i] / root.norm2;
      c.canonicalize();
      if (c.get_den() != 1) throw std::logic_error("non-integral coroot coordinate");
      root.coroot[i] = static_cast<int>(c.get_num().get_si());
    }
    if (pos == neg) throw std::logic_error("root neither positive nor negative");
    root.positive = pos;
    root.multipliable = rootset.count(r * 2) > 0;
    bool even = true;
    for (int j = 0; j < n; ++j) even = even && (r.c[j] % 2 == 0);
    if (even) {
      Weight h;
      for (int j = 0; j < n; ++j) h.c[j] = r.c[j] / 2;
      root.divisible = rootset.count(h) > 0;
    }
    d->root_lookup.emplace(r, static_cast<int>(d->roots.size()));
    d->roots.push_back(root);
  }
  for (int i = 0; i < static_cast<int>(d->roots.size()); ++i) {
    if (!d->roots[i].positive) continue;
    d->positive.push_back(i);
    if (!d->roots[i].multipliable) d->positive_unmult.push_back(i);
  }
  for (const auto& a : d->simple) d->simple_index.push_back(d->root_lookup.at(a));

  RootDatum rd;
  rd.d_ = d;
  return rd;
}

RootDatum RootDatum::build(std::string_view label) {
  std::size_t p = 0;
  while (p < label.size() && std::isalpha(static_cast<unsigned char>(label[p]))) ++p;
  if (p == 0 || p == label.size()) throw std::invalid_argument("bad root datum label '" + std::string(label) + "'");
  int rank = 0;
  for (std::size_t i = p; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i])))
      throw std::invalid_argument("bad root datum label '" + std::string(label) + "'");
    rank = rank * 10 + (label[i] - '0');
  }
  return build(label.substr(0, p), rank);
}

int RootDatum::root_index(const Weight& alpha) const {
  auto it = d_->root_lookup.find(alpha);
  return it == d_->root_lookup.end() ? -1 : it->second;
}

Rational RootDatum::inner(const Weight& a, const Weight& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (a.c[i] && b.c[j]) s += a.c[i] * d_->gram[i][j] * b.c[j];
  s.canonicalize();
  return s;
}

Scalar RootDatum::inner(const Spectral& a, const Spectral& b) const {
  Scalar s;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (d_->gram[i][j] != 0) s += a[i] * Scalar(d_->gram[i][j]) * b[j];
  return s;
}

int RootDatum::pair(const Weight& mu, const std::array<int, kMaxRank>& coroot, int rank) {
  int s = 0;
  for (int i = 0; i < rank; ++i) s += mu.c[i] * coroot[i];
  return s;
}

Scalar RootDatum::pair(const Spectral& lambda, int root) const {
  Scalar s;
  for (int i = 0; i < rank(); ++i)
    if (int c = d_->roots[root].coroot[i]) s += Scalar(long(c)) * lambda[i];
  return s;
}

Scalar RootDatum::pair(const Weight& mu, const CoVector& xi) const {
  Scalar s;
  for (int i = 0; i < rank(); ++i)
    if (mu.c[i]) s += Scalar(long(mu.c[i])) * xi[i];
  return s;
}

Scalar RootDatum::pair(const Spectral& lambda, const CoVector& xi) const {
  Scalar s;
  for (int i = 0; i < rank(); ++i) s += lambda[i] * xi[i];
  return s;
}

Spectral RootDatum::to_spectral(const Weight& mu) const {
  Spectral s(rank());
  for (int i = 0; i < rank(); ++i) s[i] = Scalar(long(mu.c[i]));
  return s;
}

CoVector RootDatum::coroot_vector(int root) const {
  CoVector v(rank());
  for (int i = 0; i < rank(); ++i) v[i] = Scalar(long(d_->roots[root].coroot[i]));
  return v;
}

Weight RootDatum::reflect(int root, const Weight& mu) const {
  int n = pair(mu, root);
  return mu - d_->roots[root].weight * n;
}

bool RootDatum::is_dominant(const Weight& mu) const {
  for (int i = 0; i < rank(); ++i)
    if (mu.c[i] < 0) return false;
  return true;
}

Weight RootDatum::dominant(const Weight& mu) const {
  Weight v = mu;
  const WeylGroup& W = weyl();
  while (true) {
    int i = 0;
    while (i < rank() && v.c[i] >= 0) ++i;
    if (i == rank()) return v;
    v = W.act(W.simple(i), v);
  }
}

std::vector<Weight> RootDatum::orbit(const Weight& mu) const {
  std::set<Weight> seen{mu};
  std::deque<Weight> queue{mu};
  const WeylGroup& W = weyl();
  while (!queue.empty()) {
    Weight v = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank(); ++i) {
      Weight u = W.act(W.simple(i), v);
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  return {seen.begin(), seen.end()};
}

int RootDatum::w_mu(const Weight& mu) const {
  Weight top = dominant(mu);
  const WeylGroup& W = weyl();
  int best = -1;
  for (int w = 0; w < W.size(); ++w)
    if (W.act(w, top) == mu && (best < 0 || W.length(w) > W.length(best))) best = w;
  return best;
}

int RootDatum::stabilizer_longest(const Weight& dominant_mu) const { return w_mu(dominant_mu); }

int RootDatum::height(const Weight& mu) const {
  Weight top = dominant(mu);
  int h = 0;
  for (int i = 0; i < rank(); ++i) h += top.c[i];
  return h;
}

bool RootDatum::dominance_leq(const Weight& nu, const Weight& mu) const {
  Weight diff = mu - nu;
  for (int i = 0; i < rank(); ++i) {
    Rational b = 0;
    for (int j = 0; j < rank(); ++j) b += d_->to_root_coords[i][j] * diff.c[j];
    if (b < 0) return false;
  }
  return true;
}

bool RootDatum::triangular_less(const Weight& nu, const Weight& mu) const {
  if (nu == mu) return false;
  Weight np = dominant(nu), mp = dominant(mu);
  if (np != mp) return dominance_leq(np, mp);
  const WeylGroup& W = weyl();
  int a = w_mu(nu), b = w_mu(mu);
  return a != b && W.bruhat_leq(a, b);
}

bool RootDatum::topological_before(const Weight& a, const Weight& b) const {
  Weight ap = dominant(a), bp = dominant(b);
  Rational na = inner(ap, ap), nb = inner(bp, bp);
  if (na != nb) return na < nb;
  if (ap != bp) return ap < bp;
  int la = weyl().length(w_mu(a)), lb = weyl().length(w_mu(b));
  if (la != lb) return la < lb;
  return a < b;
}

std::vector<Weight> RootDatum::dominant_of_height(int h) const {
  std::vector<Weight> out;
  Weight cur;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rank()) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur.c[i] = v;
      rec(i + 1, left - v);
    }
    cur.c[i] = 0;
  };
  rec(0, h);
  return out;
}

std::vector<Weight> RootDatum::saturated_ideal(const std::vector<Weight>& tops) const {
  // Dominant nu ≤ lambda satisfy (nu,nu) ≤ (lambda,lambda), which bounds each coordinate.
  Rational maxnorm = 0;
  std::vector<Weight> dtops;
  for (const auto& t : tops) {
    Weight d = dominant(t);
    dtops.push_back(d);
    maxnorm = std::max(maxnorm, inner(d, d));
  }
  std::vector<int> bound(rank());
  for (int i = 0; i < rank(); ++i) {
    double b = std::sqrt(Rational(maxnorm / d_->gram[i][i]).get_d());
    bound[i] = static_cast<int>(std::floor(b + 1e-9));
  }
  std::vector<Weight> dom;
  Weight cur;
  std::function<void(int)> rec = [&](int i) {
    if (i == rank()) {
      for (const auto& t : dtops)
        if (dominance_leq(cur, t)) {
          dom.push_back(cur);
          break;
        }
      return;
    }
    for (int v = 0; v <= bound[i]; ++v) {
      cur.c[i] = v;
      rec(i + 1);
    }
    cur.c[i] = 0;
  };
  rec(0);
  std::vector<Weight> all;
  for (const auto& d : dom)
    for (const auto& v : orbit(d)) all.push_back(v);
  std::sort(all.begin(), all.end(),
            [&](const Weight& a, const Weight& b) { return topological_before(a, b); });
  return all;
}

std::vector<Weight> RootDatum::order_ideal(const Weight& mu) const {
  std::vector<Weight> out;
  for (const auto& nu : saturated_ideal({mu}))
    if (triangular_leq(nu, mu)) out.push_back(nu);
  return out;
}

std::string RootDatum::weight_string(const Weight& mu) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << mu.c[i];
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Multiplicity

Multiplicity::Multiplicity(const RootDatum& rd, std::vector<Scalar> values)
    : rd_(rd), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != rd.orbit_count())
    throw std::invalid_argument("multiplicity needs one value per root orbit");
}

Multiplicity Multiplicity::symbolic(const RootDatum& rd) {
  std::vector<Scalar> v;
  for (const auto& name : rd.orbit_names()) v.push_back(Scalar::variable(name));
  return {rd, v};
}

Multiplicity Multiplicity::constant(const RootDatum& rd, const Scalar& value) {
  return {rd, std::vector<Scalar>(rd.orbit_count(), value)};
}

Multiplicity Multiplicity::parse(const RootDatum& rd, std::string_view text) {
  if (text == "symbolic") return symbolic(rd);
  std::vector<Scalar> vals;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    vals.push_back(Scalar::parse(text.substr(start, comma - start)));
    start = comma + 1;
  }
  if (vals.size() == 1) return constant(rd, vals[0]);
  return {rd, vals};
}

Scalar Multiplicity::k0(int root) const {
  const Root& r = rd_.roots()[root];
  Scalar v = of_root(root);
  if (r.divisible) {
    Weight h;
    for (int j = 0; j < rd_.rank(); ++j) h.c[j] = r.weight.c[j] / 2;
    v += of_root(rd_.root_index(h)) * Scalar(Rational(1, 2));
  }
  return v;
}

Scalar Multiplicity::simple_parameter(int i) const { return k0(rd_.simple_root_index(i)); }

Multiplicity Multiplicity::shifted(int s) const {
  std::vector<Scalar> v = values_;
  std::vector<bool> active(rd_.orbit_count(), false);
  for (const auto& r : rd_.roots())
    if (!r.multipliable) active[r.orbit] = true;
  for (int o = 0; o < rd_.orbit_count(); ++o)
    if (active[o]) v[o] += Scalar(long(s));
  return {rd_, v};
}

Multiplicity Multiplicity::operator+(const Multiplicity& o) const {
  std::vector<Scalar> v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
  return {rd_, v};
}

bool Multiplicity::is_nonnegative_integer() const {
  for (const auto& v : values_) {
    if (!v.is_rational()) return false;
    Rational r = v.rational_value();
    if (r < 0 || r.get_den() != 1) return false;
  }
  return true;
}

Multiplicity Multiplicity::substitute(const std::map<int, Rational>& values) const {
  std::vector<Scalar> v;
  for (const auto& x : values_) v.push_back(x.substitute(values));
  return {rd_, v};
}

Spectral Multiplicity::rho() const {
  Spectral r(rd_.rank());
  for (int a : rd_.positive_roots()) {
    const Root& root = rd_.roots()[a];
    Scalar half = of_root(a) * Scalar(Rational(1, 2));
    for (int j = 0; j < rd_.rank(); ++j)
      if (root.weight.c[j]) r[j] += half * Scalar(long(root.weight.c[j]));
  }
  return r;
}

std::string Multiplicity::to_string() const {
  std::string s;
  for (int o = 0; o < rd_.orbit_count(); ++o) {
    if (o) s += ", ";
    s += rd_.orbit_names()[o] + "=" + values_[o].to_string();
  }
  return s;
}

}  // namespace rootharm
