#include "rootharm/ghecke.hpp"

#include <set>
#include <sstream>

#include "rootharm/linalg.hpp"

namespace rootharm {

HeckeElement HeckeElement::polynomial(const SymPoly& p) { return term(p, 0); }

HeckeElement HeckeElement::group(int w) { return term(SymPoly::constant(1), w); }

HeckeElement HeckeElement::term(const SymPoly& p, int w) {
  HeckeElement e;
  e.add(w, p);
  return e;
}

void HeckeElement::add(int w, const SymPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int HeckeElement::degree() const {
  int d = 0;
  for (const auto& [w, p] : terms_) d = std::max(d, p.degree());
  return d;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, p] : o.terms_) add(w, p);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [w, p] : o.terms_) add(w, -p);
  return *this;
}

HeckeElement operator*(const Scalar& c, const HeckeElement& a) {
  HeckeElement r;
  for (const auto& [w, p] : a.terms_) r.add(w, c * p);
  return r;
}

std::string HeckeElement::to_string(const WeylGroup& W) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, p] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.to_string() << ")";
    if (w != W.identity()) os << "*" << W.word_string(w);
  }
  return os.str();
}

Json HeckeElement::to_json(const WeylGroup& W) const {
  Json out = Json::array();
  for (const auto& [w, p] : terms_)
    out.push_back(Json{{"weyl_word", W.word_string(w)}, {"polynomial", p.to_string()}});
  return out;
}

// ---------------------------------------------------------------------------

HeckeElement GradedHeckeAlgebra::left_simple(int i, const HeckeElement& a) const {
  const WeylGroup& W = datum().weyl();
  int s = W.simple(i);
  Scalar ki = k_.simple_parameter(i);
  HeckeElement r;
  for (const auto& [u, p] : a.terms()) {
    SymPoly sp = p.act(W, s);
    r.add(W.simple_times(i, u), sp);
    if (!ki.is_zero() && sp != p) r.add(u, (-ki) * (p - sp).divide_by_variable(i));
  }
  return r;
}

HeckeElement GradedHeckeAlgebra::commute(int w, const SymPoly& p) const {
  const auto& word = datum().weyl().element(w).word;
  HeckeElement r = HeckeElement::polynomial(p);
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = left_simple(*it, r);
  return r;
}

HeckeElement GradedHeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
  const WeylGroup& W = datum().weyl();
  HeckeElement r;
  for (const auto& [w, p] : a.terms())
    for (const auto& [v, q] : b.terms()) {
      HeckeElement moved = commute(w, q);
      for (const auto& [u, c] : moved.terms()) r.add(W.multiply(u, v), p * c);
    }
  return r;
}

std::map<int, SymPoly> GradedHeckeAlgebra::right_form(const HeckeElement& a) const {
  const WeylGroup& W = datum().weyl();
  HeckeElement total;  // reused container: key w holds q_w of sum w q_w
  for (const auto& [w, p] : a.terms()) {
    HeckeElement cur = HeckeElement::polynomial(p);
    for (int i : W.element(w).word) {
      // (u q) s_i = (u s_i) s_i(q) + u k_i (s_i(q) - q) / y_i
      int s = W.simple(i);
      Scalar ki = k_.simple_parameter(i);
      HeckeElement next;
      for (const auto& [u, q] : cur.terms()) {
        SymPoly sq = q.act(W, s);
        next.add(W.times_simple(u, i), sq);
        if (!ki.is_zero() && sq != q) next.add(u, ki * (sq - q).divide_by_variable(i));
      }
      cur = std::move(next);
    }
    total += cur;
  }
  return total.terms();
}

namespace {

SymPoly conj_poly(const SymPoly& p, std::uint32_t imaginary) {
  if (!imaginary) return p;
  return p.map_coefficients([&](const Scalar& c) { return c.negate_variables(imaginary); });
}

}  // namespace

HeckeElement GradedHeckeAlgebra::bullet(const HeckeElement& a, std::uint32_t imaginary) const {
  const WeylGroup& W = datum().weyl();
  HeckeElement r;
  for (const auto& [w, p] : a.terms())
    r += multiply(HeckeElement::group(W.inverse(w)), HeckeElement::polynomial(conj_poly(p, imaginary)));
  return r;
}

HeckeElement GradedHeckeAlgebra::star(const HeckeElement& a, std::uint32_t imaginary) const {
  const RootDatum& rd = datum();
  const WeylGroup& W = rd.weyl();
  int w0 = W.longest();
  IntMatrix minus_w0 = W.element(w0).coact;
  for (auto& row : minus_w0)
    for (auto& x : row) x = -x;
  HeckeElement g0 = HeckeElement::group(w0);
  HeckeElement r;
  for (const auto& [w, p] : a.terms()) {
    // (p w)^* = w^{-1} w0 q w0 with q = conj(p) composed with -w0
    SymPoly q = conj_poly(p, imaginary).linear_substitute(minus_w0, rd.rank());
    HeckeElement pstar = multiply(g0, multiply(HeckeElement::polynomial(q), g0));
    r += multiply(HeckeElement::group(W.inverse(w)), pstar);
  }
  return r;
}

std::vector<HeckeElement> GradedHeckeAlgebra::generators() const {
  std::vector<HeckeElement> g;
  for (int i = 0; i < datum().rank(); ++i) g.push_back(HeckeElement::group(datum().weyl().simple(i)));
  for (int j = 0; j < datum().rank(); ++j) g.push_back(HeckeElement::polynomial(SymPoly::variable(j)));
  return g;
}

namespace {

void monomials_up_to(int rank, int degree, std::vector<SymPoly>& out) {
  std::vector<SymPoly> layer{SymPoly::constant(1)};
  out = layer;
  for (int d = 1; d <= degree; ++d) {
    std::vector<SymPoly> next;
    for (const auto& m : layer) {
      // extend only with variables at or after the last used one to avoid repeats
      int last = 0;
      for (const auto& [e, c] : m.terms())
        for (int j = 0; j < rank; ++j)
          if (e[j]) last = j;
      for (int j = last; j < rank; ++j) next.push_back(m * SymPoly::variable(j));
    }
    for (const auto& m : next) out.push_back(m);
    layer = std::move(next);
  }
}

}  // namespace

std::vector<HeckeElement> GradedHeckeAlgebra::pbw_basis(int degree) const {
  std::vector<SymPoly> monos;
  monomials_up_to(datum().rank(), degree, monos);
  std::vector<HeckeElement> out;
  for (int w = 0; w < datum().weyl().size(); ++w)
    for (const auto& m : monos) out.push_back(HeckeElement::term(m, w));
  return out;
}

HeckeElement GradedHeckeAlgebra::random_element(std::mt19937& rng, int degree, int terms) const {
  auto basis = pbw_basis(degree);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  HeckeElement r;
  for (int t = 0; t < terms; ++t) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    r += Scalar(long(c)) * basis[pick(rng)];
  }
  return r;
}

Report GradedHeckeAlgebra::is_central(const HeckeElement& a) const {
  Report rep("[a, generators] = 0");
  for (const auto& g : generators()) {
    HeckeElement c = multiply(a, g) - multiply(g, a);
    if (!c.is_zero()) {
      rep.fail(Json{{"generator", g.to_string(datum().weyl())}, {"commutator", c.to_string(datum().weyl())}});
      break;
    }
  }
  return rep;
}

LaurentPolynomial eta_apply(const DunklFamily& T, const HeckeElement& a, const LaurentPolynomial& f) {
  const WeylGroup& W = T.datum().weyl();
  LaurentPolynomial r;
  for (const auto& [w, p] : a.terms()) r += T.apply(p, f.act(W, w));
  return r;
}

// ---------------------------------------------------------------------------

InducedModule InducedModule::principal(const GradedHeckeAlgebra& H, const Spectral& lambda) {
  InducedModule m(H);
  m.character_ = lambda;
  int n = H.datum().weyl().size();
  for (int w = 0; w < n; ++w) {
    m.basis_.push_back(w);
    m.coset_of_.push_back(w);
  }
  return m;
}

InducedModule InducedModule::spherical(const GradedHeckeAlgebra& H, const Weight& lambda) {
  const RootDatum& rd = H.datum();
  const WeylGroup& W = rd.weyl();
  InducedModule m(H);
  m.character_ = W.act(rd.stabilizer_longest(lambda), H.parameter().rho());
  for (int j = 0; j < rd.rank(); ++j) m.character_[j] += Scalar(long(lambda.c[j]));
  // cosets w W_lambda are labelled by w(lambda); keep the shortest element of each
  std::map<Weight, int> rep;
  for (int w = 0; w < W.size(); ++w) {
    Weight image = W.act(w, lambda);
    auto it = rep.find(image);
    if (it == rep.end() || W.length(w) < W.length(it->second)) rep[image] = w;
  }
  std::map<Weight, int> index;
  for (int w = 0; w < W.size(); ++w) {
    int r = rep[W.act(w, lambda)];
    if (r == w) {
      index[W.act(w, lambda)] = static_cast<int>(m.basis_.size());
      m.basis_.push_back(w);
    }
  }
  for (int w = 0; w < W.size(); ++w) m.coset_of_.push_back(index[W.act(w, lambda)]);
  return m;
}

InducedModule::Matrix InducedModule::action(const HeckeElement& h) const {
  int n = dimension();
  Matrix M(n, std::vector<Scalar>(n));
  for (int b = 0; b < n; ++b) {
    HeckeElement prod = H_->multiply(h, HeckeElement::group(basis_[b]));
    // x in W_lambda acts trivially on the spherical line, so v = v' x lands on the coset of v
    for (const auto& [v, q] : H_->right_form(prod)) M[coset_of_[v]][b] += q.evaluate(character_);
  }
  return M;
}

// ---------------------------------------------------------------------------

Report check_pairing_invariance(const GradedHeckeAlgebra& H, std::uint32_t imaginary) {
  const RootDatum& rd = H.datum();
  Report rep("(h v, w) = (v, h^* w) on I_lambda, lambda imaginary");
  Spectral lambda;
  for (int j = 0; j < rd.rank(); ++j) lambda.push_back(Scalar::variable("l" + std::to_string(j + 1)));
  InducedModule I = InducedModule::principal(H, lambda);
  rep.details["dimension"] = I.dimension();
  std::vector<HeckeElement> probes = H.generators();
  probes.push_back(H.multiply(probes.front(), probes.back()));
  for (const auto& h : probes) {
    auto M = I.action(h);
    auto Ms = I.action(H.star(h, imaginary));
    for (int a = 0; a < I.dimension(); ++a)
      for (int b = 0; b < I.dimension(); ++b)
        if (M[b][a] != Ms[a][b].negate_variables(imaginary)) {
          rep.fail(Json{{"element", h.to_string(rd.weyl())},
                        {"v", rd.weyl().word_string(I.basis()[a])},
                        {"w", rd.weyl().word_string(I.basis()[b])},
                        {"lhs", M[b][a].to_string()},
                        {"rhs", Ms[a][b].negate_variables(imaginary).to_string()}});
          return rep;
        }
  }
  return rep;
}

Report check_eta_compatibility(const GradedHeckeAlgebra& H, const DunklFamily& T, int height,
                               unsigned seed, int pairs) {
  const RootDatum& rd = H.datum();
  Report rep("eta(a b) = eta(a) eta(b)");
  std::mt19937 rng(seed);
  auto basis = truncation_basis(rd, height);
  std::vector<std::pair<HeckeElement, HeckeElement>> cases;
  for (const auto& g : H.generators())
    for (const auto& h : H.generators()) cases.emplace_back(g, h);
  for (int p = 0; p < pairs; ++p) {
    auto a = H.random_element(rng, 1, 3);
    auto b = H.random_element(rng, 1, 3);
    cases.emplace_back(a, b);
  }
  rep.details["pairs"] = cases.size();
  for (const auto& [a, b] : cases) {
    HeckeElement ab = H.multiply(a, b);
    for (const auto& nu : basis) {
      auto f = LaurentPolynomial::monomial(nu);
      if (eta_apply(T, ab, f) != eta_apply(T, a, eta_apply(T, b, f))) {
        rep.fail(Json{{"a", a.to_string(rd.weyl())}, {"b", b.to_string(rd.weyl())},
                      {"column", rd.weight_string(nu)}});
        return rep;
      }
    }
  }
  return rep;
}

Report check_eta_injective(const Multiplicity& numeric_k, int degree, int height) {
  const RootDatum& rd = numeric_k.datum();
  GradedHeckeAlgebra H(numeric_k);
  DunklFamily T(numeric_k);
  Report rep("eta is injective on PBW monomials of bounded degree");
  auto basis = truncation_basis(rd, height);
  std::unordered_map<Weight, int, WeightHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  auto pbw = H.pbw_basis(degree);
  std::vector<AffineForm> rows;
  const int n = static_cast<int>(basis.size());
  for (const auto& h : pbw) {
    AffineForm row;
    for (int c = 0; c < n; ++c) {
      LaurentPolynomial image = eta_apply(T, h, LaurentPolynomial::monomial(basis[c]));
      for (const auto& [nu, v] : image.terms()) row[c * n + index.at(nu)] = v;
    }
    rows.push_back(std::move(row));
  }
  int r = rank_of(rows);
  rep.details["degree_bound"] = degree;
  rep.details["pbw_monomials"] = pbw.size();
  rep.details["rank"] = r;
  rep.details["truncation_size"] = n;
  if (r != static_cast<int>(pbw.size())) rep.fail(Json{{"rank", r}, {"expected", pbw.size()}});
  return rep;
}

Report check_e_span_module(const GradedHeckeAlgebra& H, const JacobiSystem& J, const Weight& lambda) {
  const RootDatum& rd = H.datum();
  const WeylGroup& W = rd.weyl();
  const DunklFamily& T = J.dunkl();
  Report rep("span{E(w lambda,k)} is eta-stable and j: V_lambda~ -> E_lambda intertwines");
  auto orbit = rd.orbit(lambda);
  std::set<Weight> in_orbit(orbit.begin(), orbit.end());
  auto gens = H.generators();
  // stability
  for (const auto& nu : orbit)
    for (const auto& g : gens)
      for (const auto& [mu, c] : J.expand(eta_apply(T, g, J.nonsymmetric(nu))))
        if (!in_orbit.count(mu)) {
          rep.fail(Json{{"generator", g.to_string(W)}, {"E", rd.weight_string(nu)},
                        {"escapes_to", rd.weight_string(mu)}});
          return rep;
        }
  // intertwiner
  InducedModule V = InducedModule::spherical(H, lambda);
  std::vector<LaurentPolynomial> image;
  for (int v : V.basis()) image.push_back(J.nonsymmetric(lambda).act(W, v));
  for (const auto& g : gens) {
    auto M = V.action(g);
    for (int b = 0; b < V.dimension(); ++b) {
      LaurentPolynomial rhs;
      for (int a = 0; a < V.dimension(); ++a) rhs += image[a] * M[a][b];
      if (eta_apply(T, g, image[b]) != rhs) {
        rep.fail(Json{{"generator", g.to_string(W)}, {"basis", W.word_string(V.basis()[b])}});
        return rep;
      }
    }
  }
  // injectivity of j
  std::vector<AffineForm> rows;
  std::map<Weight, int> col;
  for (const auto& nu : orbit) col.emplace(nu, static_cast<int>(col.size()));
  for (const auto& f : image) {
    AffineForm row;
    for (const auto& [mu, c] : J.expand(f)) row[col.at(mu)] = c;
    rows.push_back(row);
  }
  int r = rank_of(rows);
  rep.details["dimension"] = V.dimension();
  rep.details["rank"] = r;
  if (r != V.dimension() || V.dimension() != static_cast<int>(orbit.size()))
    rep.fail(Json{{"rank", r}, {"dimension", V.dimension()}});
  return rep;
}

Report check_algebra_axioms(const GradedHeckeAlgebra& H, unsigned seed, int samples) {
  const WeylGroup& W = H.datum().weyl();
  Report rep("associativity, star involutions and anti-multiplicativity");
  std::mt19937 rng(seed);
  for (int s = 0; s < samples; ++s) {
    auto a = H.random_element(rng, 1, 2), b = H.random_element(rng, 1, 2), c = H.random_element(rng, 1, 2);
    if (H.multiply(H.multiply(a, b), c) != H.multiply(a, H.multiply(b, c))) {
      rep.fail(Json{{"associativity", {a.to_string(W), b.to_string(W), c.to_string(W)}}});
      return rep;
    }
    for (int which = 0; which < 2; ++which) {
      auto st = [&](const HeckeElement& x) { return which ? H.star(x) : H.bullet(x); };
      if (st(st(a)) != a || st(H.multiply(a, b)) != H.multiply(st(b), st(a))) {
        rep.fail(Json{{which ? "star" : "bullet", {a.to_string(W), b.to_string(W)}}});
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace rootharm
