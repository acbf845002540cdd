#include "rootharm/jacobi.hpp"

#include <algorithm>

namespace rootharm {

namespace {

Polynomial affine_form(const Scalar& s) {
  if (!s.denominator().is_constant()) throw std::invalid_argument("expected a polynomial form");
  Polynomial p = s.numerator();
  p *= Rational(1) / s.denominator().constant_value();
  return p;
}

std::string spectral_string(const Spectral& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].to_string();
  return out + ")";
}

}  // namespace

const LaurentPolynomial& JacobiSystem::nonsymmetric(const Weight& mu) const {
  auto it = cache_.find(mu);
  if (it != cache_.end()) return it->second;
  const RootDatum& rd = datum();
  const int r = rd.rank();
  std::vector<Weight> ideal = rd.order_ideal(mu);
  Spectral target = eigenvalue(mu);
  // Running images T(y_j) applied to the part of E determined so far.
  std::vector<LaurentPolynomial> images(r);
  LaurentPolynomial e;
  for (auto nu = ideal.rbegin(); nu != ideal.rend(); ++nu) {
    Scalar c;
    if (*nu == mu) {
      c = Scalar(1);
    } else {
      Spectral d = eigenvalue(*nu);
      int j = 0;
      while (j < r && d[j] == target[j]) ++j;
      if (j == r)
        throw EigenvalueCollision("eigenvalue collision between " + rd.weight_string(mu) + " and " +
                                      rd.weight_string(*nu),
                                  mu, *nu);
      c = images[j].coefficient(*nu) / (target[j] - d[j]);
    }
    if (c.is_zero()) continue;
    e.add_term(*nu, c);
    for (int j = 0; j < r; ++j) images[j] += T_.on_monomial(j, *nu) * c;
  }
  return cache_.emplace(mu, std::move(e)).first->second;
}

LaurentPolynomial JacobiSystem::symmetric(const Weight& lambda) const {
  const RootDatum& rd = datum();
  Weight top = rd.dominant(lambda);
  Weight bottom = rd.weyl().act(rd.weyl().longest(), top);
  LaurentPolynomial p = symmetrize(rd, nonsymmetric(bottom), 1);
  Scalar lead = p.coefficient(top);
  if (lead.is_zero()) throw EigenvalueCollision("symmetrisation vanishes", top, bottom);
  return p * lead.inverse();
}

std::map<Weight, Scalar> JacobiSystem::expand(const LaurentPolynomial& f) const {
  const RootDatum& rd = datum();
  std::map<Weight, Scalar> out;
  LaurentPolynomial rest = f;
  while (!rest.is_zero()) {
    Weight top = rest.terms().begin()->first;
    for (const auto& [nu, c] : rest.terms())
      if (rd.topological_before(top, nu)) top = nu;
    Scalar c = rest.coefficient(top);
    out[top] = c;
    rest -= nonsymmetric(top) * c;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Half multiplicity of alpha/2, zero when alpha/2 is not a root.
Scalar half_of_halved(const Multiplicity& k, int a) {
  const RootDatum& rd = k.datum();
  const Root& root = rd.roots()[a];
  if (!root.divisible) return Scalar();
  Weight h;
  for (int j = 0; j < rd.rank(); ++j) h.c[j] = root.weight.c[j] / 2;
  return k.of_root(rd.root_index(h)) * Scalar(Rational(1, 2));
}

bool makes_negative(const RootDatum& rd, int w, int a) {
  Weight image = rd.weyl().act(w, rd.roots()[a].weight);
  return !rd.roots()[rd.root_index(image)].positive;
}

}  // namespace

GammaProduct c_tilde(const Multiplicity& k, const Spectral& lambda, int w) {
  const RootDatum& rd = k.datum();
  GammaProduct g;
  for (int a : rd.positive_roots()) {
    Scalar base = rd.pair(lambda, a) + half_of_halved(k, a);
    if (makes_negative(rd, w, a)) base += Scalar(1);
    g *= GammaProduct::gamma(affine_form(base));
    g /= GammaProduct::gamma(affine_form(base + k.of_root(a)));
  }
  return g;
}

GammaProduct c_star(const Multiplicity& k, const Spectral& lambda, int w) {
  const RootDatum& rd = k.datum();
  GammaProduct g;
  for (int a : rd.positive_roots()) {
    Scalar base = -rd.pair(lambda, a) - half_of_halved(k, a);
    if (makes_negative(rd, w, a)) base += Scalar(1);
    g *= GammaProduct::gamma(affine_form(base - k.of_root(a)));
    g /= GammaProduct::gamma(affine_form(base));
  }
  return g;
}

GammaProduct c_normalized(const Multiplicity& k, const Spectral& lambda) {
  return c_tilde(k, lambda, 0) / c_tilde(k, k.rho(), 0);
}

GammaProduct norm_gamma(const Multiplicity& k, const Weight& mu) {
  const RootDatum& rd = k.datum();
  Spectral shifted = rd.to_spectral(rd.dominant(mu));
  Spectral rho = k.rho();
  for (int j = 0; j < rd.rank(); ++j) shifted[j] += rho[j];
  Spectral negated = shifted;
  for (auto& x : negated) x = -x;
  int w = rd.w_mu(mu);
  GammaProduct g = c_star(k, negated, w) / c_tilde(k, shifted, w);
  return g * GammaProduct(Scalar(Rational(1, rd.weyl().size())));
}

Scalar norm_formula(const Multiplicity& k, const Weight& mu) {
  GammaProduct g = norm_gamma(k, mu);
  bool numeric = true;
  for (const auto& v : k.values()) numeric = numeric && v.is_rational();
  return numeric ? g.evaluate_exact() : g.rational_value();
}

Scalar relative_norm(const Multiplicity& k, const Weight& mu) {
  return (norm_gamma(k, mu) / norm_gamma(k, Weight{})).rational_value();
}

Scalar constant_term_value(const Multiplicity& k) {
  LaurentPolynomial one = LaurentPolynomial::constant(1);
  return inner_product(one, one, k);
}

Report check_eigenfunctions(const JacobiSystem& J, int height) {
  const RootDatum& rd = J.datum();
  Report rep("T(y_j,k) E(mu,k) = (mu + w^mu rho(k))(y_j) E(mu,k)");
  for (const auto& mu : truncation_basis(rd, height)) {
    const LaurentPolynomial& e = J.nonsymmetric(mu);
    Spectral ev = J.eigenvalue(mu);
    for (int j = 0; j < rd.rank(); ++j)
      if (J.dunkl().apply(j, e) != e * ev[j]) {
        rep.fail(Json{{"weight", rd.weight_string(mu)}, {"xi", j + 1}, {"eigenvalue", spectral_string(ev)}});
        return rep;
      }
  }
  return rep;
}

Report check_orthogonality(const JacobiSystem& J, int height) {
  const RootDatum& rd = J.datum();
  const Multiplicity& k = J.parameter();
  Report rep("<E(mu,k), E(nu,k)>_k = delta_{mu,nu} ||E(mu,k)||^2 (c-function formula)");
  LaurentPolynomial density = weyl_density(k);
  int order = rd.weyl().size();
  auto basis = truncation_basis(rd, height);
  std::vector<LaurentPolynomial> dual;  // conj(E) * density
  for (const auto& mu : basis) dual.push_back(J.nonsymmetric(mu).conj() * density);
  Json norms = Json::array();
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const LaurentPolynomial& e = J.nonsymmetric(basis[a]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Scalar ip;
      for (const auto& [nu, c] : e.terms()) ip += c * dual[b].coefficient(-nu);
      ip /= Scalar(long(order));
      if (a != b) {
        if (!ip.is_zero()) {
          rep.fail(Json{{"mu", rd.weight_string(basis[a])}, {"nu", rd.weight_string(basis[b])},
                        {"inner_product", ip.to_string()}});
          return rep;
        }
        continue;
      }
      Scalar formula = norm_formula(k, basis[a]);
      norms.push_back(Json{{"mu", rd.weight_string(basis[a])}, {"norm", ip.to_string()}});
      if (formula != ip) {
        rep.fail(Json{{"mu", rd.weight_string(basis[a])}, {"constant_term", ip.to_string()},
                      {"formula", formula.to_string()}});
        return rep;
      }
    }
  }
  rep.details["norms"] = norms;
  rep.details["constant_term"] = constant_term_value(k).to_string();
  return rep;
}

}  // namespace rootharm
