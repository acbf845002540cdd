#include "rootharm/dunkl.hpp"

#include <stdexcept>

namespace rootharm {

std::vector<Weight> truncation_basis(const RootDatum& rd, int height) {
  return rd.saturated_ideal(rd.dominant_of_height(height));
}

OperatorExpression dunkl_expression(const Multiplicity& k, const CoVector& xi) {
  const RootDatum& rd = k.datum();
  Spectral rho = k.rho();
  OperatorExpression op = OperatorExpression::derivative(rd, xi) -
                          OperatorExpression::scalar(rd.pair(rho, xi));
  for (int a : rd.positive_roots()) {
    Scalar c = k.of_root(a) * rd.pair(rd.roots()[a].weight, xi);
    if (!c.is_zero()) op = op + c * OperatorExpression::divided_difference(rd, a);
  }
  return op;
}

DunklFamily::DunklFamily(Multiplicity k) : k_(std::move(k)), rho_(k_.rho()) {
  const RootDatum& rd = k_.datum();
  for (int a : rd.positive_roots()) {
    if (k_.of_root(a).is_zero()) continue;
    std::vector<Scalar> c(rd.rank());
    for (int j = 0; j < rd.rank(); ++j) c[j] = k_.of_root(a) * Scalar(long(rd.roots()[a].weight.c[j]));
    weighted_roots_.emplace_back(a, std::move(c));
  }
  cache_.resize(rd.rank());
}

const LaurentPolynomial& DunklFamily::on_monomial(int j, const Weight& mu) const {
  auto& cache = cache_[j];
  auto it = cache.find(mu);
  if (it != cache.end()) return it->second;
  const RootDatum& rd = datum();
  LaurentPolynomial r = LaurentPolynomial::monomial(mu, Scalar(long(mu.c[j])) - rho_[j]);
  for (const auto& [a, coeff] : weighted_roots_) {
    const Scalar& c = coeff[j];
    if (c.is_zero()) continue;
    const Weight& alpha = rd.roots()[a].weight;
    int m = rd.pair(mu, a);
    if (m > 0)
      for (int i = 0; i < m; ++i) r.add_term(mu - alpha * i, c);
    else
      for (int i = 1; i <= -m; ++i) r.add_term(mu + alpha * i, -c);
  }
  return cache.emplace(mu, std::move(r)).first->second;
}

LaurentPolynomial DunklFamily::apply(int j, const LaurentPolynomial& f) const {
  LaurentPolynomial r;
  for (const auto& [mu, c] : f.terms()) {
    const LaurentPolynomial& img = on_monomial(j, mu);
    for (const auto& [nu, v] : img.terms()) r.add_term(nu, c * v);
  }
  return r;
}

LaurentPolynomial DunklFamily::apply(const CoVector& xi, const LaurentPolynomial& f) const {
  LaurentPolynomial r;
  for (int j = 0; j < datum().rank(); ++j)
    if (!xi[j].is_zero()) r += apply(j, f) * xi[j];
  return r;
}

LaurentPolynomial DunklFamily::apply(const SymPoly& p, const LaurentPolynomial& f) const {
  // T(y^e) f built from T(y^{e - e_j}) f, smallest exponents first.
  std::map<SymPoly::Exps, LaurentPolynomial> memo;
  memo.emplace(SymPoly::Exps{}, f);
  std::function<const LaurentPolynomial&(const SymPoly::Exps&)> power =
      [&](const SymPoly::Exps& e) -> const LaurentPolynomial& {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    int j = 0;
    while (e[j] == 0) ++j;
    SymPoly::Exps prev = e;
    --prev[j];
    LaurentPolynomial v = apply(j, power(prev));
    return memo.emplace(e, std::move(v)).first->second;
  };
  LaurentPolynomial r;
  for (const auto& [e, c] : p.terms()) r += power(e) * c;
  return r;
}

LinearOperator DunklFamily::matrix(const CoVector& xi, const std::vector<Weight>& basis) const {
  std::vector<LaurentPolynomial> cols;
  cols.reserve(basis.size());
  for (const auto& nu : basis) cols.push_back(apply(xi, LaurentPolynomial::monomial(nu)));
  return {basis, std::move(cols)};
}

LinearOperator DunklFamily::matrix(const SymPoly& p, const std::vector<Weight>& basis) const {
  std::vector<LaurentPolynomial> cols;
  cols.reserve(basis.size());
  for (const auto& nu : basis) cols.push_back(apply(p, LaurentPolynomial::monomial(nu)));
  return {basis, std::move(cols)};
}

Spectral DunklFamily::eigenvalue(const Weight& mu) const {
  const RootDatum& rd = datum();
  Spectral r = rd.weyl().act(rd.w_mu(mu), rho_);
  for (int j = 0; j < rd.rank(); ++j) r[j] += Scalar(long(mu.c[j]));
  return r;
}

// ---------------------------------------------------------------------------

LaurentPolynomial to_orbit_coordinates(const RootDatum& rd, const LaurentPolynomial& f) {
  LaurentPolynomial c;
  for (const auto& [mu, v] : f.terms()) {
    Weight top = rd.dominant(mu);
    if (f.coefficient(top) != v)
      throw std::domain_error("polynomial is not W-invariant at " + rd.weight_string(mu));
    if (mu == top) c.add_term(mu, v);
  }
  return c;
}

LaurentPolynomial from_orbit_coordinates(const RootDatum& rd, const LaurentPolynomial& c) {
  LaurentPolynomial f;
  for (const auto& [lambda, v] : c.terms())
    for (const auto& nu : rd.orbit(lambda)) f.add_term(nu, v);
  return f;
}

LinearOperator invariant_matrix(const RootDatum& rd, const std::vector<Weight>& dominant,
                                const std::function<LaurentPolynomial(const LaurentPolynomial&)>& op) {
  std::vector<LaurentPolynomial> cols;
  for (const auto& lambda : dominant)
    cols.push_back(to_orbit_coordinates(rd, op(monomial_symmetric(rd, lambda))));
  return {dominant, std::move(cols)};
}

LinearOperator symmetric_restriction(const DunklFamily& T, const SymPoly& p, int height) {
  const RootDatum& rd = T.datum();
  return invariant_matrix(rd, rd.dominant_of_height(height),
                          [&](const LaurentPolynomial& f) { return T.apply(p, f); });
}

OperatorExpression radial_laplacian(const Multiplicity& k) {
  const RootDatum& rd = k.datum();
  int r = rd.rank();
  auto unit = [r](int i) {
    CoVector v(r);
    v[i] = Scalar(1);
    return v;
  };
  OperatorExpression lap = OperatorExpression::scalar(Scalar());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (rd.gram(i, j) != 0)
        lap = lap + Scalar(rd.gram(i, j)) * (OperatorExpression::derivative(rd, unit(i)) *
                                             OperatorExpression::derivative(rd, unit(j)));
  for (int a : rd.positive_roots()) {
    const Root& root = rd.roots()[a];
    if (k.of_root(a).is_zero()) continue;
    // alpha^* in coroot coordinates: (alpha, alpha)/2 * alpha^vee
    CoVector star = rd.coroot_vector(a);
    for (auto& x : star) x *= Scalar(Rational(root.norm2 / 2));
    LaurentPolynomial numer = LaurentPolynomial::constant(1);
    numer.add_term(-root.weight, Scalar(1));
    lap = lap + k.of_root(a) * (OperatorExpression::divide_binomial(root.weight, 1) *
                                OperatorExpression::multiply(numer) *
                                OperatorExpression::derivative(rd, star));
  }
  return lap;
}

// ---------------------------------------------------------------------------

namespace {

Json difference_witness(const RootDatum& rd, const LinearOperator::Difference& d) {
  return Json{{"column", rd.weight_string(d.column)},
              {"row", rd.weight_string(d.row)},
              {"lhs", d.lhs.to_string()},
              {"rhs", d.rhs.to_string()}};
}

Json first_mismatch(const RootDatum& rd, const Weight& col, const LaurentPolynomial& lhs,
                    const LaurentPolynomial& rhs) {
  LaurentPolynomial diff = lhs - rhs;
  const Weight& row = diff.terms().begin()->first;
  return Json{{"column", rd.weight_string(col)},
              {"row", rd.weight_string(row)},
              {"lhs", lhs.coefficient(row).to_string()},
              {"rhs", rhs.coefficient(row).to_string()}};
}

}  // namespace

Report check_commutativity(const DunklFamily& T, int height) {
  const RootDatum& rd = T.datum();
  Report rep("T(y_i,k) T(y_j,k) = T(y_j,k) T(y_i,k)");
  auto basis = truncation_basis(rd, height);
  rep.details["basis_size"] = basis.size();
  for (int i = 0; i < rd.rank() && rep.pass; ++i)
    for (int j = i + 1; j < rd.rank() && rep.pass; ++j)
      for (const auto& nu : basis) {
        LaurentPolynomial m = LaurentPolynomial::monomial(nu);
        LaurentPolynomial a = T.apply(i, T.apply(j, m)), b = T.apply(j, T.apply(i, m));
        if (a != b) {
          Json w = first_mismatch(rd, nu, a, b);
          w["pair"] = {i + 1, j + 1};
          rep.fail(w);
          break;
        }
      }
  return rep;
}

Report check_hecke_relations(const DunklFamily& T, int height) {
  const RootDatum& rd = T.datum();
  const WeylGroup& W = rd.weyl();
  const Multiplicity& k = T.parameter();
  Report rep("s_i T(p) - T(s_i p) s_i = -k_i T((p - s_i p)/y_i)");
  auto basis = truncation_basis(rd, height);
  rep.details["basis_size"] = basis.size();
  std::vector<SymPoly> gens;
  for (int j = 0; j < rd.rank(); ++j) gens.push_back(SymPoly::variable(j));
  gens.push_back(squared_norm_polynomial(rd));
  for (int i = 0; i < rd.rank() && rep.pass; ++i) {
    int s = W.simple(i);
    for (std::size_t g = 0; g < gens.size() && rep.pass; ++g) {
      const SymPoly& p = gens[g];
      SymPoly sp = p.act(W, s);
      SymPoly q = (p - sp).divide_by_variable(i);
      for (const auto& nu : basis) {
        LaurentPolynomial m = LaurentPolynomial::monomial(nu);
        LaurentPolynomial lhs = T.apply(p, m).act(W, s) - T.apply(sp, m.act(W, s));
        LaurentPolynomial rhs = T.apply(q, m) * (-k.simple_parameter(i));
        if (lhs != rhs) {
          Json w = first_mismatch(rd, nu, lhs, rhs);
          w["reflection"] = i + 1;
          w["polynomial"] = p.to_string();
          rep.fail(w);
          break;
        }
      }
    }
  }
  // Braid and quadratic relations of the reflection part are those of W acting on P.
  return rep;
}

Report check_adjointness(const DunklFamily& T, int height) {
  const RootDatum& rd = T.datum();
  const Multiplicity& k = T.parameter();
  Report rep("<T(xi,k) f, g>_k = <f, T(xi,k) g>_k");
  auto basis = truncation_basis(rd, height);
  LaurentPolynomial density = weyl_density(k);
  rep.details["basis_size"] = basis.size();
  // <F, t^b> = sum_mu F_mu delta_{b - mu}; <t^a, G> = sum_mu conj(G_mu) delta_{mu - a}
  for (int j = 0; j < rd.rank() && rep.pass; ++j) {
    std::vector<LaurentPolynomial> images;
    for (const auto& nu : basis) images.push_back(T.apply(j, LaurentPolynomial::monomial(nu)));
    for (std::size_t a = 0; a < basis.size() && rep.pass; ++a)
      for (std::size_t b = 0; b < basis.size(); ++b) {
        Scalar lhs, rhs;
        for (const auto& [mu, c] : images[a].terms()) lhs += c * density.coefficient(basis[b] - mu);
        for (const auto& [mu, c] : images[b].terms()) rhs += c * density.coefficient(mu - basis[a]);
        if (lhs != rhs) {
          rep.fail(Json{{"xi", j + 1},
                        {"f", rd.weight_string(basis[a])},
                        {"g", rd.weight_string(basis[b])},
                        {"lhs", (lhs / Scalar(long(rd.weyl().size()))).to_string()},
                        {"rhs", (rhs / Scalar(long(rd.weyl().size()))).to_string()}});
          break;
        }
      }
  }
  return rep;
}

Report check_triangularity(const DunklFamily& T, int height) {
  const RootDatum& rd = T.datum();
  Report rep("T(y_j,k) t^mu = (mu + w^mu rho(k))(y_j) t^mu + lower");
  for (const auto& mu : truncation_basis(rd, height)) {
    Spectral ev = T.eigenvalue(mu);
    for (int j = 0; j < rd.rank(); ++j) {
      const LaurentPolynomial& img = T.on_monomial(j, mu);
      bool ok = img.coefficient(mu) == ev[j];
      for (const auto& [nu, c] : img.terms())
        if (nu != mu && !rd.triangular_less(nu, mu)) ok = false;
      if (!ok) {
        rep.fail(Json{{"weight", rd.weight_string(mu)}, {"xi", j + 1}});
        return rep;
      }
    }
  }
  return rep;
}

Report check_radial_laplacian(const DunklFamily& T, int height) {
  const RootDatum& rd = T.datum();
  const Multiplicity& k = T.parameter();
  Report rep("L = D(p2,k) - (rho(k),rho(k)) on invariants");
  OperatorExpression L = radial_laplacian(k);
  auto dominant = rd.dominant_of_height(height);
  LinearOperator lhs =
      invariant_matrix(rd, dominant, [&](const LaurentPolynomial& f) { return L.apply(f); });
  LinearOperator d = symmetric_restriction(T, squared_norm_polynomial(rd), height);
  Spectral rho = k.rho();
  Scalar rr = rd.inner(rho, rho);
  LinearOperator rhs = d - LinearOperator::identity(dominant) * rr;
  rep.details["rho_norm"] = rr.to_string();
  rep.details["invariant_dimension"] = dominant.size();
  if (auto diff = lhs.first_difference(rhs)) rep.fail(difference_witness(rd, *diff));
  return rep;
}

}  // namespace rootharm
