#include "rootharm/shift.hpp"

#include <set>
#include <unordered_set>

namespace rootharm {

namespace {

int weyl_shift_height(const RootDatum& rd) { return rd.height(weyl_denominator_shift(rd)); }

int positive_count(const RootDatum& rd) { return static_cast<int>(rd.positive_unmultipliable().size()); }

bool is_numeric(const Multiplicity& k) {
  for (const auto& v : k.values())
    if (!v.is_rational()) return false;
  return true;
}

std::map<int, Rational> numeric_values(const Multiplicity& k) {
  std::map<int, Rational> m;
  for (int o = 0; o < k.datum().orbit_count(); ++o)
    m[variable_index(k.datum().orbit_names()[o])] = k.orbit_value(o).rational_value();
  return m;
}

std::vector<Scalar> difference(const Multiplicity& a, const Multiplicity& b) {
  std::vector<Scalar> d;
  for (std::size_t o = 0; o < a.values().size(); ++o) d.push_back(a.values()[o] - b.values()[o]);
  return d;
}

// Maximal weight of the support in the triangular order.
Weight top_weight(const RootDatum& rd, const LaurentPolynomial& f) {
  Weight top = f.terms().begin()->first;
  for (const auto& [mu, c] : f.terms())
    if (rd.triangular_less(top, mu)) top = mu;
  return top;
}

LaurentPolynomial invariant_part(const RootDatum& rd, const LaurentPolynomial& f) { return symmetrize(rd, f, 1); }

// G_+ / G_- with the Dunkl families kept alive between calls.
class Heckman {
 public:
  Heckman(int sign, const Multiplicity& k)
      : sign_(sign),
        T_(sign > 0 ? k : k.shifted(-1)),
        pi_(pi_polynomial(sign > 0 ? k : k.shifted(-1), sign)),
        delta_(weyl_denominator(k.datum())) {}

  LaurentPolynomial operator()(const LaurentPolynomial& f) const {
    const RootDatum& rd = T_.datum();
    if (sign_ > 0) return divide_by_weyl_denominator(rd, T_.apply(pi_, f));
    return T_.apply(pi_, delta_ * f);
  }

 private:
  int sign_;
  DunklFamily T_;
  SymPoly pi_;
  LaurentPolynomial delta_;
};

OperatorExpression dunkl_polynomial_expression(const Multiplicity& k, const std::vector<std::pair<CoVector, Scalar>>& factors) {
  OperatorExpression op;
  for (const auto& [xi, c] : factors) op = op * (dunkl_expression(k, xi) + OperatorExpression::scalar(c));
  return op;
}

std::vector<std::pair<CoVector, Scalar>> pi_factors(const Multiplicity& k, int sign) {
  std::vector<std::pair<CoVector, Scalar>> f;
  for (int a : k.datum().positive_unmultipliable()) f.emplace_back(k.datum().coroot_vector(a), k.k0(a) * Scalar(sign));
  return f;
}

Json column_json(const RootDatum& rd, const LaurentPolynomial& f) {
  Json out = Json::object();
  for (const auto& [mu, c] : f.terms()) out[rd.weight_string(mu)] = c.to_string();
  return out;
}

Json polynomial_witness(const RootDatum& rd, const std::string& where, const LaurentPolynomial& lhs,
                        const LaurentPolynomial& rhs) {
  LaurentPolynomial d = lhs - rhs;
  const Weight& row = d.terms().begin()->first;
  return Json{{"at", where},
              {"row", rd.weight_string(row)},
              {"lhs", lhs.coefficient(row).to_string()},
              {"rhs", rhs.coefficient(row).to_string()}};
}

}  // namespace

std::string to_string(ShiftKind kind) {
  switch (kind) {
    case ShiftKind::Raise: return "G+";
    case ShiftKind::Lower: return "G-";
    case ShiftKind::Nonsymmetric: return "S";
    case ShiftKind::LowerBullet: return "S-bullet";
    case ShiftKind::LowerTilde: return "S-tilde";
    case ShiftKind::ClosedForm: return "rank1-closed-form";
  }
  return "?";
}

Multiplicity ShiftOperator::target() const {
  std::vector<Scalar> v = source.values();
  for (std::size_t o = 0; o < v.size() && o < shift.size(); ++o) v[o] += shift[o];
  return Multiplicity(source.datum(), v);
}

LaurentPolynomial ShiftOperator::apply(const LaurentPolynomial& f) const {
  return expression ? expression->apply(f) : matrix.apply(f);
}

Json ShiftOperator::to_json() const {
  const RootDatum& rd = source.datum();
  Json shift_json = Json::array();
  for (const auto& s : shift) shift_json.push_back(s.to_string());
  Json cols = Json::array();
  const bool orbit_basis = kind == ShiftKind::Raise || kind == ShiftKind::Lower;
  for (std::size_t j = 0; j < matrix.domain().size(); ++j)
    cols.push_back(Json{{"source", (orbit_basis ? "m_" : "t^") + rd.weight_string(matrix.domain()[j])},
                        {"image", column_json(rd, matrix.columns()[j])}});
  Json out{{"kind", to_string(kind)},
           {"type", rd.label()},
           {"parameter", source.to_string()},
           {"shift", shift_json},
           {"columns", cols}};
  if (expression) out["expression"] = expression->to_string();
  out["certificate"] = certificate;
  return out;
}

// ---------------------------------------------------------------------------

SymPoly pi_polynomial(const Multiplicity& k, int sign) {
  const RootDatum& rd = k.datum();
  SymPoly p = SymPoly::constant(1);
  for (int a : rd.positive_unmultipliable())
    p = p * (SymPoly::linear(rd.coroot_vector(a)) + SymPoly::constant(k.k0(a) * Scalar(sign)));
  return p;
}

SymPoly coroot_elementary(const RootDatum& rd, int m) {
  std::vector<SymPoly> e(m + 1);
  e[0] = SymPoly::constant(1);
  for (int a : rd.positive_unmultipliable()) {
    SymPoly x = SymPoly::linear(rd.coroot_vector(a));
    for (int j = m; j >= 1; --j) e[j] += e[j - 1] * x;
  }
  return e[m];
}

LaurentPolynomial heckman_apply(int sign, const Multiplicity& k, const LaurentPolynomial& f) {
  return Heckman(sign, k)(f);
}

ShiftOperator heckman_shift(int sign, const Multiplicity& k, int height) {
  const RootDatum& rd = k.datum();
  Heckman g(sign, k);
  ShiftOperator op;
  op.kind = sign > 0 ? ShiftKind::Raise : ShiftKind::Lower;
  op.source = k;
  op.shift = difference(sign > 0 ? k.shifted(1) : k.shifted(-1), k);
  auto dominant = rd.dominant_of_height(height);
  std::vector<LaurentPolynomial> cols;
  for (const auto& lambda : dominant) cols.push_back(g(monomial_symmetric(rd, lambda)));
  op.matrix = LinearOperator(dominant, cols);
  if (sign > 0)
    op.expression = OperatorExpression::divide_delta(rd) * dunkl_polynomial_expression(k, pi_factors(k, 1));
  else
    op.expression = dunkl_polynomial_expression(k.shifted(-1), pi_factors(k.shifted(-1), -1)) *
                    OperatorExpression::multiply(weyl_denominator(rd));
  op.certificate["invariant_height"] = height;
  op.certificate["orbit_sums"] = dominant.size();
  return op;
}

Report check_heckman_shift(const ShiftOperator& g, int height) {
  const Multiplicity& k = g.source;
  const RootDatum& rd = k.datum();
  const int sign = g.kind == ShiftKind::Raise ? 1 : -1;
  Report rep(sign > 0 ? "G+(k) D(p,k) = D(p,k+1) G+(k) on invariants"
                      : "G-(k) D(p,k) = D(p,k-1) G-(k) on invariants");
  Heckman apply_g(sign, k);
  DunklFamily T(k), Tt(g.target());
  const WeylGroup& W = rd.weyl();
  // invariants up to the Coxeter number generate S(a)^W
  int top_degree = 2 * positive_count(rd) / rd.rank();
  auto gens = invariants_up_to(rd, top_degree);
  rep.details["invariant_generators_checked"] = gens.size();
  auto dominant = rd.dominant_of_height(height);
  rep.details["orbit_sums"] = dominant.size();
  for (const auto& lambda : dominant) {
    LaurentPolynomial m = monomial_symmetric(rd, lambda);
    LaurentPolynomial gm;
    try {
      gm = apply_g(m);
    } catch (const DivisionFailure& e) {
      rep.fail(Json{{"m", rd.weight_string(lambda)}, {"division", e.what()}});
      return rep;
    }
    for (int w = 0; w < W.size(); ++w)
      if (gm.act(W, w) != gm) {
        rep.fail(Json{{"m", rd.weight_string(lambda)}, {"not_invariant_under", W.word_string(w)}});
        return rep;
      }
    for (const auto& p : gens) {
      LaurentPolynomial lhs = apply_g(T.apply(p, m));
      LaurentPolynomial rhs = Tt.apply(p, gm);
      if (lhs != rhs) {
        rep.fail(polynomial_witness(rd, "m_" + rd.weight_string(lambda) + " with p=" + p.to_string(), lhs, rhs));
        return rep;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

Json ShiftSystem::to_json() const {
  return Json{{"consistent", consistent},
              {"unknowns", unknowns},
              {"rank", rank},
              {"constraints", constraints},
              {"kernel_dimension", kernel_dimension()}};
}

ShiftSystem solve_shift_system(const Multiplicity& source, const Multiplicity& target, int height, int pad,
                               const std::function<LaurentPolynomial(const LaurentPolynomial&)>& restriction) {
  using Column = std::map<Weight, AffineForm>;
  const RootDatum& rd = source.datum();
  const int r = rd.rank();
  DunklFamily T(source), Tt(target);
  auto domain = truncation_basis(rd, height);
  std::map<int, std::vector<Weight>> spaces;
  auto space = [&](int h) -> const std::vector<Weight>& {
    auto it = spaces.find(h);
    if (it == spaces.end()) it = spaces.emplace(h, truncation_basis(rd, h + pad)).first;
    return it->second;
  };

  ShiftSystem sys;
  AffineSolver solver;
  auto constrain = [&](AffineForm f) {
    f = solver.reduce(f);
    for (auto it = f.begin(); it != f.end();) it = it->second.is_zero() ? f.erase(it) : std::next(it);
    if (f.empty()) return;
    ++sys.constraints;
    solver.add(std::move(f));
  };

  std::unordered_map<Weight, Column, WeightHash> columns;
  for (const auto& nu : domain) {
    Spectral d = T.eigenvalue(nu);
    // (T'_i - d_i(nu)) s_nu = sum over lower nu' of (T_i)_{nu' nu} s_nu'
    std::vector<Column> rhs(r);
    for (int i = 0; i < r; ++i)
      for (const auto& [lower, c] : T.on_monomial(i, nu).terms()) {
        if (lower == nu) continue;
        for (const auto& [mu, form] : columns.at(lower)) axpy(rhs[i][mu], c, form);
      }
    const auto& tgt = space(rd.height(nu));
    std::unordered_set<Weight, WeightHash> inside(tgt.begin(), tgt.end());
    std::vector<Column> acc(r);
    Column s;
    for (auto it = tgt.rbegin(); it != tgt.rend(); ++it) {
      const Weight& mu = *it;
      Spectral dt = Tt.eigenvalue(mu);
      std::vector<AffineForm> residual(r);
      std::vector<Scalar> gap(r);
      int pivot = -1;
      for (int i = 0; i < r; ++i) {
        residual[i] = rhs[i][mu];
        axpy(residual[i], Scalar(-1), acc[i][mu]);
        gap[i] = dt[i] - d[i];
        if (pivot < 0 && !gap[i].is_zero()) pivot = i;
      }
      AffineForm value;
      if (pivot >= 0)
        axpy(value, gap[pivot].inverse(), residual[pivot]);
      else
        value[solver.add_unknown()] = Scalar(1);
      value = solver.reduce(value);
      for (int i = 0; i < r; ++i) {
        if (i == pivot) continue;
        AffineForm eq;
        axpy(eq, gap[i], value);
        axpy(eq, Scalar(-1), residual[i]);
        constrain(std::move(eq));
      }
      if (value.empty()) continue;
      for (int i = 0; i < r; ++i)
        for (const auto& [row, c] : Tt.on_monomial(i, mu).terms())
          if (row != mu) axpy(acc[i][row], c, value);
      s.emplace(mu, std::move(value));
    }
    for (int i = 0; i < r; ++i)
      for (const auto& [mu, form] : rhs[i])
        if (!inside.count(mu)) constrain(form);
    columns.emplace(nu, std::move(s));
  }

  for (const auto& lambda : rd.dominant_of_height(height)) {
    Column total;
    for (const auto& nu : rd.orbit(lambda))
      for (const auto& [mu, form] : columns.at(nu)) axpy(total[mu], Scalar(1), form);
    LaurentPolynomial wanted = restriction(monomial_symmetric(rd, lambda));
    for (const auto& [mu, c] : wanted.terms()) total[mu][-1] -= c;
    for (auto& [mu, form] : total) constrain(form);
  }

  sys.consistent = solver.consistent();
  sys.unknowns = solver.unknowns();
  sys.rank = solver.rank();
  if (sys.consistent && sys.kernel_dimension() == 0) {
    auto x = *solver.unique_solution();
    std::vector<LaurentPolynomial> cols;
    for (const auto& nu : domain) {
      LaurentPolynomial img;
      for (const auto& [mu, form] : columns.at(nu)) {
        Scalar v;
        for (const auto& [u, c] : form) v += u < 0 ? c : c * x[u];
        img.add_term(mu, v);
      }
      cols.push_back(std::move(img));
    }
    sys.solution = LinearOperator(domain, cols);
  }
  return sys;
}

ShiftOperator nonsymmetric_shift(const Multiplicity& k, int height) {
  const RootDatum& rd = k.datum();
  Heckman g(1, k);
  int pad = weyl_shift_height(rd);
  ShiftSystem sys = solve_shift_system(k, k.shifted(1), height, pad, [&](const LaurentPolynomial& f) { return g(f); });
  if (!sys.consistent) throw NoSolution("shift constraint system is inconsistent on " + rd.label());
  if (sys.kernel_dimension() != 0)
    throw NonUnique("shift constraint system has a " + std::to_string(sys.kernel_dimension()) +
                        "-dimensional solution space",
                    sys.kernel_dimension());
  ShiftOperator op;
  op.kind = ShiftKind::Nonsymmetric;
  op.source = k;
  op.shift = difference(k.shifted(1), k);
  op.matrix = *sys.solution;
  op.certificate = sys.to_json();
  op.certificate["domain_height"] = height;
  op.certificate["search_height"] = height + pad;
  op.certificate["domain_size"] = op.matrix.domain().size();
  return op;
}

Report check_nonsymmetric_shift(const ShiftOperator& s, int height) {
  const Multiplicity& k = s.source;
  const RootDatum& rd = k.datum();
  Report rep("S(k) T(xi,k) = T(xi,k+1) S(k), S = G+ on invariants, S E(mu,k) in C E(mu',k+1)");
  DunklFamily T(k), Tt(s.target());
  auto basis = truncation_basis(rd, height);
  for (const auto& nu : basis) {
    auto m = LaurentPolynomial::monomial(nu);
    LaurentPolynomial image = s.apply(m);
    for (int i = 0; i < rd.rank(); ++i) {
      LaurentPolynomial lhs = s.apply(T.apply(i, m)), rhs = Tt.apply(i, image);
      if (lhs != rhs) {
        rep.fail(polynomial_witness(rd, "transmutation y" + std::to_string(i + 1) + " on t^" + rd.weight_string(nu), lhs, rhs));
        return rep;
      }
    }
  }
  Heckman g(1, k);
  for (const auto& lambda : rd.dominant_of_height(height)) {
    auto m = monomial_symmetric(rd, lambda);
    LaurentPolynomial lhs = s.apply(m), rhs = g(m);
    if (lhs != rhs) {
      rep.fail(polynomial_witness(rd, "restriction on m_" + rd.weight_string(lambda), lhs, rhs));
      return rep;
    }
  }
  JacobiSystem J(k), Jt(s.target());
  Json spectral = Json::array(), kernel = Json::array();
  for (const auto& mu : basis) {
    LaurentPolynomial img = s.apply(J.nonsymmetric(mu));
    if (img.is_zero()) {
      kernel.push_back(rd.weight_string(mu));
      continue;
    }
    Weight top = top_weight(rd, img);
    Scalar c = img.coefficient(top);
    if (img != Jt.nonsymmetric(top) * c || Jt.eigenvalue(top) != J.eigenvalue(mu)) {
      rep.fail(Json{{"at", "spectral form of E(" + rd.weight_string(mu) + ")"}, {"top", rd.weight_string(top)}});
      return rep;
    }
    spectral.push_back(Json{{"from", rd.weight_string(mu)}, {"to", rd.weight_string(top)}, {"factor", c.to_string()}});
  }
  rep.details["spectral_map"] = spectral;
  rep.details["kernel"] = kernel;
  rep.details["columns_checked"] = basis.size();
  return rep;
}

// ---------------------------------------------------------------------------

ShiftOperator rank1_closed_form(ClosedFormKind which, const Multiplicity& k) {
  const RootDatum& rd = k.datum();
  if (rd.rank() != 1) throw std::invalid_argument("closed forms are rank one only");
  if (which != ClosedFormKind::Basic && rd.is_reduced())
    throw std::invalid_argument("the (2,-1) and (-2,1) shifts need BC1");
  Weight one, two;
  one.c[0] = 1;
  two.c[0] = 2;
  const int long_root = rd.root_index(two);
  const int s = rd.weyl().simple(0);
  auto x_inv = OperatorExpression::multiply(LaurentPolynomial::monomial(-one));
  auto delta = LaurentPolynomial::monomial(one) - LaurentPolynomial::monomial(-one);
  auto euler = OperatorExpression::derivative(rd, CoVector{Scalar(1)});
  auto one_minus_s = OperatorExpression::identity() - OperatorExpression::reflection(rd, s);

  ShiftOperator op;
  op.kind = ShiftKind::ClosedForm;
  op.source = k;
  std::vector<Scalar> shift(rd.orbit_count());
  // orbit 0 is the short root alpha/2 on BC1
  const int orbit_long = rd.roots()[long_root].orbit;
  const int orbit_short = rd.orbit_count() > 1 ? 1 - orbit_long : -1;
  switch (which) {
    case ClosedFormKind::Basic:
      op.expression = OperatorExpression::divide_delta(rd) *
                      (euler - OperatorExpression::divided_difference(rd, long_root));
      shift = difference(k.shifted(1), k);
      op.certificate["formula"] = "Delta^{-1}(X d/dX - (1-s)/(1-X^{-2}))";
      break;
    case ClosedFormKind::PlusTwoMinusOne: {
      auto d2 = OperatorExpression::divide_binomial(one, 1) * OperatorExpression::divide_binomial(one, 1);
      op.expression = x_inv * d2 * (OperatorExpression::multiply(delta) * euler - one_minus_s) +
                      OperatorExpression::scalar(k.orbit_value(orbit_long) - Scalar::rational(1, 2));
      shift[orbit_short] = Scalar(2);
      shift[orbit_long] = Scalar(-1);
      op.certificate["formula"] = "(X+1)/(X-1) X d/dX - X/(X-1)^2 (1-s) + k_l - 1/2";
      break;
    }
    case ClosedFormKind::MinusTwoPlusOne: {
      auto d2 = OperatorExpression::divide_binomial(one, -1) * OperatorExpression::divide_binomial(one, -1);
      op.expression = x_inv * d2 * (OperatorExpression::multiply(delta) * euler + one_minus_s) +
                      OperatorExpression::scalar(k.orbit_value(orbit_long) + k.orbit_value(orbit_short) -
                                                 Scalar::rational(1, 2));
      shift[orbit_short] = Scalar(-2);
      shift[orbit_long] = Scalar(1);
      op.certificate["formula"] = "(X-1)/(X+1) X d/dX + X/(X+1)^2 (1-s) + k_l + k_s - 1/2";
      break;
    }
  }
  op.shift = shift;
  return op;
}

Report check_closed_form(const ShiftOperator& closed, int height) {
  const RootDatum& rd = closed.source.datum();
  Report rep("closed form preserves polynomials and transmutes T(xi,k) to T(xi,k+shift)");
  DunklFamily T(closed.source), Tt(closed.target());
  for (int m = -height; m <= height; ++m) {
    Weight w;
    w.c[0] = m;
    auto f = LaurentPolynomial::monomial(w);
    try {
      LaurentPolynomial lhs = closed.apply(T.apply(0, f)), rhs = Tt.apply(0, closed.apply(f));
      if (lhs != rhs) {
        rep.fail(polynomial_witness(rd, "transmutation on X^" + std::to_string(m), lhs, rhs));
        return rep;
      }
    } catch (const DivisionFailure& e) {
      rep.fail(Json{{"at", "X^" + std::to_string(m)}, {"division", e.what()}});
      return rep;
    }
  }
  rep.details["monomials"] = 2 * height + 1;
  return rep;
}

Report compare_with_closed_form(const ShiftOperator& solved, int height) {
  const RootDatum& rd = solved.source.datum();
  Report rep("solved S equals the rank one closed form on X^m");
  ShiftOperator closed = rank1_closed_form(ClosedFormKind::Basic, solved.source);
  Json values = Json::object();
  for (int m = -height; m <= height; ++m) {
    Weight w;
    w.c[0] = m;
    auto f = LaurentPolynomial::monomial(w);
    LaurentPolynomial a = solved.matrix.apply(f), b = closed.apply(f);
    if (a != b) {
      rep.fail(polynomial_witness(rd, "X^" + std::to_string(m), a, b));
      return rep;
    }
    if (std::abs(m) <= 2) values["X^" + std::to_string(m)] = a.to_string(rd);
  }
  rep.details["low_values"] = values;
  rep.details["monomials"] = 2 * height + 1;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// S(k-1)^bullet through the diagonal Gram of the E-bases.
LinearOperator adjoint_by_e_basis(const Multiplicity& k, int height) {
  const RootDatum& rd = k.datum();
  const Multiplicity km = k.shifted(-1);
  const int big = height + weyl_shift_height(rd);
  ShiftOperator s = nonsymmetric_shift(km, big);
  JacobiSystem J(k), Jm(km);
  Scalar one_ratio = (norm_gamma(k, Weight{}) / norm_gamma(km, Weight{})).rational_value();
  // preimages: S E(nu,k-1) = c E(mu,k)
  std::map<Weight, std::vector<std::pair<Weight, Scalar>>> pre;
  for (const auto& nu : truncation_basis(rd, big)) {
    LaurentPolynomial img = s.matrix.apply(Jm.nonsymmetric(nu));
    if (img.is_zero()) continue;
    Weight top = top_weight(rd, img);
    Scalar c = img.coefficient(top);
    if (img != J.nonsymmetric(top) * c) throw std::logic_error("shift image is not an E-polynomial");
    pre[top].emplace_back(nu, c);
  }
  std::map<Weight, LaurentPolynomial> on_e;
  auto lower_e = [&](const Weight& mu) -> const LaurentPolynomial& {
    auto it = on_e.find(mu);
    if (it != on_e.end()) return it->second;
    LaurentPolynomial r;
    Scalar nmu = relative_norm(k, mu);
    for (const auto& [nu, c] : pre[mu]) r += Jm.nonsymmetric(nu) * (c * nmu * one_ratio / relative_norm(km, nu));
    return on_e.emplace(mu, r).first->second;
  };
  auto domain = truncation_basis(rd, height);
  std::vector<LaurentPolynomial> cols;
  for (const auto& nu : domain) {
    LaurentPolynomial img;
    for (const auto& [mu, a] : J.expand(LaurentPolynomial::monomial(nu))) img += lower_e(mu) * a;
    cols.push_back(std::move(img));
  }
  return LinearOperator(domain, cols);
}

// Gram solve against the constant-term inner products; k integral with k-1 >= 0.
LinearOperator adjoint_by_gram(const Multiplicity& k, int height) {
  const RootDatum& rd = k.datum();
  const Multiplicity km = k.shifted(-1);
  const int big = height + weyl_shift_height(rd);
  auto values = numeric_values(k);
  ShiftOperator s = nonsymmetric_shift(Multiplicity::symbolic(rd).shifted(-1), big);
  LinearOperator sm = s.matrix.map_entries([&](const Scalar& c) { return c.substitute(values); });
  auto space = truncation_basis(rd, big);
  const int n = static_cast<int>(space.size());
  LaurentPolynomial dk = weyl_density(k), dkm = weyl_density(km);
  const int order = rd.weyl().size();
  // <sum_a x_a t^a, t^b>_{k-1} = <t^nu, S t^b>_k for every b in V_H
  std::vector<std::vector<Scalar>> gram(n, std::vector<Scalar>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      gram[a][b] = inner_product(LaurentPolynomial::monomial(space[a]), LaurentPolynomial::monomial(space[b]), dkm, order);
  std::vector<LaurentPolynomial> s_images;
  for (const auto& b : space) s_images.push_back(sm.column(b));
  auto domain = truncation_basis(rd, height);
  std::vector<LaurentPolynomial> cols;
  for (const auto& nu : domain) {
    AffineSolver solver(n);
    for (int b = 0; b < n; ++b) {
      AffineForm eq;
      for (int a = 0; a < n; ++a)
        if (!gram[a][b].is_zero()) eq[a] = gram[a][b];
      eq[-1] = -inner_product(LaurentPolynomial::monomial(nu), s_images[b], dk, order);
      solver.add(std::move(eq));
    }
    auto x = solver.unique_solution();
    if (!x) throw std::runtime_error("Gram matrix singular at " + k.to_string());
    LaurentPolynomial img;
    for (int a = 0; a < n; ++a) img.add_term(space[a], (*x)[a]);
    cols.push_back(std::move(img));
  }
  return LinearOperator(domain, cols);
}

}  // namespace

ShiftOperator adjoint_shift(ShiftKind which, const Multiplicity& k, int height, AdjointRoute route) {
  const RootDatum& rd = k.datum();
  if (which != ShiftKind::LowerBullet && which != ShiftKind::LowerTilde)
    throw std::invalid_argument("adjoint_shift builds S-bullet or S-tilde");
  const bool integral = is_numeric(k) && k.shifted(-1).is_nonnegative_integer();
  if (route == AdjointRoute::Auto) route = integral ? AdjointRoute::Gram : AdjointRoute::EBasis;
  if (route == AdjointRoute::Gram && !integral)
    throw std::invalid_argument("Gram route needs integral k with k-1 >= 0");
  LinearOperator m;
  if (route == AdjointRoute::Gram) {
    m = adjoint_by_gram(k, height);
  } else if (is_numeric(k)) {
    auto values = numeric_values(k);
    m = adjoint_by_e_basis(Multiplicity::symbolic(rd), height).map_entries([&](const Scalar& c) {
      return c.substitute(values);
    });
  } else {
    m = adjoint_by_e_basis(k, height);
  }
  ShiftOperator op;
  op.kind = which;
  op.source = k;
  op.shift = difference(k.shifted(-1), k);
  if (which == ShiftKind::LowerTilde && positive_count(rd) % 2) m = m * Scalar(-1);
  op.matrix = m;
  op.certificate["route"] = route == AdjointRoute::Gram ? "constant-term Gram" : "E-basis norms";
  op.certificate["domain_height"] = height;
  op.certificate["image_height"] = height + weyl_shift_height(rd);
  return op;
}

Report check_adjoint_shift(const ShiftOperator& lower, int height) {
  const Multiplicity& k = lower.source;
  const RootDatum& rd = k.datum();
  const Multiplicity km = k.shifted(-1);
  const Scalar sign = lower.kind == ShiftKind::LowerTilde && positive_count(rd) % 2 ? Scalar(-1) : Scalar(1);
  Report rep("S-(k) T(xi,k) = T(xi,k-1) S-(k) and e+ S- = e+ G-(k)");
  DunklFamily T(k), Tm(km);
  auto basis = truncation_basis(rd, height);
  for (const auto& nu : basis) {
    auto m = LaurentPolynomial::monomial(nu);
    LaurentPolynomial image = lower.apply(m);
    for (int i = 0; i < rd.rank(); ++i) {
      LaurentPolynomial lhs = lower.apply(T.apply(i, m)), rhs = Tm.apply(i, image);
      if (lhs != rhs) {
        rep.fail(polynomial_witness(rd, "transmutation y" + std::to_string(i + 1) + " on t^" + rd.weight_string(nu), lhs, rhs));
        return rep;
      }
    }
  }
  Heckman g(-1, k);
  for (const auto& lambda : rd.dominant_of_height(height)) {
    auto m = monomial_symmetric(rd, lambda);
    LaurentPolynomial lhs = invariant_part(rd, lower.apply(m)), rhs = g(m) * sign;
    if (lhs != rhs) {
      rep.fail(polynomial_witness(rd, "left restriction on m_" + rd.weight_string(lambda), lhs, rhs));
      return rep;
    }
  }
  // on all of V_h the symmetric part is e+ T(pi^+(k-1),k-1) Delta
  SymPoly pi_plus = pi_polynomial(km, 1), pi_minus = pi_polynomial(km, -1);
  LaurentPolynomial delta = weyl_denominator(rd);
  bool literal = true;
  for (const auto& nu : basis) {
    auto f = LaurentPolynomial::monomial(nu);
    LaurentPolynomial lhs = invariant_part(rd, lower.apply(f));
    LaurentPolynomial rhs = invariant_part(rd, Tm.apply(pi_plus, delta * f)) * sign;
    if (lhs != rhs) {
      rep.fail(polynomial_witness(rd, "e+ S- t^" + rd.weight_string(nu) + " vs e+ T(pi+(k-1)) Delta", lhs, rhs));
      return rep;
    }
    if (literal && lhs != invariant_part(rd, Tm.apply(pi_minus, delta * f)) * sign) literal = false;
  }
  rep.details["columns_checked"] = basis.size();
  rep.details["pi_minus_form_on_all_polynomials"] = literal;
  return rep;
}

// ---------------------------------------------------------------------------

Report composition_identities(const Multiplicity& k, int height) {
  const RootDatum& rd = k.datum();
  const int n = positive_count(rd);
  Report rep("S(k)^bullet S(k) = prod (T+k0)(T-k0-1), star variant, G identities and e+ sandwich");
  ShiftOperator s = nonsymmetric_shift(k, height);
  ShiftOperator dot = adjoint_shift(ShiftKind::LowerBullet, k.shifted(1), height, AdjointRoute::EBasis);
  DunklFamily T(k);
  SymPoly bullet_rhs = SymPoly::constant(1), star_rhs = SymPoly::constant(1), g_rhs = SymPoly::constant(1);
  for (int a : rd.positive_unmultipliable()) {
    SymPoly x = SymPoly::linear(rd.coroot_vector(a));
    SymPoly c = SymPoly::constant(k.k0(a));
    SymPoly one = SymPoly::constant(1);
    bullet_rhs = bullet_rhs * (x + c) * (x - c - one);
    star_rhs = star_rhs * (x + c) * (c + one - x);
    g_rhs = g_rhs * (x + c) * (x - c);
  }
  const Scalar sign = n % 2 ? Scalar(-1) : Scalar(1);
  auto basis = truncation_basis(rd, height);
  for (const auto& nu : basis) {
    auto f = LaurentPolynomial::monomial(nu);
    LaurentPolynomial lhs = dot.matrix.apply(s.matrix.apply(f));
    LaurentPolynomial rhs = T.apply(bullet_rhs, f);
    if (lhs != rhs) {
      rep.fail(polynomial_witness(rd, "bullet identity on t^" + rd.weight_string(nu), lhs, rhs));
      return rep;
    }
    LaurentPolynomial star = T.apply(star_rhs, f);
    if (lhs * sign != star) {
      rep.fail(polynomial_witness(rd, "star identity on t^" + rd.weight_string(nu), lhs * sign, star));
      return rep;
    }
  }
  // symmetric versions and the sandwich with the correction term
  SymPoly p;
  for (int m = 0; m < n; ++m) p += Scalar((n - m) % 2 ? -1 : 1) * coroot_elementary(rd, m);
  SymPoly correction = p * pi_polynomial(k, 1);
  Heckman up(1, k), down(-1, k.shifted(1));
  for (const auto& lambda : rd.dominant_of_height(height)) {
    auto m = monomial_symmetric(rd, lambda);
    LaurentPolynomial gg = down(up(m));
    LaurentPolynomial rhs = T.apply(g_rhs, m);
    if (gg != rhs) {
      rep.fail(polynomial_witness(rd, "G+^bullet G+ on m_" + rd.weight_string(lambda), gg, rhs));
      return rep;
    }
    LaurentPolynomial sandwich = invariant_part(rd, dot.matrix.apply(s.matrix.apply(m)));
    if (sandwich != gg) {
      rep.fail(polynomial_witness(rd, "e+ S^bullet S e+ on m_" + rd.weight_string(lambda), sandwich, gg));
      return rep;
    }
    LaurentPolynomial expanded = invariant_part(rd, T.apply(g_rhs, m) + T.apply(correction, m));
    if (sandwich != expanded) {
      rep.fail(polynomial_witness(rd, "sandwich expansion on m_" + rd.weight_string(lambda), sandwich, expanded));
      return rep;
    }
  }
  // e+ T(q,k) e- = 0 for deg q < N
  std::vector<SymPoly> monos;
  {
    std::set<SymPoly::Exps> seen{SymPoly::Exps{}};
    std::vector<SymPoly::Exps> layer{SymPoly::Exps{}};
    for (int d = 1; d < n; ++d) {
      std::vector<SymPoly::Exps> next;
      for (auto e : layer)
        for (int j = 0; j < rd.rank(); ++j) {
          ++e[j];
          if (seen.insert(e).second) next.push_back(e);
          --e[j];
        }
      layer = std::move(next);
    }
    for (const auto& e : seen) {
      SymPoly q = SymPoly::constant(1);
      for (int j = 0; j < rd.rank(); ++j) q = q * SymPoly::variable(j).pow(e[j]);
      monos.push_back(q);
    }
  }
  for (const auto& nu : basis) {
    LaurentPolynomial anti = symmetrize(rd, LaurentPolynomial::monomial(nu), -1);
    if (anti.is_zero()) continue;
    for (const auto& q : monos)
      if (!invariant_part(rd, T.apply(q, anti)).is_zero()) {
        rep.fail(Json{{"at", "e+ T(q) e-"}, {"q", q.to_string()}, {"column", rd.weight_string(nu)}});
        return rep;
      }
  }
  rep.details["columns_checked"] = basis.size();
  rep.details["low_degree_monomials"] = monos.size();
  rep.details["correction_polynomial"] = p.to_string();
  return rep;
}

Report nonexistence_probe(const Multiplicity& k, int height) {
  const RootDatum& rd = k.datum();
  Report rep("no lowering operator with T(xi,k) -> T(xi,k-1) restricting to G-(k)");
  const int pad = weyl_shift_height(rd);
  Heckman down(-1, k), up(1, k);
  ShiftSystem lowering = solve_shift_system(k, k.shifted(-1), height, pad, [&](const LaurentPolynomial& f) { return down(f); });
  ShiftSystem raising = solve_shift_system(k, k.shifted(1), height, pad, [&](const LaurentPolynomial& f) { return up(f); });
  rep.details["lowering_system"] = lowering.to_json();
  rep.details["raising_control"] = raising.to_json();
  rep.details["feasible"] = lowering.consistent;
  if (lowering.consistent)
    rep.fail(Json{{"finding", "lowering system is consistent"}, {"kernel_dimension", lowering.kernel_dimension()}});
  if (!raising.consistent || raising.kernel_dimension() != 0)
    rep.fail(Json{{"control", "raising system not uniquely solvable"}, {"system", raising.to_json()}});
  return rep;
}

}  // namespace rootharm
