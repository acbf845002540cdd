#include "rootharm/satake.hpp"

#include <optional>

#include <gmpxx.h>

namespace rootharm {

namespace {

std::string q_name(const std::string& orbit) { return "q" + orbit.substr(1); }
std::string sq_name(const std::string& orbit) { return "sq" + orbit.substr(1); }

// Rational square root when it exists.
std::optional<Rational> exact_sqrt(const Scalar& s) {
  if (!s.is_rational()) return std::nullopt;
  Rational r = s.rational_value();
  if (r < 0) return std::nullopt;
  mpz_class n = r.get_num(), d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn = sqrt(n), sd = sqrt(d);
  return Rational(sn, sd);
}

bool is_positive_root(const RootDatum& rd, const Weight& mu) {
  int i = rd.root_index(mu);
  return i >= 0 && rd.roots()[i].positive;
}

Scalar q_of(const HeckeParam& q, int w, int sign) {
  const RootDatum& rd = q.datum();
  Scalar v(1);
  for (int a : rd.positive_roots())
    if (!is_positive_root(rd, rd.weyl().act(w, rd.roots()[a].weight))) v *= q.of_root(a);
  return sign > 0 ? v : v.inverse();
}

LaurentPolynomial expand(const std::vector<Binomial>& fs) {
  LaurentPolynomial p = LaurentPolynomial::constant(Scalar(1));
  for (const auto& f : fs) {
    LaurentPolynomial b = LaurentPolynomial::constant(Scalar(1));
    b.add_term(-f.beta, -f.c);
    p = p * b;
  }
  return p;
}

// Rewrites each factor with a positive exponent root; the scalar monomial pulled out is accumulated.
std::vector<Binomial> normalize(const RootDatum& rd, const std::vector<Binomial>& fs, LaurentPolynomial& prefactor) {
  std::vector<Binomial> out;
  prefactor = LaurentPolynomial::constant(Scalar(1));
  for (const auto& f : fs) {
    if (is_positive_root(rd, f.beta)) {
      out.push_back(f);
    } else {
      // 1 - c t^{g} = -c t^{g} (1 - c^{-1} t^{-g})
      prefactor = prefactor * LaurentPolynomial::monomial(-f.beta, -f.c);
      out.push_back({-f.beta, f.c.inverse()});
    }
  }
  return out;
}

int find_factor(const std::vector<Binomial>& fs, const Binomial& b, const std::vector<bool>& used) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!used[i] && fs[i].beta == b.beta && fs[i].c == b.c) return static_cast<int>(i);
  return -1;
}

Json poly_json(const RootDatum& rd, const LaurentPolynomial& f) {
  Json out = Json::object();
  for (const auto& [mu, c] : f.terms()) out[rd.weight_string(mu)] = c.to_string();
  return out;
}

}  // namespace

HeckeParam::HeckeParam(const RootDatum& rd, std::vector<Scalar> values) : rd_(rd), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != rd.orbit_count())
    throw std::invalid_argument("q needs one value per root orbit");
  for (const auto& v : values_)
    if (v.is_rational() && v.rational_value() <= 0) throw std::invalid_argument("q must be positive");
}

HeckeParam HeckeParam::symbolic(const RootDatum& rd) {
  std::vector<Scalar> v;
  for (const auto& name : rd.orbit_names()) v.push_back(Scalar::variable(q_name(name)));
  return {rd, v};
}

HeckeParam HeckeParam::equal(const RootDatum& rd, const Scalar& q) {
  return {rd, std::vector<Scalar>(rd.orbit_count(), q)};
}

HeckeParam HeckeParam::parse(const RootDatum& rd, std::string_view text) {
  if (text == "symbolic") return symbolic(rd);
  std::vector<Scalar> vals;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    vals.push_back(Scalar::parse(text.substr(start, comma - start)));
    start = comma + 1;
  }
  if (vals.size() == 1) return equal(rd, vals[0]);
  return {rd, vals};
}

Scalar HeckeParam::half(int root) const {
  const Root& r = rd_.roots()[root];
  if (!r.divisible) return Scalar(1);
  Weight h;
  for (int j = 0; j < rd_.rank(); ++j) h.c[j] = r.weight.c[j] / 2;
  return of_root(rd_.root_index(h));
}

std::map<int, Rational> HeckeParam::at_one() const {
  std::map<int, Rational> m;
  for (const auto& name : rd_.orbit_names()) {
    m[variable_index(q_name(name))] = 1;
    m[variable_index(sq_name(name))] = 1;
  }
  return m;
}

bool HeckeParam::is_symbolic() const {
  for (const auto& v : values_)
    if (!v.is_rational()) return true;
  return false;
}

Scalar HeckeParam::delta_half(const Weight& lambda, int sign) const {
  std::vector<int> exponent(rd_.orbit_count(), 0);
  for (int a : rd_.positive_roots()) exponent[rd_.roots()[a].orbit] += rd_.pair(lambda, a);
  Scalar v(1);
  for (int o = 0; o < rd_.orbit_count(); ++o) {
    int e = exponent[o] * sign;
    if (e == 0) continue;
    if (auto r = exact_sqrt(values_[o])) {
      v *= Scalar(*r).pow(e);
      continue;
    }
    int whole = e >= 0 ? e / 2 : -((-e) / 2);
    v *= values_[o].pow(whole);
    if (e % 2) v *= Scalar::variable(sq_name(rd_.orbit_names()[o])).pow(e > 0 ? 1 : -1);
  }
  return v;
}

std::string HeckeParam::to_string() const {
  std::string s;
  for (int o = 0; o < rd_.orbit_count(); ++o) {
    if (o) s += ", ";
    s += q_name(rd_.orbit_names()[o]) + "=" + values_[o].to_string();
  }
  return s;
}

Scalar poincare_polynomial(const HeckeParam& q, int sign) {
  Scalar p(0);
  for (int w = 0; w < q.datum().weyl().size(); ++w) p += q_of(q, w, sign);
  return p;
}

Scalar stabilizer_poincare(const HeckeParam& q, const Weight& lambda, int sign) {
  const WeylGroup& W = q.datum().weyl();
  Scalar p(0);
  for (int w = 0; w < W.size(); ++w)
    if (W.act(w, lambda) == lambda) p += q_of(q, w, sign);
  return p;
}

LaurentPolynomial CFunction::expand_numerator() const { return expand(numerator); }
LaurentPolynomial CFunction::expand_denominator() const { return expand(denominator); }

CFunction CFunction::act(const WeylGroup& W, int w) const {
  CFunction r;
  for (const auto& f : numerator) r.numerator.push_back({W.act(w, f.beta), f.c});
  for (const auto& f : denominator) r.denominator.push_back({W.act(w, f.beta), f.c});
  return r;
}

double CFunction::evaluate(const std::vector<double>& x, const std::map<int, double>& params) const {
  return expand_numerator().evaluate(x, params) / expand_denominator().evaluate(x, params);
}

std::string CFunction::to_string(const RootDatum& rd) const {
  auto side = [&](const std::vector<Binomial>& fs) {
    std::string s;
    for (const auto& f : fs) s += "(1 - (" + f.c.to_string() + ")*t^(" + rd.weight_string(-f.beta) + "))";
    return s.empty() ? std::string("1") : s;
  };
  return side(numerator) + " / " + side(denominator);
}

CFunction c_padic(const HeckeParam& q) {
  CFunction c;
  for (int a : q.datum().positive_unmultipliable()) {
    const Weight& beta = q.datum().roots()[a].weight;
    Scalar h = q.half(a);
    c.numerator.push_back({beta, (q.of_root(a) * h).inverse()});
    c.denominator.push_back({beta, h.inverse()});
  }
  return c;
}

namespace {

// sum_w w(c t^lambda) over a common denominator, divided out exactly.
LaurentPolynomial symmetrized_c(const Weight& lambda, const HeckeParam& q) {
  const RootDatum& rd = q.datum();
  const WeylGroup& W = rd.weyl();
  CFunction c = c_padic(q);

  std::vector<std::vector<Binomial>> dens(W.size());
  std::vector<LaurentPolynomial> pre(W.size());
  std::vector<Binomial> common;
  for (int w = 0; w < W.size(); ++w) {
    CFunction cw = c.act(W, w);
    dens[w] = normalize(rd, cw.denominator, pre[w]);
    std::vector<bool> used(common.size(), false);
    for (const auto& b : dens[w]) {
      int i = find_factor(common, b, used);
      if (i < 0) {
        common.push_back(b);
        used.push_back(true);
      } else {
        used[i] = true;
      }
    }
  }

  LaurentPolynomial total;
  for (int w = 0; w < W.size(); ++w) {
    CFunction cw = c.act(W, w);
    LaurentPolynomial term = cw.expand_numerator().shifted(W.act(w, lambda));
    std::vector<bool> used(common.size(), false);
    for (const auto& b : dens[w]) used[find_factor(common, b, used)] = true;
    std::vector<Binomial> rest;
    for (std::size_t i = 0; i < common.size(); ++i)
      if (!used[i]) rest.push_back(common[i]);
    term = term * expand(rest);
    // Divide by the pulled-out monomial.
    const auto& [mu, a] = *pre[w].terms().begin();
    term = term.shifted(-mu) * a.inverse();
    total += term;
  }
  try {
    for (const auto& b : common) total = total.divide_binomial(b.beta, b.c);
  } catch (const DivisionFailure&) {
    throw PoleCancellationFailure("symmetrized c-function sum is not a polynomial for " + rd.label() + " with " +
                                  q.to_string());
  }
  return total;
}

}  // namespace

Report check_c_sum(const HeckeParam& q) {
  Report rep("sum_w c(wt) = P_W(q^-1)");
  try {
    LaurentPolynomial sum = symmetrized_c(Weight{}, q);
    if (sum != LaurentPolynomial::constant(poincare_polynomial(q, -1))) rep.fail({{"sum", poly_json(q.datum(), sum)}});
  } catch (const PoleCancellationFailure& e) {
    rep.fail({{"error", e.what()}});
  }
  return rep;
}

LaurentPolynomial satake_image(const Weight& lambda, const HeckeParam& q) {
  if (!q.datum().is_dominant(lambda)) throw std::invalid_argument("satake_image needs a dominant weight");
  return symmetrized_c(lambda, q) * poincare_polynomial(q, -1).inverse();
}

LaurentPolynomial spherical_value(const Weight& lambda, const HeckeParam& q) {
  return satake_image(lambda, q) * q.delta_half(lambda, -1);
}

TreeCount count_tree(int n, long q) {
  if (n < 0 || q < 1) throw std::invalid_argument("tree count needs n >= 0 and q >= 1");
  TreeCount tc{n, q, std::vector<long>(n + 1, 0), 0};
  // Walk non-backtracking paths of length n; label 0 always continues along the fixed ray.
  std::vector<long> path;
  auto walk = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      int common = 0;
      while (common < n && path[common] == 0) ++common;
      ++tc.levels[common];
      ++tc.sphere;
      return;
    }
    long branches = depth == 0 ? q + 1 : q;
    for (long b = 0; b < branches; ++b) {
      path.push_back(b);
      self(self, depth + 1);
      path.pop_back();
    }
  };
  walk(walk, 0);
  return tc;
}

LaurentPolynomial tree_oracle(const RootDatum& rd, int n, long q) {
  if (rd.rank() != 1 || !rd.is_reduced()) throw std::invalid_argument("tree oracle is for A1");
  TreeCount tc = count_tree(n, q);
  LaurentPolynomial f;
  // Level 2j - n weighted by delta^{1/2} of the level times delta^{1/2}(pi^n), i.e. q^j.
  for (int j = 0; j <= n; ++j) {
    if (tc.levels[j] == 0) continue;
    Weight m;
    m.c[0] = 2 * j - n;
    f.add_term(m, Scalar(Rational(tc.levels[j])) * Scalar(Rational(q)).pow(j));
  }
  // Dividing by the sphere size (the volume of the double coset) gives the image.
  return f * Scalar(Rational(tc.sphere)).inverse();
}

Report check_tree_oracle(int max_n, long q) {
  Report rep("tree horosphere counts reproduce the rank one Satake image");
  RootDatum rd = RootDatum::build("A1");
  HeckeParam hp = HeckeParam::equal(rd, Scalar(Rational(q)));
  Json rows = Json::array();
  for (int n = 0; n <= max_n; ++n) {
    Weight lambda;
    lambda.c[0] = n;
    LaurentPolynomial oracle = tree_oracle(rd, n, q);
    LaurentPolynomial image = satake_image(lambda, hp);
    TreeCount tc = count_tree(n, q);
    rows.push_back({{"n", n}, {"levels", tc.levels}, {"sphere", tc.sphere}});
    if (oracle != image)
      rep.fail({{"n", n}, {"q", q}, {"oracle", poly_json(rd, oracle)}, {"image", poly_json(rd, image)}});
  }
  rep.details["counts"] = rows;
  return rep;
}

Report check_satake(const HeckeParam& q, int height) {
  const RootDatum& rd = q.datum();
  Report rep("Satake images are pole-free W-invariant polynomials with the lambda=0 and q=1 limits");
  rep.absorb(check_c_sum(q));
  int checked = 0;
  for (const auto& lambda : rd.dominant_of_height(height)) {
    LaurentPolynomial image;
    try {
      image = satake_image(lambda, q);
    } catch (const PoleCancellationFailure& e) {
      rep.fail({{"lambda", rd.weight_string(lambda)}, {"error", e.what()}});
      continue;
    }
    ++checked;
    if (symmetrize(rd, image, 1) != image) rep.fail({{"lambda", rd.weight_string(lambda)}, {"not_invariant", true}});
    if (lambda.is_zero() && image != LaurentPolynomial::constant(Scalar(1)))
      rep.fail({{"lambda", "0"}, {"image", poly_json(rd, image)}});
    if (q.is_symbolic()) {
      LaurentPolynomial limit = image.substitute(q.at_one());
      LaurentPolynomial average = symmetrize(rd, LaurentPolynomial::monomial(lambda), 1);
      if (limit != average)
        rep.fail({{"lambda", rd.weight_string(lambda)}, {"q_to_1", poly_json(rd, limit)}, {"orbit_average", poly_json(rd, average)}});
    }
  }
  rep.details["weights_checked"] = checked;
  return rep;
}

}  // namespace rootharm
