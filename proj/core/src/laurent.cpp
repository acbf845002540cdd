#include "rootharm/laurent.hpp"

#include <cmath>
#include <sstream>

namespace rootharm {

LaurentPolynomial LaurentPolynomial::monomial(const Weight& mu, const Scalar& c) {
  LaurentPolynomial p;
  if (!c.is_zero()) p.terms_.emplace(mu, c);
  return p;
}

Scalar LaurentPolynomial::coefficient(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Scalar() : it->second;
}

void LaurentPolynomial::add_term(const Weight& mu, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [mu, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [m1, c1] : a.terms_)
    for (const auto& [m2, c2] : b.terms_) r.add_term(m1 + m2, c1 * c2);
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const Weight& mu) const {
  LaurentPolynomial r;
  for (const auto& [nu, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), nu + mu, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::act(const WeylGroup& W, int w) const {
  if (w == W.identity()) return *this;
  LaurentPolynomial r;
  for (const auto& [nu, c] : terms_) r.terms_.emplace(W.act(w, nu), c);
  return r;
}

LaurentPolynomial LaurentPolynomial::conj(std::uint32_t imaginary) const {
  LaurentPolynomial r;
  for (const auto& [nu, c] : terms_) r.terms_.emplace(-nu, c.negate_variables(imaginary));
  return r;
}

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::divide_binomial(const Weight& beta, const Scalar& s) const {
  if (beta.is_zero()) throw std::invalid_argument("binomial with zero exponent");
  int axis = 0;
  while (beta.c[axis] == 0) ++axis;
  // Group the support into lines nu + Z*beta, indexed by position j along the line.
  std::map<Weight, std::map<int, Scalar>> lines;
  for (const auto& [nu, c] : terms_) {
    int j = floor_div(nu.c[axis], beta.c[axis]);
    lines[nu - beta * j][j] = c;
  }
  // f = g (1 - s t^{-beta})  =>  g_j = f_j + s * g_{j+1}, computed downward.
  LaurentPolynomial g;
  for (const auto& [base, line] : lines) {
    int jmax = line.rbegin()->first, jmin = line.begin()->first;
    Scalar carry;
    for (int j = jmax; j >= jmin; --j) {
      auto it = line.find(j);
      Scalar v = carry * s;
      if (it != line.end()) v += it->second;
      if (j == jmin) {
        if (!v.is_zero())
          throw DivisionFailure("Laurent polynomial not divisible by binomial in direction " +
                                std::to_string(beta.c[0]));
      } else {
        g.add_term(base + beta * j, v);
      }
      carry = v;
    }
  }
  return g;
}

LaurentPolynomial LaurentPolynomial::map_coefficients(
    const std::function<Scalar(const Scalar&)>& f) const {
  LaurentPolynomial r;
  for (const auto& [nu, c] : terms_) r.add_term(nu, f(c));
  return r;
}

LaurentPolynomial LaurentPolynomial::substitute(const std::map<int, Rational>& values) const {
  return map_coefficients([&](const Scalar& c) { return c.substitute(values); });
}

double LaurentPolynomial::evaluate(const std::vector<double>& x,
                                   const std::map<int, double>& params) const {
  double s = 0;
  for (const auto& [nu, c] : terms_) {
    double m = c.evaluate_double(params);
    for (std::size_t i = 0; i < x.size(); ++i) m *= std::pow(x[i], nu.c[i]);
    s += m;
  }
  return s;
}

int LaurentPolynomial::max_height(const RootDatum& rd) const {
  int h = 0;
  for (const auto& [nu, c] : terms_) h = std::max(h, rd.height(nu));
  return h;
}

std::string LaurentPolynomial::to_string(const RootDatum& rd) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [nu, c] = *it;
    std::string mono;
    if (rd.rank() == 1) {
      if (nu.c[0] == 1)
        mono = "X";
      else if (nu.c[0] != 0)
        mono = "X^" + std::to_string(nu.c[0]);
    } else if (!nu.is_zero()) {
      mono = "t^" + rd.weight_string(nu);
    }
    std::string coeff = c.to_string();
    bool compound = !c.is_rational() && (c.numerator().terms().size() > 1 || !c.denominator().is_constant());
    if (!first) os << " + ";
    first = false;
    if (mono.empty())
      os << (compound ? "(" + coeff + ")" : coeff);
    else if (c.is_one())
      os << mono;
    else
      os << (compound ? "(" + coeff + ")" : coeff) << "*" << mono;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Weight weyl_denominator_shift(const RootDatum& rd) {
  Weight twice;
  for (int a : rd.positive_unmultipliable()) twice = twice + rd.roots()[a].weight;
  Weight half;
  for (int i = 0; i < rd.rank(); ++i) {
    if (twice.c[i] % 2) throw DivisionFailure("half-sum of R^0_+ outside the weight lattice");
    half.c[i] = twice.c[i] / 2;
  }
  return half;
}

LaurentPolynomial weyl_denominator(const RootDatum& rd) {
  LaurentPolynomial d = LaurentPolynomial::monomial(weyl_denominator_shift(rd));
  for (int a : rd.positive_unmultipliable()) {
    LaurentPolynomial f = LaurentPolynomial::constant(1);
    f.add_term(-rd.roots()[a].weight, Scalar(-1));
    d = d * f;
  }
  return d;
}

LaurentPolynomial divide_by_weyl_denominator(const RootDatum& rd, const LaurentPolynomial& f) {
  LaurentPolynomial g = f.shifted(-weyl_denominator_shift(rd));
  try {
    for (int a : rd.positive_unmultipliable()) g = g.divide_binomial(rd.roots()[a].weight, 1);
  } catch (const DivisionFailure&) {
    throw DivisionFailure("Laurent polynomial is not divisible by the Weyl denominator");
  }
  return g;
}

LaurentPolynomial weyl_density(const Multiplicity& k) {
  const RootDatum& rd = k.datum();
  if (!k.is_nonnegative_integer())
    throw std::invalid_argument("Weyl density needs nonnegative integer multiplicities");
  LaurentPolynomial d = LaurentPolynomial::constant(1);
  for (int a : rd.positive_roots()) {
    long e = k.of_root(a).rational_value().get_num().get_si();
    LaurentPolynomial factor = LaurentPolynomial::constant(2);
    factor.add_term(rd.roots()[a].weight, Scalar(-1));
    factor.add_term(-rd.roots()[a].weight, Scalar(-1));
    for (long i = 0; i < e; ++i) d = d * factor;
  }
  return d;
}

Scalar inner_product(const LaurentPolynomial& f, const LaurentPolynomial& g,
                     const LaurentPolynomial& density, int weyl_order) {
  // CT(f * conj(g) * density) without forming the full product
  LaurentPolynomial gd = g.conj() * density;
  Scalar s;
  for (const auto& [mu, c] : f.terms()) {
    Scalar v = gd.coefficient(-mu);
    if (!v.is_zero()) s += c * v;
  }
  return s / Scalar(long(weyl_order));
}

Scalar inner_product(const LaurentPolynomial& f, const LaurentPolynomial& g, const Multiplicity& k) {
  return inner_product(f, g, weyl_density(k), k.datum().weyl().size());
}

LaurentPolynomial symmetrize(const RootDatum& rd, const LaurentPolynomial& f, int sign) {
  const WeylGroup& W = rd.weyl();
  LaurentPolynomial r;
  for (int w = 0; w < W.size(); ++w) {
    LaurentPolynomial t = f.act(W, w);
    if (sign < 0 && W.length(w) % 2) t = -t;
    r += t;
  }
  return r * Scalar(Rational(1, W.size()));
}

LaurentPolynomial monomial_symmetric(const RootDatum& rd, const Weight& lambda) {
  LaurentPolynomial m;
  for (const auto& nu : rd.orbit(lambda)) m.add_term(nu, Scalar(1));
  return m;
}

}  // namespace rootharm
