#include "rootharm/gamma_product.hpp"

#include <iterator>
#include <sstream>
#include <vector>

namespace rootharm {

namespace {

Rational constant_part(const Polynomial& p) {
  for (const auto& t : p.terms()) {
    bool zero = true;
    for (auto e : t.exps) zero = zero && e == 0;
    if (zero) return t.coeff;
  }
  return 0;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational factorial(long n) {
  Rational r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

GammaProduct GammaProduct::gamma(const Polynomial& argument, int exponent) {
  GammaProduct g;
  if (exponent != 0) g.tokens_[argument] = exponent;
  return g;
}

GammaProduct& GammaProduct::operator*=(const GammaProduct& o) {
  prefactor_ *= o.prefactor_;
  for (const auto& [form, e] : o.tokens_) {
    int& slot = tokens_[form];
    slot += e;
    if (slot == 0) tokens_.erase(form);
  }
  return *this;
}

GammaProduct& GammaProduct::operator/=(const GammaProduct& o) {
  prefactor_ /= o.prefactor_;
  for (const auto& [form, e] : o.tokens_) {
    int& slot = tokens_[form];
    slot -= e;
    if (slot == 0) tokens_.erase(form);
  }
  return *this;
}

void GammaProduct::reduce() {
  // Group forms by their class modulo integer constants.
  std::map<Polynomial, std::vector<std::pair<Rational, int>>> classes;
  for (const auto& [form, e] : tokens_) {
    Rational c = constant_part(form);
    Rational frac = c - Rational(mpz_class(c.get_num() / c.get_den()));
    if (frac < 0) frac += 1;
    Polynomial key = form - Polynomial(c) + Polynomial(frac);
    classes[key].emplace_back(c - frac, e);
  }
  std::map<Polynomial, int> out;
  for (const auto& [key, members] : classes) {
    Rational base = members.front().first;
    int total = 0;
    for (const auto& [off, e] : members) {
      base = std::min(base, off);
      total += e;
    }
    if (key.is_constant() && key.constant_value() + base <= 0) {
      // numeric class touching a pole: pairing would multiply by zero, keep tokens as they are
      for (const auto& [off, e] : members) out[key + Polynomial(off)] += e;
      continue;
    }
    Polynomial L = key + Polynomial(base);
    for (const auto& [off, e] : members) {
      // Gamma(L + n) = Gamma(L) * prod_{j<n} (L + j)
      long n = Rational(off - base).get_num().get_si();
      Scalar f(1);
      for (long j = 0; j < n; ++j) f *= Scalar(L + Polynomial(Rational(j)));
      if (f.is_zero() && e < 0) throw NotReducible("Gamma quotient has a pole");
      prefactor_ *= f.pow(e);
    }
    if (total != 0) out[L] = total;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  tokens_ = std::move(out);
}

bool GammaProduct::is_rational() const {
  GammaProduct g = *this;
  g.reduce();
  return g.tokens_.empty();
}

Scalar GammaProduct::rational_value() const {
  GammaProduct g = *this;
  g.reduce();
  if (!g.tokens_.empty()) throw NotReducible("Gamma product does not reduce: " + g.to_string());
  return g.prefactor_;
}

GammaProduct GammaProduct::substitute(const std::map<int, Rational>& values) const {
  GammaProduct g(prefactor_.substitute(values));
  for (const auto& [form, e] : tokens_) g *= gamma(form.substitute(values), e);
  return g;
}

Scalar GammaProduct::evaluate_exact() const {
  GammaProduct g = *this;
  g.reduce();
  Scalar value = g.prefactor_;
  int sqrt_pi = 0;
  bool vanishes = false;
  for (const auto& [form, e] : g.tokens_) {
    if (e == 0) continue;
    if (!form.is_constant()) throw NotReducible("Gamma argument is not numeric: " + form.to_string());
    Rational x = form.constant_value();
    Rational v;
    if (is_integer(x)) {
      long n = x.get_num().get_si();
      if (n <= 0) {
        if (e > 0) throw NotReducible("Gamma pole at " + x.get_str());
        vanishes = true;  // 1/Gamma vanishes at poles
        continue;
      }
      v = factorial(n - 1);
    } else if (x.get_den() == 2) {
      // Gamma(m + 1/2) = sqrt(pi) * (2m)! / (4^m m!), extended to m < 0 by the recurrence
      long m = Rational(x - Rational(1, 2)).get_num().get_si();
      if (m >= 0) {
        v = factorial(2 * m) / (factorial(m) * Rational(mpz_class(1) << (2 * m)));
      } else {
        long n = -m;
        Rational sign = (n % 2) ? -1 : 1;
        v = sign * Rational(mpz_class(1) << (2 * n)) * factorial(n) / factorial(2 * n);
      }
      sqrt_pi += e;
    } else {
      throw NotReducible("Gamma at non half-integral rational " + x.get_str());
    }
    value *= Scalar(v).pow(e);
  }
  if (sqrt_pi != 0) throw NotReducible("unbalanced powers of sqrt(pi)");
  return vanishes ? Scalar() : value;
}

std::string GammaProduct::to_string() const {
  std::ostringstream num, den;
  for (const auto& [form, e] : tokens_) {
    std::ostringstream& os = e > 0 ? num : den;
    int n = e > 0 ? e : -e;
    if (os.tellp() > 0) os << "*";
    os << "Gamma(" << form.to_string() << ")";
    if (n > 1) os << "^" << n;
  }
  std::string s = prefactor_.is_one() ? "" : "(" + prefactor_.to_string() + ")";
  std::string n = num.str(), d = den.str();
  if (!n.empty()) s += (s.empty() ? "" : "*") + n;
  if (s.empty()) s = "1";
  if (!d.empty()) s += "/(" + d + ")";
  return s;
}

}  // namespace rootharm
