#include "rootharm/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rootharm {

namespace {

struct Registry {
  std::mutex mu;
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  Registry() {
    // Pre-registered so canonical forms are independent of first-use order.
    for (const char* n : {"k", "k_s", "k_m", "k_l", "q", "sq", "q_s", "q_l", "sq_s", "sq_l", "l1",
                          "l2", "l3", "l4"}) {
      index.emplace(n, static_cast<int>(names.size()));
      names.emplace_back(n);
    }
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

bool divides(const Exponents& d, const Exponents& e) {
  for (int i = 0; i < kMaxVars; ++i)
    if (d[i] > e[i]) return false;
  return true;
}

Exponents exps_add(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a[i]) + unsigned(b[i]);
    if (s > 255) throw std::overflow_error("polynomial degree exceeds 255");
    r[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

Exponents exps_sub(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint8_t>(a[i] - b[i]);
  return r;
}

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) { return a.exps > b.exps; }

}  // namespace

int variable_index(std::string_view name) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  std::string key(name);
  auto it = r.index.find(key);
  if (it != r.index.end()) return it->second;
  if (static_cast<int>(r.names.size()) >= kMaxVars)
    throw std::length_error("too many parameter variables: " + key);
  int idx = static_cast<int>(r.names.size());
  r.names.push_back(key);
  r.index.emplace(key, idx);
  return idx;
}

const std::string& variable_name(int index) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.names.at(index);
}

int variable_count() {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return static_cast<int>(r.names.size());
}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.push_back({Exponents{}, Rational(c)});
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Exponents{}, c});
}

Polynomial Polynomial::variable(int index, unsigned power) {
  Exponents e{};
  if (power > 255) throw std::overflow_error("polynomial degree exceeds 255");
  e[index] = static_cast<std::uint8_t>(power);
  return monomial(e, 1);
}

Polynomial Polynomial::variable(std::string_view name, unsigned power) {
  return variable(variable_index(name), power);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == Exponents{});
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  // constant term is the smallest in lex order
  const Term& t = terms_.back();
  return t.exps == Exponents{} ? t.coeff : Rational(0);
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, int(t.exps[var]));
  return d;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (auto e : t.exps) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::uint32_t Polynomial::variable_mask() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_)
    for (int i = 0; i < kMaxVars; ++i)
      if (t.exps[i]) m |= (1u << i);
  return m;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exps == t.exps)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coeff == 0; }),
            out.end());
  terms_ = std::move(out);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exps > b[j].exps)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exps > a[i].exps) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].exps, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (b.is_constant()) {
    r = a;
    r *= b.terms_[0].coeff;
    return r;
  }
  if (a.is_constant()) {
    r = b;
    r *= a.terms_[0].coeff;
    return r;
  }
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) r.terms_.push_back({exps_add(x.exps, y.exps), x.coeff * y.coeff});
  r.normalize();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps) return a.terms_[i].exps < b.terms_[i].exps;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
  }
  return a.terms_.size() < b.terms_.size();
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(1), base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (terms_.empty()) return Polynomial();
  if (d.is_constant()) {
    Polynomial q = *this;
    q *= Rational(1 / d.terms_[0].coeff);
    return q;
  }
  Polynomial r = *this, q;
  const Term& lt = d.terms_.front();
  std::vector<Term> qterms;
  while (!r.terms_.empty()) {
    const Term& rt = r.terms_.front();
    if (!divides(lt.exps, rt.exps)) return std::nullopt;
    Term t{exps_sub(rt.exps, lt.exps), rt.coeff / lt.coeff};
    Polynomial sub;
    sub.terms_.reserve(d.terms_.size());
    for (const auto& x : d.terms_) sub.terms_.push_back({exps_add(x.exps, t.exps), x.coeff * t.coeff});
    r -= sub;
    qterms.push_back(std::move(t));
  }
  q.terms_ = std::move(qterms);  // generated in descending order
  return q;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Polynomial r = *this;
  Rational inv = 1 / terms_.front().coeff;
  r *= inv;
  return r;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return 0;
  mpz_class num = 0, den = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num, den);
  c.canonicalize();
  if (terms_.front().coeff < 0) c = -c;
  return c;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
  std::vector<Polynomial> coeffs = coefficients_in(var);
  Polynomial r;
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    r *= value;
    r += coeffs[d];
  }
  return r;
}

Polynomial Polynomial::substitute(const std::map<int, Rational>& values) const {
  Polynomial r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term n = t;
    for (const auto& [var, val] : values) {
      if (n.exps[var]) {
        Rational p = 1;
        for (int i = 0; i < n.exps[var]; ++i) p *= val;
        n.coeff *= p;
        n.exps[var] = 0;
      }
    }
    r.terms_.push_back(std::move(n));
  }
  r.normalize();
  return r;
}

std::optional<Rational> Polynomial::evaluate(const std::map<int, Rational>& values) const {
  Polynomial r = substitute(values);
  if (!r.is_constant()) return std::nullopt;
  return r.constant_value();
}

double Polynomial::evaluate_double(const std::map<int, double>& values) const {
  double s = 0;
  for (const auto& t : terms_) {
    double v = t.coeff.get_d();
    for (int i = 0; i < kMaxVars; ++i) {
      if (!t.exps[i]) continue;
      auto it = values.find(i);
      if (it == values.end()) throw std::invalid_argument("unbound variable " + variable_name(i));
      for (int e = 0; e < t.exps[i]; ++e) v *= it->second;
    }
    s += v;
  }
  return s;
}

std::vector<Polynomial> Polynomial::coefficients_in(int var) const {
  std::vector<Polynomial> out(degree_in(var) + 1);
  for (const auto& t : terms_) {
    Term s = t;
    int d = s.exps[var];
    s.exps[var] = 0;
    out[d].terms_.push_back(std::move(s));
  }
  for (auto& p : out) p.normalize();
  return out;
}

Polynomial Polynomial::from_coefficients(int var, const std::vector<Polynomial>& coeffs) {
  Polynomial r;
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    for (const auto& t : coeffs[d].terms_) {
      Term s = t;
      s.exps[var] = static_cast<std::uint8_t>(d);
      r.terms_.push_back(std::move(s));
    }
  r.normalize();
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool has_vars = t.exps != Exponents{};
    bool wrote = false;
    if (!has_vars || c != 1) {
      os << c.get_str();
      wrote = true;
    }
    for (int i = 0; i < kMaxVars; ++i) {
      if (!t.exps[i]) continue;
      if (wrote) os << "*";
      os << variable_name(i);
      if (t.exps[i] > 1) os << "^" << int(t.exps[i]);
      wrote = true;
    }
  }
  return os.str();
}

std::size_t Polynomial::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    for (auto e : t.exps) h = h * 131 + e;
    h ^= std::hash<std::string>()(t.coeff.get_str()) + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// gcd

namespace {

using UPoly = std::vector<Rational>;  // dense univariate, index = degree

UPoly to_upoly(const Polynomial& p, int var) {
  UPoly u(p.degree_in(var) + 1);
  for (const auto& t : p.terms()) u[t.exps[var]] = t.coeff;
  return u;
}

void trim(UPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

Polynomial upoly_gcd(const Polynomial& a, const Polynomial& b, int var) {
  UPoly x = to_upoly(a, var), y = to_upoly(b, var);
  trim(x);
  trim(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    // x mod y
    Rational inv = 1 / y.back();
    while (x.size() >= y.size() && !x.empty()) {
      Rational f = x.back() * inv;
      std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) x[i + shift] -= f * y[i];
      x.pop_back();
      trim(x);
    }
    std::swap(x, y);
  }
  Polynomial r;
  for (std::size_t d = 0; d < x.size(); ++d)
    if (x[d] != 0) {
      Exponents e{};
      e[var] = static_cast<std::uint8_t>(d);
      r += Polynomial::monomial(e, x[d]);
    }
  return r.monic();
}

Polynomial content_in(const Polynomial& p, int var);

Polynomial primitive_part_in(const Polynomial& p, int var) {
  Polynomial c = content_in(p, var);
  if (c.is_constant()) return p;
  return *p.divide_exact(c);
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, int var) {
  std::vector<Polynomial> r = a.coefficients_in(var);
  std::vector<Polynomial> d = b.coefficients_in(var);
  const Polynomial& lc = d.back();
  int db = static_cast<int>(d.size()) - 1;
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i].is_zero()) {
      r.pop_back();
      continue;
    }
    Polynomial c = r[i];
    for (auto& x : r) x *= lc;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * d[j];
    r.pop_back();
  }
  return Polynomial::from_coefficients(var, r);
}

int pick_main_variable(std::uint32_t mask, const Polynomial& a, const Polynomial& b) {
  int best = -1, best_deg = 1 << 30;
  for (int i = 0; i < kMaxVars; ++i) {
    if (!(mask & (1u << i))) continue;
    int d = std::max(a.degree_in(i), b.degree_in(i));
    if (d < best_deg) {
      best_deg = d;
      best = i;
    }
  }
  return best;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a == b) return a.monic();
  std::uint32_t ma = a.variable_mask(), mb = b.variable_mask();
  if ((ma & mb) == 0) return Polynomial(1);

  // a variable occurring in only one argument: reduce via content in that variable
  for (int i = 0; i < kMaxVars; ++i) {
    std::uint32_t bit = 1u << i;
    if ((ma & bit) && !(mb & bit)) {
      Polynomial g = b;
      for (const auto& c : a.coefficients_in(i)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) return Polynomial(1);
      }
      return g.monic();
    }
    if ((mb & bit) && !(ma & bit)) return gcd(b, a);
  }

  if (a.total_degree() >= b.total_degree()) {
    if (auto q = a.divide_exact(b)) return b.monic();
  } else {
    if (auto q = b.divide_exact(a)) return a.monic();
  }

  if (__builtin_popcount(ma) == 1) return upoly_gcd(a, b, __builtin_ctz(ma));

  int x = pick_main_variable(ma, a, b);
  Polynomial ca = content_in(a, x), cb = content_in(b, x);
  Polynomial gc = gcd(ca, cb);
  Polynomial r0 = ca.is_constant() ? a : *a.divide_exact(ca);
  Polynomial r1 = cb.is_constant() ? b : *b.divide_exact(cb);
  if (r0.degree_in(x) < r1.degree_in(x)) std::swap(r0, r1);
  Polynomial g;
  while (true) {
    Polynomial r = pseudo_remainder(r0, r1, x);
    if (r.is_zero()) {
      g = r1;
      break;
    }
    if (r.degree_in(x) == 0) {
      g = Polynomial(1);
      break;
    }
    r0 = std::move(r1);
    r1 = primitive_part_in(r, x);
    r1 *= Rational(1 / r1.content());
  }
  g = primitive_part_in(g, x);
  return (gc * g).monic();
}

namespace {

Polynomial content_in(const Polynomial& p, int var) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

}  // namespace

}  // namespace rootharm
