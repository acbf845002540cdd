#include "rootharm/scalar.hpp"

#include <stdexcept>

namespace rootharm {

Scalar::Scalar(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("scalar with zero denominator");
  reduce();
}

void Scalar::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  Rational lc = den_.leading().coeff;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational Scalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("scalar is not a rational number: " + to_string());
  return num_.constant_value() / den_.constant_value();
}

double Scalar::to_double() const { return rational_value().get_d(); }

double Scalar::evaluate_double(const std::map<int, double>& values) const {
  return num_.evaluate_double(values) / den_.evaluate_double(values);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_.is_constant() && o.den_.is_constant()) {
    // both denominators are 1 in canonical form
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  if (o.den_.is_constant()) {
    num_ += o.num_ * den_;
    return *this;
  }
  if (den_.is_constant()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  Polynomial g = gcd(den_, o.den_);
  if (g.is_constant()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    // gcd(num, den) = 1 already
    return *this;
  }
  Polynomial b1 = *den_.divide_exact(g), d1 = *o.den_.divide_exact(g);
  num_ = num_ * d1 + o.num_ * b1;
  den_ = b1 * o.den_;
  Polynomial g2 = gcd(num_, g);
  if (!g2.is_constant()) {
    num_ = *num_.divide_exact(g2);
    den_ = *den_.divide_exact(g2);
  }
  Rational lc = den_.leading().coeff;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) return *this = Scalar();
  if (o.is_rational()) {
    num_ *= o.rational_value();
    return *this;
  }
  if (is_rational()) {
    Rational c = rational_value();
    *this = o;
    num_ *= c;
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  Polynomial a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant()) {
    Polynomial g = gcd(a, d);
    if (!g.is_constant()) {
      a = *a.divide_exact(g);
      d = *d.divide_exact(g);
    }
  }
  if (!b.is_constant()) {
    Polynomial g = gcd(c, b);
    if (!g.is_constant()) {
      c = *c.divide_exact(g);
      b = *b.divide_exact(g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  Rational lc = den_.leading().coeff;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (num_.is_zero()) throw std::domain_error("division by zero scalar");
  Scalar r;
  r.num_ = den_;
  r.den_ = num_;
  Rational lc = r.den_.leading().coeff;
  if (lc != 1) {
    Rational inv = 1 / lc;
    r.num_ *= inv;
    r.den_ *= inv;
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar r;
  r.num_ = num_.pow(static_cast<unsigned>(n));
  r.den_ = den_.pow(static_cast<unsigned>(n));
  return r;
}

Scalar Scalar::substitute(int var, const Scalar& value) const {
  // Horner in var over the numerator and denominator separately
  auto horner = [&](const Polynomial& p) {
    std::vector<Polynomial> cs = p.coefficients_in(var);
    Scalar acc;
    for (std::size_t d = cs.size(); d-- > 0;) {
      acc *= value;
      acc += Scalar(cs[d]);
    }
    return acc;
  };
  if (!((num_.variable_mask() | den_.variable_mask()) & (1u << var))) return *this;
  return horner(num_) / horner(den_);
}

Scalar Scalar::substitute(const std::map<int, Rational>& values) const {
  Polynomial n = num_.substitute(values), d = den_.substitute(values);
  if (d.is_zero()) throw std::domain_error("specialization hits a pole: " + to_string());
  return Scalar(n, d);
}

Scalar Scalar::negate_variables(std::uint32_t mask) const {
  if (!((num_.variable_mask() | den_.variable_mask()) & mask)) return *this;
  Scalar r = *this;
  for (int i = 0; i < kMaxVars; ++i)
    if (mask & (1u << i)) r = r.substitute(i, Scalar(-Polynomial::variable(i)));
  return r;
}

std::string Scalar::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = num_.to_string(), d = den_.to_string();
  bool simple_num = num_.terms().size() == 1;
  return (simple_num ? n : "(" + n + ")") + "/(" + d + ")";
}

}  // namespace rootharm
