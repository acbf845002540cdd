#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "rootharm/polynomial.hpp"

namespace rootharm {

// Exact element of Q(parameters): reduced quotient num/den with den monic.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(int c) : num_(long(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Polynomial& num, const Polynomial& den);

  static Scalar variable(std::string_view name) { return Scalar(Polynomial::variable(name)); }
  static Scalar rational(long num, long den) { return Scalar(Rational(num, den)); }
  // Parses expressions such as "1/2", "k_s + 1", "(k^2-1)/(2*k)".
  static Scalar parse(std::string_view text);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1; }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rational rational_value() const;  // throws unless is_rational()
  double to_double() const;         // throws unless is_rational()
  double evaluate_double(const std::map<int, double>& values) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(int n) const;

  Scalar substitute(int var, const Scalar& value) const;
  Scalar substitute(const std::map<int, Rational>& values) const;
  // Negates the listed variables (formal conjugation of imaginary parameters).
  Scalar negate_variables(std::uint32_t mask) const;

  std::string to_string() const;

 private:
  void reduce();
  Polynomial num_;
  Polynomial den_;
};

inline std::string to_string(const Scalar& s) { return s.to_string(); }

}  // namespace rootharm
