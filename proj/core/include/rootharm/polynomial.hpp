#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rootharm {

using Rational = mpq_class;

constexpr int kMaxVars = 16;

// Interned parameter variables. Indices are stable for the process lifetime;
// common names are pre-registered so canonical forms do not depend on call order.
int variable_index(std::string_view name);
const std::string& variable_name(int index);
int variable_count();

using Exponents = std::array<std::uint8_t, kMaxVars>;

// Sparse multivariate polynomial over Q in the interned variables.
// Terms are kept sorted by descending lex order (variable 0 most significant).
class Polynomial {
 public:
  struct Term {
    Exponents exps;
    Rational coeff;
  };

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)

  static Polynomial variable(int index, unsigned power = 1);
  static Polynomial variable(std::string_view name, unsigned power = 1);
  static Polynomial monomial(const Exponents& e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // valid when is_constant()
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int degree_in(int var) const;
  int total_degree() const;
  std::uint32_t variable_mask() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  // Total order used for canonical containers; not a ring ordering.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned n) const;

  // Exact quotient if `d` divides *this, otherwise nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;

  // Scales so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;
  // Rational content c with *this / c having coprime integer coefficients and positive lead.
  Rational content() const;

  Polynomial substitute(int var, const Polynomial& value) const;
  Polynomial substitute(const std::map<int, Rational>& values) const;
  std::optional<Rational> evaluate(const std::map<int, Rational>& values) const;
  double evaluate_double(const std::map<int, double>& values) const;

  // Coefficients in powers of `var`: result[d] is the coefficient of var^d.
  std::vector<Polynomial> coefficients_in(int var) const;
  static Polynomial from_coefficients(int var, const std::vector<Polynomial>& coeffs);

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void normalize();  // sort + merge + drop zeros
  std::vector<Term> terms_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace rootharm
