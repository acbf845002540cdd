#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <string>
#include <vector>

#include "rootharm/laurent.hpp"

namespace rootharm {

// Formal differential-reflection expression acting on Laurent polynomials.
class OperatorExpression {
 public:
  enum class Kind {
    Scalar,             // multiplication by a constant
    Multiply,           // multiplication by a Laurent polynomial
    DivideBinomial,     // exact division by (1 - sign t^{-beta})
    DivideDelta,        // exact division by the Weyl denominator
    Derivative,         // t^mu -> mu(xi) t^mu
    Reflection,         // Weyl group element
    DividedDifference,  // (1 - t^{-alpha})^{-1} (1 - s_alpha)
    Sum,
    Compose,  // children applied right to left
  };

  OperatorExpression();  // identity
  static OperatorExpression identity() { return {}; }
  static OperatorExpression scalar(const Scalar& c);
  static OperatorExpression multiply(const LaurentPolynomial& f);
  static OperatorExpression divide_binomial(const Weight& beta, int sign = 1);
  static OperatorExpression divide_delta(const RootDatum& rd);
  static OperatorExpression derivative(const RootDatum& rd, const CoVector& xi);
  static OperatorExpression reflection(const RootDatum& rd, int w);
  static OperatorExpression divided_difference(const RootDatum& rd, int root);

  Kind kind() const;
  LaurentPolynomial apply(const LaurentPolynomial& f) const;
  std::string to_string() const;

  friend OperatorExpression operator+(const OperatorExpression& a, const OperatorExpression& b);
  friend OperatorExpression operator-(const OperatorExpression& a, const OperatorExpression& b);
  // Composition: (a * b)(f) = a(b(f)).
  friend OperatorExpression operator*(const OperatorExpression& a, const OperatorExpression& b);
  friend OperatorExpression operator*(const Scalar& c, const OperatorExpression& a);

  struct Node;

 private:
  explicit OperatorExpression(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Exact sparse matrix: column j is the image of t^{domain[j]}.
class LinearOperator {
 public:
  LinearOperator() = default;
  LinearOperator(std::vector<Weight> domain, std::vector<LaurentPolynomial> columns);
  static LinearOperator identity(const std::vector<Weight>& domain);
  // Columns apply(op, t^nu); throws if an image leaves `target` (when given).
  static LinearOperator from_expression(const OperatorExpression& op, const std::vector<Weight>& domain,
                                        const std::vector<Weight>* target = nullptr,
                                        const RootDatum* rd = nullptr);

  const std::vector<Weight>& domain() const { return domain_; }
  const std::vector<LaurentPolynomial>& columns() const { return columns_; }
  const LaurentPolynomial& column(const Weight& nu) const;
  bool has_column(const Weight& nu) const { return index_.count(nu) > 0; }
  Scalar entry(const Weight& row, const Weight& col) const { return column(col).coefficient(row); }
  LaurentPolynomial apply(const LaurentPolynomial& f) const;

  LinearOperator operator+(const LinearOperator& o) const;
  LinearOperator operator-(const LinearOperator& o) const;
  LinearOperator operator*(const Scalar& c) const;
  // (this ∘ o): columns this(o(t^nu)) over o's domain.
  LinearOperator compose(const LinearOperator& o) const;
  LinearOperator restricted(const std::vector<Weight>& domain) const;
  LinearOperator map_entries(const std::function<Scalar(const Scalar&)>& f) const;
  bool is_zero() const;

  struct Difference {
    Weight column, row;
    Scalar lhs, rhs;
  };
  // First column/row where the two operators differ on their common domain.
  std::optional<Difference> first_difference(const LinearOperator& o) const;

 private:
  std::vector<Weight> domain_;
  std::vector<LaurentPolynomial> columns_;
  std::unordered_map<Weight, int, WeightHash> index_;
};

}  // namespace rootharm
