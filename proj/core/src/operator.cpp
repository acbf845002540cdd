#include "rootharm/operator.hpp"

#include <sstream>

namespace rootharm {

struct OperatorExpression::Node {
  Kind kind = Kind::Scalar;
  Scalar c{1};
  LaurentPolynomial f;
  Weight beta;
  int sign = 1;
  RootDatum rd;
  CoVector xi;
  int index = 0;  // Weyl element or root
  std::vector<std::shared_ptr<const Node>> children;
};

namespace {

using Node = OperatorExpression::Node;
using Kind = OperatorExpression::Kind;

LaurentPolynomial apply_node(const Node& n, const LaurentPolynomial& f) {
  switch (n.kind) {
    case Kind::Scalar:
      return f * n.c;
    case Kind::Multiply:
      return n.f * f;
    case Kind::DivideBinomial:
      return f.divide_binomial(n.beta, n.sign);
    case Kind::DivideDelta:
      return divide_by_weyl_denominator(n.rd, f);
    case Kind::Derivative: {
      LaurentPolynomial r;
      for (const auto& [mu, c] : f.terms()) r.add_term(mu, c * n.rd.pair(mu, n.xi));
      return r;
    }
    case Kind::Reflection:
      return f.act(n.rd.weyl(), n.index);
    case Kind::DividedDifference: {
      const Weight& alpha = n.rd.roots()[n.index].weight;
      LaurentPolynomial r;
      for (const auto& [mu, c] : f.terms()) {
        int m = n.rd.pair(mu, n.index);
        // (t^mu - t^{mu - m alpha}) / (1 - t^{-alpha}) as a geometric sum
        if (m > 0)
          for (int j = 0; j < m; ++j) r.add_term(mu - alpha * j, c);
        else
          for (int j = 1; j <= -m; ++j) r.add_term(mu + alpha * j, -c);
      }
      return r;
    }
    case Kind::Sum: {
      LaurentPolynomial r;
      for (const auto& ch : n.children) r += apply_node(*ch, f);
      return r;
    }
    case Kind::Compose: {
      LaurentPolynomial r = f;
      for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) r = apply_node(**it, r);
      return r;
    }
  }
  return f;
}

std::string node_string(const Node& n) {
  std::ostringstream os;
  switch (n.kind) {
    case Kind::Scalar:
      os << (n.c.is_one() ? "1" : "(" + n.c.to_string() + ")");
      break;
    case Kind::Multiply:
      os << "mul[" << n.f.size() << " terms]";
      break;
    case Kind::DivideBinomial:
      os << "div(1" << (n.sign > 0 ? "-" : "+") << "t^-beta)";
      break;
    case Kind::DivideDelta:
      os << "div(Delta)";
      break;
    case Kind::Derivative: {
      os << "d(";
      for (std::size_t i = 0; i < n.xi.size(); ++i) os << (i ? "," : "") << n.xi[i].to_string();
      os << ")";
      break;
    }
    case Kind::Reflection:
      os << n.rd.weyl().word_string(n.index);
      break;
    case Kind::DividedDifference:
      os << "dd(" << n.rd.weight_string(n.rd.roots()[n.index].weight) << ")";
      break;
    case Kind::Sum:
    case Kind::Compose: {
      os << "(";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) os << (n.kind == Kind::Sum ? " + " : " o ");
        os << node_string(*n.children[i]);
      }
      os << ")";
      break;
    }
  }
  return os.str();
}

std::shared_ptr<Node> make(Kind k) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  return n;
}

}  // namespace

OperatorExpression::OperatorExpression() : node_(make(Kind::Scalar)) {}

OperatorExpression OperatorExpression::scalar(const Scalar& c) {
  auto n = make(Kind::Scalar);
  n->c = c;
  return OperatorExpression(n);
}

OperatorExpression OperatorExpression::multiply(const LaurentPolynomial& f) {
  auto n = make(Kind::Multiply);
  n->f = f;
  return OperatorExpression(n);
}

OperatorExpression OperatorExpression::divide_binomial(const Weight& beta, int sign) {
  auto n = make(Kind::DivideBinomial);
  n->beta = beta;
  n->sign = sign;
  return OperatorExpression(n);
}

OperatorExpression OperatorExpression::divide_delta(const RootDatum& rd) {
  auto n = make(Kind::DivideDelta);
  n->rd = rd;
  return OperatorExpression(n);
}

OperatorExpression OperatorExpression::derivative(const RootDatum& rd, const CoVector& xi) {
  auto n = make(Kind::Derivative);
  n->rd = rd;
  n->xi = xi;
  return OperatorExpression(n);
}

OperatorExpression OperatorExpression::reflection(const RootDatum& rd, int w) {
  auto n = make(Kind::Reflection);
  n->rd = rd;
  n->index = w;
  return OperatorExpression(n);
}

OperatorExpression OperatorExpression::divided_difference(const RootDatum& rd, int root) {
  auto n = make(Kind::DividedDifference);
  n->rd = rd;
  n->index = root;
  return OperatorExpression(n);
}

OperatorExpression::Kind OperatorExpression::kind() const { return node_->kind; }

LaurentPolynomial OperatorExpression::apply(const LaurentPolynomial& f) const {
  return apply_node(*node_, f);
}

std::string OperatorExpression::to_string() const { return node_string(*node_); }

OperatorExpression operator+(const OperatorExpression& a, const OperatorExpression& b) {
  auto n = make(Kind::Sum);
  for (const auto* x : {&a, &b}) {
    if (x->node_->kind == Kind::Sum)
      n->children.insert(n->children.end(), x->node_->children.begin(), x->node_->children.end());
    else
      n->children.push_back(x->node_);
  }
  return OperatorExpression(n);
}

OperatorExpression operator-(const OperatorExpression& a, const OperatorExpression& b) {
  return a + Scalar(-1) * b;
}

OperatorExpression operator*(const OperatorExpression& a, const OperatorExpression& b) {
  auto n = make(Kind::Compose);
  for (const auto* x : {&a, &b}) {
    if (x->node_->kind == Kind::Compose)
      n->children.insert(n->children.end(), x->node_->children.begin(), x->node_->children.end());
    else
      n->children.push_back(x->node_);
  }
  return OperatorExpression(n);
}

OperatorExpression operator*(const Scalar& c, const OperatorExpression& a) {
  return OperatorExpression::scalar(c) * a;
}

// ---------------------------------------------------------------------------

LinearOperator::LinearOperator(std::vector<Weight> domain, std::vector<LaurentPolynomial> columns)
    : domain_(std::move(domain)), columns_(std::move(columns)) {
  if (domain_.size() != columns_.size()) throw std::invalid_argument("column count mismatch");
  for (int i = 0; i < static_cast<int>(domain_.size()); ++i) index_.emplace(domain_[i], i);
}

LinearOperator LinearOperator::identity(const std::vector<Weight>& domain) {
  std::vector<LaurentPolynomial> cols;
  for (const auto& nu : domain) cols.push_back(LaurentPolynomial::monomial(nu));
  return {domain, cols};
}

LinearOperator LinearOperator::from_expression(const OperatorExpression& op,
                                               const std::vector<Weight>& domain,
                                               const std::vector<Weight>* target,
                                               const RootDatum* rd) {
  std::unordered_map<Weight, int, WeightHash> allowed;
  if (target)
    for (const auto& nu : *target) allowed.emplace(nu, 0);
  std::vector<LaurentPolynomial> cols;
  cols.reserve(domain.size());
  for (const auto& nu : domain) {
    LaurentPolynomial img = op.apply(LaurentPolynomial::monomial(nu));
    if (target)
      for (const auto& [mu, c] : img.terms())
        if (!allowed.count(mu))
          throw std::out_of_range("image of t^" + (rd ? rd->weight_string(nu) : std::string("?")) +
                                  " leaves the target truncation at t^" +
                                  (rd ? rd->weight_string(mu) : std::string("?")));
    cols.push_back(std::move(img));
  }
  return {domain, cols};
}

const LaurentPolynomial& LinearOperator::column(const Weight& nu) const {
  auto it = index_.find(nu);
  if (it == index_.end()) throw std::out_of_range("weight outside operator domain");
  return columns_[it->second];
}

LaurentPolynomial LinearOperator::apply(const LaurentPolynomial& f) const {
  LaurentPolynomial r;
  for (const auto& [nu, c] : f.terms()) {
    auto it = index_.find(nu);
    if (it == index_.end()) throw std::out_of_range("argument leaves operator domain");
    r += columns_[it->second] * c;
  }
  return r;
}

LinearOperator LinearOperator::operator+(const LinearOperator& o) const {
  std::vector<LaurentPolynomial> cols;
  for (const auto& nu : domain_) cols.push_back(column(nu) + o.column(nu));
  return {domain_, cols};
}

LinearOperator LinearOperator::operator-(const LinearOperator& o) const {
  std::vector<LaurentPolynomial> cols;
  for (const auto& nu : domain_) cols.push_back(column(nu) - o.column(nu));
  return {domain_, cols};
}

LinearOperator LinearOperator::operator*(const Scalar& c) const {
  std::vector<LaurentPolynomial> cols;
  for (const auto& col : columns_) cols.push_back(col * c);
  return {domain_, cols};
}

LinearOperator LinearOperator::compose(const LinearOperator& o) const {
  std::vector<LaurentPolynomial> cols;
  cols.reserve(o.columns_.size());
  for (const auto& col : o.columns_) cols.push_back(apply(col));
  return {o.domain_, cols};
}

LinearOperator LinearOperator::restricted(const std::vector<Weight>& domain) const {
  std::vector<LaurentPolynomial> cols;
  for (const auto& nu : domain) cols.push_back(column(nu));
  return {domain, cols};
}

LinearOperator LinearOperator::map_entries(const std::function<Scalar(const Scalar&)>& f) const {
  std::vector<LaurentPolynomial> cols;
  for (const auto& col : columns_) cols.push_back(col.map_coefficients(f));
  return {domain_, cols};
}

bool LinearOperator::is_zero() const {
  for (const auto& c : columns_)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<LinearOperator::Difference> LinearOperator::first_difference(
    const LinearOperator& o) const {
  for (std::size_t j = 0; j < domain_.size(); ++j) {
    if (!o.has_column(domain_[j])) continue;
    const LaurentPolynomial& a = columns_[j];
    const LaurentPolynomial& b = o.column(domain_[j]);
    if (a == b) continue;
    LaurentPolynomial d = a - b;
    const Weight& row = d.terms().begin()->first;
    return Difference{domain_[j], row, a.coefficient(row), b.coefficient(row)};
  }
  return std::nullopt;
}

}  // namespace rootharm
