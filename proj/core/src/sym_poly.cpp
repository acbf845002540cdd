#include "rootharm/sym_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace rootharm {

void SymPoly::add(const Exps& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPoly SymPoly::constant(const Scalar& c) {
  SymPoly p;
  p.add(Exps{}, c);
  return p;
}

SymPoly SymPoly::variable(int j) {
  SymPoly p;
  Exps e{};
  e[j] = 1;
  p.add(e, Scalar(1));
  return p;
}

SymPoly SymPoly::linear(const CoVector& xi) {
  SymPoly p;
  for (std::size_t j = 0; j < xi.size(); ++j) {
    Exps e{};
    e[j] = 1;
    p.add(e, xi[j]);
  }
  return p;
}

int SymPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

SymPoly SymPoly::operator-() const {
  SymPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly r;
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) {
      SymPoly::Exps e;
      for (int i = 0; i < kMaxRank; ++i) e[i] = static_cast<std::uint8_t>(e1[i] + e2[i]);
      r.add(e, c1 * c2);
    }
  return r;
}

SymPoly operator*(const Scalar& c, const SymPoly& a) {
  SymPoly r;
  for (const auto& [e, v] : a.terms_) r.add(e, c * v);
  return r;
}

SymPoly SymPoly::pow(int n) const {
  SymPoly r = constant(1);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

SymPoly SymPoly::linear_substitute(const IntMatrix& m, int rank) const {
  // y_j -> sum_i m[i][j] y_i
  std::vector<SymPoly> images(rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i)
      if (m[i][j]) images[j] += Scalar(long(m[i][j])) * variable(i);
  SymPoly r;
  for (const auto& [e, c] : terms_) {
    SymPoly t = constant(c);
    for (int j = 0; j < rank; ++j)
      for (int p = 0; p < e[j]; ++p) t = t * images[j];
    r += t;
  }
  return r;
}

SymPoly SymPoly::act(const WeylGroup& W, int w) const {
  if (w == W.identity()) return *this;
  return linear_substitute(W.element(w).coact, W.rank());
}

SymPoly SymPoly::divide_by_variable(int i) const {
  SymPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) throw std::domain_error("polynomial not divisible by a simple coroot");
    Exps f = e;
    --f[i];
    r.add(f, c);
  }
  return r;
}

Scalar SymPoly::evaluate(const Spectral& lambda) const {
  Scalar s;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t j = 0; j < lambda.size(); ++j)
      for (int p = 0; p < e[j]; ++p) t *= lambda[j];
    s += t;
  }
  return s;
}

SymPoly SymPoly::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  SymPoly r;
  for (const auto& [e, c] : terms_) r.add(e, f(c));
  return r;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (int j = 0; j < kMaxRank; ++j) {
      if (!e[j]) continue;
      if (!mono.empty()) mono += "*";
      mono += "y" + std::to_string(j + 1);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty())
      os << c.to_string();
    else if (c.is_one())
      os << mono;
    else
      os << "(" << c.to_string() << ")*" << mono;
  }
  return os.str();
}

SymPoly squared_norm_polynomial(const RootDatum& rd) {
  SymPoly p;
  for (int i = 0; i < rd.rank(); ++i)
    for (int j = 0; j < rd.rank(); ++j)
      if (rd.gram(i, j) != 0) p += Scalar(rd.gram(i, j)) * (SymPoly::variable(i) * SymPoly::variable(j));
  return p;
}

namespace {

void monomials(int rank, int degree, int var, SymPoly::Exps& cur, std::vector<SymPoly::Exps>& out) {
  if (var == rank - 1) {
    cur[var] = static_cast<std::uint8_t>(degree);
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (int d = degree; d >= 0; --d) {
    cur[var] = static_cast<std::uint8_t>(d);
    monomials(rank, degree - d, var + 1, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<SymPoly> invariant_basis(const RootDatum& rd, int degree) {
  const WeylGroup& W = rd.weyl();
  std::vector<SymPoly::Exps> monos;
  SymPoly::Exps cur{};
  monomials(rd.rank(), degree, 0, cur, monos);
  // Reynolds images, then row-reduce over Q to a basis.
  std::vector<std::vector<Rational>> rows;
  std::vector<SymPoly> basis;
  for (const auto& m : monos) {
    SymPoly p;
    SymPoly mono;
    mono += SymPoly::constant(1);
    {
      SymPoly t = SymPoly::constant(1);
      for (int j = 0; j < rd.rank(); ++j) t = t * SymPoly::variable(j).pow(m[j]);
      mono = t;
    }
    for (int w = 0; w < W.size(); ++w) p += mono.act(W, w);
    if (p.is_zero()) continue;
    std::vector<Rational> row;
    for (const auto& mm : monos) {
      auto it = p.terms().find(mm);
      row.push_back(it == p.terms().end() ? Rational(0) : it->second.rational_value());
    }
    // reduce against existing rows
    for (const auto& r : rows) {
      std::size_t piv = 0;
      while (r[piv] == 0) ++piv;
      if (row[piv] != 0) {
        Rational f = row[piv] / r[piv];
        for (std::size_t i = 0; i < row.size(); ++i) row[i] -= f * r[i];
      }
    }
    bool nonzero = false;
    for (const auto& x : row) nonzero = nonzero || x != 0;
    if (!nonzero) continue;
    // keep rows in echelon form by eliminating the new pivot from older rows
    std::size_t piv = 0;
    while (row[piv] == 0) ++piv;
    for (auto& r : rows)
      if (r[piv] != 0) {
        Rational f = r[piv] / row[piv];
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= f * row[i];
      }
    rows.push_back(row);
    basis.push_back(Scalar(Rational(1, W.size())) * p);
  }
  return basis;
}

std::vector<SymPoly> invariants_up_to(const RootDatum& rd, int max_degree) {
  std::vector<SymPoly> out;
  for (int d = 1; d <= max_degree; ++d)
    for (auto& p : invariant_basis(rd, d)) out.push_back(std::move(p));
  return out;
}

}  // namespace rootharm
