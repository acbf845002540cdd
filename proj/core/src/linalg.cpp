#include "rootharm/linalg.hpp"

namespace rootharm {

void axpy(AffineForm& y, const Scalar& a, const AffineForm& x) {
  if (a.is_zero()) return;
  for (const auto& [i, v] : x) {
    auto [it, inserted] = y.try_emplace(i, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

AffineForm AffineSolver::reduce(const AffineForm& f) const {
  AffineForm r = f;
  for (const auto& [p, row] : pivots_) {
    auto it = r.find(p);
    if (it == r.end()) continue;
    Scalar c = it->second;
    axpy(r, -c, row);
  }
  return r;
}

bool AffineSolver::add(AffineForm eq) {
  for (auto it = eq.begin(); it != eq.end();) it = it->second.is_zero() ? eq.erase(it) : std::next(it);
  eq = reduce(eq);
  auto pivot = eq.upper_bound(-1);
  if (pivot == eq.end()) {
    if (!eq.empty()) consistent_ = false;
    return false;
  }
  int p = pivot->first;
  Scalar inv = pivot->second.inverse();
  for (auto& [i, v] : eq) v *= inv;
  for (auto& [q, row] : pivots_) {
    auto it = row.find(p);
    if (it == row.end()) continue;
    Scalar c = it->second;
    axpy(row, -c, eq);
  }
  pivots_.emplace(p, std::move(eq));
  return true;
}

std::optional<std::vector<Scalar>> AffineSolver::unique_solution() const {
  if (!consistent_ || kernel_dimension() != 0) return std::nullopt;
  std::vector<Scalar> x(unknowns_);
  for (const auto& [p, row] : pivots_) {
    auto it = row.find(-1);
    if (it != row.end()) x[p] = -it->second;
  }
  return x;
}

int rank_of(const std::vector<AffineForm>& rows) {
  int n = 0;
  for (const auto& r : rows)
    if (!r.empty()) n = std::max(n, r.rbegin()->first + 1);
  AffineSolver s(n);
  for (const auto& r : rows) s.add(r);
  return s.rank();
}

}  // namespace rootharm
