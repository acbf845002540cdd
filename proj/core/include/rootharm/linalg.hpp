#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rootharm/scalar.hpp"

namespace rootharm {

// Sparse linear form sum_i a_i x_i + c; the constant c is stored under key -1.
using AffineForm = std::map<int, Scalar>;

void axpy(AffineForm& y, const Scalar& a, const AffineForm& x);  // y += a x

// Incremental Gauss-Jordan elimination of affine equations form = 0 over Q(parameters).
class AffineSolver {
 public:
  explicit AffineSolver(int unknowns = 0) : unknowns_(unknowns) {}
  int add_unknown() { return unknowns_++; }
  int unknowns() const { return unknowns_; }

  // Returns true if the equation was independent of those seen so far.
  bool add(AffineForm eq);
  bool consistent() const { return consistent_; }
  int rank() const { return static_cast<int>(pivots_.size()); }
  int kernel_dimension() const { return unknowns_ - rank(); }
  // Value of every unknown when the solution is unique.
  std::optional<std::vector<Scalar>> unique_solution() const;
  // Substitutes the pivot solutions into a form (free unknowns stay symbolic).
  AffineForm reduce(const AffineForm& f) const;

 private:
  int unknowns_;
  bool consistent_ = true;
  std::map<int, AffineForm> pivots_;  // pivot unknown -> row with unit coefficient there
};

// Rank of a family of sparse vectors.
int rank_of(const std::vector<AffineForm>& rows);

}  // namespace rootharm
