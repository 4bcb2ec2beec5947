#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "repring/numeric.hpp"

namespace repring {

// Exact linear algebra over Z and Q. Lattices are row lattices throughout:
// the rows of a basis matrix span the lattice, and the row Hermite normal
// form is the canonical basis used for equality, rank and membership.

/// Row-style Hermite normal form: pivots positive, zero below each pivot,
/// entries above a pivot reduced into [0, pivot). Zero rows are dropped, so
/// the result has full row rank and is the canonical basis of the row lattice.
IntMat hermite_normal_form(IntMat a);

int rank_integer(const IntMat& a);

int rank_rational(RatMat a);

/// Basis of { x : x * m = 0 } as rows in Hermite normal form.
IntMat left_kernel(const IntMat& m);

/// Determinant by fraction-free (Bareiss) elimination.
Int determinant(IntMat a);

/// Solves x * b = v over Q for a single row vector v; empty when inconsistent.
std::optional<RatVec> solve_row(const RatMat& b, const RatVec& v);

/// Scales a rational matrix by the lcm of all denominators.
/// Returns the integer matrix and the scale.
std::pair<IntMat, Int> clear_denominators(const RatMat& a);

bool is_integral(const RatVec& v);
IntVec to_integer_vector(const RatVec& v);
RatVec to_rational_vector(const IntVec& v);
RatMat to_rational_matrix(const IntMat& m);

/// Repeated-solve helper for a fixed full-row-rank basis: factors the basis
/// once, then answers x * basis = v queries in O(rows * cols).
class RowSpaceSolver {
 public:
  explicit RowSpaceSolver(RatMat basis);

  /// Coordinates of v in the row space, empty if v is outside it.
  std::optional<RatVec> solve(const RatVec& v) const;

  const RatMat& basis() const { return basis_; }

 private:
  RatMat basis_;
  std::vector<int> pivot_cols_;
  RatMat pivot_inverse_;  // inverse of the pivot-column submatrix
};

}  // namespace repring
