#include "repring/linalg.hpp"

#include <algorithm>

#include "repring/errors.hpp"

namespace repring {

namespace {

// Smallest |value| nonzero entry in column c among rows [from, m).
// Returns -1 when the column is zero there.
int min_abs_row(const IntMat& a, int c, int from) {
  int best = -1;
  for (int i = from; i < a.rows(); ++i) {
    if (a(i, c) == 0) continue;
    if (best < 0 || mpz_cmpabs(a(i, c).get_mpz_t(), a(best, c).get_mpz_t()) < 0) best = i;
  }
  return best;
}

// Shared elimination loop for HNF and left kernel: reduces columns
// [0, ncols) of `a` to row echelon with positive pivots and entries above
// each pivot in [0, pivot). Row operations act on the full width, so
// augmented columns ride along. Returns the number of pivot rows.
int row_reduce(IntMat& a, int ncols) {
  const int m = static_cast<int>(a.rows());
  int r = 0;
  for (int c = 0; c < ncols && r < m; ++c) {
    // Euclid on the column until a single nonzero entry remains at row r.
    while (true) {
      int p = min_abs_row(a, c, r);
      if (p < 0) break;
      if (p != r) a.row(p).swap(a.row(r));
      if (a(r, c) < 0) a.row(r) = -a.row(r);
      bool cleared = true;
      for (int i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        Int q = floor_div(a(i, c), a(r, c));
        if (q != 0) a.row(i) -= q * a.row(r).eval();
        if (a(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (a(r, c) == 0) continue;
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(a(i, c), a(r, c));
      if (q != 0) a.row(i) -= q * a.row(r).eval();
    }
    ++r;
  }
  return r;
}

}  // namespace

IntMat hermite_normal_form(IntMat a) {
  if (a.rows() == 0 || a.cols() == 0) return IntMat(0, a.cols());
  int r = row_reduce(a, static_cast<int>(a.cols()));
  return a.topRows(r);
}

int rank_integer(const IntMat& a) {
  return static_cast<int>(hermite_normal_form(a).rows());
}

int rank_rational(RatMat a) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    for (int i = r + 1; i < m; ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(r, c);
      a.row(i) -= f * a.row(r).eval();
    }
    ++r;
  }
  return r;
}

IntMat left_kernel(const IntMat& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  IntMat aug(rows, cols + rows);
  aug.leftCols(cols) = m;
  aug.rightCols(rows).setZero();
  for (int i = 0; i < rows; ++i) aug(i, cols + i) = 1;
  int r = row_reduce(aug, cols);
  IntMat kernel = aug.bottomRows(rows - r).rightCols(rows);
  return hermite_normal_form(std::move(kernel));
}

Int determinant(IntMat a) {
  const int n = static_cast<int>(a.rows());
  if (n != a.cols()) throw error("determinant of a non-square matrix");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.row(p).swap(a.row(k));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

std::optional<RatVec> solve_row(const RatMat& b, const RatVec& v) {
  // Solve b^T x = v as columns; Gaussian elimination on the augmented system.
  const int n = static_cast<int>(b.rows());
  const int m = static_cast<int>(b.cols());
  if (v.size() != m) throw error("solve_row: dimension mismatch");
  RatMat aug(m, n + 1);
  aug.leftCols(n) = b.transpose();
  aug.col(n) = v;
  std::vector<int> pivot_of_col(n, -1);
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (aug(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) aug.row(p).swap(aug.row(r));
    Rat piv = aug(r, c);
    aug.row(r) /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == r || aug(i, c) == 0) continue;
      aug.row(i) -= aug(i, c) * aug.row(r).eval();
    }
    pivot_of_col[c] = r;
    ++r;
  }
  // Inconsistent when a zero row has nonzero right-hand side.
  for (int i = r; i < m; ++i)
    if (aug(i, n) != 0) return std::nullopt;
  RatVec x = RatVec::Zero(n);
  for (int c = 0; c < n; ++c)
    if (pivot_of_col[c] >= 0) x(c) = aug(pivot_of_col[c], n);
  return x;
}

std::pair<IntMat, Int> clear_denominators(const RatMat& a) {
  Int scale = 1;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) scale = lcm(scale, denominator(a(i, j)));
  IntMat out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      Rat scaled = a(i, j) * Rat(scale);
      out(i, j) = numerator(scaled);
    }
  return {std::move(out), scale};
}

bool is_integral(const RatVec& v) {
  for (int i = 0; i < v.size(); ++i)
    if (!is_integer(v(i))) return false;
  return true;
}

IntVec to_integer_vector(const RatVec& v) {
  IntVec out(v.size());
  for (int i = 0; i < v.size(); ++i) {
    if (!is_integer(v(i))) throw error("vector is not integral");
    out(i) = numerator(v(i));
  }
  return out;
}

RatVec to_rational_vector(const IntVec& v) {
  RatVec out(v.size());
  for (int i = 0; i < v.size(); ++i) out(i) = Rat(v(i));
  return out;
}

RatMat to_rational_matrix(const IntMat& m) {
  RatMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

RowSpaceSolver::RowSpaceSolver(RatMat basis) : basis_(std::move(basis)) {
  const int n = static_cast<int>(basis_.rows());
  const int m = static_cast<int>(basis_.cols());
  // Find n independent pivot columns by elimination on a working copy.
  RatMat work = basis_;
  pivot_cols_.reserve(n);
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (work(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) work.row(p).swap(work.row(r));
    for (int i = r + 1; i < n; ++i) {
      if (work(i, c) == 0) continue;
      Rat f = work(i, c) / work(r, c);
      work.row(i) -= f * work.row(r).eval();
    }
    pivot_cols_.push_back(c);
    ++r;
  }
  if (r != n) throw error("RowSpaceSolver: basis rows are dependent");
  // Invert the pivot submatrix by Gauss-Jordan.
  RatMat sq(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      sq(i, j) = basis_(i, pivot_cols_[j]);
      sq(i, n + j) = (i == j) ? Rat(1) : Rat(0);
    }
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (sq(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) throw error("RowSpaceSolver: pivot submatrix is singular");
    if (p != c) sq.row(p).swap(sq.row(c));
    sq.row(c) /= Rat(sq(c, c));
    for (int i = 0; i < n; ++i) {
      if (i == c || sq(i, c) == 0) continue;
      sq.row(i) -= sq(i, c) * sq.row(c).eval();
    }
  }
  pivot_inverse_ = sq.rightCols(n);
}

std::optional<RatVec> RowSpaceSolver::solve(const RatVec& v) const {
  const int n = static_cast<int>(basis_.rows());
  if (v.size() != basis_.cols()) throw error("RowSpaceSolver: dimension mismatch");
  RatVec vp(n);
  for (int j = 0; j < n; ++j) vp(j) = v(pivot_cols_[j]);
  // x * basis restricted to pivot columns equals vp.
  RatVec x = pivot_inverse_.transpose() * vp;
  RatVec reconstructed = basis_.transpose() * x;
  for (int j = 0; j < v.size(); ++j)
    if (reconstructed(j) != v(j)) return std::nullopt;
  return x;
}

}  // namespace repring
