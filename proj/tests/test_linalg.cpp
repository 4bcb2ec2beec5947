#include <doctest.h>

#include <random>

#include "repring/linalg.hpp"

using namespace repring;

namespace {

IntMat make_int(std::initializer_list<std::initializer_list<long>> rows) {
  IntMat m(rows.size(), rows.begin()->size());
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Brute-force determinant by cofactor expansion; the independent oracle for
// the Bareiss implementation.
Int det_oracle(const IntMat& a) {
  const int n = static_cast<int>(a.rows());
  if (n == 1) return a(0, 0);
  Int acc = 0;
  for (int j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMat minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    Int term = a(0, j) * det_oracle(minor);
    acc += (j % 2 == 0) ? term : Int(-term);
  }
  return acc;
}

bool in_row_lattice(const IntMat& basis, const IntVec& v) {
  auto x = solve_row(to_rational_matrix(basis), to_rational_vector(v));
  return x && is_integral(*x);
}

bool is_zero_mat(const IntMat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("hermite normal form: canonical shape and lattice equality") {
  IntMat a = make_int({{2, 4, 4}, {-6, 6, 12}, {-4, 10, 16}});
  IntMat h = hermite_normal_form(a);
  REQUIRE(h.rows() == 2);
  CHECK(h(0, 0) > 0);
  CHECK(h(1, 1) > 0);
  // Same row lattice in both directions.
  for (int i = 0; i < a.rows(); ++i) CHECK(in_row_lattice(h, a.row(i).transpose()));
  for (int i = 0; i < h.rows(); ++i) CHECK(in_row_lattice(a, h.row(i).transpose()));
  // Idempotent.
  CHECK(hermite_normal_form(h) == h);
}

TEST_CASE("hermite normal form: random lattices keep their span") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 30; ++trial) {
    IntMat a(4, 5);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j) a(i, j) = d(rng);
    IntMat h = hermite_normal_form(a);
    CHECK(rank_integer(a) == h.rows());
    for (int i = 0; i < a.rows(); ++i) CHECK(in_row_lattice(h, a.row(i).transpose()));
    CHECK(hermite_normal_form(h) == h);
  }
}

TEST_CASE("left kernel: the one-column restriction-difference example") {
  // Kernel of x1 + x2 - x3 - x4 = 0 has rank 3.
  IntMat m = make_int({{1}, {1}, {-1}, {-1}});
  IntMat k = left_kernel(m);
  REQUIRE(k.rows() == 3);
  CHECK(is_zero_mat(k * m));
}

TEST_CASE("left kernel: random matrices, completeness and correctness") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    IntMat m(5, 3);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = d(rng);
    IntMat k = left_kernel(m);
    CHECK(is_zero_mat(k * m));
    CHECK(k.rows() + rank_integer(m) == 5);
    CHECK(hermite_normal_form(k) == k);
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  CHECK(determinant(make_int({{3}})) == 3);
  CHECK(determinant(make_int({{2, 0}, {0, 5}})) == 10);
  CHECK(determinant(make_int({{1, 2}, {2, 4}})) == 0);
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 4;
    IntMat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = d(rng);
    CHECK(determinant(a) == det_oracle(a));
  }
}

TEST_CASE("solve_row: consistency and inconsistency") {
  RatMat b(2, 3);
  b << Rat(1), Rat(0), Rat(2), Rat(0), Rat(1), Rat(-1);
  RatVec v(3);
  v << Rat(3), Rat(2), Rat(4);
  auto x = solve_row(b, v);
  REQUIRE(x.has_value());
  CHECK(RatVec(b.transpose() * *x) == v);

  RatVec w(3);
  w << Rat(0), Rat(0), Rat(1);  // outside the row space
  CHECK(!solve_row(b, w).has_value());
}

TEST_CASE("RowSpaceSolver matches solve_row on random systems") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    RatMat b(3, 6);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 6; ++j) b(i, j) = make_rat(d(rng), 1 + (trial % 3));
    if (rank_rational(b) < 3) continue;
    RowSpaceSolver solver(b);
    RatVec coeff(3);
    for (int i = 0; i < 3; ++i) coeff(i) = make_rat(d(rng), 2);
    RatVec v = b.transpose() * coeff;
    auto x = solver.solve(v);
    REQUIRE(x.has_value());
    CHECK(*x == coeff);
    auto y = solve_row(b, v);
    REQUIRE(y.has_value());
    CHECK(*y == coeff);
  }
}

TEST_CASE("clear_denominators recovers the common denominator") {
  RatMat a(2, 2);
  a << Rat(1, 2), Rat(1, 3), Rat(2), Rat(-5, 6);
  auto [scaled, scale] = clear_denominators(a);
  CHECK(scale == 6);
  CHECK(scaled == make_int({{3, 2}, {12, -5}}));
}
