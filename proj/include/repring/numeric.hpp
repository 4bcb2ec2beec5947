#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <string>

#include "repring/errors.hpp"

namespace repring {

// Exact scalars. All lattice and character arithmetic in this library is
// exact; doubles never appear on any mathematical path.
using Int = mpz_class;
using Rat = mpq_class;

}  // namespace repring

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace repring {

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Floor division (rounds toward minus infinity, unlike mpz operator/).
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int numerator(const Rat& r) { return Int(r.get_num()); }
inline Int denominator(const Rat& r) { return Int(r.get_den()); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw error("integer too large for machine word: " + v.get_str());
  return v.get_si();
}

/// Canonical decimal form, "num/den" with positive denominator, "num" when
/// the denominator is 1. This is the exact-rational wire format.
inline std::string rat_to_string(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw input_error("malformed rational literal: \"" + s + "\"");
  if (r.get_den() == 0) throw input_error("rational with zero denominator: \"" + s + "\"");
  r.canonicalize();
  return r;
}

inline long gcd_long(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long lcm_long(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_long(a, b) * b;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline bool is_prime_power(long n, long p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace repring
