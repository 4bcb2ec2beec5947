#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repring/numeric.hpp"

namespace repring {

/// An exact element of the cyclotomic field Q(zeta_m). The value is stored
/// as rational coordinates in the power basis zeta^0 .. zeta^{phi(m)-1},
/// reduced modulo the m-th cyclotomic polynomial, so the representation at
/// a fixed conductor is canonical: two values at the same conductor are
/// equal iff their coordinate vectors are equal. Values at mixed conductors
/// are compared and combined after lifting to the lcm conductor.
class Cyclotomic {
 public:
  /// Zero at conductor 1.
  Cyclotomic();
  explicit Cyclotomic(const Rat& r);
  explicit Cyclotomic(long n);

  /// Wraps already-reduced coordinates; length must be phi(conductor).
  Cyclotomic(int conductor, RatVec coeffs);

  static Cyclotomic root_of_unity(int m, long k);

  int conductor() const { return conductor_; }
  const RatVec& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rat> to_rational() const;

  /// The same value expressed at a conductor that is a multiple of this one.
  Cyclotomic lifted_to(int m) const;

  /// The same value at a smaller conductor, when the value lies in Q(zeta_m).
  std::optional<Cyclotomic> lowered_to(int m) const;

  /// Galois twist zeta |-> zeta^k; k must be coprime to the conductor.
  Cyclotomic galois(long k) const;

  /// Complex conjugation zeta |-> zeta^{-1}.
  Cyclotomic conj() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string to_string() const;

  /// Coefficients of the m-th cyclotomic polynomial, ascending, monic,
  /// computed once by recursive division of x^m - 1 and cached.
  static const std::vector<Int>& cyclotomic_polynomial(int m);

  static int common_conductor(const Cyclotomic& a, const Cyclotomic& b);

 private:
  int conductor_;
  RatVec coeffs_;
};

Cyclotomic operator*(const Rat& r, const Cyclotomic& a);

using CycMat = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, Eigen::Dynamic>;
using CycVec = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, 1>;

}  // namespace repring

namespace Eigen {

template <>
struct NumTraits<repring::Cyclotomic> {
  typedef repring::Cyclotomic Real;
  typedef repring::Cyclotomic NonInteger;
  typedef repring::Cyclotomic Nested;
  typedef repring::Cyclotomic Literal;
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 200,
    MulCost = 400
  };
};

}  // namespace Eigen
