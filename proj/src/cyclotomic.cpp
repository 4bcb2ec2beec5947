#include "repring/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "repring/errors.hpp"
#include "repring/linalg.hpp"

namespace repring {

namespace {

// Dense integer polynomials, ascending coefficients, for cyclotomic
// polynomial bookkeeping only.
using IntPoly = std::vector<Int>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of polynomials with monic divisor.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  if (den.empty() || den.back() != 1) throw error("cyclotomic division by non-monic polynomial");
  if (num.size() < den.size()) {
    trim(num);
    if (!num.empty()) throw error("inexact cyclotomic polynomial division");
    return {};
  }
  IntPoly q(num.size() - den.size() + 1, Int(0));
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    Int c = num[i + den.size() - 1];
    q[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw error("inexact cyclotomic polynomial division");
  return q;
}

std::mutex g_phi_mutex;
std::map<int, IntPoly> g_phi_cache;

const IntPoly& cyclo_poly_locked(int m) {
  auto it = g_phi_cache.find(m);
  if (it != g_phi_cache.end()) return it->second;
  // x^m - 1 divided by the cyclotomic polynomials of all proper divisors.
  IntPoly p(m + 1, Int(0));
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    p = divide_exact(std::move(p), cyclo_poly_locked(d));
  }
  return g_phi_cache.emplace(m, std::move(p)).first->second;
}

// Remainder of a rational polynomial modulo the m-th cyclotomic polynomial,
// padded/truncated to exactly phi(m) coordinates.
RatVec reduce_mod_cyclotomic(std::vector<Rat> poly, int m) {
  const IntPoly& phi_poly = Cyclotomic::cyclotomic_polynomial(m);
  const int deg = static_cast<int>(phi_poly.size()) - 1;  // phi(m)
  for (int i = static_cast<int>(poly.size()) - 1; i >= deg; --i) {
    Rat c = poly[i];
    if (c == 0) continue;
    for (int j = 0; j < static_cast<int>(phi_poly.size()); ++j)
      poly[i - deg + j] -= c * Rat(phi_poly[j]);
  }
  RatVec out = RatVec::Zero(deg);
  for (int i = 0; i < deg && i < static_cast<int>(poly.size()); ++i) out(i) = poly[i];
  return out;
}

}  // namespace

const std::vector<Int>& Cyclotomic::cyclotomic_polynomial(int m) {
  if (m < 1) throw input_error("cyclotomic polynomial needs a positive index");
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  return cyclo_poly_locked(m);
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(RatVec::Zero(1)) {}

Cyclotomic::Cyclotomic(const Rat& r) : conductor_(1), coeffs_(RatVec::Zero(1)) { coeffs_(0) = r; }

Cyclotomic::Cyclotomic(long n) : Cyclotomic(Rat(n)) {}

Cyclotomic::Cyclotomic(int conductor, RatVec coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor_ < 1) throw input_error("conductor must be positive");
  if (coeffs_.size() != euler_phi(conductor_))
    throw input_error("cyclotomic coefficient vector has wrong length");
}

Cyclotomic Cyclotomic::root_of_unity(int m, long k) {
  if (m < 1) throw input_error("root_of_unity: conductor must be positive");
  long e = ((k % m) + m) % m;
  std::vector<Rat> poly(static_cast<size_t>(e) + 1, Rat(0));
  poly[e] = 1;
  return Cyclotomic(m, reduce_mod_cyclotomic(std::move(poly), m));
}

bool Cyclotomic::is_zero() const {
  for (int i = 0; i < coeffs_.size(); ++i)
    if (coeffs_(i) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (int i = 1; i < coeffs_.size(); ++i)
    if (coeffs_(i) != 0) return false;
  return true;
}

std::optional<Rat> Cyclotomic::to_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_(0);
}

Cyclotomic Cyclotomic::lifted_to(int m) const {
  if (m == conductor_) return *this;
  if (m < 1 || m % conductor_ != 0)
    throw error("lifted_to: target conductor is not a multiple of the current one");
  // zeta_c = zeta_m^{m/c}: substitute and re-reduce.
  const long stride = m / conductor_;
  std::vector<Rat> poly(static_cast<size_t>(coeffs_.size() - 1) * stride + 1, Rat(0));
  for (int i = 0; i < coeffs_.size(); ++i) poly[static_cast<size_t>(i) * stride] = coeffs_(i);
  return Cyclotomic(m, reduce_mod_cyclotomic(std::move(poly), m));
}

std::optional<Cyclotomic> Cyclotomic::lowered_to(int m) const {
  if (m == conductor_) return *this;
  if (m < 1 || conductor_ % m != 0)
    throw error("lowered_to: target conductor does not divide the current one");
  // Solve for coordinates of this value in the lifted basis of Q(zeta_m).
  const long phi_m = euler_phi(m);
  RatMat lifted_basis(phi_m, coeffs_.size());
  for (long j = 0; j < phi_m; ++j) {
    RatVec b = RatVec::Zero(phi_m);
    b(j) = 1;
    lifted_basis.row(j) = Cyclotomic(m, b).lifted_to(conductor_).coeffs().transpose();
  }
  auto x = solve_row(lifted_basis, coeffs_);
  if (!x) return std::nullopt;
  return Cyclotomic(m, *x);
}

Cyclotomic Cyclotomic::galois(long k) const {
  long kk = ((k % conductor_) + conductor_) % conductor_;
  if (gcd_long(kk == 0 ? conductor_ : kk, conductor_) != 1)
    throw input_error("galois twist exponent must be coprime to the conductor");
  std::vector<Rat> poly(conductor_, Rat(0));
  for (int i = 0; i < coeffs_.size(); ++i) {
    long e = (static_cast<long>(i) * kk) % conductor_;
    poly[e] += coeffs_(i);
  }
  return Cyclotomic(conductor_, reduce_mod_cyclotomic(std::move(poly), conductor_));
}

Cyclotomic Cyclotomic::conj() const {
  if (conductor_ <= 2) return *this;
  return galois(conductor_ - 1);
}

int Cyclotomic::common_conductor(const Cyclotomic& a, const Cyclotomic& b) {
  return static_cast<int>(lcm_long(a.conductor_, b.conductor_));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  int m = Cyclotomic::common_conductor(a, b);
  Cyclotomic la = a.lifted_to(m), lb = b.lifted_to(m);
  return Cyclotomic(m, la.coeffs_ + lb.coeffs_);
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  int m = Cyclotomic::common_conductor(a, b);
  Cyclotomic la = a.lifted_to(m), lb = b.lifted_to(m);
  return Cyclotomic(m, la.coeffs_ - lb.coeffs_);
}

Cyclotomic Cyclotomic::operator-() const { return Cyclotomic(conductor_, -coeffs_); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  int m = Cyclotomic::common_conductor(a, b);
  Cyclotomic la = a.lifted_to(m), lb = b.lifted_to(m);
  std::vector<Rat> poly(2 * la.coeffs_.size(), Rat(0));
  for (int i = 0; i < la.coeffs_.size(); ++i) {
    if (la.coeffs_(i) == 0) continue;
    for (int j = 0; j < lb.coeffs_.size(); ++j) {
      if (lb.coeffs_(j) == 0) continue;
      poly[i + j] += la.coeffs_(i) * lb.coeffs_(j);
    }
  }
  return Cyclotomic(m, reduce_mod_cyclotomic(std::move(poly), m));
}

Cyclotomic operator*(const Rat& r, const Cyclotomic& a) {
  return Cyclotomic(a.conductor(), r * a.coeffs());
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  int m = Cyclotomic::common_conductor(a, b);
  return a.lifted_to(m).coeffs_ == b.lifted_to(m).coeffs_;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_(i);
    if (c == 0) continue;
    Rat abs = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << rat_to_string(abs);
    } else {
      if (abs != 1) out << rat_to_string(abs) << "*";
      out << "z" << conductor_;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace repring
