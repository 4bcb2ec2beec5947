#include "repring/character.hpp"

#include <algorithm>
#include <random>

#include "repring/errors.hpp"
#include "repring/linalg.hpp"

namespace repring {

namespace {

// The table is computed by the exact class-algebra method: the class sums
// span a commutative algebra whose simultaneous eigenvectors are the central
// characters. The eigenvector computation runs in a prime field F_p with
// p == 1 (mod exponent) as an accelerator; the recovered eigenvalue
// multiplicities are then reassembled into exact cyclotomic character values
// and the finished table is certified by exact orthogonality checks.

struct ModField {
  long p;

  long add(long a, long b) const { return (a + b) % p; }
  long sub(long a, long b) const { return (a - b + p) % p; }
  long mul(long a, long b) const {
    return static_cast<long>(static_cast<unsigned long long>(a) * b % p);
  }
  long pow(long a, long e) const {
    long r = 1;
    a %= p;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  long inv(long a) const { return pow(a, p - 2); }
};

long smallest_dixon_prime(long exponent, long group_order, int skip) {
  long lower = 2 * group_order;
  for (long p = exponent + 1;; p += exponent) {
    if (p <= lower || !is_prime(p)) continue;
    if (skip-- == 0) return p;
  }
}

long primitive_root_of_unity(const ModField& f, long order) {
  // Generator of F_p^* raised to (p-1)/order.
  std::vector<long> prime_factors;
  long m = f.p - 1;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  for (long g = 2; g < f.p; ++g) {
    bool ok = true;
    for (long q : prime_factors)
      if (f.pow(g, (f.p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return f.pow(g, (f.p - 1) / order);
  }
  throw error("no primitive root found");
}

using ModMat = std::vector<std::vector<long>>;

// Distinct roots of the characteristic polynomial of m over F_p, found by
// Newton-identity coefficients and a full scan of the field. Returns empty
// when a repeated root exists.
std::vector<long> distinct_eigenvalues(const ModField& f, const ModMat& m) {
  const int r = static_cast<int>(m.size());
  std::vector<long> traces(r + 1, 0);
  ModMat pw(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i) pw[i][i] = 1;
  for (int k = 1; k <= r; ++k) {
    ModMat next(r, std::vector<long>(r, 0));
    for (int i = 0; i < r; ++i)
      for (int l = 0; l < r; ++l) {
        if (pw[i][l] == 0) continue;
        for (int j = 0; j < r; ++j) next[i][j] = f.add(next[i][j], f.mul(pw[i][l], m[l][j]));
      }
    pw = std::move(next);
    long tr = 0;
    for (int i = 0; i < r; ++i) tr = f.add(tr, pw[i][i]);
    traces[k] = tr;
  }
  // e_k from Newton's identities; char poly = sum (-1)^k e_k x^{r-k}.
  std::vector<long> e(r + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= r; ++k) {
    long acc = 0;
    for (int i = 1; i <= k; ++i) {
      long term = f.mul(e[k - i], traces[i]);
      acc = (i % 2 == 1) ? f.add(acc, term) : f.sub(acc, term);
    }
    e[k] = f.mul(acc, f.inv(k % f.p));
  }
  std::vector<long> coeffs(r + 1);  // ascending in x
  for (int k = 0; k <= r; ++k) {
    long c = e[k];
    if (k % 2 == 1) c = f.sub(0, c);
    coeffs[r - k] = c;
  }
  std::vector<long> roots;
  for (long x = 0; x < f.p; ++x) {
    long v = 0;
    for (int k = r; k >= 0; --k) v = f.add(f.mul(v, x), coeffs[k]);
    if (v == 0) roots.push_back(x);
  }
  if (static_cast<int>(roots.size()) != r) return {};
  return roots;
}

// One-dimensional kernel of (m - lambda I) over F_p; empty if the dimension
// is not exactly one.
std::vector<long> eigenvector(const ModField& f, ModMat m, long lambda) {
  const int r = static_cast<int>(m.size());
  for (int i = 0; i < r; ++i) m[i][i] = f.sub(m[i][i], lambda);
  std::vector<int> pivot_col(r, -1);
  int rank = 0;
  for (int c = 0; c < r && rank < r; ++c) {
    int p = -1;
    for (int i = rank; i < r; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    long piv_inv = f.inv(m[rank][c]);
    for (int j = 0; j < r; ++j) m[rank][j] = f.mul(m[rank][j], piv_inv);
    for (int i = 0; i < r; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      long factor = m[i][c];
      for (int j = 0; j < r; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[rank][j]));
    }
    pivot_col[rank] = c;
    ++rank;
  }
  if (rank != r - 1) return {};
  std::vector<long> v(r, 0);
  int free_col = -1;
  std::vector<bool> is_pivot(r, false);
  for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
  for (int c = 0; c < r; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  v[free_col] = 1;
  for (int i = 0; i < rank; ++i) v[pivot_col[i]] = f.sub(0, m[i][free_col]);
  return v;
}

struct DixonResult {
  CycMat rows;
  std::vector<int> degrees;
};

// Full attempt with one prime; throws on internal inconsistency so the
// caller can retry with the next prime.
DixonResult dixon_attempt(const FiniteGroup& g, const ConjClassTable& cls, long p,
                          unsigned seed) {
  const int r = cls.count();
  const int n = g.order();
  const long e = g.exponent();
  ModField f{p};

  // Class of the inverse of each class representative.
  std::vector<int> inverse_class(r);
  for (int c = 0; c < r; ++c) inverse_class[c] = cls.class_of[g.inv(cls.reps[c])];

  // M = sum_i coeff_i * A_i for random coefficients, where A_i are the
  // class-sum multiplication operators; built directly from the group table
  // without materializing the full structure-constant tensor:
  //   a_{i j k} = #{ x in C_i : x^{-1} rep_k in C_j }.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, p - 1);
  std::vector<long> coeff(r);
  for (int i = 0; i < r; ++i) coeff[i] = dist(rng);

  ModMat m(r, std::vector<long>(r, 0));
  for (int x = 0; x < n; ++x) {
    const int i = cls.class_of[x];
    const int xi = g.inv(x);
    for (int k = 0; k < r; ++k) {
      const int j = cls.class_of[g.mul(xi, cls.reps[k])];
      m[j][k] = f.add(m[j][k], coeff[i]);
    }
  }

  std::vector<long> lambdas = distinct_eigenvalues(f, m);
  if (lambdas.empty()) throw error("split eigenvalues were not distinct");

  // Each eigenvector, scaled so the identity-class coordinate is 1, is the
  // vector of central character values omega_i = |C_i| chi(g_i) / chi(1).
  std::vector<std::vector<long>> chis;  // mod-p character rows
  std::vector<int> degrees;
  for (long lambda : lambdas) {
    std::vector<long> v = eigenvector(f, m, lambda);
    if (v.empty()) throw error("eigenspace dimension was not one");
    if (v[0] == 0) throw error("degenerate eigenvector");
    long scale = f.inv(v[0]);
    for (auto& x : v) x = f.mul(x, scale);
    // Row orthogonality gives d^2 = |G| / sum_i omega_i omega_{i*} / |C_i|.
    long s = 0;
    for (int i = 0; i < r; ++i)
      s = f.add(s, f.mul(f.mul(v[i], v[inverse_class[i]]), f.inv(cls.sizes[i] % p)));
    if (s == 0) throw error("degree solve degenerate");
    long d2 = f.mul(n % p, f.inv(s));
    int degree = -1;
    for (int d = 1; static_cast<long>(d) * d <= n; ++d)
      if (f.mul(d, d) == d2) {
        degree = d;
        break;
      }
    if (degree < 0) throw error("no integral degree matches");
    // chi(g_i) = d * omega_i / |C_i| mod p.
    std::vector<long> chi(r);
    for (int i = 0; i < r; ++i)
      chi[i] = f.mul(f.mul(degree % p, v[i]), f.inv(cls.sizes[i] % p));
    chis.push_back(std::move(chi));
    degrees.push_back(degree);
  }

  // Lift each mod-p value to an exact cyclotomic via eigenvalue
  // multiplicities: chi(g) = sum_k m_k zeta_o^k with
  // m_k = (1/o) sum_j chi(g^j) z^{-jk}, z the matching root of unity in F_p.
  long w = primitive_root_of_unity(f, e);
  CycMat rows(r, r);
  for (int s = 0; s < r; ++s) {
    for (int c = 0; c < r; ++c) {
      const long o = cls.orders[c];
      const long z = f.pow(w, e / o);
      const long z_inv = f.inv(z);
      RatVec mult(o);
      std::vector<Rat> poly(o, Rat(0));
      for (long k = 0; k < o; ++k) {
        long acc = 0;
        for (long j = 0; j < o; ++j) {
          long chi_pj = chis[s][power_class(g, cls, c, j)];
          acc = f.add(acc, f.mul(chi_pj, f.pow(z_inv, (j * k) % (p - 1))));
        }
        long mk = f.mul(acc, f.inv(o % p));
        if (mk > degrees[s]) throw error("eigenvalue multiplicity out of range");
        poly[k] = Rat(mk);
      }
      Cyclotomic value(1, RatVec::Zero(1));
      {
        // sum_k m_k zeta_o^k
        Cyclotomic acc = Cyclotomic(Rat(0));
        for (long k = 0; k < o; ++k) {
          if (poly[k] == 0) continue;
          acc += poly[k] * Cyclotomic::root_of_unity(static_cast<int>(o), k);
        }
        value = acc;
      }
      rows(s, c) = value;
    }
  }
  return DixonResult{std::move(rows), std::move(degrees)};
}

bool verify_table(const FiniteGroup& g, const ConjClassTable& cls, const CycMat& rows,
                  const std::vector<int>& degrees) {
  const int r = cls.count();
  long sum_sq = 0;
  for (int d : degrees) sum_sq += static_cast<long>(d) * d;
  if (sum_sq != g.order()) return false;
  for (int i = 0; i < r; ++i)
    if (!(rows(i, 0) == Cyclotomic(Rat(degrees[i])))) return false;
  // Row orthonormality under the class-size-weighted hermitian product.
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      Cyclotomic acc;
      for (int c = 0; c < r; ++c)
        acc += Rat(cls.sizes[c]) * (rows(i, c) * rows(j, c).conj());
      Cyclotomic expected = (i == j) ? Cyclotomic(Rat(g.order())) : Cyclotomic();
      if (!(acc == expected)) return false;
    }
  }
  // Column orthogonality.
  for (int c = 0; c < r; ++c) {
    for (int d = c; d < r; ++d) {
      Cyclotomic acc;
      for (int i = 0; i < r; ++i) acc += rows(i, c) * rows(i, d).conj();
      Cyclotomic expected =
          (c == d) ? Cyclotomic(make_rat(g.order(), cls.sizes[c])) : Cyclotomic();
      if (!(acc == expected)) return false;
    }
  }
  return true;
}

RatVec flatten_row(const CycMat& rows, int i, int conductor) {
  const long phi = euler_phi(conductor);
  RatVec flat(rows.cols() * phi);
  for (int c = 0; c < rows.cols(); ++c)
    flat.segment(c * phi, phi) = rows(i, c).lifted_to(conductor).coeffs();
  return flat;
}

}  // namespace

CharacterTable CharacterTable::compute(const GroupPtr& g) {
  CharacterTable t;
  t.group_ = g;
  t.classes_ = std::make_shared<const ConjClassTable>(conjugacy_classes(*g));
  const ConjClassTable& cls = *t.classes_;
  const int r = cls.count();

  if (r == 1) {
    t.rows_ = CycMat(1, 1);
    t.rows_(0, 0) = Cyclotomic(Rat(1));
    t.degrees_ = {1};
    return t;
  }

  DixonResult result;
  bool done = false;
  for (int attempt = 0; attempt < 24 && !done; ++attempt) {
    long p = smallest_dixon_prime(g->exponent(), g->order(), attempt / 4);
    unsigned seed = 0x5eedu + 0x9e37u * static_cast<unsigned>(attempt);
    try {
      result = dixon_attempt(*g, cls, p, seed);
    } catch (const error&) {
      continue;  // unlucky random split or prime; try again
    }
    if (verify_table(*g, cls, result.rows, result.degrees)) done = true;
  }
  if (!done) throw math_check_error("character table computation failed to certify for " + g->name());

  // Deterministic row order: by degree, then lexicographically on the
  // flattened coefficient vectors at the group exponent.
  std::vector<int> order(r);
  for (int i = 0; i < r; ++i) order[i] = i;
  std::vector<RatVec> flat(r);
  for (int i = 0; i < r; ++i) flat[i] = flatten_row(result.rows, i, g->exponent());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (result.degrees[a] != result.degrees[b]) return result.degrees[a] < result.degrees[b];
    for (int j = 0; j < flat[a].size(); ++j) {
      if (flat[a](j) != flat[b](j)) return flat[a](j) < flat[b](j);
    }
    return false;
  });

  t.rows_ = CycMat(r, r);
  t.degrees_.resize(r);
  for (int i = 0; i < r; ++i) {
    t.degrees_[i] = result.degrees[order[i]];
    for (int c = 0; c < r; ++c) t.rows_(i, c) = result.rows(order[i], c);
  }
  return t;
}

ClassFunction CharacterTable::row(int i) const {
  ClassFunction cf;
  cf.group = group_;
  cf.classes = classes_;
  cf.values = rows_.row(i).transpose();
  return cf;
}

ClassFunction restrict_along(const ClassFunction& chi, const GroupHom& f) {
  if (f.target != chi.group) throw input_error("restrict: class function lives on a different group");
  ConjClassTable src_classes = conjugacy_classes(*f.source);
  ClassFunction out;
  out.group = f.source;
  out.classes = std::make_shared<const ConjClassTable>(std::move(src_classes));
  out.values = CycVec(out.classes->count());
  for (int c = 0; c < out.classes->count(); ++c) {
    int image = f.apply(out.classes->reps[c]);
    out.values(c) = chi.values(chi.classes->class_of[image]);
  }
  return out;
}

Rat inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (chi.group != psi.group) throw input_error("inner_product: class functions on different groups");
  const ConjClassTable& cls = *chi.classes;
  Cyclotomic acc;
  for (int c = 0; c < cls.count(); ++c)
    acc += Rat(cls.sizes[c]) * (chi.values(c) * psi.values(c).conj());
  Cyclotomic scaled = make_rat(1, chi.group->order()) * acc;
  auto r = scaled.to_rational();
  if (!r) throw math_check_error("inner product left the rationals: " + scaled.to_string());
  return *r;
}

IntVec decompose(const CharacterTable& table, const ClassFunction& chi) {
  if (chi.group != table.group()) throw input_error("decompose: wrong group");
  IntVec mult(table.count());
  for (int i = 0; i < table.count(); ++i) {
    Rat m = inner_product(chi, table.row(i));
    if (!is_integer(m))
      throw math_check_error("non-integral multiplicity " + rat_to_string(m) +
                             " in character decomposition");
    mult(i) = numerator(m);
  }
  return mult;
}

ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group != b.group) throw input_error("pointwise_product: class functions on different groups");
  ClassFunction out = a;
  for (int c = 0; c < out.values.size(); ++c) out.values(c) = a.values(c) * b.values(c);
  return out;
}

}  // namespace repring
