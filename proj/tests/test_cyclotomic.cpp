#include <doctest.h>

#include <random>

#include "repring/cyclotomic.hpp"
#include "repring/errors.hpp"

using namespace repring;

namespace {

Cyclotomic zeta(int m, long k = 1) { return Cyclotomic::root_of_unity(m, k); }

// Random small element of Q(zeta_m): a few power-basis terms with small
// rational coefficients.
Cyclotomic random_value(std::mt19937& rng) {
  static const int conductors[] = {1, 2, 3, 4, 5, 6, 8, 12};
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  int m = conductors[pick(rng)];
  Cyclotomic acc;
  for (int t = 0; t < 3; ++t) {
    Rat c = make_rat(num(rng), den(rng));
    acc += c * zeta(m, pick(rng));
  }
  return acc;
}

}  // namespace

TEST_CASE("cyclotomic polynomials from recursive division") {
  CHECK(Cyclotomic::cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
  CHECK(Cyclotomic::cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
  CHECK(Cyclotomic::cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
  CHECK(Cyclotomic::cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
  CHECK(Cyclotomic::cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
  for (int m : {3, 5, 7, 8, 9, 10, 15, 16, 24, 36})
    CHECK(static_cast<long>(Cyclotomic::cyclotomic_polynomial(m).size()) == euler_phi(m) + 1);
}

TEST_CASE("roots of unity reduce canonically") {
  CHECK(zeta(4, 2) == Cyclotomic(Rat(-1)));
  CHECK(zeta(1, 0) == Cyclotomic(Rat(1)));
  // zeta_6 equals -zeta_3^2 after common-conductor comparison.
  Cyclotomic z6 = zeta(6, 1);
  CHECK(z6.conductor() == 6);
  CHECK(z6 == -zeta(3, 2));
  // Negative exponents wrap.
  CHECK(zeta(5, -1) == zeta(5, 4));
}

TEST_CASE("vanishing geometric sum and simple products") {
  Cyclotomic sum;
  for (int k = 0; k < 5; ++k) sum += zeta(5, k);
  CHECK(sum.is_zero());
  CHECK(zeta(4) * zeta(4) == Cyclotomic(Rat(-1)));
  CHECK(zeta(3).conj() == zeta(3, 2));
}

TEST_CASE("to_rational recognizes exactly the rationals") {
  CHECK(*(zeta(4, 2)).to_rational() == Rat(-1));
  // zeta_3 + zeta_3^2 = -1, by the minimal polynomial x^2 + x + 1.
  Cyclotomic v = zeta(3, 1) + zeta(3, 2);
  REQUIRE(v.to_rational().has_value());
  CHECK(*v.to_rational() == Rat(-1));
  CHECK(!zeta(5).to_rational().has_value());
}

TEST_CASE("ring axioms on random mixed-conductor inputs") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    Cyclotomic a = random_value(rng), b = random_value(rng), c = random_value(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Cyclotomic());
  }
}

TEST_CASE("conjugation is an involution fixing the rationals") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    Cyclotomic a = random_value(rng);
    CHECK(a.conj().conj() == a);
    Cyclotomic r(Rat(7, 3));
    CHECK(r.conj() == r);
    // conj distributes over products.
    Cyclotomic b = random_value(rng);
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("lifting to a multiple conductor and lowering back is the identity") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Cyclotomic a = random_value(rng);
    for (int k : {2, 3, 5}) {
      int big = a.conductor() * k;
      Cyclotomic lifted = a.lifted_to(big);
      CHECK(lifted == a);
      auto back = lifted.lowered_to(a.conductor());
      REQUIRE(back.has_value());
      CHECK(back->coeffs() == a.coeffs());
    }
  }
}

TEST_CASE("lowering detects values outside the subfield") {
  CHECK(!zeta(5).lowered_to(1).has_value());
  CHECK(!zeta(8).lowered_to(4).has_value());
  // zeta_6 generates the same field as zeta_3.
  auto low = zeta(6).lifted_to(6).lowered_to(3);
  REQUIRE(low.has_value());
  CHECK(*low == zeta(6));
}

TEST_CASE("galois twists permute roots and respect multiplication") {
  Cyclotomic z = zeta(12);
  CHECK(z.galois(5) == zeta(12, 5));
  CHECK(z.galois(1) == z);
  CHECK_THROWS_AS(z.galois(4), input_error);  // not coprime to 12
  std::mt19937 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    Cyclotomic a = random_value(rng), b = random_value(rng);
    int m = Cyclotomic::common_conductor(a, b);
    long k = 1;
    for (long cand = 2; cand <= m + 1; ++cand)
      if (gcd_long(cand, m) == 1) {
        k = cand;
        break;
      }
    Cyclotomic lhs = (a * b).lifted_to(m).galois(k);
    Cyclotomic rhs = a.lifted_to(m).galois(k) * b.lifted_to(m).galois(k);
    CHECK(lhs == rhs);
  }
}
