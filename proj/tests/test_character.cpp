#include <doctest.h>

#include <set>

#include "repring/character.hpp"
#include "repring/errors.hpp"

using namespace repring;

namespace {

GroupPtr s3() {
  return from_permutations(3, {perm_from_cycles(3, {{1, 2}}), perm_from_cycles(3, {{1, 2, 3}})});
}
GroupPtr d4() {
  return from_permutations(4, {perm_from_cycles(4, {{1, 2, 3, 4}}), perm_from_cycles(4, {{1, 3}})});
}
GroupPtr a4() {
  return from_permutations(4, {perm_from_cycles(4, {{1, 2, 3}}), perm_from_cycles(4, {{1, 2}, {3, 4}})});
}
GroupPtr s4() {
  return from_permutations(4, {perm_from_cycles(4, {{1, 2}}), perm_from_cycles(4, {{1, 2, 3, 4}})});
}

std::vector<GroupPtr> corpus() {
  return {make_cyclic(1),
          make_cyclic(2),
          make_cyclic(3),
          make_cyclic(4),
          make_cyclic(6),
          direct_product(make_cyclic(2), make_cyclic(2)),
          direct_product(make_cyclic(2), make_cyclic(3)),
          s3(),
          d4(),
          a4(),
          s4()};
}

bool row_in_table(const CharacterTable& t, const CycVec& row) {
  for (int i = 0; i < t.count(); ++i) {
    bool same = true;
    for (int c = 0; c < t.count() && same; ++c) same = t.value(i, c) == row(c);
    if (same) return true;
  }
  return false;
}

void check_orthogonality(const CharacterTable& t) {
  const ConjClassTable& cls = t.classes();
  const int n = t.count();
  const Int order = t.group()->order();
  long sum_sq = 0;
  for (int d : t.degrees()) sum_sq += static_cast<long>(d) * d;
  CHECK(sum_sq == t.group()->order());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cyclotomic acc;
      for (int c = 0; c < n; ++c)
        acc += Rat(cls.sizes[c]) * (t.value(i, c) * t.value(j, c).conj());
      CHECK(acc == Cyclotomic(Rat(i == j ? order : 0)));
    }
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) {
      Cyclotomic acc;
      for (int i = 0; i < n; ++i) acc += t.value(i, c) * t.value(i, d).conj();
      Cyclotomic expected = c == d ? Cyclotomic(make_rat(order, cls.sizes[c])) : Cyclotomic();
      CHECK(acc == expected);
    }
}

}  // namespace

TEST_CASE("C2 table is the trivial and sign characters") {
  CharacterTable t = CharacterTable::compute(make_cyclic(2));
  REQUIRE(t.count() == 2);
  std::set<std::pair<std::string, std::string>> rows;
  for (int i = 0; i < 2; ++i) rows.insert({t.value(i, 0).to_string(), t.value(i, 1).to_string()});
  CHECK(rows == std::set<std::pair<std::string, std::string>>{{"1", "1"}, {"1", "-1"}});
}

TEST_CASE("C4 table consists of the powers of zeta_4") {
  CharacterTable t = CharacterTable::compute(make_cyclic(4));
  REQUIRE(t.count() == 4);
  // Each row is determined by its value at g, a fourth root of unity; all
  // four roots appear.
  std::set<int> seen;
  int g_class = t.classes().class_of[1];
  for (int i = 0; i < 4; ++i) {
    CHECK(t.degree(i) == 1);
    for (int k = 0; k < 4; ++k)
      if (t.value(i, g_class) == Cyclotomic::root_of_unity(4, k)) seen.insert(k);
  }
  CHECK(seen == std::set<int>{0, 1, 2, 3});
  // The full row is the power sequence of its value at g.
  for (int i = 0; i < 4; ++i)
    for (int e = 0; e < 4; ++e) {
      Cyclotomic expect = Cyclotomic(Rat(1));
      for (int rep = 0; rep < e; ++rep) expect *= t.value(i, g_class);
      CHECK(t.value(i, t.classes().class_of[e]) == expect);
    }
}

TEST_CASE("S3: degrees and the degree-2 row from the regular representation") {
  GroupPtr g = s3();
  CharacterTable t = CharacterTable::compute(g);
  REQUIRE(t.count() == 3);
  CHECK(t.degrees() == std::vector<int>{1, 1, 2});

  // Independent derivation: the regular character (6,0,0) decomposes as
  // trivial + sign + 2 * chi_2, so chi_2 = (regular - trivial - sign) / 2.
  CycVec trivial(3), sign(3);
  for (int c = 0; c < 3; ++c) {
    trivial(c) = Cyclotomic(Rat(1));
    sign(c) = Cyclotomic(Rat(t.classes().orders[c] == 2 ? -1 : 1));
  }
  CHECK(row_in_table(t, trivial));
  CHECK(row_in_table(t, sign));
  CycVec reg(3);
  reg(0) = Cyclotomic(Rat(6));
  reg(1) = Cyclotomic();
  reg(2) = Cyclotomic();
  CycVec chi2(3);
  for (int c = 0; c < 3; ++c) chi2(c) = make_rat(1, 2) * (reg(c) - trivial(c) - sign(c));
  // Frozen expected values (2, 0, -1) on classes (e, transpositions, 3-cycles).
  CHECK(chi2(0) == Cyclotomic(Rat(2)));
  CHECK(chi2(1) == Cyclotomic());
  CHECK(chi2(2) == Cyclotomic(Rat(-1)));
  CHECK(row_in_table(t, chi2));
}

TEST_CASE("A4 has the three cube-root characters and one of degree 3") {
  CharacterTable t = CharacterTable::compute(a4());
  REQUIRE(t.count() == 4);
  CHECK(t.degrees() == std::vector<int>{1, 1, 1, 3});
  // The nontrivial linear characters take the value zeta_3 or its conjugate
  // on a 3-cycle class.
  int three_cycle_class = -1;
  for (int c = 0; c < 4; ++c)
    if (t.classes().orders[c] == 3) {
      three_cycle_class = c;
      break;
    }
  REQUIRE(three_cycle_class >= 0);
  std::set<std::string> vals;
  for (int i = 0; i < 3; ++i) vals.insert(t.value(i, three_cycle_class).to_string());
  CHECK(vals.count(Cyclotomic::root_of_unity(3, 1).to_string()) == 1);
  CHECK(vals.count(Cyclotomic::root_of_unity(3, 2).to_string()) == 1);
}

TEST_CASE("S4 table: degrees 1,1,2,3,3") {
  CharacterTable t = CharacterTable::compute(s4());
  REQUIRE(t.count() == 5);
  CHECK(t.degrees() == std::vector<int>{1, 1, 2, 3, 3});
}

TEST_CASE("orthogonality and determinism across the corpus") {
  for (const GroupPtr& g : corpus()) {
    CharacterTable t = CharacterTable::compute(g);
    check_orthogonality(t);
    // Deterministic: recompute and compare all values.
    CharacterTable t2 = CharacterTable::compute(g);
    REQUIRE(t.count() == t2.count());
    for (int i = 0; i < t.count(); ++i)
      for (int c = 0; c < t.count(); ++c) CHECK(t.value(i, c) == t2.value(i, c));
  }
}

TEST_CASE("degree-1 rows are closed under pointwise product") {
  for (const GroupPtr& g : {make_cyclic(6), GroupPtr(s3()), GroupPtr(d4()), GroupPtr(a4())}) {
    CharacterTable t = CharacterTable::compute(g);
    for (int i = 0; i < t.count(); ++i) {
      if (t.degree(i) != 1) continue;
      for (int j = 0; j < t.count(); ++j) {
        if (t.degree(j) != 1) continue;
        CycVec prod(t.count());
        for (int c = 0; c < t.count(); ++c) prod(c) = t.value(i, c) * t.value(j, c);
        CHECK(row_in_table(t, prod));
      }
    }
  }
}

TEST_CASE("Galois stability: the power map permutes the rows") {
  for (const GroupPtr& g : {make_cyclic(4), make_cyclic(6), GroupPtr(s3()), GroupPtr(a4())}) {
    CharacterTable t = CharacterTable::compute(g);
    const int e = g->exponent();
    for (long k = 1; k <= e; ++k) {
      if (gcd_long(k, e) != 1) continue;
      for (int i = 0; i < t.count(); ++i) {
        CycVec twisted(t.count());
        for (int c = 0; c < t.count(); ++c)
          twisted(c) = t.value(i, power_class(*g, t.classes(), c, k));
        CHECK(row_in_table(t, twisted));
      }
    }
  }
}

TEST_CASE("restriction along C2 -> C4") {
  auto c2 = make_cyclic(2);
  auto c4 = make_cyclic(4);
  GroupHom f = hom(c2, c4, {{1, 2}});
  CharacterTable t4 = CharacterTable::compute(c4);

  // The trivial character restricts to the trivial character.
  int trivial_row = -1;
  int i_row = -1;
  int g_class = t4.classes().class_of[1];
  for (int i = 0; i < 4; ++i) {
    if (t4.value(i, g_class) == Cyclotomic(Rat(1))) trivial_row = i;
    if (t4.value(i, g_class) == Cyclotomic::root_of_unity(4, 1)) i_row = i;
  }
  REQUIRE(trivial_row >= 0);
  REQUIRE(i_row >= 0);
  ClassFunction triv = restrict_along(t4.row(trivial_row), f);
  CHECK(triv.values(0) == Cyclotomic(Rat(1)));
  CHECK(triv.values(1) == Cyclotomic(Rat(1)));

  // g |-> zeta_4 restricts to the sign character: zeta_4^2 = -1.
  ClassFunction sgn = restrict_along(t4.row(i_row), f);
  CHECK(sgn.values(0) == Cyclotomic(Rat(1)));
  CHECK(sgn.values(1) == Cyclotomic(Rat(-1)));

  // The regular character of C4 restricts to twice the regular character.
  ClassFunction reg{c4, t4.classes_ptr(), CycVec(4)};
  reg.values(0) = Cyclotomic(Rat(4));
  for (int c = 1; c < 4; ++c) reg.values(c) = Cyclotomic();
  ClassFunction res = restrict_along(reg, f);
  CHECK(res.values(0) == Cyclotomic(Rat(4)));
  CHECK(res.values(1) == Cyclotomic());

  // Restriction is a ring map on all irreducible pairs and preserves degree.
  for (int i = 0; i < 4; ++i) {
    CHECK(restrict_along(t4.row(i), f).values(0) == t4.value(i, 0));
    for (int j = 0; j < 4; ++j) {
      ClassFunction lhs = restrict_along(pointwise_product(t4.row(i), t4.row(j)), f);
      ClassFunction rhs = pointwise_product(restrict_along(t4.row(i), f), restrict_along(t4.row(j), f));
      for (int c = 0; c < 2; ++c) CHECK(lhs.values(c) == rhs.values(c));
    }
  }
}

TEST_CASE("inner products") {
  CharacterTable t = CharacterTable::compute(s3());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(inner_product(t.row(i), t.row(j)) == Rat(i == j ? 1 : 0));

  // <regular, trivial> = 1, with regular = (|G|, 0, ..., 0).
  ClassFunction reg{t.group(), t.classes_ptr(), CycVec(3)};
  reg.values(0) = Cyclotomic(Rat(6));
  reg.values(1) = Cyclotomic();
  reg.values(2) = Cyclotomic();
  int trivial_row = -1;
  for (int i = 0; i < 3; ++i)
    if (t.value(i, 1) == Cyclotomic(Rat(1)) && t.value(i, 2) == Cyclotomic(Rat(1))) trivial_row = i;
  REQUIRE(trivial_row >= 0);
  CHECK(inner_product(reg, t.row(trivial_row)) == Rat(1));

  // Every irreducible appears in the regular character with its degree.
  IntVec mult = decompose(t, reg);
  for (int i = 0; i < 3; ++i) CHECK(mult(i) == t.degree(i));
}
