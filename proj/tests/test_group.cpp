#include <doctest.h>

#include <algorithm>
#include <set>

#include "repring/errors.hpp"
#include "repring/group.hpp"

using namespace repring;

namespace {

std::multiset<int> order_multiset(const FiniteGroup& g) {
  std::multiset<int> out;
  for (int x = 0; x < g.order(); ++x) out.insert(g.element_order(x));
  return out;
}

// Independent order computation by repeated multiplication.
int order_oracle(const FiniteGroup& g, int x) {
  int k = 1;
  int y = x;
  while (y != 0) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

GroupPtr s3() {
  return from_permutations(3, {perm_from_cycles(3, {{1, 2}}), perm_from_cycles(3, {{1, 2, 3}})});
}

}  // namespace

TEST_CASE("cyclic groups") {
  CHECK(make_cyclic(1)->order() == 1);
  auto c4 = make_cyclic(4);
  CHECK(order_multiset(*c4) == std::multiset<int>{1, 4, 2, 4});
  auto c6 = make_cyclic(6);
  CHECK(order_multiset(*c6) == std::multiset<int>{1, 6, 3, 2, 3, 6});
  CHECK(c6->exponent() == 6);
  CHECK(c6->label(1) == "g");
  CHECK(*c6->element_by_label("g^3") == 3);
  CHECK_THROWS_AS(make_cyclic(0), input_error);
  CHECK_THROWS_AS(make_cyclic(5000), input_error);
}

TEST_CASE("direct products") {
  auto c2 = make_cyclic(2);
  auto klein = direct_product(c2, c2);
  CHECK(klein->order() == 4);
  for (int x = 1; x < 4; ++x) CHECK(klein->element_order(x) == 2);

  auto c1 = make_cyclic(1);
  auto g = make_cyclic(5);
  auto same = direct_product(c1, g);
  REQUIRE(same->order() == 5);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) CHECK(same->mul(x, y) == g->mul(x, y));

  auto c6ish = direct_product(c2, make_cyclic(3));
  CHECK(order_multiset(*c6ish) == std::multiset<int>{1, 2, 3, 3, 6, 6});
  for (int x = 0; x < c6ish->order(); ++x) CHECK(c6ish->element_order(x) == order_oracle(*c6ish, x));
}

TEST_CASE("permutation closure") {
  auto g = s3();
  CHECK(g->order() == 6);
  std::string why;
  CHECK(g->validate(&why));

  CHECK(from_permutations(4, {})->order() == 1);
  CHECK(from_permutations(2, {perm_from_cycles(2, {{1, 2}})})->order() == 2);

  // Determinism: same input, identical tables and labels.
  auto h = s3();
  CHECK(g->order() == h->order());
  for (int x = 0; x < g->order(); ++x) {
    CHECK(g->label(x) == h->label(x));
    for (int y = 0; y < g->order(); ++y) CHECK(g->mul(x, y) == h->mul(x, y));
  }
}

TEST_CASE("table axioms hold for every constructed group") {
  for (const GroupPtr& g :
       {make_cyclic(1), make_cyclic(4), make_cyclic(6), direct_product(make_cyclic(2), make_cyclic(2)),
        s3(), direct_product(s3(), make_cyclic(2))}) {
    std::string why;
    CHECK_MESSAGE(g->validate(&why), why);
  }
}

TEST_CASE("conjugacy classes") {
  auto c4 = make_cyclic(4);
  ConjClassTable t4 = conjugacy_classes(*c4);
  REQUIRE(t4.count() == 4);  // abelian: singletons
  for (int c = 0; c < 4; ++c) CHECK(t4.sizes[c] == 1);
  CHECK(power_class(*c4, t4, t4.class_of[1], 2) == t4.class_of[2]);
  for (int c = 0; c < 4; ++c) CHECK(power_class(*c4, t4, c, 1) == c);

  auto g = s3();
  ConjClassTable t = conjugacy_classes(*g);
  REQUIRE(t.count() == 3);
  std::multiset<int> sizes(t.sizes.begin(), t.sizes.end());
  CHECK(sizes == std::multiset<int>{1, 3, 2});
  int total = 0;
  for (int c = 0; c < t.count(); ++c) {
    CHECK(g->order() % t.sizes[c] == 0);
    total += t.sizes[c];
    // Order is constant on the class; reps are minimal ids.
    for (int x = 0; x < g->order(); ++x)
      if (t.class_of[x] == c) {
        CHECK(g->element_order(x) == t.orders[c]);
        CHECK(x >= t.reps[c]);
      }
  }
  CHECK(total == g->order());
}

TEST_CASE("element orders") {
  auto c6 = make_cyclic(6);
  CHECK(element_order(*c6, 0) == 1);
  CHECK(element_order(*c6, 1) == 6);
  CHECK(element_order(*c6, 3) == 2);
}

TEST_CASE("homomorphisms: valid, rejected, ambiguous") {
  auto c2 = make_cyclic(2);
  auto c4 = make_cyclic(4);
  auto c6 = make_cyclic(6);

  GroupHom a = hom(c2, c4, {{1, 2}});  // g -> g^2
  CHECK(a.injective);
  CHECK(a.apply(1) == 2);

  GroupHom b = hom(c2, c6, {{1, 3}});  // g -> g^3
  CHECK(b.injective);

  // g -> g violates the order-2 relation; witness pair (g, g).
  CHECK_THROWS_WITH_AS(hom(c2, c4, {{1, 1}}),
                       "hom: relation violated, witness pair (g, g)", input_error);

  // Generators of a proper subgroup do not determine the map on C4.
  auto c4_sub = std::make_shared<FiniteGroup>(
      std::vector<int>{0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2},
      std::vector<std::string>{"e", "g", "g^2", "g^3"}, std::vector<int>{2}, "C4sub");
  CHECK_THROWS_AS(hom(GroupPtr(c4_sub), c2, {{2, 0}}), input_error);

  // Non-injective but valid: C4 -> C2.
  GroupHom q = hom(c4, c2, {{1, 1}});
  CHECK(!q.injective);

  // Image order divides source order, for all elements.
  for (const GroupHom& f : {a, b, q}) {
    for (int x = 0; x < f.source->order(); ++x)
      CHECK(f.source->element_order(x) % f.target->element_order(f.apply(x)) == 0);
  }
}

TEST_CASE("hom by labels") {
  auto c2 = make_cyclic(2);
  auto c4 = make_cyclic(4);
  GroupHom f = hom_by_labels(c2, c4, {{"g", "g^2"}});
  CHECK(f.apply(1) == 2);
  CHECK_THROWS_AS(hom_by_labels(c2, c4, {{"q", "g"}}), input_error);
}

TEST_CASE("n_p counting on finite groups") {
  auto c6 = make_cyclic(6);
  ConjClassTable t = conjugacy_classes(*c6);
  CHECK(n_p_classes(*c6, t, 2) == 2);  // orders 1 and 2
  CHECK(n_p_classes(*c6, t, 3) == 3);  // orders 1, 3, 3
  CHECK(n_p_classes(*c6, t, 5) == 1);  // identity only
  CHECK(n_p_classes(*c6, t, 3, false) == 2);
  CHECK_THROWS_AS(n_p_classes(*c6, t, 4), input_error);
}
