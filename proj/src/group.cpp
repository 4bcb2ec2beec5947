#include "repring/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "repring/errors.hpp"

namespace repring {

namespace {

std::string cycle_notation(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  std::vector<bool> seen(n, false);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || image[i] == i) continue;
    out << "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << " ";
      out << (j + 1);
      first = false;
      j = image[j];
    }
    out << ")";
    any = true;
  }
  return any ? out.str() : "e";
}

void check_cap(long order, int cap, const std::string& what) {
  if (order > cap) {
    throw input_error(what + ": group order " + std::to_string(order) +
                      " exceeds the size cap " + std::to_string(cap));
  }
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<int> mul_table, std::vector<std::string> labels,
                         std::vector<int> generators, std::string name)
    : mul_(std::move(mul_table)),
      labels_(std::move(labels)),
      generators_(std::move(generators)),
      name_(std::move(name)) {
  size_t n = labels_.size();
  if (n == 0 || mul_.size() != n * n)
    throw input_error("group table size does not match element count");
  order_ = static_cast<int>(n);
  for (int x = 0; x < order_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x)
      throw input_error("element 0 is not a two-sided identity");
  }
  inv_.assign(n, -1);
  for (int x = 0; x < order_; ++x) {
    for (int y = 0; y < order_; ++y) {
      if (mul(x, y) == 0) {
        if (mul(y, x) != 0) throw input_error("one-sided inverse in group table");
        inv_[x] = y;
        break;
      }
    }
    if (inv_[x] < 0) throw input_error("element without inverse in group table");
  }
  elt_order_.assign(n, 0);
  exponent_ = 1;
  for (int x = 0; x < order_; ++x) {
    int k = 1, y = x;
    while (y != 0) {
      y = mul(y, x);
      ++k;
    }
    elt_order_[x] = k;
    exponent_ = static_cast<int>(lcm_long(exponent_, k));
  }
}

int FiniteGroup::power(int x, long k) const {
  long e = k % elt_order_[x];
  if (e < 0) e += elt_order_[x];
  int acc = 0;
  for (long i = 0; i < e; ++i) acc = mul(acc, x);
  return acc;
}

std::optional<int> FiniteGroup::element_by_label(const std::string& label) const {
  for (int x = 0; x < order_; ++x)
    if (labels_[x] == label) return x;
  return std::nullopt;
}

bool FiniteGroup::validate(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (int x = 0; x < order_; ++x) {
    if (mul(x, inv_[x]) != 0 || mul(inv_[x], x) != 0) return fail("inverse check failed");
  }
  for (int x = 0; x < order_; ++x)
    for (int y = 0; y < order_; ++y)
      for (int z = 0; z < order_; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          return fail("associativity fails at (" + std::to_string(x) + "," + std::to_string(y) +
                      "," + std::to_string(z) + ")");
  return true;
}

Permutation perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p;
  p.image.resize(degree);
  for (int i = 0; i < degree; ++i) p.image[i] = i;
  for (const auto& cyc : cycles) {
    if (cyc.empty()) continue;
    std::vector<bool> used(degree, false);
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i];
      if (a < 1 || a > degree) throw input_error("cycle point out of range");
      if (used[a - 1]) throw input_error("repeated point in cycle");
      used[a - 1] = true;
    }
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i] - 1;
      int to = cyc[(i + 1) % cyc.size()] - 1;
      p.image[from] = to;
    }
  }
  return p;
}

GroupPtr make_cyclic(int n, int cap) {
  if (n < 1) throw input_error("cyclic group order must be positive");
  check_cap(n, cap, "make_cyclic");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<size_t>(i) * n + j] = (i + j) % n;
  std::vector<std::string> labels(n);
  labels[0] = "e";
  for (int i = 1; i < n; ++i) labels[i] = i == 1 ? "g" : "g^" + std::to_string(i);
  std::vector<int> gens;
  if (n > 1) gens.push_back(1);
  return std::make_shared<FiniteGroup>(std::move(table), std::move(labels), std::move(gens),
                                       "C" + std::to_string(n));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& k, int cap) {
  const long n = static_cast<long>(g->order()) * k->order();
  check_cap(n, cap, "direct_product");
  auto id = [&](int a, int b) { return a * k->order() + b; };
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a1 = 0; a1 < g->order(); ++a1)
    for (int b1 = 0; b1 < k->order(); ++b1)
      for (int a2 = 0; a2 < g->order(); ++a2)
        for (int b2 = 0; b2 < k->order(); ++b2)
          table[static_cast<size_t>(id(a1, b1)) * n + id(a2, b2)] =
              id(g->mul(a1, a2), k->mul(b1, b2));
  std::vector<std::string> labels(n);
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < k->order(); ++b) labels[id(a, b)] = "(" + g->label(a) + "," + k->label(b) + ")";
  std::vector<int> gens;
  for (int a : g->generators()) gens.push_back(id(a, 0));
  for (int b : k->generators()) gens.push_back(id(0, b));
  return std::make_shared<FiniteGroup>(std::move(table), std::move(labels), std::move(gens),
                                       g->name() + "x" + k->name());
}

GroupPtr from_permutations(int degree, const std::vector<Permutation>& gens, int cap) {
  if (degree < 1) throw input_error("permutation degree must be positive");
  for (const auto& p : gens) {
    if (static_cast<int>(p.image.size()) != degree)
      throw input_error("generator degree mismatch");
    std::vector<bool> hit(degree, false);
    for (int v : p.image) {
      if (v < 0 || v >= degree || hit[v]) throw input_error("generator is not a bijection");
      hit[v] = true;
    }
  }
  std::vector<int> identity(degree);
  for (int i = 0; i < degree; ++i) identity[i] = i;

  // mul(x, y) applies x first, then y.
  auto compose = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
    return r;
  };

  std::vector<std::vector<int>> elems{identity};
  std::map<std::vector<int>, int> index{{identity, 0}};
  std::vector<int> gen_ids;
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : gens) {
      auto next = compose(elems[head], gen.image);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(next);
        check_cap(static_cast<long>(elems.size()), cap, "from_permutations");
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[static_cast<size_t>(x) * n + y] = index.at(compose(elems[x], elems[y]));
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) labels[x] = cycle_notation(elems[x]);
  for (const auto& gen : gens) gen_ids.push_back(index.at(gen.image));
  std::sort(gen_ids.begin(), gen_ids.end());
  gen_ids.erase(std::unique(gen_ids.begin(), gen_ids.end()), gen_ids.end());
  return std::make_shared<FiniteGroup>(std::move(table), std::move(labels), std::move(gen_ids),
                                       "Perm" + std::to_string(degree));
}

GroupHom hom(const GroupPtr& src, const GroupPtr& tgt,
             const std::vector<std::pair<int, int>>& gen_images) {
  std::vector<int> gen_of(src->order(), -1);
  for (const auto& [g, img] : gen_images) {
    if (g < 0 || g >= src->order() || img < 0 || img >= tgt->order())
      throw input_error("hom: generator or image id out of range");
    gen_of[g] = img;
  }
  for (int g : src->generators())
    if (gen_of[g] < 0)
      throw input_error("hom: no image given for source generator \"" + src->label(g) + "\"");

  std::vector<int> image(src->order(), -1);
  image[0] = 0;
  std::vector<int> queue{0};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (const auto& [g, img] : gen_images) {
      int y = src->mul(x, g);
      int want = tgt->mul(image[x], img);
      if (image[y] < 0) {
        image[y] = want;
        queue.push_back(y);
      } else if (image[y] != want) {
        throw input_error("hom: relation violated, witness pair (" + src->label(x) + ", " +
                          src->label(g) + ")");
      }
    }
  }
  for (int x = 0; x < src->order(); ++x)
    if (image[x] < 0)
      throw input_error("hom: ambiguous extension, the given generators do not generate the source");

  for (int x = 0; x < src->order(); ++x)
    for (int y = 0; y < src->order(); ++y)
      if (image[src->mul(x, y)] != tgt->mul(image[x], image[y]))
        throw input_error("hom: relation violated, witness pair (" + src->label(x) + ", " +
                          src->label(y) + ")");

  std::vector<bool> hit(tgt->order(), false);
  bool injective = true;
  for (int x = 0; x < src->order(); ++x) {
    if (hit[image[x]]) injective = false;
    hit[image[x]] = true;
  }
  return GroupHom{src, tgt, std::move(image), injective};
}

GroupHom hom_by_labels(const GroupPtr& src, const GroupPtr& tgt,
                       const std::vector<std::pair<std::string, std::string>>& gen_images) {
  std::vector<std::pair<int, int>> ids;
  for (const auto& [g, img] : gen_images) {
    auto gi = src->element_by_label(g);
    if (!gi) throw input_error("hom: unknown source element label \"" + g + "\"");
    auto ti = tgt->element_by_label(img);
    if (!ti) throw input_error("hom: unknown target element label \"" + img + "\"");
    ids.emplace_back(*gi, *ti);
  }
  return hom(src, tgt, ids);
}

ConjClassTable conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  ConjClassTable t;
  t.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (t.class_of[x] >= 0) continue;
    int c = t.count();
    int size = 0;
    for (int a = 0; a < n; ++a) {
      int y = g.mul(g.mul(a, x), g.inv(a));
      if (t.class_of[y] < 0) {
        t.class_of[y] = c;
        ++size;
      }
    }
    t.reps.push_back(x);  // ascending scan makes the rep minimal
    t.sizes.push_back(size);
    t.orders.push_back(g.element_order(x));
  }
  return t;
}

int power_class(const FiniteGroup& g, const ConjClassTable& t, int c, long k) {
  return t.class_of[g.power(t.reps[c], k)];
}

int element_order(const FiniteGroup& g, int x) { return g.element_order(x); }

int n_p_classes(const FiniteGroup& g, const ConjClassTable& t, long p, bool include_identity) {
  if (!is_prime(p)) throw input_error("n_p: " + std::to_string(p) + " is not prime");
  (void)g;
  int count = 0;
  for (int c = 0; c < t.count(); ++c) {
    if (t.orders[c] == 1) {
      if (include_identity) ++count;
    } else if (is_prime_power(t.orders[c], p)) {
      ++count;
    }
  }
  return count;
}

}  // namespace repring
