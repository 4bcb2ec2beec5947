#include "repring/amalgam.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "repring/errors.hpp"

namespace repring {

Amalgam make_amalgam(GroupPtr left, GroupPtr right, GroupPtr edge, GroupHom embed_left,
                     GroupHom embed_right) {
  if (embed_left.source != edge || embed_right.source != edge)
    throw input_error("make_amalgam: embedding source is not the edge group");
  if (embed_left.target != left)
    throw input_error("make_amalgam: left embedding target is not the left factor");
  if (embed_right.target != right)
    throw input_error("make_amalgam: right embedding target is not the right factor");
  if (!embed_left.injective || !embed_right.injective)
    throw input_error("make_amalgam: embeddings must be injective");
  return Amalgam{std::move(left), std::move(right), std::move(edge), std::move(embed_left),
                 std::move(embed_right)};
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

int TorsionClassSet::fused_index(Side side, int factor_class) const {
  for (int i = 0; i < count(); ++i)
    for (const auto& [s, c] : classes[i].members)
      if (s == side && c == factor_class) return i;
  throw error("fused_index: factor class not found");
}

TorsionClassSet torsion_classes(const Amalgam& a) {
  TorsionClassSet out;
  out.left_classes = conjugacy_classes(*a.left);
  out.right_classes = conjugacy_classes(*a.right);
  const int nl = out.left_classes.count();
  const int nr = out.right_classes.count();

  UnionFind uf(nl + nr);
  for (int h = 0; h < a.edge->order(); ++h) {
    int cl = out.left_classes.class_of[a.embed_left.apply(h)];
    int cr = out.right_classes.class_of[a.embed_right.apply(h)];
    if (uf.unite(cl, nl + cr))
      out.certificates.push_back(FusionStep{h, {Side::Left, cl}, {Side::Right, cr}});
  }

  std::map<int, FusedClass> by_root;
  for (int node = 0; node < nl + nr; ++node) {
    Side side = node < nl ? Side::Left : Side::Right;
    int cls = node < nl ? node : node - nl;
    by_root[uf.find(node)].members.emplace_back(side, cls);
  }
  for (auto& [root, fused] : by_root) {
    std::sort(fused.members.begin(), fused.members.end());
    const auto& [side, cls] = fused.members.front();  // Left < Right, then class id
    const ConjClassTable& table = side == Side::Left ? out.left_classes : out.right_classes;
    fused.rep_side = side;
    fused.rep_class = cls;
    fused.rep_elt = table.reps[cls];
    fused.order = table.orders[cls];
    for (const auto& [ms, mc] : fused.members) {
      const ConjClassTable& mt = ms == Side::Left ? out.left_classes : out.right_classes;
      if (mt.orders[mc] != fused.order)
        throw math_check_error("fused class mixes element orders; fusion data is inconsistent");
    }
    out.classes.push_back(std::move(fused));
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const FusedClass& x, const FusedClass& y) {
    if (x.order != y.order) return x.order < y.order;
    if (x.rep_side != y.rep_side) return x.rep_side == Side::Left;
    return x.rep_elt < y.rep_elt;
  });
  return out;
}

int n_torsion(const TorsionClassSet& t) { return t.count(); }

int n_p(const TorsionClassSet& t, long p, bool include_identity) {
  if (!is_prime(p)) throw input_error("n_p: " + std::to_string(p) + " is not prime");
  int count = 0;
  for (const auto& fc : t.classes) {
    if (fc.order == 1) {
      if (include_identity) ++count;
    } else if (is_prime_power(fc.order, p)) {
      ++count;
    }
  }
  return count;
}

AmalgamWords::AmalgamWords(const Amalgam& a) : amalgam_(a) {
  for (Side side : {Side::Left, Side::Right}) {
    const FiniteGroup& g = a.factor(side);
    const GroupHom& e = a.embedding(side);
    const int idx = side == Side::Left ? 0 : 1;
    coset_rep_[idx].assign(g.order(), -1);
    edge_part_[idx].assign(g.order(), -1);
    // Ascending scan: the first unassigned element is minimal in its coset.
    for (int t = 0; t < g.order(); ++t) {
      if (coset_rep_[idx][t] >= 0) continue;
      for (int h = 0; h < a.edge->order(); ++h) {
        int x = g.mul(e.apply(h), t);
        if (coset_rep_[idx][x] < 0) {
          coset_rep_[idx][x] = t;
          edge_part_[idx][x] = h;
        }
      }
      if (t != 0) transversal_[idx].push_back(t);
    }
  }
}

void AmalgamWords::push_edge_left(Word& w, int upto, int h) const {
  // The represented element is head * syll[0..upto-1] * iota(h) * rest;
  // move iota(h) through the first `upto` syllables into the head.
  for (int i = upto - 1; i >= 0; --i) {
    auto& [side, t] = w.syllables[i];
    const FiniteGroup& g = amalgam_.factor(side);
    int c = g.mul(t, amalgam_.embedding(side).apply(h));
    t = coset_rep(side)[c];
    h = edge_part(side)[c];
  }
  w.head = amalgam_.edge->mul(w.head, h);
}

void AmalgamWords::append_factor(Word& w, Side s, int g) const {
  if (g == 0) return;
  const FiniteGroup& factor = amalgam_.factor(s);
  if (w.syllables.empty()) {
    int c = factor.mul(amalgam_.embedding(s).apply(w.head), g);
    w.head = edge_part(s)[c];
    int t = coset_rep(s)[c];
    if (t != 0) w.syllables.emplace_back(s, t);
    return;
  }
  if (w.syllables.back().first == s) {
    int last = w.syllables.back().second;
    w.syllables.pop_back();
    int c = factor.mul(last, g);
    int h = edge_part(s)[c];
    int t = coset_rep(s)[c];
    push_edge_left(w, static_cast<int>(w.syllables.size()), h);
    if (t != 0) w.syllables.emplace_back(s, t);
    return;
  }
  int h = edge_part(s)[g];
  int t = coset_rep(s)[g];
  push_edge_left(w, static_cast<int>(w.syllables.size()), h);
  if (t != 0) w.syllables.emplace_back(s, t);
}

AmalgamWords::Word AmalgamWords::factor_element(Side s, int g) const {
  Word w;
  append_factor(w, s, g);
  return w;
}

AmalgamWords::Word AmalgamWords::multiply(const Word& a, const Word& b) const {
  Word out = a;
  append_factor(out, Side::Left, amalgam_.embed_left.apply(b.head));
  for (const auto& [s, t] : b.syllables) append_factor(out, s, t);
  return out;
}

AmalgamWords::Word AmalgamWords::inverse(const Word& w) const {
  Word out;
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it) {
    const auto& [s, t] = *it;
    append_factor(out, s, amalgam_.factor(s).inv(t));
  }
  append_factor(out, Side::Left, amalgam_.embed_left.apply(amalgam_.edge->inv(w.head)));
  return out;
}

std::string AmalgamWords::to_string(const Word& w) const {
  std::ostringstream out;
  out << "H:" << amalgam_.edge->label(w.head);
  for (const auto& [s, t] : w.syllables)
    out << " " << (s == Side::Left ? "L:" : "R:") << amalgam_.factor(s).label(t);
  return out.str();
}

AmalgamWords::OracleResult AmalgamWords::conjugacy_search(std::pair<Side, int> x,
                                                          std::pair<Side, int> y,
                                                          int bound) const {
  Word wx = factor_element(x.first, x.second);
  Word wy = factor_element(y.first, y.second);

  // Depth-first extension of alternating syllable sequences; heads are tried
  // at every leaf, so every normal form of length <= bound appears once,
  // in deterministic order.
  std::vector<std::pair<Side, int>> syllables;
  std::optional<Word> found;

  auto test_heads = [&]() {
    for (int h = 0; h < amalgam_.edge->order() && !found; ++h) {
      Word c{h, syllables};
      Word conj = multiply(multiply(c, wx), inverse(c));
      if (conj == wy) found = c;
    }
  };

  std::function<void(int)> extend = [&](int remaining) {
    if (found) return;
    test_heads();
    if (found || remaining == 0) return;
    for (Side s : {Side::Left, Side::Right}) {
      if (!syllables.empty() && syllables.back().first == s) continue;
      for (int t : transversal_[s == Side::Left ? 0 : 1]) {
        syllables.emplace_back(s, t);
        extend(remaining - 1);
        syllables.pop_back();
        if (found) return;
      }
    }
  };
  extend(bound);

  if (found) return OracleResult{Verdict::Conjugate, found};
  return OracleResult{Verdict::NotFoundWithinBound, std::nullopt};
}

}  // namespace repring
