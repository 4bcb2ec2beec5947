#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repring/group.hpp"

namespace repring {

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

/// An amalgamated product of finite groups, G1 *_H G2, presented by the two
/// factor groups, the edge group, and injective embeddings of the edge into
/// each factor.
struct Amalgam {
  GroupPtr left;
  GroupPtr right;
  GroupPtr edge;
  GroupHom embed_left;
  GroupHom embed_right;

  const FiniteGroup& factor(Side s) const { return s == Side::Left ? *left : *right; }
  const GroupHom& embedding(Side s) const { return s == Side::Left ? embed_left : embed_right; }
};

/// Validates sources, targets and injectivity of the two embeddings.
Amalgam make_amalgam(GroupPtr left, GroupPtr right, GroupPtr edge, GroupHom embed_left,
                     GroupHom embed_right);

/// A record of one union performed during fusion: conjugating by chains of
/// such steps witnesses why the two factor classes are identified.
struct FusionStep {
  int edge_elt;
  std::pair<Side, int> from;  // (side, factor class) of the left image
  std::pair<Side, int> to;    // (side, factor class) of the right image
};

struct FusedClass {
  std::vector<std::pair<Side, int>> members;  // (side, factor class), sorted
  Side rep_side;
  int rep_class;  // factor class index of the representative
  int rep_elt;    // factor element id of the representative
  int order;
};

/// The conjugacy classes of finite-order elements of the amalgam, obtained
/// by fusing factor classes along the edge group. Classes are listed in the
/// canonical order (element order, side, representative id).
struct TorsionClassSet {
  std::vector<FusedClass> classes;
  std::vector<FusionStep> certificates;
  ConjClassTable left_classes;
  ConjClassTable right_classes;

  int count() const { return static_cast<int>(classes.size()); }

  /// Index of the fused class containing a factor class.
  int fused_index(Side side, int factor_class) const;
};

/// Disjoint union of the factor class sets, merged through every edge
/// element: for h in H, the class of e1(h) in G1 fuses with the class of
/// e2(h) in G2. In an amalgam of finite groups every finite-order element is
/// conjugate into a factor and two factor elements are conjugate iff linked
/// by such a chain, so this enumeration is exact.
TorsionClassSet torsion_classes(const Amalgam& a);

int n_torsion(const TorsionClassSet& t);

/// Fused classes of p-power element order. The identity class counts as p^0
/// unless include_identity is false.
int n_p(const TorsionClassSet& t, long p, bool include_identity = true);

/// Reduced words of the amalgam with respect to fixed coset representatives
/// (the minimal element id in each coset of the embedded edge group). Words
/// serve as an independent conjugacy oracle for cross-checking fusion.
class AmalgamWords {
 public:
  explicit AmalgamWords(const Amalgam& a);

  /// Normal form h * t_1 * ... * t_n: an edge head followed by alternating
  /// nontrivial coset representatives.
  struct Word {
    int head = 0;
    std::vector<std::pair<Side, int>> syllables;

    bool operator==(const Word& o) const = default;
  };

  Word identity() const { return Word{}; }
  Word factor_element(Side s, int g) const;
  Word multiply(const Word& a, const Word& b) const;
  Word inverse(const Word& w) const;

  std::string to_string(const Word& w) const;

  enum class Verdict { Conjugate, NotFoundWithinBound };
  struct OracleResult {
    Verdict verdict;
    std::optional<Word> conjugator;
  };

  /// Searches all conjugators of syllable length <= bound, in deterministic
  /// order, for c with c x c^-1 = y.
  OracleResult conjugacy_search(std::pair<Side, int> x, std::pair<Side, int> y, int bound) const;

 private:
  const Amalgam& amalgam_;
  // Per side: right-coset decomposition g = embed(h) * t with t the minimal
  // element id in its coset.
  std::vector<int> coset_rep_[2];
  std::vector<int> edge_part_[2];
  std::vector<int> transversal_[2];  // nontrivial representatives, ascending

  const std::vector<int>& coset_rep(Side s) const { return coset_rep_[s == Side::Left ? 0 : 1]; }
  const std::vector<int>& edge_part(Side s) const { return edge_part_[s == Side::Left ? 0 : 1]; }

  void append_factor(Word& w, Side s, int g) const;
  void push_edge_left(Word& w, int upto, int h) const;
};

}  // namespace repring
