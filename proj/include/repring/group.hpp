#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repring/numeric.hpp"

namespace repring {

inline constexpr int kDefaultGroupCap = 2000;

/// A finite group materialized as a full multiplication table. Element ids
/// are 0..order-1 with 0 the identity. Immutable after construction; safe to
/// share read-only across threads.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<int> mul_table, std::vector<std::string> labels,
              std::vector<int> generators, std::string name);

  int order() const { return order_; }
  int mul(int x, int y) const { return mul_[static_cast<size_t>(x) * order_ + y]; }
  int inv(int x) const { return inv_[x]; }

  /// x^k for any integer k.
  int power(int x, long k) const;

  /// Least k >= 1 with x^k = identity.
  int element_order(int x) const { return elt_order_[x]; }

  int exponent() const { return exponent_; }

  const std::string& label(int x) const { return labels_[x]; }
  std::optional<int> element_by_label(const std::string& label) const;
  const std::vector<int>& generators() const { return generators_; }
  const std::string& name() const { return name_; }

  /// Full associativity / identity / inverse audit of the table,
  /// quadratic-to-cubic in the order; meant for tests and input validation.
  bool validate(std::string* why = nullptr) const;

 private:
  int order_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> elt_order_;
  int exponent_;
  std::vector<std::string> labels_;
  std::vector<int> generators_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Permutation of {0..degree-1} as an image vector.
struct Permutation {
  std::vector<int> image;
};

/// Builds a permutation from 1-based disjoint-or-not cycles.
Permutation perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

GroupPtr make_cyclic(int n, int cap = kDefaultGroupCap);
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& k, int cap = kDefaultGroupCap);

/// Closure of the generators under composition, breadth-first from the
/// identity in generator order; element ids are discovery order.
GroupPtr from_permutations(int degree, const std::vector<Permutation>& gens,
                           int cap = kDefaultGroupCap);

/// A verified homomorphism between materialized groups.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> image;  // element id -> element id
  bool injective = false;

  int apply(int x) const { return image[x]; }
};

/// Extends generator images to the whole group and verifies the result is a
/// homomorphism. Throws input_error when a relation is violated (with a
/// witness pair) or when the given generators do not generate the source.
GroupHom hom(const GroupPtr& src, const GroupPtr& tgt,
             const std::vector<std::pair<int, int>>& gen_images);

GroupHom hom_by_labels(const GroupPtr& src, const GroupPtr& tgt,
                       const std::vector<std::pair<std::string, std::string>>& gen_images);

/// Conjugacy classes with deterministic numbering: class representatives are
/// the minimal element ids, classes ordered by representative id (so the
/// identity class is class 0).
struct ConjClassTable {
  std::vector<int> class_of;  // element id -> class index
  std::vector<int> reps;      // class index -> minimal element id
  std::vector<int> sizes;
  std::vector<int> orders;  // element order, constant on the class

  int count() const { return static_cast<int>(reps.size()); }
};

ConjClassTable conjugacy_classes(const FiniteGroup& g);

/// Class of rep(c)^k; the "power map" on classes.
int power_class(const FiniteGroup& g, const ConjClassTable& t, int c, long k);

int element_order(const FiniteGroup& g, int x);

/// Conjugacy classes of elements whose order is a power of p (p prime).
/// The identity class counts as p^0 unless include_identity is false.
int n_p_classes(const FiniteGroup& g, const ConjClassTable& t, long p,
                bool include_identity = true);

}  // namespace repring
