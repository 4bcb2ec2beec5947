#pragma once

#include <memory>
#include <vector>

#include "repring/cyclotomic.hpp"
#include "repring/group.hpp"

namespace repring {

/// A class function on a finite group: one cyclotomic value per conjugacy
/// class of the referenced class table.
struct ClassFunction {
  GroupPtr group;
  std::shared_ptr<const ConjClassTable> classes;
  CycVec values;
};

/// The complete table of irreducible characters of a finite group, exact
/// over cyclotomic fields. Rows are sorted by degree, then lexicographically
/// on the flattened coefficient vectors at the group exponent, which makes
/// the row order deterministic.
class CharacterTable {
 public:
  static CharacterTable compute(const GroupPtr& g);

  const GroupPtr& group() const { return group_; }
  const ConjClassTable& classes() const { return *classes_; }
  std::shared_ptr<const ConjClassTable> classes_ptr() const { return classes_; }

  int count() const { return static_cast<int>(rows_.rows()); }
  int degree(int i) const { return degrees_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }

  const Cyclotomic& value(int row, int cls) const { return rows_(row, cls); }
  const CycMat& values() const { return rows_; }

  ClassFunction row(int i) const;

 private:
  GroupPtr group_;
  std::shared_ptr<const ConjClassTable> classes_;
  CycMat rows_;
  std::vector<int> degrees_;
};

/// Pullback of a class function along a homomorphism: the value at a class
/// of the source is the value at the class of its image.
ClassFunction restrict_along(const ClassFunction& chi, const GroupHom& f);

/// (1/|G|) * sum over classes of size * chi * conj(psi). Both functions must
/// live on the same group. Throws math_check_error when the value is not
/// rational, which signals malformed inputs.
Rat inner_product(const ClassFunction& chi, const ClassFunction& psi);

/// Multiplicity vector of a class function in the irreducible basis; entries
/// must come out as integers or math_check_error is thrown.
IntVec decompose(const CharacterTable& table, const ClassFunction& chi);

ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b);

}  // namespace repring
