#pragma once

#include <string>
#include <vector>

#include "repring/amalgam.hpp"
#include "repring/character.hpp"
#include "repring/linalg.hpp"

namespace repring {

/// Everything about an amalgam that the ring constructions consume:
/// factor/edge character tables and the fused torsion classes. Computed once
/// and shared between operations.
struct AmalgamAnalysis {
  Amalgam amalgam;
  CharacterTable left_table;
  CharacterTable right_table;
  CharacterTable edge_table;
  TorsionClassSet torsion;

  const CharacterTable& table(Side s) const {
    return s == Side::Left ? left_table : right_table;
  }
};

AmalgamAnalysis analyze(const Amalgam& a);

/// Integer kernel of the restriction-difference map
/// R(G1) (+) R(G2) -> R(H), (x, y) |-> res x - res y, in the irreducible
/// character coordinates of the three groups. Rows are a canonical (Hermite
/// normal form) basis; the first left_count coordinates belong to R(G1).
struct PullbackLattice {
  IntMat basis;
  int left_count = 0;
  int right_count = 0;

  int rank() const { return static_cast<int>(basis.rows()); }
};

PullbackLattice pullback_lattice(const AmalgamAnalysis& ctx);

struct RFRingColumn {
  int torsion_index;  // index into AmalgamAnalysis::torsion.classes
  int order;
  Side side;
  int factor_class;
  int rep_elt;
  std::string label;
};

/// The reduced representation ring of the amalgam (or its p-local variant)
/// as an integer lattice of character vectors on the torsion classes, with
/// unit coordinates and multiplicative structure constants.
///
/// Character vectors are flattened column by column: the value on a class of
/// element order o lies in Q(zeta_o) and contributes phi(o) rational
/// coordinates. The canonical basis is the row Hermite normal form after
/// clearing one global denominator (the recorded scale).
class RFRing {
 public:
  int rank() const { return static_cast<int>(basis_flat_.rows()); }
  const std::vector<RFRingColumn>& columns() const { return columns_; }
  int conductor() const { return conductor_; }

  const CycMat& basis_values() const { return basis_values_; }
  const IntMat& basis_flat() const { return basis_flat_; }
  const Int& scale() const { return scale_; }
  const IntVec& unit() const { return unit_; }

  const Int& structure_constant(int i, int j, int k) const { return sc_[i](j, k); }
  const std::vector<IntMat>& structure_constants() const { return sc_; }

  /// Product of two elements given in basis coordinates.
  IntVec multiply(const IntVec& a, const IntVec& b) const;

  /// Character vector of an element given in basis coordinates.
  CycVec value_of(const IntVec& coords) const;

  struct Membership {
    enum class Kind { Lattice, SpanOnly, OutsideSpan } kind;
    IntVec coords;            // when in the lattice
    RatVec rational_coords;   // when only in the rational span
    std::string certificate;  // why not, otherwise
  };

  /// Tests a character vector for membership in the lattice.
  Membership membership(const CycVec& values) const;

  /// Flattens one value at the conductor of column c; empty when the value
  /// does not lie in Q(zeta_order).
  std::optional<RatVec> flatten_value(const Cyclotomic& v, int c) const;

  friend RFRing build_ring(const AmalgamAnalysis& ctx, const std::vector<int>& torsion_indices,
                           const std::string& what);

  bool same_lattice_as(const RFRing& other) const;

 private:
  std::vector<RFRingColumn> columns_;
  int conductor_ = 1;
  CycMat basis_values_;
  IntMat basis_flat_;
  Int scale_ = 1;
  RatMat basis_rational_;
  IntVec unit_;
  std::vector<IntMat> sc_;
  std::vector<int> col_offset_;  // flattened offset per column
  std::vector<int> col_width_;
  std::shared_ptr<RowSpaceSolver> solver_;
};

/// R_F of the amalgam on all torsion classes; rank must equal the number of
/// torsion classes, otherwise a math_check_error is raised.
RFRing rf_ring(const AmalgamAnalysis& ctx);

/// p-local variant on the classes of p-power order; rank must equal n_p.
RFRing rf_ring_p(const AmalgamAnalysis& ctx, long p);

/// Evaluation of a compatible pair of factor class functions on the fused
/// classes, with lattice membership of the resulting character vector.
struct ElementEvalResult {
  CycVec values;
  RFRing::Membership membership;
};

ElementEvalResult element_eval(const AmalgamAnalysis& ctx, const RFRing& ring,
                               const ClassFunction& left, const ClassFunction& right);

/// Column permutation induced by the power map class |-> class of rep^k;
/// k must be coprime to every column order. perm[c] is the column whose
/// class contains rep(c)^k, so applying the map sends value vector v to
/// v' with v'[c] = v[perm[c]].
std::vector<int> power_map_columns(const AmalgamAnalysis& ctx, const RFRing& ring, long k);

CycVec apply_column_permutation(const CycVec& values, const std::vector<int>& perm);

CycVec conjugate_values(const CycVec& values);

}  // namespace repring
