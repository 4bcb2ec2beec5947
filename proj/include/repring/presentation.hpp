#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "repring/rfring.hpp"

namespace repring {

/// Integer multivariate polynomial in named generators, used only for
/// presentation parsing and normalization.
struct Poly {
  // exponent vector (one entry per generator) -> coefficient
  std::map<std::vector<int>, Int> terms;

  static Poly constant(int ngens, const Int& c);
  static Poly generator(int ngens, int index);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly pow(long e) const;
  Poly operator-() const;

  bool is_zero() const;
  int total_degree() const;
  std::string to_string(const std::vector<std::string>& gens) const;
};

/// A finitely presented commutative ring over Z, restricted to the two
/// shapes the verifier can model exactly:
///  - univariate-quotient: Z[w] / (monic polynomial),
///  - linear-closed: every degree-2 monomial in the generators rewrites to
///    an affine integer combination of {1} and the generators, one rule per
///    unordered generator pair.
struct RingPresentation {
  enum class Kind { UnivariateQuotient, LinearClosed };

  std::vector<std::string> generators;
  std::vector<Poly> relations;  // normalized to p = 0
  Kind kind;

  // univariate-quotient: monic ascending coefficients, degree >= 1
  std::vector<Int> monic;

  // linear-closed: rule for pair i <= j, as an affine vector of length
  // generators.size() + 1 (constant first)
  std::map<std::pair<int, int>, IntVec> rules;

  std::string text;  // original source
};

/// Parses the grammar
///   ring Z[g1,...,gk] / rel ; rel ; ...
/// where rel is poly = poly (= poly ...), with integer coefficients,
/// ^ powers, * products, + and -, parentheses, and arbitrary (Unicode)
/// generator names. Throws input_error with a byte position on syntax
/// errors, and when the presentation fits neither supported kind.
RingPresentation parse_presentation(const std::string& text);

/// A structure-constant model of a presented ring on an explicit spanning
/// basis: closure, commutativity, associativity and the unit law are all
/// machine-checked at construction.
struct RingModel {
  std::vector<std::string> basis_labels;
  std::vector<IntMat> sc;  // sc[i](j,k)
  int unit_index = 0;

  int rank() const { return static_cast<int>(basis_labels.size()); }
  IntVec multiply(const IntVec& a, const IntVec& b) const;
};

/// Univariate: basis 1, w, .., w^{d-1} with companion-matrix products.
/// Linear-closed: basis {1} union generators with the given rules;
/// associativity is verified on all generator triples and failures carry a
/// witness triple.
RingModel build_model(const RingPresentation& p);

/// A machine-checkable isomorphism certificate: the change-of-basis matrix
/// from the mapped model basis to the ring's lattice basis, its determinant
/// (+-1 on success), and the relation residues (all zero on success).
struct IsoCertificate {
  IntMat change_of_basis;
  Int det;
  std::vector<IntVec> relation_residues;  // in ring coordinates
  std::vector<IntVec> generator_images;
};

struct IsoFailure {
  enum class Stage { ImageNotInLattice, RelationViolated, RankMismatch, IndexNotOne };
  Stage stage;
  std::string detail;
  Int index = 0;     // |det| when IndexNotOne
  int rank = -1;     // mapped-basis rank when RankMismatch
};

using CertifyResult = std::variant<IsoCertificate, IsoFailure>;

bool certified(const CertifyResult& r);

/// Checks that mapping the model generators to the given lattice elements
/// defines a unital ring isomorphism onto the full lattice: relations vanish,
/// the mapped basis lies in the lattice, and the change of basis has
/// determinant +-1.
CertifyResult certify_isomorphism(const RingModel& model, const RingPresentation& pres,
                                  const RFRing& ring, const std::vector<IntVec>& gen_images);

/// Tries every compatible pair of degree-one characters of the two factors
/// as the image of the single generator of a univariate presentation.
/// Returns the first certificate found together with the pair description.
struct DegreeOneSearchResult {
  bool found = false;
  CertifyResult result;
  std::string pair_description;
  int pairs_tried = 0;
};

DegreeOneSearchResult search_degree_one(const RingModel& model, const RingPresentation& pres,
                                        const AmalgamAnalysis& ctx, const RFRing& ring);

}  // namespace repring
