#include "repring/rfring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "repring/errors.hpp"

namespace repring {

AmalgamAnalysis analyze(const Amalgam& a) {
  AmalgamAnalysis ctx;
  ctx.amalgam = a;
  ctx.left_table = CharacterTable::compute(a.left);
  ctx.right_table = CharacterTable::compute(a.right);
  ctx.edge_table = CharacterTable::compute(a.edge);
  ctx.torsion = torsion_classes(a);
  return ctx;
}

PullbackLattice pullback_lattice(const AmalgamAnalysis& ctx) {
  const int k1 = ctx.left_table.count();
  const int k2 = ctx.right_table.count();
  const int h = ctx.edge_table.count();

  // Restriction-difference matrix: row per irreducible of either factor,
  // columns the irreducibles of the edge group, right block negated.
  IntMat diff(k1 + k2, h);
  for (int i = 0; i < k1; ++i) {
    ClassFunction res = restrict_along(ctx.left_table.row(i), ctx.amalgam.embed_left);
    diff.row(i) = decompose(ctx.edge_table, res).transpose();
  }
  for (int j = 0; j < k2; ++j) {
    ClassFunction res = restrict_along(ctx.right_table.row(j), ctx.amalgam.embed_right);
    diff.row(k1 + j) = -decompose(ctx.edge_table, res).transpose();
  }
  PullbackLattice out;
  out.basis = left_kernel(diff);
  out.left_count = k1;
  out.right_count = k2;
  return out;
}

namespace {

// Value of one pullback vector on one factor class, through the given side.
Cyclotomic evaluate_side(const AmalgamAnalysis& ctx, const IntVec& pullback_vec, Side side,
                         int factor_class) {
  const CharacterTable& table = ctx.table(side);
  const int offset = side == Side::Left ? 0 : ctx.left_table.count();
  Cyclotomic acc;
  for (int i = 0; i < table.count(); ++i) {
    const Int& c = pullback_vec(offset + i);
    if (c == 0) continue;
    acc += Rat(c) * table.value(i, factor_class);
  }
  return acc;
}

}  // namespace

RFRing build_ring(const AmalgamAnalysis& ctx, const std::vector<int>& torsion_indices,
                  const std::string& what) {
  RFRing ring;

  for (int ti : torsion_indices) {
    const FusedClass& fc = ctx.torsion.classes[ti];
    const FiniteGroup& g = ctx.amalgam.factor(fc.rep_side);
    RFRingColumn col;
    col.torsion_index = ti;
    col.order = fc.order;
    col.side = fc.rep_side;
    col.factor_class = fc.rep_class;
    col.rep_elt = fc.rep_elt;
    col.label = std::string(side_name(fc.rep_side)) + ":" + g.label(fc.rep_elt);
    ring.columns_.push_back(std::move(col));
  }
  const int n = static_cast<int>(ring.columns_.size());
  ring.conductor_ = 1;
  ring.col_offset_.resize(n);
  ring.col_width_.resize(n);
  int width = 0;
  for (int c = 0; c < n; ++c) {
    ring.conductor_ = static_cast<int>(lcm_long(ring.conductor_, ring.columns_[c].order));
    ring.col_offset_[c] = width;
    ring.col_width_[c] = static_cast<int>(euler_phi(ring.columns_[c].order));
    width += ring.col_width_[c];
  }

  PullbackLattice pullback = pullback_lattice(ctx);
  if (what == "rf_ring" && pullback.rank() != ctx.torsion.count()) {
    throw math_check_error("rf_ring: pullback rank " + std::to_string(pullback.rank()) +
                           " does not equal the torsion class count " +
                           std::to_string(ctx.torsion.count()));
  }

  // Evaluate every pullback basis vector as a character vector on the fused
  // classes. A fused class can be reached through any of its members; the
  // pullback condition forces all of them to agree, which is asserted.
  RatMat flat(pullback.rank(), width);
  CycMat raw_values(pullback.rank(), n);
  for (int r = 0; r < pullback.rank(); ++r) {
    IntVec vec = pullback.basis.row(r).transpose();
    for (int c = 0; c < n; ++c) {
      const FusedClass& fc = ctx.torsion.classes[ring.columns_[c].torsion_index];
      Cyclotomic value = evaluate_side(ctx, vec, fc.rep_side, fc.rep_class);
      for (const auto& [ms, mc] : fc.members) {
        Cyclotomic via_member = evaluate_side(ctx, vec, ms, mc);
        if (!(via_member == value))
          throw math_check_error(what +
                                 ": pullback vector takes different values on a fused class; "
                                 "fusion and restriction data disagree");
      }
      raw_values(r, c) = value;
      auto coords = ring.flatten_value(value, c);
      if (!coords)
        throw math_check_error(what + ": character value leaves the cyclotomic field of its class");
      flat.block(r, ring.col_offset_[c], 1, ring.col_width_[c]) = coords->transpose();
    }
  }

  auto [scaled, scale0] = clear_denominators(flat);
  IntMat hnf = hermite_normal_form(scaled);
  if (static_cast<int>(hnf.rows()) != n) {
    throw math_check_error(what + ": lattice rank " + std::to_string(hnf.rows()) +
                           " does not equal the class count " + std::to_string(n) +
                           " (rank deficiency)");
  }

  // Renormalize so the recorded scale is the least common denominator of the
  // canonical rational basis, independent of the generating set.
  RatMat canonical(n, width);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < width; ++j) canonical(i, j) = make_rat(hnf(i, j), scale0);
  auto [basis_int, scale] = clear_denominators(canonical);
  ring.basis_flat_ = std::move(basis_int);
  ring.scale_ = scale;
  ring.basis_rational_ = std::move(canonical);
  ring.solver_ = std::make_shared<RowSpaceSolver>(ring.basis_rational_);

  // Reconstitute the basis vectors as cyclotomic character vectors.
  ring.basis_values_ = CycMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c) {
      RatVec coeffs =
          ring.basis_rational_.block(i, ring.col_offset_[c], 1, ring.col_width_[c]).transpose();
      ring.basis_values_(i, c) = Cyclotomic(ring.columns_[c].order, std::move(coeffs));
    }

  // Unit coordinates: the all-ones character vector.
  {
    CycVec ones(n);
    for (int c = 0; c < n; ++c) ones(c) = Cyclotomic(Rat(1));
    RFRing::Membership m = ring.membership(ones);
    if (m.kind != RFRing::Membership::Kind::Lattice)
      throw math_check_error(what + ": the unit character vector is not in the lattice");
    ring.unit_ = m.coords;
  }

  // Structure constants by exact solves: basis_i * basis_j pointwise must
  // land back in the lattice.
  ring.sc_.assign(n, IntMat::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      CycVec prod(n);
      for (int c = 0; c < n; ++c) prod(c) = ring.basis_values_(i, c) * ring.basis_values_(j, c);
      RFRing::Membership m = ring.membership(prod);
      if (m.kind != RFRing::Membership::Kind::Lattice)
        throw math_check_error(what + ": basis product " + std::to_string(i) + "*" +
                               std::to_string(j) + " left the lattice (" + m.certificate + ")");
      for (int k = 0; k < n; ++k) {
        ring.sc_[i](j, k) = m.coords(k);
        ring.sc_[j](i, k) = m.coords(k);
      }
    }
  }

  // Associativity of the tensor, checked on all basis triples.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          Int lhs = 0, rhs = 0;
          for (int l = 0; l < n; ++l) {
            lhs += ring.sc_[i](j, l) * ring.sc_[l](k, m);
            rhs += ring.sc_[j](k, l) * ring.sc_[i](l, m);
          }
          if (lhs != rhs)
            throw math_check_error(what + ": structure constants fail associativity at (" +
                                   std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(k) + ")");
        }

  // Unit really is a two-sided unit for the tensor.
  for (int i = 0; i < n; ++i) {
    IntVec e = IntVec::Zero(n);
    e(i) = 1;
    if (ring.multiply(ring.unit_, e) != e)
      throw math_check_error(what + ": unit coordinates fail the unit law");
  }

  return ring;
}

RFRing rf_ring(const AmalgamAnalysis& ctx) {
  std::vector<int> all(ctx.torsion.count());
  for (int i = 0; i < ctx.torsion.count(); ++i) all[i] = i;
  return build_ring(ctx, all, "rf_ring");
}

RFRing rf_ring_p(const AmalgamAnalysis& ctx, long p) {
  if (!is_prime(p)) throw input_error("rf_ring_p: " + std::to_string(p) + " is not prime");
  std::vector<int> selected;
  for (int i = 0; i < ctx.torsion.count(); ++i)
    if (is_prime_power(ctx.torsion.classes[i].order, p)) selected.push_back(i);
  RFRing ring = build_ring(ctx, selected, "rf_ring_p");
  const int expected = n_p(ctx.torsion, p, true);
  if (ring.rank() != expected)
    throw math_check_error("rf_ring_p: rank " + std::to_string(ring.rank()) +
                           " does not equal n_p = " + std::to_string(expected));
  return ring;
}

IntVec RFRing::multiply(const IntVec& a, const IntVec& b) const {
  const int n = rank();
  IntVec out = IntVec::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b(j) == 0) continue;
      Int f = a(i) * b(j);
      for (int k = 0; k < n; ++k) out(k) += f * sc_[i](j, k);
    }
  }
  return out;
}

CycVec RFRing::value_of(const IntVec& coords) const {
  const int n = rank();
  CycVec out(n);
  for (int c = 0; c < n; ++c) {
    Cyclotomic acc;
    for (int i = 0; i < n; ++i) {
      if (coords(i) == 0) continue;
      acc += Rat(coords(i)) * basis_values_(i, c);
    }
    out(c) = acc;
  }
  return out;
}

std::optional<RatVec> RFRing::flatten_value(const Cyclotomic& v, int c) const {
  const int order = columns_[c].order;
  const int common = static_cast<int>(lcm_long(order, v.conductor()));
  auto lowered = v.lifted_to(common).lowered_to(order);
  if (!lowered) return std::nullopt;
  return lowered->coeffs();
}

RFRing::Membership RFRing::membership(const CycVec& values) const {
  const int n = rank();
  Membership out;
  if (values.size() != n) throw input_error("membership: wrong number of class values");
  RatVec flat(basis_rational_.cols());
  for (int c = 0; c < n; ++c) {
    auto coords = flatten_value(values(c), c);
    if (!coords) {
      out.kind = Membership::Kind::OutsideSpan;
      out.certificate = "value on class " + columns_[c].label + " lies outside Q(zeta_" +
                        std::to_string(columns_[c].order) + ")";
      return out;
    }
    flat.segment(col_offset_[c], col_width_[c]) = *coords;
  }
  auto x = solver_->solve(flat);
  if (!x) {
    out.kind = Membership::Kind::OutsideSpan;
    out.certificate = "character vector is outside the rational span of the lattice";
    return out;
  }
  if (!is_integral(*x)) {
    out.kind = Membership::Kind::SpanOnly;
    out.rational_coords = *x;
    std::ostringstream msg;
    msg << "non-integral coordinates:";
    for (int i = 0; i < x->size(); ++i)
      if (!is_integer((*x)(i))) msg << " b" << i << "=" << rat_to_string((*x)(i));
    out.certificate = msg.str();
    return out;
  }
  out.kind = Membership::Kind::Lattice;
  out.coords = to_integer_vector(*x);
  return out;
}

bool RFRing::same_lattice_as(const RFRing& other) const {
  if (rank() != other.rank()) return false;
  if (basis_rational_.rows() != other.basis_rational_.rows() ||
      basis_rational_.cols() != other.basis_rational_.cols())
    return false;
  return basis_rational_ == other.basis_rational_;
}

ElementEvalResult element_eval(const AmalgamAnalysis& ctx, const RFRing& ring,
                               const ClassFunction& left, const ClassFunction& right) {
  if (left.group != ctx.amalgam.left || right.group != ctx.amalgam.right)
    throw input_error("element_eval: class functions must live on the amalgam factors");

  // The pair must agree after restriction to the edge group.
  ClassFunction res_left = restrict_along(left, ctx.amalgam.embed_left);
  ClassFunction res_right = restrict_along(right, ctx.amalgam.embed_right);
  for (int c = 0; c < res_left.classes->count(); ++c) {
    if (!(res_left.values(c) == res_right.values(c))) {
      throw input_error("element_eval: incompatible pair, restrictions differ at edge class of " +
                        ctx.amalgam.edge->label(res_left.classes->reps[c]) + " (" +
                        res_left.values(c).to_string() + " vs " + res_right.values(c).to_string() +
                        ")");
    }
  }

  ElementEvalResult out;
  out.values = CycVec(ring.rank());
  for (int c = 0; c < ring.rank(); ++c) {
    const RFRingColumn& col = ring.columns()[c];
    if (col.side == Side::Left) {
      out.values(c) = left.values(col.factor_class);
    } else {
      out.values(c) = right.values(col.factor_class);
    }
  }
  out.membership = ring.membership(out.values);
  return out;
}

std::vector<int> power_map_columns(const AmalgamAnalysis& ctx, const RFRing& ring, long k) {
  for (const auto& col : ring.columns())
    if (gcd_long(k, col.order) != 1)
      throw input_error("power map exponent must be coprime to every class order");
  std::map<int, int> column_of_torsion;
  for (int c = 0; c < ring.rank(); ++c) column_of_torsion[ring.columns()[c].torsion_index] = c;
  std::vector<int> perm(ring.rank());
  for (int c = 0; c < ring.rank(); ++c) {
    const RFRingColumn& col = ring.columns()[c];
    const FiniteGroup& g = ctx.amalgam.factor(col.side);
    int powered = g.power(col.rep_elt, k);
    const ConjClassTable& classes =
        col.side == Side::Left ? ctx.torsion.left_classes : ctx.torsion.right_classes;
    int fused = ctx.torsion.fused_index(col.side, classes.class_of[powered]);
    auto it = column_of_torsion.find(fused);
    if (it == column_of_torsion.end())
      throw error("power map left the column set");  // cannot happen for coprime k
    perm[c] = it->second;
  }
  return perm;
}

CycVec apply_column_permutation(const CycVec& values, const std::vector<int>& perm) {
  CycVec out(values.size());
  for (int c = 0; c < values.size(); ++c) out(c) = values(perm[c]);
  return out;
}

CycVec conjugate_values(const CycVec& values) {
  CycVec out(values.size());
  for (int c = 0; c < values.size(); ++c) out(c) = values(c).conj();
  return out;
}

}  // namespace repring
