#include "repring/json_io.hpp"

#include "repring/errors.hpp"

namespace repring {

Json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw input_error("expected a rational string");
  return rat_from_string(j.get<std::string>());
}

Json cyclotomic_json(const Cyclotomic& v) {
  Json coeffs = Json::array();
  for (int i = 0; i < v.coeffs().size(); ++i) coeffs.push_back(rat_json(v.coeffs()(i)));
  return Json{{"conductor", v.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
    throw input_error("malformed cyclotomic value");
  int m = j.at("conductor").get<int>();
  const Json& coeffs = j.at("coeffs");
  RatVec v(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) v(static_cast<int>(i)) = rat_from_json(coeffs[i]);
  return Cyclotomic(m, std::move(v));
}

Json int_vec_json(const IntVec& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i).get_str());
  return out;
}

IntVec int_vec_from_json(const Json& j) {
  IntVec out(j.size());
  for (size_t i = 0; i < j.size(); ++i) out(static_cast<int>(i)) = Int(j[i].get<std::string>());
  return out;
}

Json int_mat_json(const IntMat& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    out.push_back(row);
  }
  return out;
}

IntMat int_mat_from_json(const Json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
  IntMat out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) out(i, c) = Int(j[i][c].get<std::string>());
  return out;
}

Json chartab_json(const std::string& name, const CharacterTable& table) {
  const ConjClassTable& cls = table.classes();
  Json classes = Json::array();
  for (int c = 0; c < cls.count(); ++c) {
    classes.push_back(Json{{"rep", table.group()->label(cls.reps[c])},
                           {"size", cls.sizes[c]},
                           {"order", cls.orders[c]}});
  }
  Json rows = Json::array();
  for (int i = 0; i < table.count(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < table.count(); ++c) row.push_back(cyclotomic_json(table.value(i, c)));
    rows.push_back(row);
  }
  return Json{{"group", name},
              {"order", table.group()->order()},
              {"classes", classes},
              {"degrees", table.degrees()},
              {"irreducibles", rows}};
}

namespace {

Json fused_class_json(const AmalgamAnalysis& ctx, const FusedClass& fc) {
  Json members = Json::array();
  for (const auto& [side, cls] : fc.members) {
    const ConjClassTable& table =
        side == Side::Left ? ctx.torsion.left_classes : ctx.torsion.right_classes;
    const FiniteGroup& g = ctx.amalgam.factor(side);
    members.push_back(Json{{"side", side_name(side)},
                           {"rep", g.label(table.reps[cls])},
                           {"size", table.sizes[cls]}});
  }
  const FiniteGroup& g = ctx.amalgam.factor(fc.rep_side);
  return Json{{"order", fc.order},
              {"rep_side", side_name(fc.rep_side)},
              {"rep", g.label(fc.rep_elt)},
              {"members", members}};
}

}  // namespace

Json classes_json(const std::string& name, const AmalgamAnalysis& ctx) {
  Json classes = Json::array();
  for (const auto& fc : ctx.torsion.classes) classes.push_back(fused_class_json(ctx, fc));
  Json certs = Json::array();
  for (const auto& step : ctx.torsion.certificates) {
    certs.push_back(
        Json{{"edge", ctx.amalgam.edge->label(step.edge_elt)},
             {"left_class_rep",
              ctx.amalgam.left->label(ctx.torsion.left_classes.reps[step.from.second])},
             {"right_class_rep",
              ctx.amalgam.right->label(ctx.torsion.right_classes.reps[step.to.second])}});
  }
  Json orders = Json::array();
  for (const auto& fc : ctx.torsion.classes) orders.push_back(fc.order);
  return Json{{"amalgam", name},
              {"count", ctx.torsion.count()},
              {"orders", orders},
              {"classes", classes},
              {"fusion_certificates", certs}};
}

Json ring_json(const RFRing& ring) {
  Json columns = Json::array();
  for (const auto& col : ring.columns()) {
    columns.push_back(Json{{"order", col.order},
                           {"side", side_name(col.side)},
                           {"rep", col.label},
                           {"width", static_cast<int>(euler_phi(col.order))}});
  }
  // Canonical rational basis: HNF rows divided by the scale denominator.
  Json basis = Json::array();
  for (int i = 0; i < ring.basis_flat().rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < ring.basis_flat().cols(); ++j)
      row.push_back(rat_json(make_rat(ring.basis_flat()(i, j), ring.scale())));
    basis.push_back(row);
  }
  Json values = Json::array();
  for (int i = 0; i < ring.rank(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < ring.rank(); ++c) row.push_back(cyclotomic_json(ring.basis_values()(i, c)));
    values.push_back(row);
  }
  Json sc = Json::array();
  for (int i = 0; i < ring.rank(); ++i)
    for (int j = i; j < ring.rank(); ++j)
      for (int k = 0; k < ring.rank(); ++k) {
        const Int& c = ring.structure_constant(i, j, k);
        if (c != 0) sc.push_back(Json::array({i, j, k, c.get_str()}));
      }
  return Json{{"rank", ring.rank()},
              {"conductor", ring.conductor()},
              {"columns", columns},
              {"scale", ring.scale().get_str()},
              {"basis", basis},
              {"basis_values", values},
              {"unit", int_vec_json(ring.unit())},
              {"structure_constants", sc}};
}

Json ring_json_roundtrip(const Json& j) {
  // Parse every field back into exact in-memory values, then re-emit.
  int rank = j.at("rank").get<int>();
  int conductor = j.at("conductor").get<int>();
  Json columns = Json::array();
  for (const auto& col : j.at("columns")) {
    columns.push_back(Json{{"order", col.at("order").get<int>()},
                           {"side", col.at("side").get<std::string>()},
                           {"rep", col.at("rep").get<std::string>()},
                           {"width", col.at("width").get<int>()}});
  }
  Int scale(j.at("scale").get<std::string>());
  Json basis = Json::array();
  for (const auto& row : j.at("basis")) {
    Json out_row = Json::array();
    for (const auto& entry : row) out_row.push_back(rat_json(rat_from_json(entry)));
    basis.push_back(out_row);
  }
  Json values = Json::array();
  for (const auto& row : j.at("basis_values")) {
    Json out_row = Json::array();
    for (const auto& entry : row) out_row.push_back(cyclotomic_json(cyclotomic_from_json(entry)));
    values.push_back(out_row);
  }
  Json unit = int_vec_json(int_vec_from_json(j.at("unit")));
  Json sc = Json::array();
  for (const auto& triple : j.at("structure_constants")) {
    sc.push_back(Json::array({triple[0].get<int>(), triple[1].get<int>(), triple[2].get<int>(),
                              Int(triple[3].get<std::string>()).get_str()}));
  }
  return Json{{"rank", rank},         {"conductor", conductor},
              {"columns", columns},   {"scale", scale.get_str()},
              {"basis", basis},       {"basis_values", values},
              {"unit", unit},         {"structure_constants", sc}};
}

Json kreport_json(const KReport& r) {
  return Json{{"p", r.p},
              {"n_p_gamma", r.n_p_gamma},
              {"n_p_left", r.n_p_left},
              {"n_p_right", r.n_p_right},
              {"n_p_edge", r.n_p_edge},
              {"v_p", r.v_p},
              {"v_p_nonnegative", r.v_p_nonnegative},
              {"rank_K0", r.rank_k0},
              {"rank_K1", r.rank_k1},
              {"lattice_rank", r.lattice_rank},
              {"k0_matches_lattice", r.k0_matches_lattice}};
}

KReport kreport_from_json(const Json& j) {
  KReport r;
  r.p = j.at("p").get<long>();
  r.n_p_gamma = j.at("n_p_gamma").get<int>();
  r.n_p_left = j.at("n_p_left").get<int>();
  r.n_p_right = j.at("n_p_right").get<int>();
  r.n_p_edge = j.at("n_p_edge").get<int>();
  r.v_p = j.at("v_p").get<long>();
  r.v_p_nonnegative = j.at("v_p_nonnegative").get<bool>();
  r.rank_k0 = j.at("rank_K0").get<int>();
  r.rank_k1 = j.at("rank_K1").get<long>();
  r.lattice_rank = j.at("lattice_rank").get<int>();
  r.k0_matches_lattice = j.at("k0_matches_lattice").get<bool>();
  return r;
}

Json gl_report_json(const GLRankReport& r) {
  return Json{{"p", r.p},
              {"class_number", r.class_number},
              {"orbit_sizes", r.orbit_sizes},
              {"t", r.t},
              {"rank_invariants", r.rank_invariants},
              {"rank_rf", r.rank_rf},
              {"expected", r.expected},
              {"holds", r.holds}};
}

GLRankReport gl_report_from_json(const Json& j) {
  GLRankReport r;
  r.p = j.at("p").get<long>();
  r.class_number = j.at("class_number").get<long>();
  r.orbit_sizes = j.at("orbit_sizes").get<std::vector<long>>();
  r.t = j.at("t").get<long>();
  r.rank_invariants = j.at("rank_invariants").get<long>();
  r.rank_rf = j.at("rank_rf").get<long>();
  r.expected = j.at("expected").get<long>();
  r.holds = j.at("holds").get<bool>();
  return r;
}

Json certificate_json(const IsoCertificate& c) {
  Json residues = Json::array();
  for (const auto& r : c.relation_residues) residues.push_back(int_vec_json(r));
  Json images = Json::array();
  for (const auto& g : c.generator_images) images.push_back(int_vec_json(g));
  return Json{{"determinant", c.det.get_str()},
              {"change_of_basis", int_mat_json(c.change_of_basis)},
              {"relation_residues", residues},
              {"generator_images", images}};
}

IsoCertificate certificate_from_json(const Json& j) {
  IsoCertificate c;
  c.det = Int(j.at("determinant").get<std::string>());
  c.change_of_basis = int_mat_from_json(j.at("change_of_basis"));
  for (const auto& r : j.at("relation_residues")) c.relation_residues.push_back(int_vec_from_json(r));
  for (const auto& g : j.at("generator_images")) c.generator_images.push_back(int_vec_from_json(g));
  return c;
}

Json failure_json(const IsoFailure& f) {
  const char* stage = nullptr;
  switch (f.stage) {
    case IsoFailure::Stage::ImageNotInLattice: stage = "image-not-in-lattice"; break;
    case IsoFailure::Stage::RelationViolated: stage = "relation-violated"; break;
    case IsoFailure::Stage::RankMismatch: stage = "rank-mismatch"; break;
    case IsoFailure::Stage::IndexNotOne: stage = "index-not-one"; break;
  }
  Json out{{"stage", stage}, {"detail", f.detail}};
  if (f.stage == IsoFailure::Stage::IndexNotOne) out["index"] = f.index.get_str();
  if (f.stage == IsoFailure::Stage::RankMismatch) out["rank"] = f.rank;
  return out;
}

bool operator==(const KReport& a, const KReport& b) {
  return kreport_json(a) == kreport_json(b);
}

bool operator==(const GLRankReport& a, const GLRankReport& b) {
  return gl_report_json(a) == gl_report_json(b);
}

}  // namespace repring
