#include "repring/commands.hpp"

#include <sstream>

#include "repring/errors.hpp"

namespace repring {

namespace {

std::string orders_brace_list(const TorsionClassSet& t) {
  std::ostringstream out;
  out << "{";
  for (int i = 0; i < t.count(); ++i) out << (i ? "," : "") << t.classes[i].order;
  out << "}";
  return out.str();
}

}  // namespace

CommandOutcome cmd_classes(const Workspace& ws, const std::string& amalgam_name,
                           bool check_oracle) {
  const Amalgam& a = ws.amalgam(amalgam_name);
  AmalgamAnalysis ctx = analyze(a);
  CommandOutcome out;
  out.report = classes_json(amalgam_name, ctx);

  if (check_oracle) {
    // Cross-check fusion against the bounded-word conjugacy oracle on every
    // pair of factor-class representatives.
    AmalgamWords words(a);
    const int bound = ws.options().oracle_bound;
    std::vector<std::pair<Side, int>> reps;
    for (int c = 0; c < ctx.torsion.left_classes.count(); ++c)
      reps.emplace_back(Side::Left, ctx.torsion.left_classes.reps[c]);
    for (int c = 0; c < ctx.torsion.right_classes.count(); ++c)
      reps.emplace_back(Side::Right, ctx.torsion.right_classes.reps[c]);
    auto fused_of = [&](const std::pair<Side, int>& x) {
      const ConjClassTable& t =
          x.first == Side::Left ? ctx.torsion.left_classes : ctx.torsion.right_classes;
      return ctx.torsion.fused_index(x.first, t.class_of[x.second]);
    };
    int disagreements = 0;
    int pairs = 0;
    for (size_t i = 0; i < reps.size(); ++i) {
      for (size_t j = i; j < reps.size(); ++j) {
        ++pairs;
        bool fused = fused_of(reps[i]) == fused_of(reps[j]);
        auto verdict = words.conjugacy_search(reps[i], reps[j], bound);
        if (fused != (verdict.verdict == AmalgamWords::Verdict::Conjugate)) ++disagreements;
      }
    }
    out.report["oracle"] = Json{{"bound", bound}, {"pairs", pairs}, {"disagreements", disagreements}};
    if (disagreements > 0) {
      out.exit_code = kExitMathCheckFailed;
      out.summary = amalgam_name + ": fusion disagrees with the word oracle on " +
                    std::to_string(disagreements) + " pair(s)";
      return out;
    }
  }

  out.summary = amalgam_name + ": " + std::to_string(ctx.torsion.count()) +
                " torsion classes, orders " + orders_brace_list(ctx.torsion);
  return out;
}

CommandOutcome cmd_ring(const Workspace& ws, const std::string& amalgam_name,
                        std::optional<long> prime) {
  const Amalgam& a = ws.amalgam(amalgam_name);
  AmalgamAnalysis ctx = analyze(a);
  RFRing ring = prime ? rf_ring_p(ctx, *prime) : rf_ring(ctx);
  CommandOutcome out;
  out.report = ring_json(ring);
  out.report["amalgam"] = amalgam_name;
  if (prime) out.report["prime"] = *prime;
  std::ostringstream s;
  s << amalgam_name << ": " << (prime ? "R_F(" + std::to_string(*prime) + ")" : "R_F")
    << " has rank " << ring.rank();
  if (ring.rank() == 1) s << " (ring is Z)";
  out.summary = s.str();
  return out;
}

CommandOutcome cmd_chartab(const Workspace& ws, const std::string& group_name) {
  GroupPtr g = ws.group(group_name);
  CharacterTable table = CharacterTable::compute(g);
  CommandOutcome out;
  out.report = chartab_json(group_name, table);
  std::ostringstream s;
  s << group_name << ": " << table.count() << " irreducible characters, degrees";
  for (int d : table.degrees()) s << " " << d;
  out.summary = s.str();
  return out;
}

CommandOutcome cmd_ktheory(const Workspace& ws, const std::string& amalgam_name, long prime) {
  const Amalgam& a = ws.amalgam(amalgam_name);
  AmalgamAnalysis ctx = analyze(a);
  KReport r = k_ranks(ctx, prime, ws.options().include_identity_np);
  CommandOutcome out;
  out.report = kreport_json(r);
  out.report["amalgam"] = amalgam_name;
  std::ostringstream s;
  s << amalgam_name << ": p=" << prime << " v_p=" << r.v_p << " rank(K0)=" << r.rank_k0
    << " rank(K1)=" << r.rank_k1;
  out.summary = s.str();
  if (!r.v_p_nonnegative) {
    out.exit_code = kExitMathCheckFailed;
    out.summary += "  [flagged: v_p is negative]";
  }
  return out;
}

CommandOutcome cmd_glrank(std::optional<long> p, std::optional<long> class_number,
                          std::vector<long> orbit_sizes) {
  if (!p) throw input_error("glrank: --p is required");
  GLRankInput input;
  input.p = *p;
  if (class_number) {
    input.class_number = *class_number;
    input.orbit_sizes = std::move(orbit_sizes);
    if (input.orbit_sizes.empty())
      throw input_error("glrank: --orbits is required when --class-number is given");
  } else {
    // Fall back to the shipped reference table of small class numbers.
    bool found = false;
    for (const auto& row : small_prime_class_numbers()) {
      if (row.p == input.p) {
        input = row;
        found = true;
        break;
      }
    }
    if (!found)
      throw input_error("glrank: no reference class number for p=" + std::to_string(input.p) +
                        "; pass --class-number and --orbits");
  }
  GLRankReport r = gl_rank_check(input);
  CommandOutcome out;
  out.report = gl_report_json(r);
  std::ostringstream s;
  s << "p=" << r.p << " Cl=" << r.class_number << " t=" << r.t << ": rank " << r.rank_rf
    << (r.holds ? " == " : " != ") << "1+Cl=" << r.expected;
  out.summary = s.str();
  if (!r.holds) out.exit_code = kExitMathCheckFailed;
  return out;
}

namespace {

IntVec parse_coords(const std::string& text, int rank) {
  std::vector<Int> vals;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    if (cur.empty()) throw input_error("empty coordinate in \"" + text + "\"");
    try {
      vals.emplace_back(cur);
    } catch (const std::invalid_argument&) {
      throw input_error("coordinates must be integers, got \"" + cur + "\"");
    }
  }
  if (static_cast<int>(vals.size()) != rank)
    throw input_error("expected " + std::to_string(rank) + " coordinates, got " +
                      std::to_string(vals.size()));
  IntVec out(rank);
  for (int i = 0; i < rank; ++i) out(i) = vals[i];
  return out;
}

}  // namespace

CommandOutcome cmd_verify(const Workspace& ws, const VerifyArgs& args) {
  RingPresentation pres = parse_presentation(ws.presentation_text(args.presentation));
  RingModel model = build_model(pres);

  CommandOutcome out;
  out.report = Json{{"presentation", args.presentation},
                    {"kind", pres.kind == RingPresentation::Kind::UnivariateQuotient
                                 ? "univariate-quotient"
                                 : "linear-closed"},
                    {"model_rank", model.rank()},
                    {"basis", model.basis_labels}};

  if (!args.against) {
    out.report["mode"] = "presentation-only";
    out.summary = args.presentation + ": consistent " +
                  out.report["kind"].get<std::string>() + " model of rank " +
                  std::to_string(model.rank()) + " (presentation-only verification)";
    return out;
  }

  out.report["mode"] = "against-amalgam";
  out.report["against"] = *args.against;
  if (args.prime) out.report["prime"] = *args.prime;
  const Amalgam& a = ws.amalgam(*args.against);
  AmalgamAnalysis ctx = analyze(a);
  RFRing ring = args.prime ? rf_ring_p(ctx, *args.prime) : rf_ring(ctx);
  out.report["lattice_rank"] = ring.rank();

  CertifyResult result;
  if (args.search_degree_one) {
    DegreeOneSearchResult search = search_degree_one(model, pres, ctx, ring);
    out.report["search"] =
        Json{{"pairs_tried", search.pairs_tried},
             {"found", search.found},
             {"pair", search.found ? Json(search.pair_description) : Json(nullptr)}};
    result = search.result;
  } else {
    if (args.generator_map.size() != pres.generators.size())
      throw input_error("verify: need --map for every generator (or --search-degree-one)");
    std::vector<IntVec> images;
    for (const auto& g : pres.generators) {
      auto it = args.generator_map.find(g);
      if (it == args.generator_map.end())
        throw input_error("verify: missing --map for generator \"" + g + "\"");
      images.push_back(parse_coords(it->second, ring.rank()));
    }
    result = certify_isomorphism(model, pres, ring, images);
  }

  if (certified(result)) {
    const auto& cert = std::get<IsoCertificate>(result);
    out.report["certificate"] = certificate_json(cert);
    out.summary = args.presentation + " ~ " + *args.against + ": isomorphism certified, det " +
                  cert.det.get_str();
  } else {
    const auto& fail = std::get<IsoFailure>(result);
    out.report["failure"] = failure_json(fail);
    out.summary = args.presentation + " ~ " + *args.against +
                  ": certification failed (" + fail.detail + ")";
    out.exit_code = kExitMathCheckFailed;
  }
  return out;
}

}  // namespace repring
