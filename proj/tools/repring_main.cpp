#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "repring/commands.hpp"
#include "repring/errors.hpp"

namespace {

struct GlobalArgs {
  std::string doc_path;
  std::string out_path;
  int cap = repring::kDefaultGroupCap;
  int oracle_bound = 6;
  bool exclude_identity_np = false;
  bool cap_set = false;
  bool bound_set = false;
};

repring::Workspace load_workspace(const GlobalArgs& g) {
  if (g.doc_path.empty()) throw repring::input_error("--doc FILE is required for this command");
  repring::Workspace ws = repring::Workspace::from_file(g.doc_path);
  repring::WorkspaceOptions opts = ws.options();
  if (g.cap_set) opts.cap = g.cap;
  if (g.bound_set) opts.oracle_bound = g.oracle_bound;
  if (g.exclude_identity_np) opts.include_identity_np = false;
  if (opts.cap != ws.options().cap) return repring::Workspace::from_file(g.doc_path, &opts);
  return repring::Workspace::from_file(g.doc_path, &opts);
}

int emit(const repring::CommandOutcome& outcome, const GlobalArgs& g) {
  std::string text = outcome.report.dump(2);
  if (!g.out_path.empty()) {
    std::ofstream out(g.out_path);
    if (!out) throw repring::input_error("cannot write " + g.out_path);
    out << text << "\n";
  } else {
    std::cout << text << "\n";
  }
  std::cerr << outcome.summary << "\n";
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"repring: exact representation rings of amalgams of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalArgs g;
  app.add_option("--doc", g.doc_path, "input document (JSON)");
  app.add_option("--out", g.out_path, "write the JSON report to a file instead of stdout");
  app.add_option("--cap", g.cap, "group size cap")->each([&](const std::string&) { g.cap_set = true; });
  app.add_option("--oracle-bound", g.oracle_bound, "conjugator syllable bound for the word oracle")
      ->each([&](const std::string&) { g.bound_set = true; });
  app.add_flag("--exclude-identity-np", g.exclude_identity_np,
               "count n_p without the identity class (sensitivity check)");

  // classes
  auto* classes = app.add_subcommand("classes", "fused torsion conjugacy classes of an amalgam");
  std::string classes_name;
  bool classes_oracle = false;
  classes->add_option("amalgam", classes_name, "amalgam name")->required();
  classes->add_flag("--check-oracle", classes_oracle,
                    "cross-check fusion against the bounded word oracle");

  // ring
  auto* ring = app.add_subcommand("ring", "the reduced representation ring lattice");
  std::string ring_name;
  long ring_prime = 0;
  ring->add_option("amalgam", ring_name, "amalgam name")->required();
  auto* ring_prime_opt = ring->add_option("--prime", ring_prime, "p-local variant");

  // verify
  auto* verify = app.add_subcommand("verify", "build a presented ring and certify an isomorphism");
  repring::VerifyArgs vargs;
  long verify_prime = 0;
  std::vector<std::string> map_entries;
  std::string verify_against;
  verify->add_option("presentation", vargs.presentation, "presentation name")->required();
  auto* against_opt = verify->add_option("--against", verify_against, "amalgam to certify against");
  auto* verify_prime_opt = verify->add_option("--prime", verify_prime, "use the p-local ring");
  verify->add_option("--map", map_entries, "generator image, e.g. w=1,0,-2,0 (repeatable)");
  verify->add_flag("--search-degree-one", vargs.search_degree_one,
                   "search generator images among degree-one character pairs");

  // ktheory
  auto* ktheory = app.add_subcommand("ktheory", "K-theory rank bookkeeping at a prime");
  std::string ktheory_name;
  long ktheory_prime = 0;
  ktheory->add_option("amalgam", ktheory_name, "amalgam name")->required();
  ktheory->add_option("--prime", ktheory_prime, "prime p")->required();

  // glrank
  auto* glrank = app.add_subcommand("glrank", "rank identity for the p-local ring of GL_{p-1}(Z)");
  long gl_p = 0, gl_cl = 0;
  std::string gl_orbits;
  glrank->add_option("--p", gl_p, "odd prime")->required();
  auto* gl_cl_opt = glrank->add_option("--class-number", gl_cl, "class number Cl(p)");
  glrank->add_option("--orbits", gl_orbits, "comma-separated Galois orbit sizes on ideal classes");

  // chartab
  auto* chartab = app.add_subcommand("chartab", "exact irreducible character table of a group");
  std::string chartab_name;
  chartab->add_option("group", chartab_name, "group name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    repring::CommandOutcome outcome;
    if (classes->parsed()) {
      outcome = repring::cmd_classes(load_workspace(g), classes_name, classes_oracle);
    } else if (ring->parsed()) {
      outcome = repring::cmd_ring(load_workspace(g), ring_name,
                                  ring_prime_opt->count() ? std::optional<long>(ring_prime)
                                                          : std::nullopt);
    } else if (verify->parsed()) {
      if (against_opt->count()) vargs.against = verify_against;
      if (verify_prime_opt->count()) vargs.prime = verify_prime;
      for (const auto& entry : map_entries) {
        auto eq = entry.find('=');
        if (eq == std::string::npos)
          throw repring::input_error("--map expects generator=coords, got \"" + entry + "\"");
        vargs.generator_map[entry.substr(0, eq)] = entry.substr(eq + 1);
      }
      outcome = repring::cmd_verify(load_workspace(g), vargs);
    } else if (ktheory->parsed()) {
      outcome = repring::cmd_ktheory(load_workspace(g), ktheory_name, ktheory_prime);
    } else if (glrank->parsed()) {
      std::vector<long> orbits;
      if (!gl_orbits.empty()) {
        std::istringstream in(gl_orbits);
        std::string tok;
        while (std::getline(in, tok, ',')) orbits.push_back(std::stol(tok));
      }
      outcome = repring::cmd_glrank(gl_p, gl_cl_opt->count() ? std::optional<long>(gl_cl)
                                                             : std::nullopt,
                                    std::move(orbits));
    } else if (chartab->parsed()) {
      outcome = repring::cmd_chartab(load_workspace(g), chartab_name);
    }
    return emit(outcome, g);
  } catch (const repring::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return repring::kExitInputError;
  } catch (const repring::math_check_error& e) {
    std::cerr << "math check failed: " << e.what() << "\n";
    return repring::kExitMathCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return repring::kExitInputError;
  }
}
