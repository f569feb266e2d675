// bsym: batch front end. Every subcommand prints one JSON report
// {command, inputs, pass, details, runtime_ms} on stdout.
//
// Exit codes: 0 pass, 1 fail, 2 usage error, 3 precondition violation.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bsym/birkhoff.hpp"
#include "bsym/cd_lattice.hpp"
#include "bsym/comb_sym.hpp"
#include "bsym/error.hpp"
#include "bsym/gamma.hpp"
#include "bsym/groups.hpp"
#include "bsym/hull.hpp"
#include "bsym/io.hpp"
#include "bsym/rep_poly.hpp"
#include "bsym/subgroups.hpp"

namespace {

using bsym::io::json;

struct Outcome {
  bool pass = false;
  json details = json::object();
};

struct Options {
  std::size_t n = 0;
  std::string group = "s3";
  std::size_t bound = bsym::kDefaultSubgroupBound;
  std::string alpha_file;
  bool identity = false;
  std::vector<std::string> catalog_files;
  std::string input;
  bool json_output = true;
};

bsym::PermutationGroup resolve_group(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return bsym::parse_group_text(bsym::io::read_file(spec));
  return bsym::named_group(spec);
}

json subgroup_json(const bsym::PermutationGroup& h) {
  json gens = json::array();
  for (const auto& g : h.generators()) gens.push_back(g.perm.cycle_string());
  return {{"label", bsym::group_label(h)}, {"order", h.order()}, {"generators", gens}};
}

json decomposition_json(const bsym::SymmetryDecomposition& d) {
  return {{"sigma", d.sigma.cycle_string()}, {"tau", d.tau.cycle_string()}, {"epsilon", d.epsilon}};
}

json failures_json(const std::vector<std::string>& failures) {
  json out = json::array();
  for (const auto& f : failures) out.push_back(f);
  return out;
}

Outcome run_check_report(const bsym::CheckReport& r) {
  return {r.pass, {{"checked", r.checked}, {"failures", failures_json(r.failures)}}};
}

Outcome verify_symmetry_group(const Options& o) {
  const auto r = bsym::verify_symmetry_group(o.n);
  json gens = json::array();
  for (const auto& [alpha, d] : r.generator_decompositions) {
    json g = decomposition_json(d);
    g["alpha"] = alpha.cycle_string();
    gens.push_back(g);
  }
  return {r.pass,
          {{"order", r.order},
           {"expected_order", r.expected_order},
           {"hull_dimension", r.hull_dimension},
           {"hull_facets", r.hull_facets},
           {"facets_match_analytic", r.facets_match_analytic},
           {"decomposed", r.decomposed},
           {"generators", gens},
           {"failures", failures_json(r.failures)}}};
}

Outcome decompose(const Options& o) {
  const bsym::BirkhoffIndex index(o.n);
  bsym::Permutation alpha;
  if (o.identity) {
    alpha = bsym::Permutation::identity(index.size());
  } else if (!o.alpha_file.empty()) {
    alpha = bsym::io::parse_alpha_text(bsym::io::read_file(o.alpha_file));
  } else {
    throw bsym::PreconditionError("decompose needs an alpha file or --identity");
  }
  try {
    const auto d = bsym::decompose_symmetry(o.n, alpha);
    return {true, decomposition_json(d)};
  } catch (const bsym::DecompositionError& e) {
    return {false, {{"error", e.what()}, {"failures", json::array({e.what()})}}};
  }
}

Outcome cd_lattice(const Options& o) {
  const auto g = resolve_group(o.group);
  const auto r = bsym::cd_lattice(g, o.bound);
  json labels = json::array();
  json members = json::array();
  for (const auto& h : r.lattice) {
    labels.push_back(bsym::group_label(h));
    members.push_back(subgroup_json(h));
  }
  const bool pass = r.closure_pass && r.subnormal_pass;
  return {pass,
          {{"group_order", g.order()},
           {"subgroup_count", r.subgroup_count},
           {"max_measure", r.max_measure},
           {"lattice", labels},
           {"members", members},
           {"closure_pass", r.closure_pass},
           {"subnormal_pass", r.subnormal_pass},
           {"failures", failures_json(r.failures)}}};
}

Outcome sn_cent_est(const Options& o) {
  const auto r = bsym::verify_sn_cent_est(o.n, o.bound);
  return {r.pass,
          {{"group_order", r.group_order},
           {"subgroup_count", r.subgroup_count},
           {"max_measure", r.max_measure},
           {"equality_orders", r.equality_orders},
           {"failures", failures_json(r.failures)}}};
}

Outcome wreath(const Options& o) {
  const auto r = bsym::verify_wreath_quotient(resolve_group(o.group));
  json details = {{"group_order", r.group_order},
                  {"center_order", r.center_order},
                  {"formula_order", r.formula_order},
                  {"actual_order", r.actual_order},
                  {"hypothesis_holds", r.hypothesis_holds},
                  {"kernel_check", r.kernel_check},
                  {"status", r.status}};
  if (!r.pass) details["failures"] = json::array({"actual order differs from the formula"});
  return {r.pass, details};
}

Outcome regular_pairs(const Options& o) {
  const auto g = resolve_group(o.group);
  const auto r = bsym::commuting_regular_pairs(g);
  auto describe = [&](const bsym::PermutationGroup& u) {
    json j = subgroup_json(u);
    if (u == r.gamma.lambda_sub) j["role"] = "lambda";
    if (u == r.gamma.rho_sub) j["role"] = "rho";
    if (auto proj = bsym::lambda_rho_projection_orders(r.gamma, u)) {
      j["projection_orders"] = {proj->first, proj->second};
    }
    return j;
  };
  json pairs = json::array();
  bool lambda_rho_found = false;
  for (const auto& [a, b] : r.pairs) {
    const auto& u = r.regular[a];
    const auto& v = r.regular[b];
    lambda_rho_found |= (u == r.gamma.lambda_sub && v == r.gamma.rho_sub) ||
                        (u == r.gamma.rho_sub && v == r.gamma.lambda_sub);
    pairs.push_back({{"u", describe(u)}, {"v", describe(v)}, {"self_paired", a == b}});
  }
  json details = {{"gamma_order", r.gamma.gamma.order()},
                  {"regular_count", r.regular.size()},
                  {"pair_count", r.pairs.size()},
                  {"pairs", pairs}};
  if (!lambda_rho_found) details["failures"] = json::array({"lambda(G), rho(G) not found among the pairs"});
  return {lambda_rho_found, details};
}

Outcome normalizer(const Options& o) {
  const auto r = bsym::normalizer_in_full_symmetric(resolve_group(o.group));
  json details = {{"normalizer_order", r.normalizer_order},
                  {"automorphism_order", r.automorphism_order},
                  {"aut_gamma_order", r.aut_gamma_order},
                  {"gamma_order", r.gamma_order}};
  if (!r.pass) details["failures"] = json::array({"normalizer differs from Aut(G) Gamma(G)"});
  return {r.pass, details};
}

Outcome uniqueness(const Options& o) {
  std::vector<bsym::CatalogEntry> catalog;
  if (o.catalog_files.empty()) {
    catalog = bsym::default_catalog(o.n);
  } else {
    for (const auto& f : o.catalog_files) catalog.push_back(bsym::io::matrix_group_from_json(bsym::io::read_json_file(f)));
  }
  const auto entries = bsym::uniqueness_check(o.n, catalog);
  json out = json::array();
  std::vector<std::string> failures;
  for (const auto& e : entries) {
    json j = {{"name", e.name},
              {"group_order", e.group_order},
              {"dimension", e.dimension},
              {"facets", e.n_facets},
              {"equivalent_to_birkhoff", e.equivalent_to_birkhoff},
              {"witness", e.witness ? bsym::io::images_json(*e.witness) : json("none")}};
    if (e.equivalent_to_birkhoff) {
      j["automorphisms_conjugate"] = e.automorphisms_conjugate;
      if (!e.automorphisms_conjugate) failures.push_back(e.name + ": automorphism groups not conjugate");
    }
    out.push_back(j);
  }
  return {failures.empty(), {{"entries", out}, {"failures", failures_json(failures)}}};
}

Outcome hull(const Options& o) {
  const auto vertices = bsym::io::polytope_vertices_from_json(bsym::io::read_json_file(o.input));
  const auto p = bsym::facet_enumeration(vertices);
  json details = bsym::io::polytope_to_json(p);
  details["non_vertices"] = bsym::non_vertices(p);
  return {true, details};
}

Outcome rep_polytope(const Options& o) {
  bsym::CatalogEntry entry;
  bool found = false;
  if (std::filesystem::is_regular_file(o.input)) {
    entry = bsym::io::matrix_group_from_json(bsym::io::read_json_file(o.input));
    found = true;
  } else {
    for (std::size_t n : {3, 4}) {
      for (auto& e : bsym::default_catalog(n)) {
        if (!found && e.name == o.input) {
          entry = std::move(e);
          found = true;
        }
      }
    }
  }
  if (!found) throw bsym::PreconditionError("no matrix group file or catalog entry named '" + o.input + "'");
  const auto m = bsym::build_catalog_entry(entry);
  const auto p = bsym::representation_polytope(m);
  const auto g = bsym::verify_gamma_acts(m);
  json details = {{"name", m.name},
                  {"group_order", m.order()},
                  {"matrix_dim", m.dim},
                  {"polytope", bsym::io::polytope_to_json(p)},
                  {"non_vertices", bsym::non_vertices(p)},
                  {"automorphism_order", g.automorphism_order},
                  {"lambda_pass", g.lambda_pass},
                  {"rho_pass", g.rho_pass},
                  {"iota_member", g.iota_member},
                  {"iota_by_transpose", g.iota_by_transpose},
                  {"failures", failures_json(g.failures)}};
  return {g.pass, details};
}

json inputs_json(const std::string& command, const Options& o) {
  json in = json::object();
  if (command == "verify-table" || command == "verify-transform" || command == "verify-symmetry-group" ||
      command == "decompose" || command == "sn-cent-est" || command == "uniqueness") {
    in["n"] = o.n;
  }
  if (command == "cd-lattice" || command == "wreath" || command == "regular-pairs" || command == "normalizer") {
    in["group"] = o.group;
  }
  if (command == "cd-lattice" || command == "sn-cent-est") in["bound"] = o.bound;
  if (command == "decompose") {
    in["identity"] = o.identity;
    if (!o.alpha_file.empty()) in["alpha"] = o.alpha_file;
  }
  if (command == "uniqueness") in["catalog"] = o.catalog_files;
  if (command == "hull" || command == "rep-polytope") in["input"] = o.input;
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Birkhoff polytope symmetries and representation polytopes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json,!--no-json", o.json_output, "Emit the JSON report (default); --no-json prints one summary line");

  using Handler = std::function<Outcome(const Options&)>;
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers.emplace_back(sub, std::move(h));
    return sub;
  };

  auto* table = add("verify-table", "Intersection sizes |A_ij n A_kl| for n in 3..5",
                    [](const Options& opt) { return run_check_report(bsym::verify_intersection_table(opt.n)); });
  table->add_option("n", o.n, "Matrix size")->required();

  auto* transform = add("verify-transform", "Transformation law of the sets A_ij for n in 3..4",
                        [](const Options& opt) { return run_check_report(bsym::verify_transformation_law(opt.n)); });
  transform->add_option("n", o.n, "Matrix size")->required();

  auto* symgroup = add("verify-symmetry-group", "Hull, automorphism group and decompositions of B_n", verify_symmetry_group);
  symgroup->add_option("n", o.n, "Matrix size (3 or 4)")->required();

  auto* dec = add("decompose", "Write a vertex symmetry of B_n as pi -> sigma pi^e tau", decompose);
  dec->add_option("n", o.n, "Matrix size")->required();
  dec->add_option("alpha-file", o.alpha_file, "File with n! 0-based vertex images, one per line");
  dec->add_option("--alpha", o.alpha_file, "Same as the positional alpha file");
  dec->add_flag("--identity", o.identity, "Decompose the identity symmetry");

  auto* cd = add("cd-lattice", "Chermak-Delgado lattice with closure and subnormality checks", cd_lattice);
  cd->add_option("--group", o.group, "Built-in group name or generator file")->required();
  cd->add_option("--bound", o.bound, "Largest group order for subgroup enumeration");

  auto* sn = add("sn-cent-est", "|U||C(U)| <= n! over all subgroups of S_n", sn_cent_est);
  sn->add_option("n", o.n, "4 or 5")->required();
  sn->add_option("--bound", o.bound, "Largest group order for subgroup enumeration");

  auto* wr = add("wreath", "|Gamma(G)| against 2|G|^2/|Z(G)|", wreath);
  wr->add_option("--group", o.group, "Built-in group name or generator file")->required();

  auto* rp = add("regular-pairs", "Mutually centralizing regular subgroups of Gamma(G)", regular_pairs);
  rp->add_option("--group", o.group, "Built-in group name or generator file")->required();

  auto* nz = add("normalizer", "Normalizer of Gamma(G) in Sym(G)", normalizer);
  nz->add_option("--group", o.group, "Built-in group name or generator file")->required();

  auto* un = add("uniqueness", "Representation polytopes combinatorially equivalent to B_n", uniqueness);
  un->add_option("n", o.n, "3 or 4")->required();
  un->add_option("--catalog", o.catalog_files, "Matrix group files replacing the built-in catalog");

  auto* hl = add("hull", "Facets of the convex hull of a vertex file", hull);
  hl->add_option("polytope-file", o.input, "JSON document with a \"vertices\" array")->required();

  auto* rep = add("rep-polytope", "Representation polytope of a matrix group and its Gamma symmetries", rep_polytope);
  rep->add_option("input", o.input, "Matrix group file or built-in catalog name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    const std::string command = sub->get_name();
    json report = {{"command", command}, {"inputs", inputs_json(command, o)}};
    const auto start = std::chrono::steady_clock::now();
    int code = 0;
    try {
      Outcome out = handler(o);
      report["pass"] = out.pass;
      report["details"] = std::move(out.details);
      code = out.pass ? 0 : 1;
    } catch (const bsym::PreconditionError& e) {
      std::cerr << "precondition violated: " << e.what() << "\n";
      report["pass"] = false;
      report["details"] = {{"error", e.what()}, {"failures", json::array({e.what()})}};
      code = 3;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      report["pass"] = false;
      report["details"] = {{"error", e.what()}, {"failures", json::array({e.what()})}};
      code = 1;
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    if (o.json_output) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << command << ": " << (report["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    }
    return code;
  }
  return 2;
}
