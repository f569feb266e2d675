#include "bsym/rep_poly.hpp"

#include <algorithm>
#include <map>

#include "bsym/birkhoff.hpp"
#include "bsym/error.hpp"
#include "bsym/groups.hpp"

namespace bsym {

MatrixGroup matrix_closure(const std::vector<RationalMatrix>& generators, std::size_t bound, std::string name) {
  std::size_t dim = generators.empty() ? 1 : generators.front().rows();
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != dim) throw PreconditionError("generators must be square of equal size");
    if (determinant(g).is_zero()) throw PreconditionError("generator is not invertible");
  }

  std::vector<RationalMatrix> found{RationalMatrix::identity(dim)};
  std::map<RationalMatrix, std::size_t> index{{found.front(), 0}};
  // gen_action[s][x] = index of generators[s] * found[x].
  std::vector<std::vector<Point>> gen_action(generators.size());
  for (std::size_t x = 0; x < found.size(); ++x) {
    for (std::size_t s = 0; s < generators.size(); ++s) {
      RationalMatrix y = generators[s] * found[x];
      auto [it, inserted] = index.try_emplace(y, found.size());
      if (inserted) {
        if (found.size() == bound) throw PreconditionError("group not finite at this bound");
        found.push_back(std::move(y));
      }
      gen_action[s].push_back(static_cast<Point>(it->second));
    }
  }

  const std::size_t n = found.size();
  std::vector<Permutation> gen_perms;
  for (auto& a : gen_action) gen_perms.emplace_back(std::move(a));
  PermutationGroup abstract = PermutationGroup::closure(n, gen_perms);
  if (abstract.order() != n) throw Error("left regular action does not match the matrix closure");

  // The left regular permutation of found[b] sends index 0 (identity) to b.
  std::vector<RationalMatrix> ordered(n);
  for (const auto& perm : abstract.elements()) {
    ordered[*abstract.index_of(perm)] = found[perm(0)];
  }
  return MatrixGroup{std::move(name), dim, std::move(ordered), GroupLabelling(std::move(abstract))};
}

MatrixGroup permutation_matrix_group(const PermutationGroup& g, std::string name) {
  std::vector<RationalMatrix> gens;
  for (const auto& s : g.generator_perms()) gens.push_back(permutation_matrix(s));
  if (gens.empty()) gens.push_back(RationalMatrix::identity(std::max<std::size_t>(g.degree(), 1)));
  return matrix_closure(gens, kMatrixClosureBound, std::move(name));
}

RationalMatrix c6_birkhoff_generator() {
  return RationalMatrix::from_rows({{0, 1, 0, 0}, {-1, -1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 1}});
}

Polytope representation_polytope(const MatrixGroup& m) {
  std::vector<RationalVector> points;
  points.reserve(m.elements.size());
  for (const auto& e : m.elements) points.push_back(e.vectorize());
  return facet_enumeration(points);
}

GammaActionReport verify_gamma_acts(const MatrixGroup& m) {
  GammaActionReport r;
  const IncidenceStructure inc = incidence_of(representation_polytope(m));
  const CombAutGroup aut = comb_automorphisms(inc);
  r.automorphism_order = aut.vertex_permutations.order();
  const auto& lab = m.labelling;

  r.lambda_pass = r.rho_pass = true;
  for (std::size_t g = 0; g < lab.size(); ++g) {
    if (!aut.vertex_permutations.contains(lab.left_multiplication(g))) {
      r.lambda_pass = false;
      r.failures.push_back("lambda of element " + std::to_string(g) + " is not a combinatorial symmetry");
    }
    if (!aut.vertex_permutations.contains(lab.right_multiplication(g))) {
      r.rho_pass = false;
      r.failures.push_back("rho of element " + std::to_string(g) + " is not a combinatorial symmetry");
    }
  }
  r.iota_member = aut.vertex_permutations.contains(lab.inversion());
  r.iota_by_transpose = true;
  for (std::size_t g = 0; g < lab.size(); ++g) {
    if (m.elements[g].transpose() != m.elements[lab.inverse(g)]) r.iota_by_transpose = false;
  }
  if (r.iota_by_transpose && !r.iota_member) r.failures.push_back("iota is realized by transposition but is not a symmetry");
  r.pass = r.lambda_pass && r.rho_pass && (r.iota_member || !r.iota_by_transpose);
  return r;
}

std::vector<CatalogEntry> default_catalog(std::size_t n) {
  auto perm_gens = [](const PermutationGroup& g) {
    std::vector<RationalMatrix> out;
    for (const auto& s : g.generator_perms()) out.push_back(permutation_matrix(s));
    return out;
  };
  std::vector<CatalogEntry> out;
  if (n == 3) {
    out.push_back({"s3-standard", perm_gens(symmetric_group(3)), 6});
    out.push_back({"c6-paper", {c6_birkhoff_generator()}, 6});
    out.push_back({"c6-regular", perm_gens(regular_representation(cyclic_group(6))), 6});
    out.push_back({"s3-regular", perm_gens(regular_representation(symmetric_group(3))), 6});
    out.push_back({"c4-permutation", perm_gens(cyclic_group(4)), 4});
    out.push_back({"v4-permutation", perm_gens(klein_four_group()), 4});
  } else if (n == 4) {
    out.push_back({"s4-standard", perm_gens(symmetric_group(4)), 24});
    out.push_back({"a4-permutation", perm_gens(alternating_group(4)), 12});
    out.push_back({"d4-permutation", perm_gens(dihedral_group(4)), 8});
    out.push_back({"c4-permutation", perm_gens(cyclic_group(4)), 4});
    out.push_back({"v4-permutation", perm_gens(klein_four_group()), 4});
  } else {
    throw PreconditionError("catalog available for n in {3, 4}");
  }
  return out;
}

MatrixGroup build_catalog_entry(const CatalogEntry& entry) {
  MatrixGroup m = matrix_closure(entry.generators, kMatrixClosureBound, entry.name);
  if (entry.group_order && *entry.group_order != m.order()) {
    throw PreconditionError("unfaithful representation '" + entry.name + "': closure has order " +
                            std::to_string(m.order()) + ", declared " + std::to_string(*entry.group_order));
  }
  return m;
}

std::vector<UniquenessEntry> uniqueness_check(std::size_t n, const std::vector<CatalogEntry>& catalog) {
  if (n != 3 && n != 4) throw PreconditionError("uniqueness check supports n in {3, 4}");
  std::vector<MatrixGroup> groups;
  for (const auto& entry : catalog) groups.push_back(build_catalog_entry(entry));

  const IncidenceStructure birkhoff = incidence_of(facet_enumeration(birkhoff_vertex_vectors(n)));
  std::optional<CombAutGroup> birkhoff_aut;

  std::vector<UniquenessEntry> out;
  for (const auto& m : groups) {
    UniquenessEntry e;
    e.name = m.name;
    e.group_order = m.order();
    const Polytope poly = representation_polytope(m);
    e.dimension = poly.dimension;
    const IncidenceStructure inc = incidence_of(poly);
    e.n_facets = inc.n_facets();
    e.witness = comb_equivalent(inc, birkhoff);
    e.equivalent_to_birkhoff = e.witness.has_value();
    if (e.equivalent_to_birkhoff) {
      if (!birkhoff_aut) birkhoff_aut = comb_automorphisms(birkhoff);
      const CombAutGroup own = comb_automorphisms(inc);
      const Permutation& beta = *e.witness;
      e.automorphisms_conjugate =
          own.vertex_permutations.order() == birkhoff_aut->vertex_permutations.order() &&
          std::all_of(own.vertex_permutations.elements().begin(), own.vertex_permutations.elements().end(),
                      [&](const auto& a) { return birkhoff_aut->vertex_permutations.contains(conjugate(a, beta)); });
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace bsym
