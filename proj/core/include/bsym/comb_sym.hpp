#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bsym/hull.hpp"
#include "bsym/perm_group.hpp"

namespace bsym {

struct CombAutGroup {
  PermutationGroup vertex_permutations;
  /// induced_facet_action[k] is the facet permutation induced by
  /// vertex_permutations.elements()[k] on the rows of the incidence structure.
  std::vector<Permutation> induced_facet_action;
};

/// All vertex permutations that map facets onto facets. Throws
/// PreconditionError("not a polytope incidence") on duplicate rows.
CombAutGroup comb_automorphisms(const IncidenceStructure& inc);

/// A vertex bijection beta : vertices(P) -> vertices(Q) carrying every facet
/// of P onto a facet of Q, or nullopt.
std::optional<Permutation> comb_equivalent(const IncidenceStructure& p, const IncidenceStructure& q);

/// The facet permutation psi with row(psi(f)) = pi(row(f)) for every f
/// (from = to for automorphisms), or nullopt if pi does not preserve facets.
std::optional<Permutation> induced_facet_permutation(const IncidenceStructure& from,
                                                     const IncidenceStructure& to, const Permutation& pi);

}  // namespace bsym
