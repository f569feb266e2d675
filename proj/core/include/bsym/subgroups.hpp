#pragma once

#include <cstddef>
#include <vector>

#include "bsym/perm_group.hpp"

namespace bsym {

inline constexpr std::size_t kDefaultSubgroupBound = 200;
inline constexpr std::size_t kRegularSearchMaxOrder = 1500;
inline constexpr std::size_t kRegularSearchMaxDegree = 24;

/// C_G(H). Throws PreconditionError if H is not contained in G.
PermutationGroup centralizer(const PermutationGroup& g, const PermutationGroup& h);

/// N_G(H). Throws PreconditionError if H is not contained in G.
PermutationGroup normalizer(const PermutationGroup& g, const PermutationGroup& h);

PermutationGroup center(const PermutationGroup& g);

bool is_normal_in(const PermutationGroup& h, const PermutationGroup& g);

/// Every subgroup of G exactly once, sorted by order and then by element
/// list. Subgroups are built by repeatedly joining a known subgroup with a
/// cyclic subgroup of prime-power order. Throws PreconditionError("group too
/// large") when |G| exceeds `bound`.
std::vector<PermutationGroup> all_subgroups(const PermutationGroup& g,
                                            std::size_t bound = kDefaultSubgroupBound);

/// All subgroups of G of order m = degree that act regularly on the points.
/// Returns an empty list when m does not divide |G|. Throws
/// PreconditionError when |G| > 1500 or m > 24.
std::vector<PermutationGroup> regular_subgroups(const PermutationGroup& g);

/// True iff U is transitive with trivial point stabilizers.
bool acts_regularly(const PermutationGroup& u);

/// True iff every element of `a` commutes with every element of `b`.
bool centralize_each_other(const PermutationGroup& a, const PermutationGroup& b);

}  // namespace bsym
