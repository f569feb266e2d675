#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bsym/perm_group.hpp"
#include "bsym/subgroups.hpp"

namespace bsym {

/// m_G(H) = |H| |C_G(H)|. Throws PreconditionError if H is not a subgroup of G.
std::size_t cd_measure(const PermutationGroup& g, const PermutationGroup& h);

struct CDReport {
  PermutationGroup group;
  std::size_t max_measure = 0;
  std::vector<PermutationGroup> lattice;
  std::size_t subgroup_count = 0;
  /// Intersections, set products and centralizers of members stay in the lattice.
  bool closure_pass = false;
  /// Every member is subnormal in G.
  bool subnormal_pass = false;
  std::vector<std::string> failures;
};

/// Maximizers of the Chermak-Delgado measure together with the closure and
/// subnormality checks.
CDReport cd_lattice(const PermutationGroup& g, std::size_t bound = kDefaultSubgroupBound);

/// H is subnormal in G iff the chain H, N_G(H), N_G(N_G(H)), ... reaches G.
bool is_subnormal(const PermutationGroup& h, const PermutationGroup& g);

/// The set product HK, or an empty group (order 0) when it is not a subgroup.
PermutationGroup set_product(const PermutationGroup& h, const PermutationGroup& k);

PermutationGroup intersection(const PermutationGroup& h, const PermutationGroup& k);

struct SnCentEstReport {
  std::size_t n = 0;
  std::size_t group_order = 0;
  std::size_t subgroup_count = 0;
  std::size_t max_measure = 0;
  /// Orders of the subgroups attaining |U||C(U)| = n!.
  std::vector<std::size_t> equality_orders;
  bool pass = false;
  std::vector<std::string> failures;
};

/// Checks |U||C_{S_n}(U)| <= n! for every U <= S_n, with equality only at
/// U = 1 and U = S_n. Supports n in {4, 5}.
SnCentEstReport verify_sn_cent_est(std::size_t n, std::size_t bound = kDefaultSubgroupBound);

}  // namespace bsym
