#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bsym/perm_group.hpp"

namespace bsym {

PermutationGroup symmetric_group(std::size_t n);
PermutationGroup alternating_group(std::size_t n);
/// C_n acting on n points.
PermutationGroup cyclic_group(std::size_t n);
/// Dihedral group of order 2n acting on the n vertices of a polygon.
PermutationGroup dihedral_group(std::size_t n);
/// Klein four-group <(0 1)(2 3), (0 2)(1 3)>.
PermutationGroup klein_four_group();
/// Quaternion group in its left regular action on 8 points.
PermutationGroup quaternion_group();
/// Left regular representation of `g` on its own elements (in element order).
PermutationGroup regular_representation(const PermutationGroup& g);

/// Resolves "s3", "s4", "s5", "a4", "c1" ... "c6", "v4", "d4", "q8"
/// (case-insensitive). Throws PreconditionError for unknown names.
PermutationGroup named_group(std::string_view name);
std::vector<std::string> named_group_names();

/// Reads one generator per line in cycle notation. Blank lines and lines
/// starting with '#' are skipped; an optional "degree N" line fixes the
/// degree, otherwise it is 1 + the largest point mentioned.
PermutationGroup parse_group_text(std::string_view text);

/// Short structural label: "1", "S<n>" / "A<n>" when the group is the full
/// symmetric or alternating group on its points, "D<n>" for the polygon
/// action, "Q8", "C<k>" for cyclic groups, "C2^k" for elementary abelian
/// 2-groups, otherwise "order<k>".
std::string group_label(const PermutationGroup& g);

}  // namespace bsym
