#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bsym/exactnum.hpp"
#include "bsym/hull.hpp"
#include "bsym/perm_group.hpp"
#include "bsym/rep_poly.hpp"

namespace bsym::io {

using nlohmann::json;

inline constexpr std::string_view kFacetConvention = "normal.x <= offset";

/// Rationals serialize as "p/q" or "p". Parsing also accepts JSON integers.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const RationalVector& v);
RationalVector vector_from_json(const json& j);
RationalMatrix matrix_from_json(const json& j);
json to_json(const RationalMatrix& m);

/// 0-based image array.
json images_json(const Permutation& p);
json group_summary(const PermutationGroup& g);

/// {"convention", "ambient_dim", "dimension", "vertices", "facets": [{"normal",
/// "offset", "vertices"}]}.
json polytope_to_json(const Polytope& p);
/// Reads {"vertices": [[...], ...]} (other fields ignored).
std::vector<RationalVector> polytope_vertices_from_json(const json& doc);

/// Reads {"name"?, "dim", "generators": [matrix, ...], "group_order"?}.
CatalogEntry matrix_group_from_json(const json& doc);
json matrix_group_to_json(const CatalogEntry& entry);

/// n! lines, each a 0-based vertex image; blank and '#' lines skipped.
Permutation parse_alpha_text(std::string_view text);

/// Whole file as a string. Throws PreconditionError when unreadable.
std::string read_file(const std::string& path);
json read_json_file(const std::string& path);

}  // namespace bsym::io
