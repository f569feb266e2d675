#include "bsym/io.hpp"

#include <fstream>
#include <sstream>

#include "bsym/error.hpp"

namespace bsym::io {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string \"p/q\" but got " + j.dump());
}

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

RationalVector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  RationalVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty array of matrix rows");
  std::vector<RationalVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  return RationalMatrix::from_rows(rows);
}

json to_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json images_json(const Permutation& p) {
  json out = json::array();
  for (Point x : p.images()) out.push_back(x);
  return out;
}

json group_summary(const PermutationGroup& g) {
  json gens = json::array();
  for (const auto& gen : g.generators()) gens.push_back(gen.perm.cycle_string());
  return {{"degree", g.degree()}, {"order", g.order()}, {"generators", gens}};
}

json polytope_to_json(const Polytope& p) {
  json vertices = json::array();
  for (const auto& v : p.vertices) vertices.push_back(to_json(v));
  json facets = json::array();
  for (std::size_t f = 0; f < p.facets.size(); ++f) {
    facets.push_back({{"normal", to_json(p.facets[f].normal)},
                      {"offset", to_json(p.facets[f].offset)},
                      {"vertices", members(p.incidence[f])}});
  }
  return {{"convention", std::string(kFacetConvention)},
          {"ambient_dim", p.ambient_dim},
          {"dimension", p.dimension},
          {"vertices", vertices},
          {"facets", facets}};
}

std::vector<RationalVector> polytope_vertices_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices")) throw ParseError("polytope document needs a \"vertices\" array");
  std::vector<RationalVector> out;
  for (const auto& v : doc.at("vertices")) out.push_back(vector_from_json(v));
  return out;
}

CatalogEntry matrix_group_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("generators")) {
    throw ParseError("matrix group document needs a \"generators\" array");
  }
  CatalogEntry entry;
  entry.name = doc.value("name", std::string("unnamed"));
  for (const auto& g : doc.at("generators")) entry.generators.push_back(matrix_from_json(g));
  if (doc.contains("dim")) {
    const auto dim = doc.at("dim").get<std::size_t>();
    for (const auto& g : entry.generators) {
      if (g.rows() != dim || g.cols() != dim) throw ParseError("generator shape does not match \"dim\"");
    }
  }
  if (doc.contains("group_order")) entry.group_order = doc.at("group_order").get<std::size_t>();
  return entry;
}

json matrix_group_to_json(const CatalogEntry& entry) {
  json gens = json::array();
  for (const auto& g : entry.generators) gens.push_back(to_json(g));
  json out = {{"name", entry.name},
              {"dim", entry.generators.empty() ? 0 : entry.generators.front().rows()},
              {"generators", gens}};
  if (entry.group_order) out["group_order"] = *entry.group_order;
  return out;
}

Permutation parse_alpha_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Point> images;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(line.substr(first), &used);
      if (line.find_first_not_of(" \t\r", first + used) != std::string::npos) throw std::invalid_argument("trailing");
      images.push_back(static_cast<Point>(v));
    } catch (const std::exception&) {
      throw ParseError("malformed alpha line '" + line + "'");
    }
  }
  try {
    return Permutation(std::move(images));
  } catch (const PreconditionError&) {
    throw ParseError("alpha images do not form a bijection");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace bsym::io
