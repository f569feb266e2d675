#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "bsym/exactnum.hpp"

namespace bsym {

using VertexSet = boost::dynamic_bitset<>;

/// The inequality normal . x <= offset. Normals are primitive integer
/// vectors lying in the direction space of the polytope's affine hull.
struct Facet {
  RationalVector normal;
  Rational offset;

  friend bool operator==(const Facet&, const Facet&) = default;
};

struct Polytope {
  std::size_t ambient_dim = 0;
  /// Dimension of the affine hull of the vertices.
  std::size_t dimension = 0;
  std::vector<RationalVector> vertices;
  std::vector<Facet> facets;
  /// incidence[f] is the set of vertices on which facet f is tight.
  std::vector<VertexSet> incidence;
};

inline constexpr std::size_t kHullMaxPoints = 30;
inline constexpr std::size_t kHullMaxDimension = 10;

/// All facets of conv(vertices) by the double description method in an
/// affine chart of the hull. Facets are sorted lexicographically by normal.
/// A 0-dimensional input yields no facets. Throws PreconditionError for
/// empty or ragged input and beyond 30 points or dimension 10.
Polytope facet_enumeration(std::span<const RationalVector> vertices);

/// Input points that are not vertices of their hull (interior points or
/// repeats), certified by facet tight sets.
std::vector<std::size_t> non_vertices(const Polytope& polytope);

/// Pure combinatorial data: which vertices lie on which facet.
class IncidenceStructure {
public:
  IncidenceStructure() = default;
  /// Rows are kept in the given order.
  IncidenceStructure(std::size_t n_vertices, std::vector<VertexSet> rows);

  std::size_t n_vertices() const { return n_vertices_; }
  std::size_t n_facets() const { return rows_.size(); }
  const std::vector<VertexSet>& rows() const { return rows_; }
  bool incident(std::size_t facet, std::size_t vertex) const { return rows_[facet].test(vertex); }

  bool has_duplicate_rows() const;
  /// The same structure with duplicate rows dropped and rows sorted by
  /// their vertex lists.
  IncidenceStructure canonical() const;

private:
  std::size_t n_vertices_ = 0;
  std::vector<VertexSet> rows_;
};

/// Strips geometry; rows deduplicated and canonically ordered.
IncidenceStructure incidence_of(const Polytope& polytope);

std::vector<std::size_t> members(const VertexSet& s);

}  // namespace bsym
