#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bsym/error.hpp"
#include "bsym/exactnum.hpp"
#include "bsym/hull.hpp"
#include "bsym/perm_group.hpp"

namespace bsym {

// Indices are 0-based throughout. A_ij is the set of vertices whose matrix
// has a one at (i, j); the facet F_ij is its complement (a zero at (i, j)).

struct FacetLabel {
  std::size_t i = 0;
  std::size_t j = 0;

  friend auto operator<=>(const FacetLabel&, const FacetLabel&) = default;
};

/// Fixed enumeration of S_n shared by every Birkhoff computation: the
/// canonical element order of symmetric_group(n).
class BirkhoffIndex {
public:
  /// Throws PreconditionError unless 1 <= n <= 5.
  explicit BirkhoffIndex(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t size() const { return sn_.order(); }
  const PermutationGroup& group() const { return sn_; }
  const Permutation& element(std::size_t k) const { return sn_.elements()[k]; }
  std::size_t index_of(const Permutation& p) const;

private:
  std::size_t n_;
  PermutationGroup sn_;
};

/// Permutation matrix P(pi) with P[i][pi(i)] = 1.
RationalMatrix permutation_matrix(const Permutation& pi);

/// The n! permutation matrices in BirkhoffIndex order.
std::vector<RationalMatrix> birkhoff_vertices(std::size_t n);
/// Same, row-major vectorized.
std::vector<RationalVector> birkhoff_vertex_vectors(std::size_t n);

/// A_ij = {pi : pi(i) = j} for all n^2 labels, as index sets, ordered by
/// (i, j). Throws PreconditionError("facet description requires n >= 3").
std::vector<VertexSet> analytic_facet_sets(std::size_t n);
inline std::size_t facet_slot(std::size_t n, FacetLabel l) { return l.i * n + l.j; }

/// Incidence structure of B_n built from the analytic facets F_ij.
IncidenceStructure birkhoff_incidence(std::size_t n);

struct CheckReport {
  std::size_t checked = 0;
  bool pass = false;
  std::vector<std::string> failures;
};

/// |A_ij n A_kl| against (n-1)!, 0, 0, (n-2)! for all n^4 quadruples. 3 <= n <= 5.
CheckReport verify_intersection_table(std::size_t n);

/// sigma A_ij tau^-1 = A_{tau(i), sigma(j)} for all sigma, tau, (i, j), and
/// A_ij^-1 = A_ji. 3 <= n <= 4.
CheckReport verify_transformation_law(std::size_t n);

struct SymmetryDecomposition {
  Permutation sigma;
  Permutation tau;
  int epsilon = 1;
};

/// pi -> sigma pi^epsilon tau, as a permutation of BirkhoffIndex positions.
Permutation reconstruct_symmetry(const BirkhoffIndex& index, const SymmetryDecomposition& d);

class DecompositionError : public Error {
public:
  using Error::Error;
};

/// Writes a vertex symmetry alpha of B_n as pi -> sigma pi^epsilon tau and
/// certifies it on all n! vertices. Throws DecompositionError with "not a
/// facet symmetry" when alpha does not permute the sets A_ij, or
/// "inconsistent" when the certified normal form does not reproduce alpha.
SymmetryDecomposition decompose_symmetry(std::size_t n, const Permutation& alpha);

struct SymmetryGroupReport {
  std::size_t n = 0;
  std::size_t hull_dimension = 0;
  std::size_t hull_facets = 0;
  /// The computed facets are exactly the complements of the sets A_ij.
  bool facets_match_analytic = false;
  std::size_t order = 0;
  std::size_t expected_order = 0;  // 2 (n!)^2
  std::size_t decomposed = 0;
  /// Decompositions of the generators of the automorphism group.
  std::vector<std::pair<Permutation, SymmetryDecomposition>> generator_decompositions;
  std::vector<std::string> failures;
  bool pass = false;
};

/// Hull of B_n from its vertices, automorphism group of the resulting
/// incidence, and the decomposition round-trip for every automorphism.
/// n in {3, 4}.
SymmetryGroupReport verify_symmetry_group(std::size_t n);

}  // namespace bsym
