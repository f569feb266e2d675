#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bsym/comb_sym.hpp"
#include "bsym/exactnum.hpp"
#include "bsym/gamma.hpp"
#include "bsym/hull.hpp"

namespace bsym {

/// A finite group of invertible rational matrices. elements[k] is the
/// matrix of labelling.element(k); element_group() is the abstract group in
/// its left regular action on those indices.
struct MatrixGroup {
  std::string name;
  std::size_t dim = 0;
  std::vector<RationalMatrix> elements;
  GroupLabelling labelling;

  const PermutationGroup& element_group() const { return labelling.group(); }
  std::size_t order() const { return elements.size(); }
};

inline constexpr std::size_t kMatrixClosureBound = 500;

/// Breadth-first closure of square invertible generators. Throws
/// PreconditionError for singular or mis-shaped generators and "group not
/// finite at this bound" when more than `bound` elements appear.
MatrixGroup matrix_closure(const std::vector<RationalMatrix>& generators, std::size_t bound = kMatrixClosureBound,
                           std::string name = {});

/// Matrix group of permutation matrices P(g), P[i][g(i)] = 1, for the generators of `g`.
MatrixGroup permutation_matrix_group(const PermutationGroup& g, std::string name = {});

/// Generator of the 4-dimensional rational representation of C_6 whose
/// polytope is combinatorially a Birkhoff polytope B_3.
RationalMatrix c6_birkhoff_generator();

/// Convex hull of the row-major vectorized matrices, vertex k = element k.
Polytope representation_polytope(const MatrixGroup& m);

struct GammaActionReport {
  std::size_t automorphism_order = 0;
  bool lambda_pass = false;
  bool rho_pass = false;
  bool iota_member = false;
  /// D(g^-1) = D(g)^T for every g, so inversion is realized by transposing.
  bool iota_by_transpose = false;
  std::vector<std::string> failures;
  /// lambda and rho are members, and iota too whenever transposition realizes it.
  bool pass = false;
};

/// Checks that lambda_g, rho_g (and iota) acting on vertex labels are
/// combinatorial symmetries of P(D).
GammaActionReport verify_gamma_acts(const MatrixGroup& m);

struct UniquenessEntry {
  std::string name;
  std::size_t group_order = 0;
  std::size_t dimension = 0;
  std::size_t n_facets = 0;
  bool equivalent_to_birkhoff = false;
  /// Vertex bijection into the B_n vertex order when equivalent.
  std::optional<Permutation> witness;
  /// |Aut P(D)| and |Aut B_n| agree and the witness conjugates one group
  /// onto the other (only evaluated for equivalent entries).
  bool automorphisms_conjugate = false;
};

struct CatalogEntry {
  std::string name;
  std::vector<RationalMatrix> generators;
  /// Order of the abstract group the generators are meant to represent;
  /// a smaller closure means the representation is not faithful.
  std::optional<std::size_t> group_order;
};

/// Shipped catalog for n = 3 or n = 4.
std::vector<CatalogEntry> default_catalog(std::size_t n);

MatrixGroup build_catalog_entry(const CatalogEntry& entry);

/// Tests every entry's polytope for combinatorial equivalence with B_n.
/// n in {3, 4}. Throws PreconditionError("unfaithful representation ...")
/// when an entry's closure order disagrees with its declared group order.
std::vector<UniquenessEntry> uniqueness_check(std::size_t n, const std::vector<CatalogEntry>& catalog);

}  // namespace bsym
