#include "bsym/birkhoff.hpp"

#include <map>
#include <optional>

#include "bsym/comb_sym.hpp"
#include "bsym/groups.hpp"

namespace bsym {

namespace {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

VertexSet image_of(const VertexSet& s, const Permutation& alpha) {
  VertexSet out(s.size());
  for (std::size_t v : members(s)) out.set(alpha(static_cast<Point>(v)));
  return out;
}

// Label (k, l) of alpha(A_ij) for every slot i*n + j, or nullopt when some
// image is not one of the sets A_kl.
std::optional<std::vector<FacetLabel>> facet_images(std::size_t n, const std::vector<VertexSet>& sets,
                                                    const Permutation& alpha) {
  std::map<VertexSet, std::size_t> slot_of;
  for (std::size_t s = 0; s < sets.size(); ++s) slot_of.emplace(sets[s], s);
  std::vector<FacetLabel> out;
  for (const auto& a : sets) {
    auto it = slot_of.find(image_of(a, alpha));
    if (it == slot_of.end()) return std::nullopt;
    out.push_back({it->second / n, it->second % n});
  }
  return out;
}

}  // namespace

BirkhoffIndex::BirkhoffIndex(std::size_t n) : n_(n) {
  if (n < 1 || n > 5) throw PreconditionError("Birkhoff polytope supported for 1 <= n <= 5");
  sn_ = symmetric_group(n);
}

std::size_t BirkhoffIndex::index_of(const Permutation& p) const {
  auto idx = sn_.index_of(p);
  if (!idx) throw PreconditionError("permutation not in S_n");
  return *idx;
}

RationalMatrix permutation_matrix(const Permutation& pi) {
  const std::size_t n = pi.degree();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, pi(static_cast<Point>(i))) = 1;
  return m;
}

std::vector<RationalMatrix> birkhoff_vertices(std::size_t n) {
  const BirkhoffIndex index(n);
  std::vector<RationalMatrix> out;
  out.reserve(index.size());
  for (const auto& p : index.group().elements()) out.push_back(permutation_matrix(p));
  return out;
}

std::vector<RationalVector> birkhoff_vertex_vectors(std::size_t n) {
  std::vector<RationalVector> out;
  for (const auto& m : birkhoff_vertices(n)) out.push_back(m.vectorize());
  return out;
}

std::vector<VertexSet> analytic_facet_sets(std::size_t n) {
  if (n < 3) throw PreconditionError("facet description requires n >= 3");
  const BirkhoffIndex index(n);
  std::vector<VertexSet> sets(n * n, VertexSet(index.size()));
  for (std::size_t k = 0; k < index.size(); ++k) {
    const Permutation& pi = index.element(k);
    for (std::size_t i = 0; i < n; ++i) sets[facet_slot(n, {i, pi(static_cast<Point>(i))})].set(k);
  }
  return sets;
}

IncidenceStructure birkhoff_incidence(std::size_t n) {
  std::vector<VertexSet> rows;
  for (const auto& a : analytic_facet_sets(n)) rows.push_back(~a);
  return IncidenceStructure(factorial(n), std::move(rows)).canonical();
}

CheckReport verify_intersection_table(std::size_t n) {
  if (n < 3 || n > 5) throw PreconditionError("intersection table supported for 3 <= n <= 5");
  const auto sets = analytic_facet_sets(n);
  CheckReport r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          std::size_t expected = 0;
          if (i == k && j == l) {
            expected = factorial(n - 1);
          } else if (i != k && j != l) {
            expected = factorial(n - 2);
          }
          const std::size_t actual = (sets[facet_slot(n, {i, j})] & sets[facet_slot(n, {k, l})]).count();
          ++r.checked;
          if (actual != expected) {
            r.failures.push_back("|A" + std::to_string(i) + std::to_string(j) + " n A" + std::to_string(k) +
                                 std::to_string(l) + "| = " + std::to_string(actual) + ", expected " +
                                 std::to_string(expected));
          }
        }
      }
    }
  }
  r.pass = r.failures.empty();
  return r;
}

CheckReport verify_transformation_law(std::size_t n) {
  if (n < 3 || n > 4) throw PreconditionError("transformation law supported for 3 <= n <= 4");
  const BirkhoffIndex index(n);
  const auto sets = analytic_facet_sets(n);
  const auto& elements = index.group().elements();
  CheckReport r;
  for (const auto& sigma : elements) {
    for (const auto& tau : elements) {
      const Permutation tau_inv = tau.inverse();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          VertexSet moved(index.size());
          for (std::size_t v : members(sets[facet_slot(n, {i, j})])) {
            moved.set(index.index_of(sigma * index.element(v) * tau_inv));
          }
          const FacetLabel target{tau(static_cast<Point>(i)), sigma(static_cast<Point>(j))};
          ++r.checked;
          if (moved != sets[facet_slot(n, target)]) {
            r.failures.push_back("sigma=" + sigma.cycle_string() + " tau=" + tau.cycle_string() + " on A" +
                                 std::to_string(i) + std::to_string(j));
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      VertexSet inverted(index.size());
      for (std::size_t v : members(sets[facet_slot(n, {i, j})])) inverted.set(index.index_of(index.element(v).inverse()));
      ++r.checked;
      if (inverted != sets[facet_slot(n, {j, i})]) {
        r.failures.push_back("inverse of A" + std::to_string(i) + std::to_string(j) + " is not A" + std::to_string(j) +
                             std::to_string(i));
      }
    }
  }
  r.pass = r.failures.empty();
  return r;
}

Permutation reconstruct_symmetry(const BirkhoffIndex& index, const SymmetryDecomposition& d) {
  std::vector<Point> images(index.size());
  for (std::size_t k = 0; k < index.size(); ++k) {
    const Permutation& pi = index.element(k);
    const Permutation core = d.epsilon > 0 ? pi : pi.inverse();
    images[k] = static_cast<Point>(index.index_of(d.sigma * core * d.tau));
  }
  return Permutation(std::move(images));
}

SymmetryDecomposition decompose_symmetry(std::size_t n, const Permutation& alpha) {
  if (n < 3 || n > 5) throw PreconditionError("decomposition supported for 3 <= n <= 5");
  const BirkhoffIndex index(n);
  if (alpha.degree() != index.size()) throw PreconditionError("alpha must permute the n! vertices");
  const auto sets = analytic_facet_sets(n);

  auto labels = facet_images(n, sets, alpha);
  if (!labels) throw DecompositionError("not a facet symmetry");

  // Row 0 goes to a row (epsilon = +1) or to a column (epsilon = -1).
  auto maps_row_to_row = [n](const std::vector<FacetLabel>& l) {
    for (std::size_t j = 1; j < n; ++j) {
      if (l[facet_slot(n, {0, j})].i != l[0].i) return false;
    }
    return true;
  };
  auto maps_row_to_column = [n](const std::vector<FacetLabel>& l) {
    for (std::size_t j = 1; j < n; ++j) {
      if (l[facet_slot(n, {0, j})].j != l[0].j) return false;
    }
    return true;
  };

  SymmetryDecomposition d;
  Permutation beta = alpha;
  if (maps_row_to_row(*labels)) {
    d.epsilon = 1;
  } else if (maps_row_to_column(*labels)) {
    d.epsilon = -1;
    // beta(pi) = alpha(pi^-1) sends rows to rows.
    std::vector<Point> images(index.size());
    for (std::size_t k = 0; k < index.size(); ++k) images[k] = alpha(static_cast<Point>(index.index_of(index.element(k).inverse())));
    beta = Permutation(std::move(images));
    labels = facet_images(n, sets, beta);
  } else {
    throw DecompositionError("not a facet symmetry");
  }

  // beta(pi) = sigma pi tau sends A_ij to A_{tau^-1(i), sigma(j)}.
  std::vector<Point> row_map(n), column_map(n);
  for (std::size_t i = 0; i < n; ++i) row_map[i] = static_cast<Point>((*labels)[facet_slot(n, {i, 0})].i);
  for (std::size_t j = 0; j < n; ++j) column_map[j] = static_cast<Point>((*labels)[facet_slot(n, {0, j})].j);
  try {
    d.sigma = Permutation(column_map);
    d.tau = Permutation(row_map).inverse();
  } catch (const PreconditionError&) {
    throw DecompositionError("inconsistent");
  }
  if (reconstruct_symmetry(index, d) != alpha) throw DecompositionError("inconsistent");
  return d;
}

SymmetryGroupReport verify_symmetry_group(std::size_t n) {
  if (n < 3 || n > 4) throw PreconditionError("symmetry group verification supported for n in {3, 4}");
  SymmetryGroupReport r;
  r.n = n;
  const auto vertices = birkhoff_vertex_vectors(n);
  const Polytope hull = facet_enumeration(vertices);
  r.hull_dimension = hull.dimension;
  r.hull_facets = hull.facets.size();

  const IncidenceStructure computed = incidence_of(hull);
  const IncidenceStructure analytic = birkhoff_incidence(n);
  r.facets_match_analytic = computed.rows() == analytic.rows();
  if (!r.facets_match_analytic) r.failures.push_back("hull facets differ from the analytic facets F_ij");

  const std::size_t nf = factorial(n);
  r.expected_order = 2 * nf * nf;
  const CombAutGroup aut = comb_automorphisms(computed);
  r.order = aut.vertex_permutations.order();
  if (r.order != r.expected_order) {
    r.failures.push_back("automorphism group has order " + std::to_string(r.order) + ", expected " +
                         std::to_string(r.expected_order));
  }

  for (const auto& alpha : aut.vertex_permutations.elements()) {
    try {
      decompose_symmetry(n, alpha);
      ++r.decomposed;
    } catch (const DecompositionError& e) {
      r.failures.push_back(alpha.cycle_string() + ": " + e.what());
    }
  }
  for (const auto& gen : aut.vertex_permutations.generators()) {
    try {
      r.generator_decompositions.emplace_back(gen.perm, decompose_symmetry(n, gen.perm));
    } catch (const DecompositionError&) {
      // already recorded above
    }
  }
  r.pass = r.failures.empty();
  return r;
}

}  // namespace bsym
