#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bsym/birkhoff.hpp"
#include "bsym/comb_sym.hpp"
#include "bsym/error.hpp"
#include "bsym/groups.hpp"
#include "bsym/rep_poly.hpp"

using namespace bsym;

namespace {

const CatalogEntry& entry_named(const std::vector<CatalogEntry>& catalog, const std::string& name) {
  for (const auto& e : catalog) {
    if (e.name == name) return e;
  }
  throw std::runtime_error("missing catalog entry " + name);
}

}  // namespace

TEST_CASE("matrix closure examples") {
  CHECK(matrix_closure({RationalMatrix::identity(3)}).order() == 1);
  const auto c6 = matrix_closure({c6_birkhoff_generator()});
  CHECK(c6.order() == 6);
  CHECK(c6.element_group().is_abelian());
  const auto s3 = matrix_closure({permutation_matrix(Permutation::parse("(0 1)", 3)),
                                  permutation_matrix(Permutation::parse("(0 1 2)"))});
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.element_group().is_abelian());

  // Distinct matrices, identity first, closed under products.
  std::set<RationalMatrix> distinct(s3.elements.begin(), s3.elements.end());
  CHECK(distinct.size() == 6);
  CHECK(s3.elements[0] == RationalMatrix::identity(3));
  for (const auto& a : s3.elements) {
    for (const auto& b : s3.elements) CHECK(distinct.count(a * b) == 1);
  }
  // elements[k] is the matrix of labelling element k.
  for (std::size_t a = 0; a < s3.order(); ++a) {
    for (std::size_t b = 0; b < s3.order(); ++b) {
      CHECK(s3.elements[a] * s3.elements[b] == s3.elements[s3.labelling.product(a, b)]);
    }
  }
}

TEST_CASE("matrix closure errors") {
  CHECK_THROWS_AS(matrix_closure({RationalMatrix::from_rows({{1, 2}, {2, 4}})}), PreconditionError);
  CHECK_THROWS_AS(matrix_closure({RationalMatrix::identity(2), RationalMatrix::identity(3)}), PreconditionError);
  CHECK_THROWS_WITH_AS(matrix_closure({RationalMatrix::from_rows({{2, 0}, {0, 1}})}), "group not finite at this bound",
                       PreconditionError);
  CHECK_THROWS_AS(matrix_closure({c6_birkhoff_generator()}, 4), PreconditionError);
}

TEST_CASE("representation polytope examples") {
  const auto trivial = representation_polytope(matrix_closure({RationalMatrix::identity(2)}));
  CHECK(trivial.dimension == 0);
  CHECK(trivial.facets.empty());

  const auto s3 = representation_polytope(permutation_matrix_group(symmetric_group(3)));
  CHECK(s3.facets.size() == 9);
  CHECK(s3.dimension == 4);

  const auto c6 = representation_polytope(matrix_closure({c6_birkhoff_generator()}));
  CHECK(c6.dimension == 4);
  CHECK(c6.vertices.size() == 6);
  CHECK(non_vertices(c6).empty());
  CHECK(c6.facets.size() == 9);
}

TEST_CASE("regular representations give simplices") {
  for (const char* name : {"c3", "c4", "v4", "s3", "c6", "d4"}) {
    CAPTURE(name);
    const auto g = named_group(name);
    const auto m = permutation_matrix_group(regular_representation(g));
    const auto p = representation_polytope(m);
    CHECK(p.vertices.size() == g.order());
    CHECK(p.dimension == g.order() - 1);
    CHECK(p.facets.size() == g.order());
    for (const auto& row : p.incidence) CHECK(row.count() == g.order() - 1);
    CHECK(non_vertices(p).empty());
  }
}

TEST_CASE("Gamma acts on representation polytopes") {
  const auto s3 = verify_gamma_acts(permutation_matrix_group(symmetric_group(3)));
  CHECK(s3.pass);
  CHECK(s3.lambda_pass);
  CHECK(s3.rho_pass);
  CHECK(s3.iota_by_transpose);
  CHECK(s3.iota_member);
  CHECK(s3.automorphism_order == 72);

  const auto c6 = verify_gamma_acts(matrix_closure({c6_birkhoff_generator()}));
  CHECK(c6.pass);
  CHECK(c6.lambda_pass);
  CHECK(c6.rho_pass);
  CHECK(c6.iota_member);
  CHECK_FALSE(c6.iota_by_transpose);

  const auto trivial = verify_gamma_acts(matrix_closure({RationalMatrix::identity(1)}));
  CHECK(trivial.pass);

  for (const char* name : {"s4", "d4", "c4", "v4"}) {
    CAPTURE(name);
    const auto r = verify_gamma_acts(permutation_matrix_group(named_group(name)));
    CHECK(r.lambda_pass);
    CHECK(r.rho_pass);
    CHECK(r.pass);
  }
}

TEST_CASE("uniqueness at n = 3") {
  const auto catalog = default_catalog(3);
  const auto entries = uniqueness_check(3, catalog);
  REQUIRE(entries.size() == 6);
  std::set<std::string> equivalent;
  for (const auto& e : entries) {
    if (e.equivalent_to_birkhoff) {
      equivalent.insert(e.name);
      REQUIRE(e.witness.has_value());
      CHECK(e.automorphisms_conjugate);
      CHECK(e.n_facets == 9);
      CHECK(e.dimension == 4);
    } else {
      CHECK_FALSE(e.witness.has_value());
    }
  }
  CHECK(equivalent == std::set<std::string>{"s3-standard", "c6-paper"});

  // The witness carries facets of P(D) onto facets of B_3.
  const auto c6_entry = entries[1];
  REQUIRE(c6_entry.name == "c6-paper");
  const auto inc = incidence_of(representation_polytope(build_catalog_entry(entry_named(catalog, "c6-paper"))));
  CHECK(induced_facet_permutation(inc, birkhoff_incidence(3), *c6_entry.witness).has_value());

  for (const auto& e : entries) {
    if (e.name == "c6-regular" || e.name == "s3-regular") CHECK(e.n_facets == 6);
  }
}

TEST_CASE("uniqueness at n = 4") {
  const auto entries = uniqueness_check(4, default_catalog(4));
  for (const auto& e : entries) {
    CAPTURE(e.name);
    CHECK(e.equivalent_to_birkhoff == (e.name == "s4-standard"));
    if (e.equivalent_to_birkhoff) CHECK(e.automorphisms_conjugate);
  }
}

TEST_CASE("uniqueness errors") {
  CatalogEntry bad{"bad", {RationalMatrix::identity(3)}, 6};
  CHECK_THROWS_WITH_AS(uniqueness_check(3, {bad}),
                       doctest::Contains("unfaithful representation"), PreconditionError);
  CHECK_THROWS_AS(uniqueness_check(5, {}), PreconditionError);
  CHECK_THROWS_AS(default_catalog(2), PreconditionError);
}
