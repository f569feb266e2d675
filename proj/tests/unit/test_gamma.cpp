#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "bsym/error.hpp"
#include "bsym/gamma.hpp"
#include "bsym/groups.hpp"
#include "bsym/subgroups.hpp"
#include "oracles.hpp"

using namespace bsym;

TEST_CASE("build_gamma examples") {
  const auto c2 = build_gamma(cyclic_group(2));
  CHECK(c2.gamma.order() == 2);
  CHECK(c2.lambda_sub == c2.rho_sub);
  CHECK(c2.iota.is_identity());

  const auto v4 = build_gamma(klein_four_group());
  CHECK(v4.gamma.order() == 4);
  CHECK(v4.gamma == v4.lambda_sub);

  const auto s3 = build_gamma(symmetric_group(3));
  CHECK(s3.gamma.order() == 72);
  CHECK(s3.base.element(0).is_identity());

  bool has_iota = false;
  for (const auto& g : s3.gamma.generators()) has_iota |= g.tag == "iota";
  CHECK(has_iota);

  CHECK_THROWS_AS(build_gamma(symmetric_group(5)), PreconditionError);
}

TEST_CASE("lambda and rho commute and iota swaps them") {
  for (const char* name : {"s3", "s4", "d4", "q8", "c6", "a4"}) {
    CAPTURE(name);
    const GroupLabelling l(named_group(name));
    const auto iota = l.inversion();
    for (std::size_t g = 0; g < l.size(); ++g) {
      const auto lg = l.left_multiplication(g);
      const auto rg = l.right_multiplication(g);
      CHECK(iota * lg * iota == rg);
      CHECK(lg(0) == g);
      for (std::size_t h = 0; h < l.size(); ++h) CHECK(commute(lg, l.right_multiplication(h)));
    }
  }
}

TEST_CASE("labelling rejects foreign elements") {
  const GroupLabelling l(alternating_group(3));
  CHECK_THROWS_AS(l.index_of(Permutation::parse("(0 1)", 3)), PreconditionError);
}

TEST_CASE("wreath quotient order") {
  for (const char* name : {"s3", "s4", "c3", "c6", "q8", "d4", "a4", "c4"}) {
    CAPTURE(name);
    const auto g = named_group(name);
    const auto r = verify_wreath_quotient(g);
    CHECK(r.status == "pass");
    CHECK(r.pass);
    CHECK(r.kernel_check);
    CHECK(r.actual_order == 2 * g.order() * g.order() / center(g).order());
  }
  const auto s3 = verify_wreath_quotient(symmetric_group(3));
  CHECK(s3.formula_order == 72);
  CHECK(s3.actual_order == 72);
  const auto c6 = verify_wreath_quotient(cyclic_group(6));
  CHECK(c6.formula_order == 12);
  CHECK(c6.actual_order == 12);
  const auto s4 = verify_wreath_quotient(symmetric_group(4));
  CHECK(s4.actual_order == 2 * 24 * 24);
}

TEST_CASE("elementary abelian 2-groups violate the hypothesis") {
  const auto v4 = verify_wreath_quotient(klein_four_group());
  CHECK(v4.status == "hypothesis-violated");
  CHECK_FALSE(v4.hypothesis_holds);
  CHECK(v4.actual_order == 4);
  CHECK(v4.formula_order == 8);
  CHECK(v4.pass);
  const auto c2 = verify_wreath_quotient(cyclic_group(2));
  CHECK(c2.status == "hypothesis-violated");
  CHECK(c2.actual_order == 2);
}

TEST_CASE("commuting regular pairs for S_3") {
  const auto r = commuting_regular_pairs(symmetric_group(3));
  CHECK(r.regular.size() == 8);
  CHECK(r.pairs.size() == 7);

  std::size_t lambda_rho = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> self_paired_types;
  for (const auto& [a, b] : r.pairs) {
    const auto& u = r.regular[a];
    const auto& v = r.regular[b];
    CHECK(acts_regularly(u));
    CHECK(acts_regularly(v));
    if ((u == r.gamma.lambda_sub && v == r.gamma.rho_sub) || (u == r.gamma.rho_sub && v == r.gamma.lambda_sub)) {
      ++lambda_rho;
      continue;
    }
    // Every other pair is a cyclic group paired with itself.
    CHECK(a == b);
    CHECK(u.is_abelian());
    CHECK(group_label(u) == "C6");
    const auto proj = lambda_rho_projection_orders(r.gamma, u);
    REQUIRE(proj.has_value());
    ++self_paired_types[*proj];
  }
  CHECK(lambda_rho == 1);
  // The two types C2 x C3 and C3 x C2 (which side carries the C2).
  CHECK(self_paired_types.size() == 2);
  CHECK(self_paired_types[{2, 3}] == 3);
  CHECK(self_paired_types[{3, 2}] == 3);
}

TEST_CASE("each self-paired type of S_3 is one conjugacy class under lambda(G) rho(G)") {
  const auto r = commuting_regular_pairs(symmetric_group(3));
  std::vector<Permutation> gens = r.gamma.lambda_sub.generator_perms();
  for (const auto& p : r.gamma.rho_sub.generator_perms()) gens.push_back(p);
  const auto direct = PermutationGroup::closure(6, gens);
  CHECK(direct.order() == 36);

  std::map<std::pair<std::size_t, std::size_t>, std::set<std::set<Permutation>>> by_type;
  for (const auto& [a, b] : r.pairs) {
    if (a != b) continue;
    const auto& u = r.regular[a];
    by_type[*lambda_rho_projection_orders(r.gamma, u)].insert({u.elements().begin(), u.elements().end()});
  }
  for (const auto& [type, members] : by_type) {
    const auto& first = *members.begin();
    std::set<std::set<Permutation>> orbit;
    for (const auto& x : direct.elements()) {
      std::set<Permutation> conj;
      for (const auto& y : first) conj.insert(conjugate(y, x));
      orbit.insert(conj);
    }
    CHECK(orbit == members);
  }
}

TEST_CASE("commuting regular pairs for S_4 and small groups") {
  const auto s4 = commuting_regular_pairs(symmetric_group(4));
  CHECK(s4.gamma.gamma.order() == 1152);
  REQUIRE(s4.pairs.size() == 1);
  const auto& u = s4.regular[s4.pairs[0].first];
  const auto& v = s4.regular[s4.pairs[0].second];
  CHECK(((u == s4.gamma.lambda_sub && v == s4.gamma.rho_sub) || (u == s4.gamma.rho_sub && v == s4.gamma.lambda_sub)));

  const auto c2 = commuting_regular_pairs(cyclic_group(2));
  REQUIRE(c2.pairs.size() == 1);
  CHECK(c2.pairs[0].first == c2.pairs[0].second);
  CHECK(c2.regular[c2.pairs[0].first] == c2.gamma.lambda_sub);
}

TEST_CASE("normalizer of Gamma in the full symmetric group") {
  const auto s3 = normalizer_in_full_symmetric(symmetric_group(3));
  CHECK(s3.normalizer_order == 72);
  CHECK(s3.gamma_order == 72);
  CHECK(s3.automorphism_order == 6);
  CHECK(s3.pass);

  const auto c3 = normalizer_in_full_symmetric(cyclic_group(3));
  CHECK(c3.normalizer_order == 6);
  CHECK(c3.aut_gamma_order == 6);
  CHECK(c3.pass);

  const auto c2 = normalizer_in_full_symmetric(cyclic_group(2));
  CHECK(c2.normalizer_order == 2);
  CHECK(c2.pass);

  CHECK_THROWS_AS(normalizer_in_full_symmetric(dihedral_group(4)), PreconditionError);
}

TEST_CASE("automorphism scan") {
  CHECK(automorphisms(GroupLabelling(symmetric_group(3))).size() == 6);
  CHECK(automorphisms(GroupLabelling(cyclic_group(6))).size() == 2);
  CHECK(automorphisms(GroupLabelling(klein_four_group())).size() == 6);
  CHECK(automorphisms(GroupLabelling(dihedral_group(4))).size() == 8);
  CHECK(automorphisms(GroupLabelling(quaternion_group())).size() == 24);
}
