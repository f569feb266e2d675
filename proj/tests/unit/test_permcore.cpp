#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "bsym/error.hpp"
#include "bsym/gamma.hpp"
#include "bsym/groups.hpp"
#include "bsym/perm_group.hpp"
#include "bsym/permutation.hpp"
#include "bsym/subgroups.hpp"
#include "oracles.hpp"

using namespace bsym;

namespace {

std::set<Permutation> as_set(const PermutationGroup& g) { return {g.elements().begin(), g.elements().end()}; }

std::set<std::set<Permutation>> as_sets(const std::vector<PermutationGroup>& gs) {
  std::set<std::set<Permutation>> out;
  for (const auto& g : gs) out.insert(as_set(g));
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  const auto p = Permutation::parse("(0 1 2)");
  const auto q = Permutation::parse("(0 1)", 3);
  CHECK(p.degree() == 3);
  CHECK((p * q)(0) == p(q(0)));
  CHECK((p * q).cycle_string() == "(0 2)");
  CHECK(p.order() == 3);
  CHECK(p.inverse() * p == Permutation::identity(3));
  CHECK(Permutation::identity(4).cycle_string() == "()");
  CHECK(Permutation::parse("(0, 2)(1 3)").cycle_string() == "(0 2)(1 3)");
  CHECK(Permutation::parse("()", 3).is_identity());
  CHECK(conjugate(q, p) == p * q * p.inverse());
  CHECK(q.has_fixed_point());
  CHECK_FALSE(p.has_fixed_point());
  CHECK(Permutation::from_cycles(4, {{0, 3}}) == Permutation::parse("(0 3)", 4));
}

TEST_CASE("permutation errors") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(Permutation({0, 3}), PreconditionError);
  CHECK_THROWS_AS(Permutation::parse("(0 1", 2), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(0 0)", 2), PreconditionError);
  CHECK_THROWS_AS(Permutation::parse("(0 5)", 3), PreconditionError);
  CHECK_THROWS_AS(Permutation::parse("(0 1) x", 3), ParseError);
}

TEST_CASE("closure examples") {
  CHECK(PermutationGroup::closure(2, {Permutation::parse("(0 1)")}).order() == 2);
  const auto s3 = PermutationGroup::closure(3, {Permutation::parse("(0 1)", 3), Permutation::parse("(0 1 2)")});
  CHECK(s3.order() == 6);
  CHECK(s3.identity().is_identity());
  CHECK(std::is_sorted(s3.elements().begin(), s3.elements().end()));
  CHECK_THROWS_AS(PermutationGroup::closure(3, {Permutation::parse("(0 1)", 2)}), PreconditionError);

  // Gamma(S_3) generators close to 72 elements; oracle: naive pairwise closure.
  const auto gamma = build_gamma(symmetric_group(3));
  const auto naive = oracle::naive_closure(6, gamma.gamma.generator_perms());
  CHECK(naive.size() == 72);
  CHECK(gamma.gamma.order() == 72);
  CHECK(as_set(gamma.gamma) == naive);
}

TEST_CASE("closure is idempotent") {
  for (const auto& name : named_group_names()) {
    const auto g = named_group(name);
    const auto again = PermutationGroup::closure(g.degree(), g.elements());
    CHECK(again == g);
    CHECK(PermutationGroup::from_elements(g.degree(), g.elements()) == g);
  }
  CHECK_THROWS_AS(PermutationGroup::from_elements(3, {Permutation::identity(3), Permutation::parse("(0 1 2)")}),
                  PreconditionError);
}

TEST_CASE("named groups have the expected orders") {
  CHECK(named_group("S4").order() == 24);
  CHECK(named_group("a4").order() == 12);
  CHECK(named_group("d4").order() == 8);
  CHECK(named_group("q8").order() == 8);
  CHECK_FALSE(named_group("q8").is_abelian());
  CHECK(named_group("v4").is_elementary_abelian_2());
  CHECK(named_group("c6").is_abelian());
  CHECK_THROWS_AS(named_group("s9"), PreconditionError);
  CHECK(group_label(symmetric_group(4)) == "S4");
  CHECK(group_label(alternating_group(3)) == "A3");
  CHECK(group_label(klein_four_group()) == "C2^2");
  CHECK(group_label(cyclic_group(6)) == "C6");
  CHECK(group_label(PermutationGroup::trivial(5)) == "1");
}

TEST_CASE("group text files") {
  const auto g = parse_group_text("# S_3\n(0 1)\n\n(0 1 2)\n");
  CHECK(g.order() == 6);
  const auto h = parse_group_text("degree 5\n(0 1)\n");
  CHECK(h.degree() == 5);
  CHECK(h.order() == 2);
  CHECK_THROWS_AS(parse_group_text("(0 1\n"), ParseError);
}

TEST_CASE("centralizer examples against brute force") {
  const auto s3 = symmetric_group(3);
  const auto a3 = alternating_group(3);
  CHECK(centralizer(s3, PermutationGroup::trivial(3)) == s3);
  CHECK(centralizer(s3, a3) == a3);
  CHECK(as_set(centralizer(s3, a3)) == oracle::brute_centralizer(s3, a3));

  const auto s4 = symmetric_group(4);
  const auto v4 = klein_four_group();
  CHECK(centralizer(s4, v4) == v4);
  CHECK(as_set(centralizer(s4, v4)) == oracle::brute_centralizer(s4, v4));

  for (const auto& h : all_subgroups(s4)) {
    CHECK(as_set(centralizer(s4, h)) == oracle::brute_centralizer(s4, h));
  }
  CHECK_THROWS_AS(centralizer(a3, s3), PreconditionError);
  CHECK(center(s3).order() == 1);
  CHECK(center(named_group("d4")).order() == 2);
  CHECK(center(named_group("q8")).order() == 2);
}

TEST_CASE("normalizer and normality") {
  const auto s4 = symmetric_group(4);
  CHECK(is_normal_in(klein_four_group(), s4));
  CHECK(is_normal_in(alternating_group(4), s4));
  const auto c2 = PermutationGroup::closure(4, {Permutation::parse("(0 1)", 4)});
  CHECK_FALSE(is_normal_in(c2, s4));
  CHECK(normalizer(s4, c2).order() == 4);
  CHECK_THROWS_AS(normalizer(c2, s4), PreconditionError);
}

TEST_CASE("subgroup enumeration examples") {
  const auto c6 = cyclic_group(6);
  const auto subs = all_subgroups(c6);
  REQUIRE(subs.size() == 4);
  std::vector<std::size_t> orders;
  for (const auto& h : subs) orders.push_back(h.order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 3, 6});

  const auto s3 = symmetric_group(3);
  CHECK(all_subgroups(s3).size() == 6);
  CHECK(as_sets(all_subgroups(s3)) == oracle::subgroups_by_subsets(s3));

  const auto s4 = symmetric_group(4);
  const auto oracle_s4 = oracle::subgroups_by_extension(s4);
  CHECK(oracle_s4.size() == 30);
  CHECK(all_subgroups(s4).size() == 30);
  CHECK(as_sets(all_subgroups(s4)) == oracle_s4);

  CHECK_THROWS_WITH_AS(all_subgroups(symmetric_group(5), 100), "group too large", PreconditionError);
}

TEST_CASE("all_subgroups agrees with the extension oracle for small groups") {
  for (const char* name : {"s3", "a4", "c4", "c6", "v4", "d4", "q8", "s4"}) {
    CAPTURE(name);
    const auto g = named_group(name);
    CHECK(as_sets(all_subgroups(g)) == oracle::subgroups_by_extension(g));
  }
  for (const char* name : {"c4", "v4", "d4", "q8"}) {
    CAPTURE(name);
    const auto g = named_group(name);
    CHECK(as_sets(all_subgroups(g)) == oracle::subgroups_by_subsets(g));
  }
}

TEST_CASE("subgroup list properties") {
  for (const char* name : {"s4", "d4", "a4", "q8"}) {
    CAPTURE(name);
    const auto g = named_group(name);
    const auto subs = all_subgroups(g);
    const auto sets = as_sets(subs);
    CHECK(sets.size() == subs.size());
    for (std::size_t k = 1; k < subs.size(); ++k) CHECK(subs[k - 1].order() <= subs[k].order());
    for (const auto& h : subs) {
      CHECK(g.order() % h.order() == 0);
      CHECK(PermutationGroup::closure(g.degree(), h.elements()) == h);
      for (const auto& x : g.elements()) {
        std::set<Permutation> conj;
        for (const auto& y : h.elements()) conj.insert(conjugate(y, x));
        CHECK(sets.count(conj) == 1);
      }
    }
  }
}

TEST_CASE("regular subgroup examples") {
  const auto c2 = regular_representation(cyclic_group(2));
  const auto regs = regular_subgroups(c2);
  REQUIRE(regs.size() == 1);
  CHECK(regs.front() == c2);

  // 4 points, order 3: no subgroup can act regularly.
  const auto c3on4 = PermutationGroup::closure(4, {Permutation::parse("(0 1 2)", 4)});
  CHECK(regular_subgroups(c3on4).empty());

  CHECK_THROWS_AS(regular_subgroups(symmetric_group(7)), PreconditionError);
}

TEST_CASE("regular subgroups of Gamma(S_3) agree with filtering all subgroups") {
  const auto gamma = build_gamma(symmetric_group(3));
  const auto regs = regular_subgroups(gamma.gamma);
  std::set<std::set<Permutation>> oracle_regs;
  for (const auto& h : all_subgroups(gamma.gamma)) {
    if (h.order() == 6 && acts_regularly(h)) oracle_regs.insert(as_set(h));
  }
  CHECK(as_sets(regs) == oracle_regs);
  CHECK(regs.size() == 8);
  for (const auto& u : regs) {
    CHECK(u.order() == 6);
    CHECK(acts_regularly(u));
    std::set<Point> orbit;
    for (const auto& x : u.elements()) orbit.insert(x(0));
    CHECK(orbit.size() == 6);
  }
  CHECK(std::count(regs.begin(), regs.end(), gamma.lambda_sub) == 1);
  CHECK(std::count(regs.begin(), regs.end(), gamma.rho_sub) == 1);
}

TEST_CASE("regular subgroups for other small groups agree with filtering") {
  for (const char* name : {"c3", "c4", "v4", "c6", "d4", "q8"}) {
    CAPTURE(name);
    const auto gamma = build_gamma(named_group(name));
    std::set<std::set<Permutation>> oracle_regs;
    for (const auto& h : all_subgroups(gamma.gamma, 2000)) {
      if (h.order() == gamma.gamma.degree() && acts_regularly(h)) oracle_regs.insert(as_set(h));
    }
    CHECK(as_sets(regular_subgroups(gamma.gamma)) == oracle_regs);
  }
}

TEST_CASE("multiplication table") {
  const auto s3 = symmetric_group(3);
  const MultiplicationTable t(s3);
  for (std::size_t a = 0; a < 6; ++a) {
    CHECK(t.product(a, t.inverse(a)) == 0);
    for (std::size_t b = 0; b < 6; ++b) CHECK(s3.elements()[t.product(a, b)] == s3.elements()[a] * s3.elements()[b]);
  }
}
