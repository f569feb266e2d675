#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bsym/cd_lattice.hpp"
#include "bsym/error.hpp"
#include "bsym/groups.hpp"
#include "bsym/subgroups.hpp"
#include "oracles.hpp"

using namespace bsym;

namespace {

std::size_t brute_measure(const PermutationGroup& g, const PermutationGroup& h) {
  return h.order() * oracle::brute_centralizer(g, h).size();
}

}  // namespace

TEST_CASE("measure examples") {
  for (const char* name : {"s3", "s4", "d4", "q8", "c6"}) {
    CAPTURE(name);
    const auto g = named_group(name);
    CHECK(cd_measure(g, PermutationGroup::trivial(g.degree())) == g.order());
    CHECK(cd_measure(g, center(g)) == center(g).order() * g.order());
  }
  const auto s3 = symmetric_group(3);
  CHECK(cd_measure(s3, alternating_group(3)) == 9);
  CHECK(brute_measure(s3, alternating_group(3)) == 9);
  CHECK_THROWS_AS(cd_measure(alternating_group(3), s3), PreconditionError);
}

TEST_CASE("lattice examples") {
  const auto s4 = cd_lattice(symmetric_group(4));
  REQUIRE(s4.lattice.size() == 2);
  CHECK(s4.lattice[0].order() == 1);
  CHECK(s4.lattice[1] == symmetric_group(4));
  CHECK(s4.max_measure == 24);
  CHECK(s4.subgroup_count == 30);

  const auto s3 = cd_lattice(symmetric_group(3));
  REQUIRE(s3.lattice.size() == 1);
  CHECK(s3.lattice[0] == alternating_group(3));
  CHECK(s3.max_measure == 9);

  for (const char* name : {"c6", "c4", "v4", "c5"}) {
    CAPTURE(name);
    const auto g = named_group(name);
    const auto r = cd_lattice(g);
    REQUIRE(r.lattice.size() == 1);
    CHECK(r.lattice[0] == g);
    CHECK(r.max_measure == g.order() * g.order());
  }
  CHECK_THROWS_AS(cd_lattice(symmetric_group(5), 50), PreconditionError);
}

TEST_CASE("lattice maximizers agree with a brute-force measure scan") {
  for (const char* name : {"s3", "s4", "d4", "q8", "a4", "c6"}) {
    CAPTURE(name);
    const auto g = named_group(name);
    const auto subs = oracle::subgroups_by_extension(g);
    std::size_t best = 0;
    for (const auto& s : subs) {
      const auto h = PermutationGroup::from_elements(g.degree(), {s.begin(), s.end()});
      best = std::max(best, brute_measure(g, h));
    }
    std::set<std::set<Permutation>> expected;
    for (const auto& s : subs) {
      const auto h = PermutationGroup::from_elements(g.degree(), {s.begin(), s.end()});
      if (brute_measure(g, h) == best) expected.insert(s);
    }
    const auto r = cd_lattice(g);
    CHECK(r.max_measure == best);
    std::set<std::set<Permutation>> got;
    for (const auto& h : r.lattice) got.insert({h.elements().begin(), h.elements().end()});
    CHECK(got == expected);
  }
}

TEST_CASE("lattice properties") {
  for (const char* name : {"s3", "s4", "c6", "d4", "q8", "a4"}) {
    CAPTURE(name);
    const auto g = named_group(name);
    const auto r = cd_lattice(g);
    CHECK(r.closure_pass);
    CHECK(r.subnormal_pass);
    CHECK(r.failures.empty());
    CHECK_FALSE(r.lattice.empty());
    for (const auto& h : r.lattice) {
      CHECK(cd_measure(g, h) == r.max_measure);
      CHECK(cd_measure(g, centralizer(g, h)) == cd_measure(g, h));
      CHECK(is_subnormal(h, g));
      CHECK(cd_measure(g, h) <= g.order() * g.order());
      for (const auto& k : r.lattice) {
        const auto hk = set_product(h, k);
        const auto kh = set_product(k, h);
        REQUIRE(hk.order() > 0);
        CHECK(hk == kh);
      }
    }
  }
}

TEST_CASE("D_4 lattice") {
  const auto d4 = dihedral_group(4);
  const auto r = cd_lattice(d4);
  std::multiset<std::size_t> orders;
  for (const auto& h : r.lattice) orders.insert(h.order());
  CHECK(orders == std::multiset<std::size_t>{2, 4, 4, 4, 8});
  CHECK(r.max_measure == 16);
}

TEST_CASE("set products and intersections") {
  const auto s3 = symmetric_group(3);
  const auto a = PermutationGroup::closure(3, {Permutation::parse("(0 1)", 3)});
  const auto b = PermutationGroup::closure(3, {Permutation::parse("(0 2)", 3)});
  CHECK(set_product(a, b).order() == 0);  // 4 elements is not a subgroup
  CHECK(set_product(a, alternating_group(3)) == s3);
  CHECK(intersection(a, b).order() == 1);
  CHECK(intersection(s3, alternating_group(3)) == alternating_group(3));
  CHECK_FALSE(is_subnormal(a, s3));
  CHECK(is_subnormal(alternating_group(3), s3));
  const auto c2 = PermutationGroup::closure(4, {Permutation::parse("(0 1)(2 3)", 4)});
  CHECK(is_subnormal(c2, dihedral_group(4)));
}

TEST_CASE("centralizer estimate in symmetric groups") {
  const auto s4 = verify_sn_cent_est(4);
  CHECK(s4.pass);
  CHECK(s4.subgroup_count == 30);
  CHECK(s4.max_measure == 24);
  CHECK(s4.equality_orders == std::vector<std::size_t>{1, 24});

  const auto s5 = verify_sn_cent_est(5);
  CHECK(s5.pass);
  CHECK(s5.subgroup_count == 156);
  CHECK(s5.equality_orders == std::vector<std::size_t>{1, 120});

  CHECK_THROWS_AS(verify_sn_cent_est(3), PreconditionError);
  CHECK_THROWS_AS(verify_sn_cent_est(5, 100), PreconditionError);
}
