#include "bsym/cd_lattice.hpp"

#include <algorithm>
#include <set>

#include "bsym/error.hpp"
#include "bsym/groups.hpp"

namespace bsym {

std::size_t cd_measure(const PermutationGroup& g, const PermutationGroup& h) {
  return h.order() * centralizer(g, h).order();
}

bool is_subnormal(const PermutationGroup& h, const PermutationGroup& g) {
  if (!h.is_subgroup_of(g)) return false;
  PermutationGroup current = h;
  while (current.order() != g.order()) {
    PermutationGroup next = normalizer(g, current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

PermutationGroup set_product(const PermutationGroup& h, const PermutationGroup& k) {
  std::vector<Permutation> prod;
  prod.reserve(h.order() * k.order());
  for (const auto& a : h.elements()) {
    for (const auto& b : k.elements()) prod.push_back(a * b);
  }
  std::sort(prod.begin(), prod.end());
  prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
  for (const auto& a : prod) {
    for (const auto& b : prod) {
      if (!std::binary_search(prod.begin(), prod.end(), a * b)) return PermutationGroup{};
    }
  }
  return PermutationGroup::from_elements(h.degree(), std::move(prod));
}

PermutationGroup intersection(const PermutationGroup& h, const PermutationGroup& k) {
  std::vector<Permutation> common;
  std::set_intersection(h.elements().begin(), h.elements().end(), k.elements().begin(), k.elements().end(),
                        std::back_inserter(common));
  return PermutationGroup::from_elements(h.degree(), std::move(common));
}

namespace {

bool in_list(const std::vector<PermutationGroup>& list, const PermutationGroup& h) {
  return std::any_of(list.begin(), list.end(), [&](const auto& x) { return x == h; });
}

std::string describe(const PermutationGroup& h) {
  std::string s = "order " + std::to_string(h.order()) + " <";
  const auto gens = h.generator_perms();
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].cycle_string();
  return s + ">";
}

}  // namespace

CDReport cd_lattice(const PermutationGroup& g, std::size_t bound) {
  CDReport report;
  report.group = g;
  const auto subgroups = all_subgroups(g, bound);
  report.subgroup_count = subgroups.size();
  std::vector<std::size_t> measures;
  measures.reserve(subgroups.size());
  for (const auto& h : subgroups) {
    measures.push_back(cd_measure(g, h));
    report.max_measure = std::max(report.max_measure, measures.back());
  }
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (measures[i] == report.max_measure) report.lattice.push_back(subgroups[i]);
  }

  report.closure_pass = true;
  for (const auto& h : report.lattice) {
    if (!in_list(report.lattice, centralizer(g, h))) {
      report.closure_pass = false;
      report.failures.push_back("centralizer of " + describe(h) + " leaves the lattice");
    }
    for (const auto& k : report.lattice) {
      if (!in_list(report.lattice, intersection(h, k))) {
        report.closure_pass = false;
        report.failures.push_back("intersection of " + describe(h) + " and " + describe(k) + " leaves the lattice");
      }
      const PermutationGroup hk = set_product(h, k);
      if (hk.order() == 0) {
        report.closure_pass = false;
        report.failures.push_back("set product of " + describe(h) + " and " + describe(k) + " is not a subgroup");
      } else if (!in_list(report.lattice, hk)) {
        report.closure_pass = false;
        report.failures.push_back("set product of " + describe(h) + " and " + describe(k) + " leaves the lattice");
      }
    }
  }

  report.subnormal_pass = true;
  for (const auto& h : report.lattice) {
    if (!is_subnormal(h, g)) {
      report.subnormal_pass = false;
      report.failures.push_back(describe(h) + " is not subnormal");
    }
  }
  return report;
}

SnCentEstReport verify_sn_cent_est(std::size_t n, std::size_t bound) {
  if (n != 4 && n != 5) throw PreconditionError("sn-cent-est supports n in {4, 5}");
  SnCentEstReport r;
  r.n = n;
  const PermutationGroup sn = symmetric_group(n);
  r.group_order = sn.order();
  const auto subgroups = all_subgroups(sn, bound);
  r.subgroup_count = subgroups.size();
  r.pass = true;
  for (const auto& u : subgroups) {
    const std::size_t m = cd_measure(sn, u);
    r.max_measure = std::max(r.max_measure, m);
    if (m > r.group_order) {
      r.pass = false;
      r.failures.push_back("measure " + std::to_string(m) + " exceeds |G| at " + describe(u));
    } else if (m == r.group_order) {
      r.equality_orders.push_back(u.order());
      if (u.order() != 1 && u.order() != r.group_order) {
        r.pass = false;
        r.failures.push_back("equality at proper nontrivial " + describe(u));
      }
    }
  }
  return r;
}

}  // namespace bsym
