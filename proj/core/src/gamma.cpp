#include "bsym/gamma.hpp"

#include <algorithm>
#include <numeric>

#include "bsym/error.hpp"
#include "bsym/subgroups.hpp"

namespace bsym {

GroupLabelling::GroupLabelling(PermutationGroup group) : group_(std::move(group)), table_(group_) {}

std::size_t GroupLabelling::index_of(const Permutation& g) const {
  auto idx = group_.index_of(g);
  if (!idx) throw PreconditionError("element is not in the labelled group");
  return *idx;
}

Permutation GroupLabelling::left_multiplication(std::size_t g) const {
  std::vector<Point> images(size());
  for (std::size_t x = 0; x < size(); ++x) images[x] = static_cast<Point>(product(g, x));
  return Permutation(std::move(images));
}

Permutation GroupLabelling::right_multiplication(std::size_t g) const {
  const std::size_t g_inv = inverse(g);
  std::vector<Point> images(size());
  for (std::size_t x = 0; x < size(); ++x) images[x] = static_cast<Point>(product(x, g_inv));
  return Permutation(std::move(images));
}

Permutation GroupLabelling::inversion() const {
  std::vector<Point> images(size());
  for (std::size_t x = 0; x < size(); ++x) images[x] = static_cast<Point>(inverse(x));
  return Permutation(std::move(images));
}

GammaGroup build_gamma(const PermutationGroup& g) {
  if (g.order() > kGammaMaxOrder) throw PreconditionError("group too large for Gamma construction");
  GroupLabelling base(g);
  const std::size_t n = base.size();
  std::vector<TaggedGenerator> lambda_gens, rho_gens;
  for (const auto& gen : g.generators()) {
    const std::size_t idx = base.index_of(gen.perm);
    lambda_gens.push_back({"lambda" + gen.perm.cycle_string(), base.left_multiplication(idx)});
    rho_gens.push_back({"rho" + gen.perm.cycle_string(), base.right_multiplication(idx)});
  }
  Permutation iota = base.inversion();
  std::vector<TaggedGenerator> all = lambda_gens;
  all.insert(all.end(), rho_gens.begin(), rho_gens.end());
  all.push_back({"iota", iota});
  return GammaGroup{std::move(base), PermutationGroup::closure(n, std::move(all)),
                    PermutationGroup::closure(n, std::move(lambda_gens)),
                    PermutationGroup::closure(n, std::move(rho_gens)), std::move(iota)};
}

WreathReport verify_wreath_quotient(const PermutationGroup& g) {
  WreathReport r;
  const GammaGroup gamma = build_gamma(g);
  const PermutationGroup z = center(g);
  r.group_order = g.order();
  r.center_order = z.order();
  r.formula_order = 2 * r.group_order * r.group_order / r.center_order;
  r.actual_order = gamma.gamma.order();
  r.hypothesis_holds = !g.is_elementary_abelian_2();

  r.kernel_check = std::all_of(z.elements().begin(), z.elements().end(), [&](const auto& elem) {
    const std::size_t idx = gamma.base.index_of(elem);
    return (gamma.base.left_multiplication(idx) * gamma.base.right_multiplication(idx)).is_identity();
  });

  if (!r.hypothesis_holds) {
    r.status = "hypothesis-violated";
    r.pass = r.kernel_check;
  } else {
    r.pass = r.kernel_check && r.actual_order == r.formula_order;
    r.status = r.pass ? "pass" : "fail";
  }
  return r;
}

RegularPairsReport commuting_regular_pairs(const PermutationGroup& g) {
  RegularPairsReport report{build_gamma(g), {}, {}};
  report.regular = regular_subgroups(report.gamma.gamma);
  for (std::size_t i = 0; i < report.regular.size(); ++i) {
    for (std::size_t j = i; j < report.regular.size(); ++j) {
      if (centralize_each_other(report.regular[i], report.regular[j])) report.pairs.emplace_back(i, j);
    }
  }
  return report;
}

std::optional<std::pair<std::size_t, std::size_t>> lambda_rho_projection_orders(const GammaGroup& gamma,
                                                                                const PermutationGroup& u) {
  const std::size_t n = gamma.base.size();
  std::vector<bool> left(n, false), right(n, false);
  for (const auto& elem : u.elements()) {
    bool found = false;
    for (std::size_t a = 0; a < n && !found; ++a) {
      // lambda_a rho_b sends the identity to a b^-1, which pins b given a.
      const std::size_t b = gamma.base.product(gamma.base.inverse(elem(0)), a);
      if (gamma.base.left_multiplication(a) * gamma.base.right_multiplication(b) == elem) {
        left[a] = right[b] = true;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  // Projections of a subgroup are subgroups, so counting the touched
  // elements gives their orders.
  return std::pair{static_cast<std::size_t>(std::count(left.begin(), left.end(), true)),
                   static_cast<std::size_t>(std::count(right.begin(), right.end(), true))};
}

std::vector<Permutation> automorphisms(const GroupLabelling& labelling) {
  const std::size_t n = labelling.size();
  if (n > 8) throw PreconditionError("automorphism scan limited to groups of order <= 8");
  std::vector<Permutation> out;
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  do {
    bool hom = true;
    for (std::size_t a = 0; a < n && hom; ++a) {
      for (std::size_t b = 0; b < n && hom; ++b) {
        hom = images[labelling.product(a, b)] == labelling.product(images[a], images[b]);
      }
    }
    if (hom) out.emplace_back(images);
  } while (std::next_permutation(images.begin() + 1, images.end()));
  return out;
}

NormalizerReport normalizer_in_full_symmetric(const PermutationGroup& g) {
  if (g.order() > kNormalizerMaxOrder) throw PreconditionError("normalizer scan limited to |G| <= 6");
  const GammaGroup gamma = build_gamma(g);
  const std::size_t n = gamma.base.size();
  const auto gens = gamma.gamma.generator_perms();

  std::vector<Permutation> normalizer;
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  do {
    const Permutation pi(images);
    // Conjugation is injective, so pi Gamma pi^-1 inside Gamma forces equality.
    if (std::all_of(gens.begin(), gens.end(), [&](const auto& s) { return gamma.gamma.contains(conjugate(s, pi)); })) {
      normalizer.push_back(pi);
    }
  } while (std::next_permutation(images.begin(), images.end()));

  const auto aut = automorphisms(gamma.base);
  std::vector<Permutation> product;
  for (const auto& a : aut) {
    for (const auto& x : gamma.gamma.elements()) product.push_back(a * x);
  }
  std::sort(product.begin(), product.end());
  product.erase(std::unique(product.begin(), product.end()), product.end());

  NormalizerReport r;
  r.normalizer_order = normalizer.size();
  r.automorphism_order = aut.size();
  r.aut_gamma_order = product.size();
  r.gamma_order = gamma.gamma.order();
  r.pass = normalizer == product;
  return r;
}

}  // namespace bsym
