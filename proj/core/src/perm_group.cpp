#include "bsym/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "bsym/error.hpp"

namespace bsym {

namespace {

std::vector<Permutation> close_under(std::size_t degree, const std::vector<Permutation>& gens,
                                     std::vector<Permutation> seed = {}) {
  for (const auto& g : gens) {
    if (g.degree() != degree) throw PreconditionError("generators of mixed degree");
  }
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  if (seed.empty()) seed.push_back(Permutation::identity(degree));
  for (auto& s : seed) {
    if (seen.insert(s).second) queue.push_back(s);
  }
  while (!queue.empty()) {
    const Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation y = g * x;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PermutationGroup PermutationGroup::closure(std::size_t degree,
                                           const std::vector<Permutation>& generators) {
  std::vector<TaggedGenerator> tagged;
  tagged.reserve(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    tagged.push_back({"g" + std::to_string(i), generators[i]});
  }
  return closure(degree, std::move(tagged));
}

PermutationGroup PermutationGroup::closure(std::size_t degree, std::vector<TaggedGenerator> generators) {
  std::vector<Permutation> perms;
  perms.reserve(generators.size());
  for (const auto& g : generators) perms.push_back(g.perm);
  PermutationGroup group;
  group.degree_ = degree;
  group.elements_ = close_under(degree, perms);
  group.generators_ = std::move(generators);
  return group;
}

PermutationGroup PermutationGroup::closure(const std::vector<Permutation>& generators) {
  if (generators.empty()) throw PreconditionError("cannot infer degree from an empty generator list");
  return closure(generators.front().degree(), generators);
}

PermutationGroup PermutationGroup::trivial(std::size_t degree) {
  PermutationGroup group;
  group.degree_ = degree;
  group.elements_.push_back(Permutation::identity(degree));
  return group;
}

PermutationGroup PermutationGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity() || elements.front().degree() != degree) {
    throw PreconditionError("element list does not contain the identity of the stated degree");
  }
  PermutationGroup group;
  group.degree_ = degree;
  std::vector<Permutation> current{Permutation::identity(degree)};
  std::vector<Permutation> gens;
  for (const auto& e : elements) {
    if (std::binary_search(current.begin(), current.end(), e)) continue;
    gens.push_back(e);
    current = close_under(degree, gens, std::move(current));
    if (current.size() > elements.size()) break;
  }
  if (current != elements) throw PreconditionError("element list is not closed under composition");
  group.elements_ = std::move(elements);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    group.generators_.push_back({"g" + std::to_string(i), std::move(gens[i])});
  }
  return group;
}

std::vector<Permutation> PermutationGroup::generator_perms() const {
  std::vector<Permutation> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.perm);
  return out;
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<std::size_t> PermutationGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& g) const {
  if (degree_ != g.degree_ || g.order() % order() != 0) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](const auto& e) { return g.contains(e); });
}

bool PermutationGroup::is_abelian() const {
  const auto gens = generator_perms();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

bool PermutationGroup::is_elementary_abelian_2() const {
  return std::all_of(elements_.begin(), elements_.end(), [](const auto& e) { return (e * e).is_identity(); });
}

MultiplicationTable::MultiplicationTable(const PermutationGroup& group)
    : n_(group.order()), table_(n_ * n_), inverse_(n_) {
  const auto& el = group.elements();
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      table_[a * n_ + b] = *group.index_of(el[a] * el[b]);
    }
  }
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (table_[a * n_ + b] == 0) {
        inverse_[a] = b;
        break;
      }
    }
  }
}

}  // namespace bsym
