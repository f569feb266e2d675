#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bsym/permutation.hpp"

namespace bsym {

struct TaggedGenerator {
  std::string tag;
  Permutation perm;
};

/// A finite permutation group stored as its full, sorted element list.
/// Elements are ordered lexicographically by image array, so the identity
/// is always element 0.
class PermutationGroup {
public:
  PermutationGroup() = default;

  /// The group generated by `generators` (tags default to "g0", "g1", ...).
  /// Throws PreconditionError when generators have mixed degrees.
  static PermutationGroup closure(std::size_t degree, const std::vector<Permutation>& generators);
  static PermutationGroup closure(std::size_t degree, std::vector<TaggedGenerator> generators);
  /// Convenience overload taking the degree from the first generator.
  static PermutationGroup closure(const std::vector<Permutation>& generators);

  static PermutationGroup trivial(std::size_t degree);

  /// Wraps a set of permutations already known to be closed. A small
  /// generating set is chosen greedily in element order. Throws
  /// PreconditionError if the set is not a group.
  static PermutationGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<TaggedGenerator>& generators() const { return generators_; }
  std::vector<Permutation> generator_perms() const;
  const Permutation& identity() const { return elements_.front(); }

  bool contains(const Permutation& p) const;
  /// Position of `p` in the sorted element list.
  std::optional<std::size_t> index_of(const Permutation& p) const;

  bool is_subgroup_of(const PermutationGroup& g) const;
  bool is_abelian() const;
  /// True for groups whose non-identity elements all have order 2
  /// (including the trivial group).
  bool is_elementary_abelian_2() const;

  /// Set equality of element lists (generators are ignored).
  friend bool operator==(const PermutationGroup& a, const PermutationGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<TaggedGenerator> generators_;
};

/// Cayley table of a group in its element order: product(a, b) is the index
/// of elements[a] * elements[b].
class MultiplicationTable {
public:
  explicit MultiplicationTable(const PermutationGroup& group);

  std::size_t size() const { return n_; }
  std::size_t product(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }

private:
  std::size_t n_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
};

}  // namespace bsym
