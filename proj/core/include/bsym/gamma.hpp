#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bsym/perm_group.hpp"

namespace bsym {

/// Fixes a numbering of the elements of an abstract group G: index k is the
/// k-th element in canonical order, so index 0 is the identity. Every
/// module that identifies polytope vertices with group elements goes
/// through one of these.
class GroupLabelling {
public:
  explicit GroupLabelling(PermutationGroup group);

  const PermutationGroup& group() const { return group_; }
  std::size_t size() const { return group_.order(); }
  const Permutation& element(std::size_t index) const { return group_.elements()[index]; }
  /// Throws PreconditionError if `g` is not in the group.
  std::size_t index_of(const Permutation& g) const;

  std::size_t product(std::size_t a, std::size_t b) const { return table_.product(a, b); }
  std::size_t inverse(std::size_t a) const { return table_.inverse(a); }

  /// lambda_g : x -> g x, as a permutation of the indices.
  Permutation left_multiplication(std::size_t g) const;
  /// rho_g : x -> x g^-1.
  Permutation right_multiplication(std::size_t g) const;
  /// iota : x -> x^-1.
  Permutation inversion() const;

private:
  PermutationGroup group_;
  MultiplicationTable table_;
};

struct GammaGroup {
  GroupLabelling base;
  PermutationGroup gamma;
  PermutationGroup lambda_sub;
  PermutationGroup rho_sub;
  Permutation iota;
};

inline constexpr std::size_t kGammaMaxOrder = 30;
inline constexpr std::size_t kNormalizerMaxOrder = 6;

/// Gamma(G) = <lambda_g, rho_g, iota> inside Sym(G). Generators are tagged
/// "lambda<gen>", "rho<gen>" and "iota". Throws PreconditionError for |G| > 30.
GammaGroup build_gamma(const PermutationGroup& g);

struct WreathReport {
  std::size_t group_order = 0;
  std::size_t center_order = 0;
  /// 2 |G|^2 / |Z(G)|.
  std::size_t formula_order = 0;
  std::size_t actual_order = 0;
  bool hypothesis_holds = false;  // G is not an elementary abelian 2-group
  bool kernel_check = false;      // lambda_z rho_z = id for every z in Z(G)
  bool pass = false;
  std::string status;             // "pass", "fail" or "hypothesis-violated"
};

/// Compares |Gamma(G)| against the wreath quotient order 2|G|^2/|Z(G)|.
/// Elementary abelian 2-groups produce status "hypothesis-violated"; such a
/// report passes when it faithfully records the actual order.
WreathReport verify_wreath_quotient(const PermutationGroup& g);

struct RegularPair {
  PermutationGroup u;
  PermutationGroup v;
};

struct RegularPairsReport {
  GammaGroup gamma;
  std::vector<PermutationGroup> regular;
  /// Unordered pairs {U, V}, U = V allowed, of regular subgroups of Gamma(G)
  /// that centralize each other; indices into `regular` with first <= second.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

RegularPairsReport commuting_regular_pairs(const PermutationGroup& g);

/// If every element of `u` is lambda_a rho_b for some a, b, returns the
/// orders of the projections {a} and {b}; otherwise nullopt.
std::optional<std::pair<std::size_t, std::size_t>> lambda_rho_projection_orders(
    const GammaGroup& gamma, const PermutationGroup& u);

struct NormalizerReport {
  std::size_t normalizer_order = 0;
  std::size_t automorphism_order = 0;
  std::size_t aut_gamma_order = 0;
  std::size_t gamma_order = 0;
  bool pass = false;
};

/// N_{Sym(G)}(Gamma(G)) by exhaustive scan, compared as a set with
/// Aut(G) Gamma(G). Throws PreconditionError for |G| > 6.
NormalizerReport normalizer_in_full_symmetric(const PermutationGroup& g);

/// Aut(G) as permutations of the labelling indices, by scanning all
/// bijections fixing the identity.
std::vector<Permutation> automorphisms(const GroupLabelling& labelling);

}  // namespace bsym
