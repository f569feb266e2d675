#include "bsym/groups.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "bsym/error.hpp"

namespace bsym {

PermutationGroup symmetric_group(std::size_t n) {
  if (n <= 1) return PermutationGroup::trivial(n);
  std::vector<std::vector<Point>> cycle(1);
  for (Point i = 0; i < n; ++i) cycle[0].push_back(i);
  std::vector<TaggedGenerator> gens{{"(0 1)", Permutation::from_cycles(n, {{0, 1}})}};
  if (n > 2) gens.push_back({"n-cycle", Permutation::from_cycles(n, cycle)});
  return PermutationGroup::closure(n, std::move(gens));
}

PermutationGroup alternating_group(std::size_t n) {
  if (n <= 2) return PermutationGroup::trivial(n);
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return PermutationGroup::closure(n, gens);
}

PermutationGroup cyclic_group(std::size_t n) {
  if (n <= 1) return PermutationGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Point> images(n);
  for (Point i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return PermutationGroup::closure(n, {TaggedGenerator{"rotation", Permutation(images)}});
}

PermutationGroup dihedral_group(std::size_t n) {
  if (n < 3) throw PreconditionError("dihedral group needs at least 3 points");
  std::vector<Point> rot(n), refl(n);
  for (Point i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return PermutationGroup::closure(
      n, {TaggedGenerator{"rotation", Permutation(rot)}, TaggedGenerator{"reflection", Permutation(refl)}});
}

PermutationGroup klein_four_group() {
  return PermutationGroup::closure(4, {Permutation::parse("(0 1)(2 3)", 4), Permutation::parse("(0 2)(1 3)", 4)});
}

PermutationGroup quaternion_group() {
  // Unit quaternions +-1, +-i, +-j, +-k encoded as 2*unit + sign.
  // unit_product[a][b] = (unit, negative) for basis units 1, i, j, k.
  static constexpr std::array<std::array<std::pair<int, bool>, 4>, 4> unit_product{{
      {{{0, false}, {1, false}, {2, false}, {3, false}}},
      {{{1, false}, {0, true}, {3, false}, {2, true}}},
      {{{2, false}, {3, true}, {0, true}, {1, false}}},
      {{{3, false}, {2, false}, {1, true}, {0, true}}},
  }};
  auto mul = [](Point a, Point b) {
    const auto [unit, neg] = unit_product[a / 2][b / 2];
    const bool sign = ((a % 2) != 0) ^ ((b % 2) != 0) ^ neg;
    return static_cast<Point>(2 * unit + (sign ? 1 : 0));
  };
  auto left = [&](Point g) {
    std::vector<Point> images(8);
    for (Point x = 0; x < 8; ++x) images[x] = mul(g, x);
    return Permutation(images);
  };
  return PermutationGroup::closure(8, {TaggedGenerator{"i", left(2)}, TaggedGenerator{"j", left(4)}});
}

PermutationGroup regular_representation(const PermutationGroup& g) {
  const std::size_t n = g.order();
  std::vector<TaggedGenerator> gens;
  for (const auto& gen : g.generators()) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(*g.index_of(gen.perm * g.elements()[x]));
    gens.push_back({gen.tag, Permutation(images)});
  }
  return PermutationGroup::closure(n, std::move(gens));
}

PermutationGroup named_group(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
  if (key == "s3") return symmetric_group(3);
  if (key == "s4") return symmetric_group(4);
  if (key == "s5") return symmetric_group(5);
  if (key == "a4") return alternating_group(4);
  if (key == "c1") return PermutationGroup::trivial(1);
  if (key == "c2") return cyclic_group(2);
  if (key == "c3") return cyclic_group(3);
  if (key == "c4") return cyclic_group(4);
  if (key == "c5") return cyclic_group(5);
  if (key == "c6") return cyclic_group(6);
  if (key == "v4") return klein_four_group();
  if (key == "d4") return dihedral_group(4);
  if (key == "q8") return quaternion_group();
  throw PreconditionError("unknown group name '" + std::string(name) + "'");
}

std::vector<std::string> named_group_names() {
  return {"s3", "s4", "s5", "a4", "c1", "c2", "c3", "c4", "c5", "c6", "v4", "d4", "q8"};
}

PermutationGroup parse_group_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  std::size_t degree = 0;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (line.rfind("degree", 0) == 0) {
      try {
        degree = std::stoul(line.substr(6));
      } catch (const std::exception&) {
        throw ParseError("malformed degree line '" + line + "'");
      }
      continue;
    }
    lines.push_back(line);
  }
  if (degree == 0) {
    for (const auto& l : lines) degree = std::max(degree, Permutation::parse(l).degree());
  }
  if (degree == 0) throw ParseError("group file names no points and no degree");
  std::vector<TaggedGenerator> gens;
  for (const auto& l : lines) gens.push_back({l, Permutation::parse(l, degree)});
  return PermutationGroup::closure(degree, std::move(gens));
}

std::string group_label(const PermutationGroup& g) {
  const std::size_t order = g.order();
  const std::size_t deg = g.degree();
  if (order == 1) return "1";
  if (deg >= 2 && deg <= 6 && g == symmetric_group(deg)) return "S" + std::to_string(deg);
  if (deg >= 3 && deg <= 6 && g == alternating_group(deg)) return "A" + std::to_string(deg);
  if (deg >= 3 && order == 2 * deg && g == dihedral_group(deg)) return "D" + std::to_string(deg);
  if (deg == 8 && order == 8 && g == quaternion_group()) return "Q8";
  for (const auto& x : g.elements()) {
    if (x.order() == order) return "C" + std::to_string(order);
  }
  if (g.is_elementary_abelian_2()) {
    std::size_t k = 0;
    for (std::size_t m = order; m > 1; m /= 2) ++k;
    return "C2^" + std::to_string(k);
  }
  return "order" + std::to_string(order);
}

}  // namespace bsym
