#include "bsym/subgroups.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "bsym/error.hpp"

namespace bsym {

namespace {

void require_subgroup(const PermutationGroup& g, const PermutationGroup& h) {
  if (!h.is_subgroup_of(g)) throw PreconditionError("subgroup is not contained in the group");
}

// Subgroup of a group with a Cayley table, as a bitset over element indices.
struct IndexSubgroup {
  std::vector<std::uint64_t> bits;
  std::vector<std::size_t> members;
  std::vector<std::size_t> gens;

  bool has(std::size_t i) const { return (bits[i / 64] >> (i % 64)) & 1u; }
  void add(std::size_t i) {
    bits[i / 64] |= std::uint64_t{1} << (i % 64);
    members.push_back(i);
  }
  bool contains_all(const IndexSubgroup& o) const {
    for (std::size_t w = 0; w < bits.size(); ++w) {
      if ((o.bits[w] & ~bits[w]) != 0) return false;
    }
    return true;
  }
};

IndexSubgroup join(const MultiplicationTable& table, const IndexSubgroup& h, std::size_t g) {
  IndexSubgroup k = h;
  k.gens.push_back(g);
  for (std::size_t pos = 0; pos < k.members.size(); ++pos) {
    const std::size_t x = k.members[pos];
    for (std::size_t gen : k.gens) {
      const std::size_t y = table.product(x, gen);
      if (!k.has(y)) k.add(y);
    }
  }
  return k;
}

bool is_prime_power(std::size_t n) {
  if (n < 2) return false;
  std::size_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

PermutationGroup centralizer(const PermutationGroup& g, const PermutationGroup& h) {
  require_subgroup(g, h);
  const auto gens = h.generator_perms();
  std::vector<Permutation> members;
  for (const auto& x : g.elements()) {
    if (std::all_of(gens.begin(), gens.end(), [&](const auto& s) { return commute(x, s); })) {
      members.push_back(x);
    }
  }
  return PermutationGroup::from_elements(g.degree(), std::move(members));
}

PermutationGroup normalizer(const PermutationGroup& g, const PermutationGroup& h) {
  require_subgroup(g, h);
  const auto gens = h.generator_perms();
  std::vector<Permutation> members;
  for (const auto& x : g.elements()) {
    if (std::all_of(gens.begin(), gens.end(), [&](const auto& s) { return h.contains(conjugate(s, x)); })) {
      members.push_back(x);
    }
  }
  return PermutationGroup::from_elements(g.degree(), std::move(members));
}

PermutationGroup center(const PermutationGroup& g) { return centralizer(g, g); }

bool is_normal_in(const PermutationGroup& h, const PermutationGroup& g) {
  if (!h.is_subgroup_of(g)) return false;
  const auto hg = h.generator_perms();
  const auto gg = g.generator_perms();
  for (const auto& x : gg) {
    for (const auto& s : hg) {
      if (!h.contains(conjugate(s, x))) return false;
    }
  }
  return true;
}

std::vector<PermutationGroup> all_subgroups(const PermutationGroup& g, std::size_t bound) {
  if (g.order() > bound) throw PreconditionError("group too large");
  const MultiplicationTable table(g);
  const std::size_t n = g.order();
  const std::size_t words = (n + 63) / 64;

  // Every subgroup is generated by its elements of prime-power order, so
  // joining with cyclic subgroups of prime-power order reaches all of them.
  std::vector<IndexSubgroup> cyclic;
  std::set<std::vector<std::uint64_t>> cyclic_seen;
  for (std::size_t a = 1; a < n; ++a) {
    IndexSubgroup c{std::vector<std::uint64_t>(words, 0), {}, {a}};
    std::size_t x = 0;
    do {
      c.add(x);
      x = table.product(x, a);
    } while (x != 0);
    if (!is_prime_power(c.members.size())) continue;
    if (cyclic_seen.insert(c.bits).second) cyclic.push_back(std::move(c));
  }

  IndexSubgroup trivial{std::vector<std::uint64_t>(words, 0), {}, {}};
  trivial.add(0);
  std::vector<IndexSubgroup> found{trivial};
  std::set<std::vector<std::uint64_t>> seen{trivial.bits};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& c : cyclic) {
      if (found[i].contains_all(c)) continue;
      IndexSubgroup k = join(table, found[i], c.gens.front());
      if (seen.insert(k.bits).second) found.push_back(std::move(k));
    }
  }

  std::vector<PermutationGroup> out;
  out.reserve(found.size());
  for (const auto& s : found) {
    std::vector<Permutation> gens;
    for (std::size_t idx : s.gens) gens.push_back(g.elements()[idx]);
    out.push_back(PermutationGroup::closure(g.degree(), gens));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

bool acts_regularly(const PermutationGroup& u) {
  const std::size_t m = u.degree();
  if (u.order() != m || m == 0) return false;
  std::vector<bool> hit(m, false);
  for (const auto& e : u.elements()) hit[e(0)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool centralize_each_other(const PermutationGroup& a, const PermutationGroup& b) {
  const auto ga = a.generator_perms();
  const auto gb = b.generator_perms();
  for (const auto& x : ga) {
    for (const auto& y : gb) {
      if (!commute(x, y)) return false;
    }
  }
  return true;
}

namespace {

// Partial semiregular subgroup: owner[x] is the unique element sending
// point 0 to x, or empty (degree 0) when no element does yet.
struct SemiregularPartial {
  std::vector<Permutation> owner;
  std::vector<Permutation> gens;
  std::size_t size = 0;

  std::vector<Point> key() const {
    std::vector<Point> k;
    for (const auto& p : owner) {
      if (p.degree() == 0) {
        k.push_back(static_cast<Point>(-1));
      } else {
        k.insert(k.end(), p.images().begin(), p.images().end());
      }
    }
    return k;
  }
};

// Closure of `gens`, aborting as soon as two elements agree on point 0 or a
// non-identity element has a fixed point.
std::optional<SemiregularPartial> semiregular_closure(std::size_t m, std::vector<Permutation> gens) {
  SemiregularPartial part;
  part.owner.assign(m, Permutation{});
  part.owner[0] = Permutation::identity(m);
  part.size = 1;
  std::vector<Point> queue{0};
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    const Permutation x = part.owner[queue[pos]];
    for (const auto& gen : gens) {
      Permutation y = gen * x;
      const Point p = y(0);
      if (part.owner[p].degree() != 0) {
        if (part.owner[p] != y) return std::nullopt;
        continue;
      }
      if (y.has_fixed_point()) return std::nullopt;
      part.owner[p] = std::move(y);
      ++part.size;
      queue.push_back(p);
    }
  }
  part.gens = std::move(gens);
  return part;
}

}  // namespace

std::vector<PermutationGroup> regular_subgroups(const PermutationGroup& g) {
  const std::size_t m = g.degree();
  if (g.order() > kRegularSearchMaxOrder) {
    throw PreconditionError("group too large for regular subgroup search");
  }
  if (m > kRegularSearchMaxDegree) throw PreconditionError("degree too large for regular subgroup search");
  if (m == 0 || g.order() % m != 0) return {};

  // A regular subgroup holds exactly one element sending 0 to each point x,
  // and all of its non-identity elements are fixed-point-free.
  std::vector<std::vector<const Permutation*>> candidates(m);
  for (const auto& e : g.elements()) {
    if (!e.is_identity() && !e.has_fixed_point()) candidates[e(0)].push_back(&e);
  }

  std::set<std::vector<Point>> visited;
  std::map<std::vector<Point>, std::vector<Permutation>> complete;

  // Any regular U containing the current partial subgroup K contains the
  // candidate u_x for the first uncovered point x, and <K, u_x> stays inside
  // U, so extending by every candidate of x never misses U.
  auto search = [&](auto& self, const SemiregularPartial& part) -> void {
    if (!visited.insert(part.key()).second) return;
    if (part.size == m) {
      complete.emplace(part.key(), part.owner);
      return;
    }
    std::size_t x = 0;
    while (part.owner[x].degree() != 0) ++x;
    for (const Permutation* c : candidates[x]) {
      auto gens = part.gens;
      gens.push_back(*c);
      if (auto next = semiregular_closure(m, std::move(gens))) self(self, *next);
    }
  };
  search(search, *semiregular_closure(m, {}));

  std::vector<PermutationGroup> out;
  out.reserve(complete.size());
  for (auto& [key, elements] : complete) out.push_back(PermutationGroup::from_elements(m, elements));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.elements() < b.elements(); });
  return out;
}

}  // namespace bsym
