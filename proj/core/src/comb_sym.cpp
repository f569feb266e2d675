#include "bsym/comb_sym.hpp"

#include <algorithm>
#include <map>

#include "bsym/error.hpp"

namespace bsym {

namespace {

using Signature = std::vector<std::size_t>;

struct Coloring {
  std::vector<std::size_t> vertex_a, vertex_b, facet_a, facet_b;
};

std::size_t color_id(std::map<Signature, std::size_t>& dict, Signature sig) {
  return dict.try_emplace(std::move(sig), dict.size()).first->second;
}

std::size_t distinct_count(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> all = a;
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
}

// Iterated colour refinement of vertices and facets, run on both
// structures with shared dictionaries so colours are comparable.
Coloring refine(const IncidenceStructure& a, const IncidenceStructure& b) {
  Coloring c{std::vector<std::size_t>(a.n_vertices(), 0), std::vector<std::size_t>(b.n_vertices(), 0),
             std::vector<std::size_t>(a.n_facets(), 0), std::vector<std::size_t>(b.n_facets(), 0)};
  std::size_t classes = 0;
  for (;;) {
    std::map<Signature, std::size_t> vdict, fdict;
    auto vertex_round = [&](const IncidenceStructure& s, const std::vector<std::size_t>& vcol,
                            const std::vector<std::size_t>& fcol) {
      std::vector<std::size_t> out(s.n_vertices());
      for (std::size_t v = 0; v < s.n_vertices(); ++v) {
        Signature sig;
        for (std::size_t f = 0; f < s.n_facets(); ++f) {
          if (s.incident(f, v)) sig.push_back(fcol[f]);
        }
        std::sort(sig.begin(), sig.end());
        sig.insert(sig.begin(), vcol[v]);
        out[v] = color_id(vdict, std::move(sig));
      }
      return out;
    };
    auto facet_round = [&](const IncidenceStructure& s, const std::vector<std::size_t>& vcol,
                           const std::vector<std::size_t>& fcol) {
      std::vector<std::size_t> out(s.n_facets());
      for (std::size_t f = 0; f < s.n_facets(); ++f) {
        Signature sig;
        for (std::size_t v : members(s.rows()[f])) sig.push_back(vcol[v]);
        std::sort(sig.begin(), sig.end());
        sig.insert(sig.begin(), fcol[f]);
        out[f] = color_id(fdict, std::move(sig));
      }
      return out;
    };
    Coloring next;
    next.vertex_a = vertex_round(a, c.vertex_a, c.facet_a);
    next.vertex_b = vertex_round(b, c.vertex_b, c.facet_b);
    next.facet_a = facet_round(a, c.vertex_a, c.facet_a);
    next.facet_b = facet_round(b, c.vertex_b, c.facet_b);
    const std::size_t count = distinct_count(next.vertex_a, next.vertex_b) + distinct_count(next.facet_a, next.facet_b);
    c = std::move(next);
    if (count == classes) break;
    classes = count;
  }
  return c;
}

bool same_multiset(std::vector<std::size_t> x, std::vector<std::size_t> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

// Backtracking search for incidence-preserving vertex bijections a -> b.
class Matcher {
public:
  Matcher(const IncidenceStructure& a, const IncidenceStructure& b, bool find_all)
      : a_(a), b_(b), find_all_(find_all), colors_(refine(a, b)) {}

  std::vector<Permutation> run() {
    if (a_.n_vertices() != b_.n_vertices() || a_.n_facets() != b_.n_facets()) return {};
    if (!same_multiset(colors_.vertex_a, colors_.vertex_b) || !same_multiset(colors_.facet_a, colors_.facet_b)) {
      return {};
    }
    build_order();
    image_.assign(a_.n_vertices(), kUnset);
    used_ = VertexSet(b_.n_vertices());
    partial_.assign(a_.n_facets(), VertexSet(b_.n_vertices()));
    dfs(0);
    return std::move(results_);
  }

private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Next vertex: most facets shared with the already ordered vertices, then
  // smallest colour class, then lowest index.
  void build_order() {
    const std::size_t n = a_.n_vertices();
    std::map<std::size_t, std::size_t> sizes;
    for (std::size_t c : colors_.vertex_a) ++sizes[c];
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> shared(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = kUnset;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == kUnset || shared[v] > shared[best] ||
            (shared[v] == shared[best] && sizes[colors_.vertex_a[v]] < sizes[colors_.vertex_a[best]])) {
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (std::size_t f = 0; f < a_.n_facets(); ++f) {
        if (!a_.incident(f, best)) continue;
        for (std::size_t v : members(a_.rows()[f])) ++shared[v];
      }
    }
  }

  // Every facet f of a must still have a same-coloured partner g in b with
  // g restricted to the used image vertices equal to the image of f.
  bool consistent() const {
    for (std::size_t f = 0; f < a_.n_facets(); ++f) {
      bool ok = false;
      for (std::size_t g = 0; g < b_.n_facets() && !ok; ++g) {
        if (colors_.facet_b[g] != colors_.facet_a[f]) continue;
        ok = (b_.rows()[g] & used_) == partial_[f];
      }
      if (!ok) return false;
    }
    return true;
  }

  void dfs(std::size_t depth) {
    if (!find_all_ && !results_.empty()) return;
    if (depth == order_.size()) {
      std::vector<Point> images(image_.begin(), image_.end());
      Permutation pi(std::move(images));
      if (induced_facet_permutation(a_, b_, pi)) results_.push_back(std::move(pi));
      return;
    }
    const std::size_t v = order_[depth];
    for (std::size_t w = 0; w < b_.n_vertices(); ++w) {
      if (used_.test(w) || colors_.vertex_b[w] != colors_.vertex_a[v]) continue;
      image_[v] = w;
      used_.set(w);
      for (std::size_t f = 0; f < a_.n_facets(); ++f) {
        if (a_.incident(f, v)) partial_[f].set(w);
      }
      if (consistent()) dfs(depth + 1);
      for (std::size_t f = 0; f < a_.n_facets(); ++f) {
        if (a_.incident(f, v)) partial_[f].reset(w);
      }
      used_.reset(w);
      image_[v] = kUnset;
      if (!find_all_ && !results_.empty()) return;
    }
  }

  const IncidenceStructure& a_;
  const IncidenceStructure& b_;
  bool find_all_;
  Coloring colors_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  VertexSet used_;
  std::vector<VertexSet> partial_;
  std::vector<Permutation> results_;
};

}  // namespace

std::optional<Permutation> induced_facet_permutation(const IncidenceStructure& from, const IncidenceStructure& to,
                                                     const Permutation& pi) {
  if (from.n_facets() != to.n_facets() || from.n_vertices() != to.n_vertices()) return std::nullopt;
  std::map<VertexSet, std::size_t> target;
  for (std::size_t g = 0; g < to.n_facets(); ++g) target.emplace(to.rows()[g], g);
  std::vector<Point> facet_images(from.n_facets());
  std::vector<bool> hit(to.n_facets(), false);
  for (std::size_t f = 0; f < from.n_facets(); ++f) {
    VertexSet image(to.n_vertices());
    for (std::size_t v : members(from.rows()[f])) image.set(pi(static_cast<Point>(v)));
    auto it = target.find(image);
    if (it == target.end() || hit[it->second]) return std::nullopt;
    hit[it->second] = true;
    facet_images[f] = static_cast<Point>(it->second);
  }
  return Permutation(std::move(facet_images));
}

CombAutGroup comb_automorphisms(const IncidenceStructure& inc) {
  if (inc.has_duplicate_rows()) throw PreconditionError("not a polytope incidence");
  std::vector<Permutation> perms = Matcher(inc, inc, true).run();
  std::sort(perms.begin(), perms.end());
  CombAutGroup out;
  for (const auto& p : perms) out.induced_facet_action.push_back(*induced_facet_permutation(inc, inc, p));
  out.vertex_permutations = PermutationGroup::from_elements(inc.n_vertices(), std::move(perms));
  return out;
}

std::optional<Permutation> comb_equivalent(const IncidenceStructure& p, const IncidenceStructure& q) {
  const IncidenceStructure pc = p.canonical();
  const IncidenceStructure qc = q.canonical();
  auto found = Matcher(pc, qc, false).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace bsym
