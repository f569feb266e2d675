#include "bsym/hull.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "bsym/error.hpp"

namespace bsym {

namespace {

using IntVector = std::vector<BigInt>;
// Constraint indices are bounded by kHullMaxPoints, so zero sets fit a word.
using ZeroSet = std::uint64_t;

void make_primitive(IntVector& v) {
  BigInt g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Clears denominators with a positive factor.
IntVector to_integer(const RationalVector& v) {
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.numerator() * (l / x.denominator()));
  return out;
}

RationalVector primitive_rational(const RationalVector& v, Rational* scale_out) {
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  BigInt g = 0;
  for (const auto& x : v) {
    BigInt num = x.numerator() * (l / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  const Rational scale(l, g == 0 ? BigInt(1) : g);
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * scale);
  if (scale_out) *scale_out = scale;
  return out;
}

struct Ray {
  IntVector y;
  ZeroSet zeros = 0;
};

// Extreme rays of { y : a_i . y >= 0 for all constraint rows a_i }, for a
// constraint matrix of full column rank.
std::vector<Ray> double_description(const std::vector<IntVector>& constraints) {
  const std::size_t dim = constraints.front().size();

  // Initial simplicial cone from the first linearly independent rows.
  std::vector<std::size_t> basis;
  std::vector<RationalVector> chosen;
  for (std::size_t i = 0; i < constraints.size() && basis.size() < dim; ++i) {
    RationalVector row;
    for (const auto& x : constraints[i]) row.emplace_back(x, BigInt(1));
    chosen.push_back(row);
    if (rank(RationalMatrix::from_rows(chosen)) == chosen.size()) {
      basis.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (basis.size() != dim) throw Error("constraint matrix is rank deficient");

  const RationalMatrix inv = inverse(RationalMatrix::from_rows(chosen));
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    RationalVector col(dim);
    for (std::size_t r = 0; r < dim; ++r) col[r] = inv(r, k);
    Ray ray{to_integer(col), 0};
    make_primitive(ray.y);
    for (std::size_t j = 0; j < dim; ++j) {
      if (j != k) ray.zeros |= ZeroSet{1} << basis[j];
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> in_basis(constraints.size(), false);
  for (std::size_t b : basis) in_basis[b] = true;

  for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
    if (in_basis[ci]) continue;
    const IntVector& a = constraints[ci];
    std::vector<BigInt> values;
    values.reserve(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      values.push_back(dot(a, rays[r].y));
      const int s = sgn(values.back());
      (s > 0 ? pos : (s < 0 ? neg : zero)).push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r : zero) rays[r].zeros |= ZeroSet{1} << ci;
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        const ZeroSet common = rays[p].zeros & rays[q].zeros;
        // Adjacent rays share at least dim - 2 tight constraints.
        if (static_cast<std::size_t>(std::popcount(common)) + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && (rays[r].zeros & common) == common) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh;
        fresh.y.resize(dim);
        for (std::size_t k = 0; k < dim; ++k) fresh.y[k] = values[p] * rays[q].y[k] - values[q] * rays[p].y[k];
        make_primitive(fresh.y);
        fresh.zeros = common | (ZeroSet{1} << ci);
        next.push_back(std::move(fresh));
      }
    }
    for (std::size_t p : pos) next.push_back(std::move(rays[p]));
    for (std::size_t z : zero) {
      rays[z].zeros |= ZeroSet{1} << ci;
      next.push_back(std::move(rays[z]));
    }
    rays = std::move(next);
  }
  return rays;
}

}  // namespace

Polytope facet_enumeration(std::span<const RationalVector> vertices) {
  if (vertices.empty()) throw PreconditionError("no points");
  if (vertices.size() > kHullMaxPoints) throw PreconditionError("too many points for facet enumeration");
  Polytope poly;
  poly.ambient_dim = vertices.front().size();
  poly.vertices.assign(vertices.begin(), vertices.end());
  poly.dimension = affine_dimension(vertices);
  const std::size_t d = poly.dimension;
  if (d > kHullMaxDimension) throw PreconditionError("affine dimension too large for facet enumeration");
  if (d == 0) return poly;

  // Affine chart: the pivot columns of the difference matrix give d
  // coordinates that are injective on the affine hull.
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    RationalVector diff(poly.ambient_dim);
    for (std::size_t k = 0; k < poly.ambient_dim; ++k) diff[k] = vertices[i][k] - vertices[0][k];
    diffs.push_back(std::move(diff));
  }
  std::vector<std::size_t> chart;
  const RationalMatrix echelon = row_echelon(RationalMatrix::from_rows(diffs), &chart);

  std::vector<IntVector> constraints;
  for (const auto& v : vertices) {
    RationalVector h{Rational(1)};
    for (std::size_t c : chart) h.push_back(v[c]);
    constraints.push_back(to_integer(h));
  }
  const std::vector<Ray> rays = double_description(constraints);

  // Orthogonal projection onto the direction space L = rowspace(basis).
  RationalMatrix basis(d, poly.ambient_dim);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < poly.ambient_dim; ++c) basis(r, c) = echelon(r, c);
  }
  const RationalMatrix gram_inv = inverse(basis * basis.transpose());

  for (const auto& ray : rays) {
    // ray: y0 + y' . chart(x) >= 0, i.e. -y' . chart(x) <= y0.
    RationalVector w(poly.ambient_dim);
    for (std::size_t k = 0; k < d; ++k) w[chart[k]] = Rational(-ray.y[k + 1], BigInt(1));
    RationalVector bw(d);
    for (std::size_t r = 0; r < d; ++r) bw[r] = dot(basis.row(r), w);
    RationalVector coeff(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t k = 0; k < d; ++k) coeff[r] += gram_inv(r, k) * bw[k];
    }
    RationalVector projected(poly.ambient_dim);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < poly.ambient_dim; ++c) projected[c] += coeff[r] * basis(r, c);
    }
    Facet f;
    f.normal = primitive_rational(projected, nullptr);
    // Any vertex tight on the ray gives the offset on the affine hull.
    std::size_t tight = std::countr_zero(ray.zeros);
    f.offset = dot(f.normal, vertices[tight]);
    poly.facets.push_back(std::move(f));
  }
  std::sort(poly.facets.begin(), poly.facets.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  });

  for (const auto& f : poly.facets) {
    VertexSet row(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const Rational value = dot(f.normal, vertices[i]);
      if (value == f.offset) {
        row.set(i);
      } else if (value > f.offset) {
        throw Error("facet enumeration produced an invalid inequality");
      }
    }
    poly.incidence.push_back(std::move(row));
  }
  return poly;
}

std::vector<std::size_t> non_vertices(const Polytope& polytope) {
  const std::size_t n = polytope.vertices.size();
  std::vector<std::size_t> out;
  if (polytope.dimension == 0) {
    for (std::size_t i = 1; i < n; ++i) out.push_back(i);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    VertexSet meet(n);
    meet.set();
    bool on_some_facet = false;
    for (const auto& row : polytope.incidence) {
      if (row.test(i)) {
        meet &= row;
        on_some_facet = true;
      }
    }
    if (!on_some_facet || meet.count() != 1) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> members(const VertexSet& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

IncidenceStructure::IncidenceStructure(std::size_t n_vertices, std::vector<VertexSet> rows)
    : n_vertices_(n_vertices), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != n_vertices_) throw PreconditionError("incidence row length differs from vertex count");
  }
}

bool IncidenceStructure::has_duplicate_rows() const {
  auto sorted = rows_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

IncidenceStructure IncidenceStructure::canonical() const {
  std::vector<std::pair<std::vector<std::size_t>, VertexSet>> keyed;
  for (const auto& r : rows_) keyed.emplace_back(members(r), r);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<VertexSet> rows;
  for (auto& [key, row] : keyed) rows.push_back(std::move(row));
  return IncidenceStructure(n_vertices_, std::move(rows));
}

IncidenceStructure incidence_of(const Polytope& polytope) {
  return IncidenceStructure(polytope.vertices.size(), polytope.incidence).canonical();
}

}  // namespace bsym
