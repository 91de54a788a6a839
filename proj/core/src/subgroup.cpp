#include "mtile/subgroup.hpp"

#include <atomic>

#include "mtile/errors.hpp"

namespace mtile {

namespace {

std::atomic<std::uint64_t> g_discreteness_calls{0};

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer fdiv_r(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Hermite form [[a, b], [0, c]] (a, c > 0, 0 <= b < c) of the row lattice
// spanned by integer pairs, via unimodular row operations.
struct Hermite {
  Integer a, b, c;
};

Hermite hermite(const std::vector<std::pair<Integer, Integer>>& rows) {
  Integer a = 0, b = 0, c = 0;
  for (const auto& [x, y] : rows) {
    if (x == 0) {
      c = gcd(c, y);
      continue;
    }
    if (a == 0) {
      a = x;
      b = y;
      continue;
    }
    // [[s, t], [-x/g, a/g]] has determinant 1.
    const ExtendedGcd eg = extended_gcd(a, x);
    const Integer residual = (x / eg.g) * b - (a / eg.g) * y;
    b = eg.x * b + eg.y * y;
    a = eg.g;
    c = gcd(c, residual);
  }
  if (a < 0) {
    a = -a;
    b = -b;
  }
  if (a == 0 || c == 0) throw InternalError("Hermite reduction lost rank");
  b = fdiv_r(b, c);
  return {a, b, c};
}

struct Analysis {
  DiscretenessResult result;
  // Rank-2 certificate frame and rational coordinates of every generator.
  std::optional<PlanarVector> v1, v2;
  std::vector<std::pair<Rational, Rational>> coords;
};

Analysis analyze(std::span<const PlanarVector> generators, bool build) {
  g_discreteness_calls.fetch_add(1, std::memory_order_relaxed);
  Analysis out;
  DiscretenessResult& res = out.result;

  const PlanarVector* v1 = nullptr;
  for (const auto& g : generators) {
    if (!g.is_zero()) {
      v1 = &g;
      break;
    }
  }
  if (v1 == nullptr) return out;

  const PlanarVector* v2 = nullptr;
  for (const auto& g : generators) {
    if (!parallel(*v1, g)) {
      v2 = &g;
      break;
    }
  }

  if (v2 == nullptr) {
    res.rank = 1;
    const bool use_x = !v1->x.is_zero();
    const FieldElement inv = (use_x ? v1->x : v1->y).inverse();
    std::vector<Rational> ratios;
    for (const auto& g : generators) {
      FieldElement r = (use_x ? g.x : g.y) * inv;
      if (!r.is_rational()) {
        res.verdict = Discreteness::Dense;
        res.witness = std::move(r);
        return out;
      }
      ratios.push_back(r.to_rational());
    }
    if (build) {
      // gcd of fractions: gcd of numerators over a common denominator.
      Integer den = 1;
      for (const auto& r : ratios) den = lcm(den, r.get_den());
      Integer num = 0;
      for (const auto& r : ratios) num = gcd(num, r.get_num() * (den / r.get_den()));
      res.generator = ratio(num, den) * *v1;
    }
    return out;
  }

  res.rank = 2;
  const FieldElement inv_det = cross(*v1, *v2).inverse();
  if (build) out.coords.reserve(generators.size());
  for (const auto& g : generators) {
    FieldElement alpha = cross(g, *v2) * inv_det;
    if (!alpha.is_rational()) {
      res.verdict = Discreteness::Dense;
      res.witness = std::move(alpha);
      return out;
    }
    FieldElement beta = cross(*v1, g) * inv_det;
    if (!beta.is_rational()) {
      res.verdict = Discreteness::Dense;
      res.witness = std::move(beta);
      return out;
    }
    if (build) out.coords.emplace_back(alpha.to_rational(), beta.to_rational());
  }
  out.v1 = *v1;
  out.v2 = *v2;
  if (build) {
    Integer den = 1;
    for (const auto& [x, y] : out.coords) den = lcm(lcm(den, x.get_den()), y.get_den());
    std::vector<std::pair<Integer, Integer>> rows;
    rows.reserve(out.coords.size());
    for (const auto& [x, y] : out.coords) {
      rows.emplace_back(x.get_num() * (den / x.get_den()), y.get_num() * (den / y.get_den()));
    }
    const Hermite h = hermite(rows);
    res.basis.emplace(ratio(h.a, den) * *v1 + ratio(h.b, den) * *v2,
                      ratio(h.c, den) * *v2);
  }
  return out;
}

}  // namespace

LatticeBasis::LatticeBasis(PlanarVector b1, PlanarVector b2) : b1_(std::move(b1)), b2_(std::move(b2)) {
  if (parallel(b1_, b2_)) throw SpecificationError("lattice basis vectors are parallel");
}

LatticeBasis LatticeBasis::standard(const Field& field) {
  return {PlanarVector(field, 1, 0), PlanarVector(field, 0, 1)};
}

PlanarVector LatticeBasis::at(const Integer& m, const Integer& n) const {
  return Rational(m) * b1_ + Rational(n) * b2_;
}

DiscretenessResult is_discrete(std::span<const PlanarVector> generators) {
  return analyze(generators, true).result;
}

bool generates_discrete(std::span<const PlanarVector> generators) {
  return analyze(generators, false).result.discrete();
}

LatticeBasis lattice_basis(std::span<const PlanarVector> generators) {
  DiscretenessResult r = analyze(generators, true).result;
  if (!r.is_lattice()) {
    throw SpecificationError("generators do not span a rank-2 discrete group");
  }
  return *r.basis;
}

FieldElement covolume(const LatticeBasis& lattice) {
  FieldElement det = cross(lattice.b1(), lattice.b2());
  return sign(det) < 0 ? -det : det;
}

std::optional<std::pair<Rational, Rational>> rational_coords(const PlanarVector& p,
                                                             const LatticeBasis& lattice) {
  const BasisCoords c = coords_in_basis(p, lattice.b1(), lattice.b2());
  if (!c.alpha.is_rational() || !c.beta.is_rational()) return std::nullopt;
  return std::make_pair(c.alpha.to_rational(), c.beta.to_rational());
}

std::optional<std::pair<Integer, Integer>> integer_coords(const PlanarVector& p,
                                                          const LatticeBasis& lattice) {
  auto rc = rational_coords(p, lattice);
  if (!rc || !is_integer(rc->first) || !is_integer(rc->second)) return std::nullopt;
  return std::make_pair(rc->first.get_num(), rc->second.get_num());
}

bool is_commensurable(const PlanarVector& p, const LatticeBasis& lattice) {
  return rational_coords(p, lattice).has_value();
}

std::optional<PlanarVector> line_commensurable_point(const PlanarVector& tau,
                                                     const PlanarVector& e,
                                                     const LatticeBasis& lattice) {
  const auto ec = integer_coords(e, lattice);
  if (!ec) throw SpecificationError("line direction is not a lattice vector");
  const auto& [u, v] = *ec;
  if (u == 0 && v == 0) throw SpecificationError("line direction is zero");

  const BasisCoords t = coords_in_basis(tau, lattice.b1(), lattice.b2());
  const FieldElement c = Rational(u) * t.beta - Rational(v) * t.alpha;
  if (!c.is_rational()) return std::nullopt;

  // u*x + v*y = g, so (s, t) = (-y, x) satisfies u*t - v*s = g.
  const ExtendedGcd eg = extended_gcd(u, v);
  const Rational scale = c.to_rational() / Rational(eg.g);
  return Rational(scale * -eg.y) * lattice.b1() + Rational(scale * eg.x) * lattice.b2();
}

std::uint64_t discreteness_calls() { return g_discreteness_calls.load(std::memory_order_relaxed); }

void reset_discreteness_calls() { g_discreteness_calls.store(0, std::memory_order_relaxed); }

}  // namespace mtile
