#pragma once

// Seeded random instances and independent oracles used only by tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "mtile/decider.hpp"
#include "mtile/numfield.hpp"
#include "mtile/planar.hpp"
#include "mtile/selector.hpp"

namespace mtile::testing {

inline Field sqrt2_field() { return FieldSpec::sqrt2(); }
inline Field q_field() { return FieldSpec::rationals(); }

/// a + b*sqrt(2)
inline FieldElement s2(const Rational& a, const Rational& b) {
  return FieldElement(sqrt2_field(), std::vector<Rational>{a, b});
}

inline PlanarVector vec(const FieldElement& x, const FieldElement& y) { return {x, y}; }

inline PlanarVector qvec(const Field& f, long x, long y) {
  return PlanarVector(f, Rational(x), Rational(y));
}

inline std::vector<PlanarVector> qpoints(const Field& f,
                                         std::initializer_list<std::pair<long, long>> pts) {
  std::vector<PlanarVector> v;
  for (auto [x, y] : pts) v.push_back(qvec(f, x, y));
  return v;
}

/// How edge vectors are drawn over Q(sqrt 2).
enum class Style {
  Rational,  // all edges rational
  Mixed,     // each edge: rational, sqrt2 * rational, (1+sqrt2) * rational, or generic
  Generic,   // both coordinates a + b sqrt2 with random a, b
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long between(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return between(0, 1) == 1; }

  Rational small_rational(long range = 5, long max_den = 3) {
    return ratio(between(-range, range), between(1, max_den));
  }

  FieldElement element(const Field& f, Style style) {
    FieldElement x(f, small_rational());
    if (f->degree() > 1 && style != Style::Rational) {
      std::vector<Rational> c = x.coords();
      c[1] = small_rational();
      x = FieldElement(f, c);
    }
    return x;
  }

  PlanarVector integer_vector(const Field& f, long range) {
    for (;;) {
      PlanarVector v = qvec(f, between(-range, range), between(-range, range));
      if (!v.is_zero()) return v;
    }
  }

  PlanarVector vector(const Field& f, Style style) {
    if (style == Style::Rational || f->degree() == 1) return integer_vector(f, 4);
    if (style == Style::Generic) {
      for (;;) {
        PlanarVector v{element(f, style), element(f, style)};
        if (!v.is_zero()) return v;
      }
    }
    const PlanarVector r = integer_vector(f, 3);
    switch (between(0, 3)) {
      case 0: return r;
      case 1: return s2(0, 1) * r;
      case 2: return s2(1, 1) * r;
      default: return vector(f, Style::Generic);
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// n pairwise non-parallel vectors in the upper half-plane, sorted by angle.
inline std::vector<PlanarVector> sorted_directions(Gen& gen, const Field& f, std::size_t n,
                                                   Style style) {
  std::vector<PlanarVector> dirs;
  while (dirs.size() < n) {
    PlanarVector v = gen.vector(f, style);
    const int sy = sign(v.y);
    if (sy < 0 || (sy == 0 && sign(v.x) < 0)) v = -v;
    const bool dup = std::any_of(dirs.begin(), dirs.end(),
                                 [&](const PlanarVector& d) { return parallel(d, v); });
    if (!dup) dirs.push_back(v);
  }
  std::sort(dirs.begin(), dirs.end(), [](const PlanarVector& a, const PlanarVector& b) {
    return sign(cross(a, b)) > 0;
  });
  return dirs;
}

/// Symmetric convex 2n-gon: n sorted edges followed by their negatives,
/// starting at a random offset.
inline std::vector<PlanarVector> symmetric_polygon_vertices(Gen& gen, const Field& f,
                                                            std::size_t n, Style style) {
  const std::vector<PlanarVector> dirs = sorted_directions(gen, f, n, style);
  PlanarVector p{gen.element(f, style), gen.element(f, style)};
  std::vector<PlanarVector> verts{p};
  for (std::size_t i = 0; i < 2 * n - 1; ++i) {
    p += i < n ? dirs[i] : -dirs[i - n];
    verts.push_back(p);
  }
  return verts;
}

inline Polygon random_polygon(Gen& gen, const Field& f, std::size_t n, Style style) {
  return validate_polygon(symmetric_polygon_vertices(gen, f, n, style));
}

inline SelectorInstance random_instance(Gen& gen, const Field& f, std::size_t n, Style style) {
  auto draw = [&] {
    std::vector<PlanarVector> v;
    while (v.size() < n) {
      PlanarVector w = gen.vector(f, style);
      const bool dup = std::any_of(v.begin(), v.end(),
                                   [&](const PlanarVector& d) { return parallel(d, w); });
      if (!dup) v.push_back(w);
    }
    return v;
  };
  auto e = draw();
  auto tau = draw();
  return SelectorInstance(std::move(e), std::move(tau));
}

// ---------------------------------------------------------------------------
// Independent oracles

/// Rank over Q of rational row vectors (Gaussian elimination).
inline int rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// A finitely generated subgroup of R^2 is discrete iff its rank as an
/// abelian group (the Q-rank of the generators, read as vectors of 2d
/// rational coordinates) equals the real dimension it spans.
inline bool oracle_discrete(const std::vector<PlanarVector>& gens) {
  std::vector<std::vector<Rational>> rows;
  int real_rank = 0;
  const PlanarVector* first = nullptr;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    std::vector<Rational> row = g.x.coords();
    row.insert(row.end(), g.y.coords().begin(), g.y.coords().end());
    rows.push_back(std::move(row));
    if (!first) {
      first = &g;
      real_rank = 1;
    } else if (!cross(*first, g).is_zero()) {
      real_rank = 2;
    }
  }
  return rational_rank(std::move(rows)) == real_rank;
}

/// Exhaustive search for a J with span{tau_j (j in J), e_j (j not in J)}
/// discrete, using the Q-rank oracle.
inline std::optional<IndexSet> exhaustive_select(const SelectorInstance& inst) {
  const std::size_t n = inst.n();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<PlanarVector> g;
    IndexSet J;
    for (std::size_t j = 1; j <= n; ++j) {
      const bool in = (mask >> (j - 1)) & 1U;
      if (in) J.insert(j);
      g.push_back(in ? inst.tau(j) : inst.e(j));
    }
    if (oracle_discrete(g)) return J;
  }
  return std::nullopt;
}

/// Sign of a + b*sqrt(2) by comparing squares.
inline int oracle_sign_sqrt2(const Rational& a, const Rational& b) {
  const int sa = sgn(a), sb = sgn(b);
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: compare a^2 with 2 b^2.
  const int mag = sgn(a * a - 2 * b * b);
  return sa > 0 ? mag : -mag;
}

/// Vertices of the regular octagon (+-1, +-(1+sqrt2)), (+-(1+sqrt2), +-1).
inline std::vector<PlanarVector> regular_octagon() {
  const FieldElement one = s2(1, 0), big = s2(1, 1);
  return {vec(big, -one),  vec(big, one),   vec(one, big),   vec(-one, big),
          vec(-big, one),  vec(-big, -one), vec(-one, -big), vec(one, -big)};
}

inline std::vector<PlanarVector> rational_octagon(const Field& f) {
  return qpoints(f, {{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 3}, {0, 3}, {-1, 2}, {-1, 1}});
}

inline std::vector<PlanarVector> hexagon(const Field& f) {
  return qpoints(f, {{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}});
}

inline std::vector<PlanarVector> unit_square(const Field& f) {
  return qpoints(f, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

/// Every generator of `inner` has integer coordinates in `outer`.
inline bool sublattice(const LatticeBasis& inner, const LatticeBasis& outer) {
  return contains(outer, inner.b1()) && contains(outer, inner.b2());
}

}  // namespace mtile::testing
