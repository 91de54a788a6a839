#include "mtile/planar.hpp"

#include <algorithm>
#include <utility>

#include "mtile/errors.hpp"

namespace mtile {

PlanarVector::PlanarVector(FieldElement x_, FieldElement y_) : x(std::move(x_)), y(std::move(y_)) {
  if (!x.field()->same_as(*y.field())) {
    throw SpecificationError("vector components belong to different fields");
  }
}

PlanarVector& PlanarVector::operator+=(const PlanarVector& v) {
  x += v.x;
  y += v.y;
  return *this;
}

PlanarVector& PlanarVector::operator-=(const PlanarVector& v) {
  x -= v.x;
  y -= v.y;
  return *this;
}

FieldElement cross(const PlanarVector& u, const PlanarVector& v) { return u.x * v.y - u.y * v.x; }

BasisCoords coords_in_basis(const PlanarVector& w, const PlanarVector& b1,
                            const PlanarVector& b2) {
  const FieldElement det = cross(b1, b2);
  if (det.is_zero()) throw SpecificationError("basis vectors are parallel");
  const FieldElement inv = det.inverse();
  return {cross(w, b2) * inv, cross(b1, w) * inv};
}

// ---------------------------------------------------------------------------

const char* to_string(PolygonErrorKind kind) {
  switch (kind) {
    case PolygonErrorKind::OddVertexCount: return "OddVertexCount";
    case PolygonErrorKind::TooFewVertices: return "TooFewVertices";
    case PolygonErrorKind::DegenerateEdge: return "DegenerateEdge";
    case PolygonErrorKind::NotConvex: return "NotConvex";
    case PolygonErrorKind::NotSymmetric: return "NotSymmetric";
    case PolygonErrorKind::ParallelTaus: return "ParallelTaus";
  }
  return "PolygonError";
}

PolygonError::PolygonError(PolygonErrorKind kind, std::size_t index, const std::string& detail)
    : std::invalid_argument(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      index_(index) {}

PlanarVector Polygon::edge(std::size_t i) const { return vertex(i) - vertex(i - 1); }

Polygon validate_polygon(std::vector<PlanarVector> vertices) {
  const std::size_t count = vertices.size();
  if (count % 2 != 0) {
    throw PolygonError(PolygonErrorKind::OddVertexCount, count,
                       "polygon has " + std::to_string(count) + " vertices");
  }
  if (count < 4) {
    throw PolygonError(PolygonErrorKind::TooFewVertices, count,
                       "need at least 4 vertices, got " + std::to_string(count));
  }
  const Field& field = vertices.front().field();
  for (const auto& v : vertices) {
    if (!v.field()->same_as(*field)) throw SpecificationError("vertices use different fields");
  }

  auto edge = [&](std::size_t i) { return vertices[i % count] - vertices[(i - 1) % count]; };
  for (std::size_t i = 1; i <= count; ++i) {
    if (edge(i).is_zero()) {
      throw PolygonError(PolygonErrorKind::DegenerateEdge, i,
                         "edge " + std::to_string(i) + " has zero length (repeated vertex " +
                             std::to_string(i % count) + ")");
    }
  }

  FieldElement twice_area(field);
  for (std::size_t i = 0; i < count; ++i) twice_area += cross(vertices[i], vertices[(i + 1) % count]);
  const int orientation = sign(twice_area);
  if (orientation == 0) {
    throw PolygonError(PolygonErrorKind::NotConvex, 0, "polygon has zero signed area");
  }
  const bool reoriented = orientation < 0;
  if (reoriented) std::reverse(vertices.begin() + 1, vertices.end());

  const std::size_t n = count / 2;
  for (std::size_t i = 1; i <= n; ++i) {
    if (!(edge(i + n) == -edge(i))) {
      throw PolygonError(PolygonErrorKind::NotSymmetric, i + n,
                         "edge " + std::to_string(i + n) + " is not the reverse of edge " +
                             std::to_string(i));
    }
  }

  for (std::size_t i = 1; i <= count; ++i) {
    const int turn = sign(cross(edge(i), edge(i + 1)));
    if (turn <= 0) {
      throw PolygonError(PolygonErrorKind::NotConvex, i % count,
                         std::string(turn == 0 ? "collinear" : "reflex") + " vertex " +
                             std::to_string(i % count));
    }
  }
  // With symmetry and left turns everywhere, winding number one is
  // equivalent to edges 2..n all turning less than a half-turn from edge 1.
  const PlanarVector first = edge(1);
  for (std::size_t i = 2; i <= n; ++i) {
    if (sign(cross(first, edge(i))) <= 0) {
      throw PolygonError(PolygonErrorKind::NotConvex, i,
                         "edge " + std::to_string(i) + " winds past edge 1 (self-intersecting)");
    }
  }
  return Polygon(std::move(vertices), reoriented);
}

EdgePairing edge_pairs(const Polygon& polygon) {
  const std::size_t n = polygon.n();
  EdgePairing pairing;
  pairing.n = n;
  pairing.vertices = polygon.vertices();
  for (std::size_t j = 1; j <= n; ++j) {
    pairing.e.push_back(polygon.edge(j));
    // e_j runs v_{j-1} -> v_j; its partner runs v_{j+n-1} -> v_{j+n}.
    pairing.tau.push_back(polygon.vertex(j + n - 1) - polygon.vertex(j));
  }

  for (std::size_t j = 0; j < n; ++j) {
    PlanarVector expected(polygon.field());
    for (std::size_t i = 0; i < n; ++i) {
      if (i > j) expected += pairing.e[i];
      if (i < j) expected -= pairing.e[i];
    }
    if (!(expected == pairing.tau[j])) {
      throw InternalError("translation identity fails at pair " + std::to_string(j + 1));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      if (parallel(pairing.e[j], pairing.e[k])) {
        throw InternalError("edges " + std::to_string(j + 1) + " and " + std::to_string(k + 1) +
                            " of a strictly convex polygon are parallel");
      }
      if (parallel(pairing.tau[j], pairing.tau[k])) {
        throw PolygonError(PolygonErrorKind::ParallelTaus, k + 1,
                           "translations " + std::to_string(j + 1) + " and " +
                               std::to_string(k + 1) + " are parallel");
      }
    }
  }
  return pairing;
}

FieldElement area(const Polygon& polygon) {
  const auto& v = polygon.vertices();
  FieldElement twice(polygon.field());
  for (std::size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
  return twice * Rational(1, 2);
}

}  // namespace mtile
