#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtile/numfield.hpp"

namespace mtile {

struct PlanarVector {
  FieldElement x;
  FieldElement y;

  explicit PlanarVector(const Field& field) : x(field), y(field) {}
  PlanarVector(FieldElement x_, FieldElement y_);
  PlanarVector(const Field& field, const Rational& x_, const Rational& y_)
      : x(field, x_), y(field, y_) {}

  const Field& field() const { return x.field(); }
  bool is_zero() const { return x.is_zero() && y.is_zero(); }

  PlanarVector operator-() const { return {-x, -y}; }
  PlanarVector& operator+=(const PlanarVector& v);
  PlanarVector& operator-=(const PlanarVector& v);

  friend PlanarVector operator+(PlanarVector u, const PlanarVector& v) { return u += v; }
  friend PlanarVector operator-(PlanarVector u, const PlanarVector& v) { return u -= v; }
  friend PlanarVector operator*(const FieldElement& s, const PlanarVector& v) {
    return {s * v.x, s * v.y};
  }
  friend PlanarVector operator*(const Rational& s, const PlanarVector& v) {
    return {s * v.x, s * v.y};
  }
  friend bool operator==(const PlanarVector& u, const PlanarVector& v) {
    return u.x == v.x && u.y == v.y;
  }
};

/// u.x * v.y - u.y * v.x; zero exactly when u and v are parallel.
FieldElement cross(const PlanarVector& u, const PlanarVector& v);

inline bool parallel(const PlanarVector& u, const PlanarVector& v) {
  return cross(u, v).is_zero();
}

struct BasisCoords {
  FieldElement alpha;
  FieldElement beta;
};

/// (alpha, beta) with w = alpha * b1 + beta * b2 (Cramer's rule).
/// Throws SpecificationError if b1 and b2 are parallel.
BasisCoords coords_in_basis(const PlanarVector& w, const PlanarVector& b1,
                            const PlanarVector& b2);

enum class PolygonErrorKind {
  OddVertexCount,
  TooFewVertices,
  DegenerateEdge,
  NotConvex,
  NotSymmetric,
  ParallelTaus,
};

const char* to_string(PolygonErrorKind kind);

class PolygonError : public std::invalid_argument {
 public:
  PolygonError(PolygonErrorKind kind, std::size_t index, const std::string& detail);

  PolygonErrorKind kind() const { return kind_; }
  /// Index of the first offending vertex or edge (0-based vertex indices,
  /// 1-based edge indices; see the message).
  std::size_t index() const { return index_; }

 private:
  PolygonErrorKind kind_;
  std::size_t index_;
};

/// Strictly convex, centrally symmetric polygon with 2n vertices in
/// counterclockwise order. Edge i (1-based, i = 1..2n) runs from vertex i-1
/// to vertex i, with vertex 2n identified with vertex 0.
class Polygon {
 public:
  const std::vector<PlanarVector>& vertices() const { return vertices_; }
  const PlanarVector& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  std::size_t n() const { return vertices_.size() / 2; }
  PlanarVector edge(std::size_t i) const;
  const Field& field() const { return vertices_.front().field(); }
  /// True when the input was clockwise and has been reversed (vertex 0 kept).
  bool reoriented() const { return reoriented_; }

  friend Polygon validate_polygon(std::vector<PlanarVector> vertices);

 private:
  Polygon(std::vector<PlanarVector> vertices, bool reoriented)
      : vertices_(std::move(vertices)), reoriented_(reoriented) {}

  std::vector<PlanarVector> vertices_;
  bool reoriented_ = false;
};

/// Checks and normalizes a vertex list. Clockwise input is reversed
/// (keeping the first vertex) and flagged rather than rejected.
Polygon validate_polygon(std::vector<PlanarVector> vertices);

/// Edge vectors e_1..e_n and translations tau_1..tau_n with
/// e_j' = e_j + tau_j, i.e. tau_j = v_{j+n-1} - v_j.
struct EdgePairing {
  std::size_t n = 0;
  std::vector<PlanarVector> e;
  std::vector<PlanarVector> tau;
  std::vector<PlanarVector> vertices;
};

/// Throws PolygonError(ParallelTaus) if two translations are parallel, and
/// InternalError if tau_j != sum_{i>j} e_i - sum_{i<j} e_i.
EdgePairing edge_pairs(const Polygon& polygon);

/// Exact shoelace area.
FieldElement area(const Polygon& polygon);

}  // namespace mtile
