#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mtile/planar.hpp"

namespace mtile {

/// Two independent vectors; their Z-span is the lattice.
class LatticeBasis {
 public:
  /// Throws SpecificationError if b1 and b2 are parallel.
  LatticeBasis(PlanarVector b1, PlanarVector b2);

  static LatticeBasis standard(const Field& field);

  const PlanarVector& b1() const { return b1_; }
  const PlanarVector& b2() const { return b2_; }
  PlanarVector at(const Integer& m, const Integer& n) const;

 private:
  PlanarVector b1_;
  PlanarVector b2_;
};

enum class Discreteness { Discrete, Dense };

struct DiscretenessResult {
  Discreteness verdict = Discreteness::Discrete;
  int rank = 0;
  std::optional<LatticeBasis> basis;     // rank 2 and discrete
  std::optional<PlanarVector> generator; // rank 1 and discrete
  std::optional<FieldElement> witness;   // first irrational coefficient when dense

  bool discrete() const { return verdict == Discreteness::Discrete; }
  bool is_lattice() const { return discrete() && rank == 2; }
};

/// Decides whether the Z-span of `generators` is discrete: fix the first
/// nonzero vector and the first one not parallel to it as a real basis and
/// require every other generator to have rational coefficients in it.
DiscretenessResult is_discrete(std::span<const PlanarVector> generators);

/// Verdict only (no basis construction); counts as one discreteness test.
bool generates_discrete(std::span<const PlanarVector> generators);

/// Basis whose Z-span equals the Z-span of `generators` exactly, in Hermite
/// form relative to the certificate frame. Throws SpecificationError unless
/// the generators span a rank-2 discrete group.
LatticeBasis lattice_basis(std::span<const PlanarVector> generators);

/// |cross(b1, b2)|.
FieldElement covolume(const LatticeBasis& lattice);

/// Coordinates of p in the lattice basis, when both are rational.
std::optional<std::pair<Rational, Rational>> rational_coords(const PlanarVector& p,
                                                             const LatticeBasis& lattice);
/// Coordinates of p in the lattice basis, when both are integers (p in L).
std::optional<std::pair<Integer, Integer>> integer_coords(const PlanarVector& p,
                                                          const LatticeBasis& lattice);

inline bool contains(const LatticeBasis& lattice, const PlanarVector& p) {
  return integer_coords(p, lattice).has_value();
}

/// True iff Zp + L is discrete.
bool is_commensurable(const PlanarVector& p, const LatticeBasis& lattice);

/// A point of the line tau + R e commensurable with L, or nothing if the
/// line has none. Requires e in L (throws SpecificationError otherwise).
///
/// In L-coordinates with e = (u, v) integral and tau = (tx, ty), such a point
/// exists iff c = u*ty - v*tx is rational; this is the slope test y = ax + b
/// with b rational, without the vertical-line special case. The returned
/// point is (c/g)(s, t) where u*t - v*s = g = gcd(u, v).
std::optional<PlanarVector> line_commensurable_point(const PlanarVector& tau,
                                                     const PlanarVector& e,
                                                     const LatticeBasis& lattice);

/// Number of discreteness tests performed by this process so far.
std::uint64_t discreteness_calls();
void reset_discreteness_calls();

}  // namespace mtile
