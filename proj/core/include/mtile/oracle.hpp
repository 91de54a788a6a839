#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "mtile/decider.hpp"

namespace mtile {

/// Exponential cross-check: tries every J subset of [n] directly against
/// span_Z{tau_j (j in J), e_j (j not in J)} and the line conditions.
/// Refuses polygons with n > max_n (throws SpecificationError).
Verdict brute_force_decide(const Polygon& polygon, std::size_t max_n = 12);

struct OnBoundary {
  friend bool operator==(OnBoundary, OnBoundary) { return true; }
};

using Multiplicity = std::variant<Integer, OnBoundary>;

/// Number of lattice points l with q - l in the interior of P, or
/// OnBoundary if q - l lies on the boundary for some l.
Multiplicity multiplicity_at(const Polygon& polygon, const LatticeBasis& lattice,
                             const PlanarVector& q);

struct MultiplicityReport {
  std::size_t samples = 0;
  Integer expected_level = 0;
  std::uint64_t seed = 0;
  std::vector<Integer> multiplicities;
  std::size_t boundary_resamples = 0;
  std::optional<std::size_t> first_mismatch;
  bool pass = false;
};

/// Draws `samples` points s*b1 + t*b2 with s, t uniform in [0, 1) on the
/// grid 2^-32 Z (std::mt19937_64 seeded with `seed`), resampling boundary
/// hits, and checks every multiplicity equals `level`. Throws InternalError
/// after more than 10 * samples consecutive boundary hits.
MultiplicityReport sample_verify(const Polygon& polygon, const LatticeBasis& lattice,
                                 const Integer& level, std::size_t samples, std::uint64_t seed);

}  // namespace mtile
