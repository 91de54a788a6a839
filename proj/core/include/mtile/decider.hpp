#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mtile/planar.hpp"
#include "mtile/selector.hpp"
#include "mtile/subgroup.hpp"

namespace mtile {

enum class PairStatus { A1, B, Fail };

const char* to_string(PairStatus status);

/// Which alternative holds for edge pair j against a lattice:
///   A1   tau_j in L
///   B    e_j in L and t*e_j + tau_j in L for the recorded t in (0, 1)
///   Fail neither
struct PairCondition {
  std::size_t j = 0;
  PairStatus status = PairStatus::Fail;
  std::optional<FieldElement> t;
};

enum class TilingClass { A, B };

const char* to_string(TilingClass cls);

/// Why a candidate was discarded: a Class A index ({j}) or a Class B
/// maximal set, with the first failing sub-condition.
struct Rejection {
  TilingClass stage = TilingClass::A;
  IndexSet candidate;
  std::string reason;
};

struct Verdict {
  bool tiles = false;
  std::optional<TilingClass> tiling_class;
  IndexSet J;
  std::optional<LatticeBasis> lattice;       // witness L*
  std::optional<LatticeBasis> base_lattice;  // L before enlargement
  Integer level = 0;
  std::vector<PairCondition> pairs;
  std::vector<Rejection> rejections;
};

/// Evaluates every edge pair against L. P + L is a multiple tiling iff no
/// entry is Fail.
std::vector<PairCondition> bolle_check(const Polygon& polygon, const LatticeBasis& lattice);

inline bool all_pairs_hold(const std::vector<PairCondition>& pairs) {
  for (const auto& p : pairs) {
    if (p.status == PairStatus::Fail) return false;
  }
  return true;
}

/// area(P) / covolume(L). Throws InternalError unless it is a positive
/// integer.
Integer level(const Polygon& polygon, const LatticeBasis& lattice);

struct Witness {
  LatticeBasis lattice;
  std::vector<PairCondition> pairs;
};

/// Enlarges L by one commensurable point on each line tau_j + R e_j
/// (j not in J) and re-checks the result. Throws InternalError if the
/// enlarged lattice fails the pair conditions or a line has no such point.
Witness build_witness(const Polygon& polygon, const LatticeBasis& lattice, const IndexSet& J);

/// Class A search: for each j, L = span{e_i : i != j} must be a lattice,
/// every other line tau_i + R e_i must meet a point commensurable with L,
/// and every other tau_i must be incommensurable with L. Rejections are
/// appended to `log` when given.
std::optional<Verdict> class_a(const Polygon& polygon, std::vector<Rejection>* log = nullptr);

/// Class B search over the maximal sets J with T(J) discrete.
std::optional<Verdict> class_b(const Polygon& polygon, std::vector<Rejection>* log = nullptr);

/// Class A, then Class B; otherwise a negative verdict listing every
/// rejected candidate.
Verdict decide(const Polygon& polygon);

/// Verdict assembled from a successful candidate (shared with the oracle).
Verdict make_tiling_verdict(const Polygon& polygon, const LatticeBasis& base, const IndexSet& J,
                            TilingClass cls);

}  // namespace mtile
