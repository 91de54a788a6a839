#include "mtile/decider.hpp"

#include <algorithm>
#include <utility>

#include "mtile/errors.hpp"

namespace mtile {

namespace {

// Smallest t in (0, 1) with t*(u, v) + (alpha, beta) integral, where u != 0
// is the coordinate used to parametrize the lattice lines.
std::optional<FieldElement> b2_parameter(const Integer& u, const Integer& v,
                                         const FieldElement& alpha, const FieldElement& beta) {
  const FieldElement end = alpha + FieldElement(alpha.field(), Rational(u));
  const bool up = u > 0;
  const FieldElement& lo = up ? alpha : end;
  const FieldElement& hi = up ? end : alpha;
  const Integer first = floor(lo) + 1;
  const Integer last = ceil(hi) - 1;
  const Rational inv_u = ratio(1, u);
  // t = (m - alpha) / u grows with m when u > 0, so walk m in the order of
  // increasing t and stop at the first hit.
  const Integer count = last - first + 1;
  for (Integer k = 0; k < count; ++k) {
    const Integer m = up ? Integer(first + k) : Integer(last - k);
    FieldElement t = (FieldElement(alpha.field(), Rational(m)) - alpha) * inv_u;
    const FieldElement other = Rational(v) * t + beta;
    if (other.is_rational() && is_integer(other.to_rational())) return t;
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(PairStatus status) {
  switch (status) {
    case PairStatus::A1: return "A1";
    case PairStatus::B: return "B";
    case PairStatus::Fail: return "Fail";
  }
  return "?";
}

const char* to_string(TilingClass cls) { return cls == TilingClass::A ? "A" : "B"; }

std::vector<PairCondition> bolle_check(const Polygon& polygon, const LatticeBasis& lattice) {
  const EdgePairing pairing = edge_pairs(polygon);
  std::vector<PairCondition> out;
  out.reserve(pairing.n);
  for (std::size_t j = 1; j <= pairing.n; ++j) {
    PairCondition pc;
    pc.j = j;
    const PlanarVector& tau = pairing.tau[j - 1];
    const PlanarVector& e = pairing.e[j - 1];
    if (contains(lattice, tau)) {
      pc.status = PairStatus::A1;
    } else if (auto ec = integer_coords(e, lattice)) {
      const auto& [u, v] = *ec;
      const BasisCoords tc = coords_in_basis(tau, lattice.b1(), lattice.b2());
      // Lattice points on tau + R e: parametrize by whichever coordinate of
      // e is nonzero.
      std::optional<FieldElement> t =
          u != 0 ? b2_parameter(u, v, tc.alpha, tc.beta) : b2_parameter(v, u, tc.beta, tc.alpha);
      if (t) {
        pc.status = PairStatus::B;
        pc.t = std::move(t);
      }
    }
    out.push_back(std::move(pc));
  }
  return out;
}

Integer level(const Polygon& polygon, const LatticeBasis& lattice) {
  const FieldElement q = area(polygon) / covolume(lattice);
  if (!q.is_rational() || !is_integer(q.to_rational()) || q.to_rational() < 1) {
    throw InternalError("tiling level area/covolume is not a positive integer");
  }
  return q.to_rational().get_num();
}

Witness build_witness(const Polygon& polygon, const LatticeBasis& lattice, const IndexSet& J) {
  const EdgePairing pairing = edge_pairs(polygon);
  std::vector<PlanarVector> gens{lattice.b1(), lattice.b2()};
  for (std::size_t j = 1; j <= pairing.n; ++j) {
    if (J.contains(j)) continue;
    auto p = line_commensurable_point(pairing.tau[j - 1], pairing.e[j - 1], lattice);
    if (!p) {
      throw InternalError("line " + std::to_string(j) + " has no point commensurable with L");
    }
    gens.push_back(std::move(*p));
  }
  LatticeBasis enlarged = lattice_basis(gens);
  std::vector<PairCondition> pairs = bolle_check(polygon, enlarged);
  if (!all_pairs_hold(pairs)) {
    throw InternalError("witness lattice fails the pair conditions");
  }
  return {std::move(enlarged), std::move(pairs)};
}

Verdict make_tiling_verdict(const Polygon& polygon, const LatticeBasis& base, const IndexSet& J,
                            TilingClass cls) {
  Witness w = build_witness(polygon, base, J);
  Verdict v;
  v.tiles = true;
  v.tiling_class = cls;
  v.J = J;
  v.level = level(polygon, w.lattice);
  v.lattice = std::move(w.lattice);
  v.base_lattice = base;
  v.pairs = std::move(w.pairs);
  return v;
}

std::optional<Verdict> class_a(const Polygon& polygon, std::vector<Rejection>* log) {
  const EdgePairing pairing = edge_pairs(polygon);
  const std::size_t n = pairing.n;
  auto reject = [&](std::size_t j, std::string reason) {
    if (log) log->push_back({TilingClass::A, IndexSet{j}, std::move(reason)});
  };

  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<PlanarVector> others;
    for (std::size_t i = 1; i <= n; ++i) {
      if (i != j) others.push_back(pairing.e[i - 1]);
    }
    const DiscretenessResult r = is_discrete(others);
    if (!r.is_lattice()) {
      reject(j, "(I) the remaining edges do not span a lattice");
      continue;
    }
    const LatticeBasis& L = *r.basis;

    std::optional<std::string> failure;
    for (std::size_t i = 1; i <= n && !failure; ++i) {
      if (i == j) continue;
      if (!line_commensurable_point(pairing.tau[i - 1], pairing.e[i - 1], L)) {
        failure = "(II) line tau_" + std::to_string(i) + " + R e_" + std::to_string(i) +
                  " has no point commensurable with L";
      }
    }
    for (std::size_t i = 1; i <= n && !failure; ++i) {
      if (i == j) continue;
      if (is_commensurable(pairing.tau[i - 1], L)) {
        failure = "(III) tau_" + std::to_string(i) + " is commensurable with L";
      }
    }
    if (failure) {
      reject(j, *failure);
      continue;
    }
    return make_tiling_verdict(polygon, L, IndexSet{j}, TilingClass::A);
  }
  return std::nullopt;
}

std::optional<Verdict> class_b(const Polygon& polygon, std::vector<Rejection>* log) {
  const EdgePairing pairing = edge_pairs(polygon);
  const SelectorInstance inst(pairing.e, pairing.tau);
  for (const IndexSet& J : enumerate_maximal_sets(inst)) {
    const DiscretenessResult r = is_discrete(mixed_generators(inst, J));
    if (!r.is_lattice()) {
      if (log) log->push_back({TilingClass::B, J, "T(J) + E([n] \\ J) is not discrete"});
      continue;
    }
    const LatticeBasis& L = *r.basis;
    std::optional<std::string> failure;
    for (std::size_t j = 1; j <= inst.n() && !failure; ++j) {
      if (J.contains(j)) continue;
      if (!line_commensurable_point(inst.tau(j), inst.e(j), L)) {
        failure = "line tau_" + std::to_string(j) + " + R e_" + std::to_string(j) +
                  " has no point commensurable with L";
      }
    }
    if (failure) {
      if (log) log->push_back({TilingClass::B, J, *failure});
      continue;
    }
    return make_tiling_verdict(polygon, L, J, TilingClass::B);
  }
  return std::nullopt;
}

Verdict decide(const Polygon& polygon) {
  std::vector<Rejection> rejections;
  std::optional<Verdict> v = class_a(polygon, &rejections);
  if (!v) v = class_b(polygon, &rejections);
  if (!v) {
    Verdict no;
    no.rejections = std::move(rejections);
    return no;
  }
  v->rejections = std::move(rejections);
  return *std::move(v);
}

}  // namespace mtile
