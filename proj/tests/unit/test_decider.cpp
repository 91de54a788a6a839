#include <doctest.h>

#include "mtile/decider.hpp"
#include "mtile/errors.hpp"
#include "mtile/oracle.hpp"
#include "support/generators.hpp"

using namespace mtile;
using namespace mtile::testing;

namespace {

bool all_a1(const std::vector<PairCondition>& pairs) {
  for (const auto& p : pairs) {
    if (p.status != PairStatus::A1) return false;
  }
  return true;
}

// The witness must pass the pair conditions, give an integral level and
// contain the lattice it was enlarged from.
void check_witness(const Polygon& p, const Verdict& v) {
  REQUIRE(v.tiles);
  REQUIRE(v.lattice);
  REQUIRE(v.base_lattice);
  CHECK(all_pairs_hold(bolle_check(p, *v.lattice)));
  CHECK(level(p, *v.lattice) == v.level);
  CHECK(v.level >= 1);
  CHECK(sublattice(*v.base_lattice, *v.lattice));
  for (const auto& pc : v.pairs) {
    if (pc.status != PairStatus::B) continue;
    REQUIRE(pc.t);
    CHECK(sign(*pc.t) > 0);
    CHECK(sign(*pc.t - FieldElement(p.field(), Rational(1))) < 0);
  }
}

}  // namespace

TEST_CASE("bolleCheck") {
  const Field q = q_field();
  const Polygon oct = validate_polygon(rational_octagon(q));
  CHECK(edge_pairs(oct).tau ==
        std::vector<PlanarVector>{qvec(q, 0, 3), qvec(q, -2, 2), qvec(q, -3, 0), qvec(q, -2, -2)});
  auto pairs = bolle_check(oct, LatticeBasis::standard(q));
  CHECK(pairs.size() == 4);
  CHECK(all_a1(pairs));

  const Polygon sq = validate_polygon(unit_square(q));
  pairs = bolle_check(sq, LatticeBasis::standard(q));
  CHECK(pairs[0].status == PairStatus::A1);
  CHECK(all_pairs_hold(pairs));

  const Field f = sqrt2_field();
  const Polygon sqf = validate_polygon(unit_square(f));
  const LatticeBasis stretched(vec(s2(0, 1), s2(0, 0)), qvec(f, 0, 1));
  pairs = bolle_check(sqf, stretched);
  // tau_1 = (0,1) is in L; e_2 = (0,1) is too, but tau_2 + t e_2 = (-1, t)
  // never is.
  CHECK(pairs[0].status == PairStatus::A1);
  CHECK(pairs[1].status == PairStatus::Fail);
  CHECK_FALSE(all_pairs_hold(pairs));
}

TEST_CASE("bolleCheck finds a B2 parameter") {
  // Square with tau_1 = (0,1) against L = span{(1,0), (1/2,1)}: e_1 = (1,0)
  // is in L, tau_1 is not, and tau_1 + (1/2) e_1 = (1/2, 1) is.
  const Field q = q_field();
  const Polygon sq = validate_polygon(unit_square(q));
  const LatticeBasis l(qvec(q, 1, 0), PlanarVector(q, Rational(1, 2), Rational(1)));
  const auto pairs = bolle_check(sq, l);
  REQUIRE(pairs[0].status == PairStatus::B);
  CHECK(*pairs[0].t == FieldElement(q, Rational(1, 2)));
  CHECK(all_pairs_hold(pairs));
  CHECK(level(sq, l) == 1);
  CHECK(std::get<Integer>(multiplicity_at(sq, l, PlanarVector(q, Rational(1, 3), Rational(1, 7)))) == 1);
}

TEST_CASE("level") {
  const Field q = q_field();
  CHECK(level(validate_polygon(unit_square(q)), LatticeBasis::standard(q)) == 1);
  CHECK(level(validate_polygon(rational_octagon(q)), LatticeBasis::standard(q)) == 7);
  CHECK(level(validate_polygon(hexagon(q)), LatticeBasis(qvec(q, 1, 2), qvec(q, -1, 1))) == 1);
  // area 1 over covolume 2 is not an integer.
  CHECK_THROWS_AS(level(validate_polygon(unit_square(q)), LatticeBasis(qvec(q, 2, 0), qvec(q, 0, 1))),
                  InternalError);
}

TEST_CASE("classA never produces a tiling") {
  // Condition (II) for two different indices already forces every e_j into
  // the rational span of L, and then (III) fails; for n = 2 condition (I)
  // needs two independent edges out of one.
  const Field q = q_field();
  std::vector<Rejection> log;
  CHECK_FALSE(class_a(validate_polygon(unit_square(q)), &log));
  CHECK(log.size() == 2);
  CHECK(log[0].reason.rfind("(I)", 0) == 0);

  log.clear();
  CHECK_FALSE(class_a(validate_polygon(regular_octagon()), &log));
  CHECK(log.size() == 4);
  for (const auto& r : log) CHECK(r.stage == TilingClass::A);

  Gen gen(77);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = static_cast<std::size_t>(gen.between(3, 5));
    const Polygon p = random_polygon(gen, sqrt2_field(), n, Style::Mixed);
    CHECK_FALSE(class_a(p));
  }
}

TEST_CASE("classB") {
  const Field q = q_field();
  const Polygon hex = validate_polygon(hexagon(q));
  auto v = class_b(hex);
  REQUIRE(v);
  CHECK(v->tiling_class == TilingClass::B);
  CHECK(v->J == IndexSet{1, 2, 3});
  CHECK(contains(*v->lattice, qvec(q, 1, 2)));
  CHECK(contains(*v->lattice, qvec(q, -1, 1)));
  CHECK(covolume(*v->lattice) == FieldElement(q, Rational(3)));
  CHECK(v->level == 1);
  check_witness(hex, *v);

  const Polygon oct = validate_polygon(rational_octagon(q));
  v = class_b(oct);
  REQUIRE(v);
  check_witness(oct, *v);

  std::vector<Rejection> log;
  CHECK_FALSE(class_b(validate_polygon(regular_octagon()), &log));
  CHECK_FALSE(log.empty());
  for (const auto& r : log) CHECK(r.stage == TilingClass::B);
}

TEST_CASE("buildWitness") {
  const Field q = q_field();
  const Polygon sq = validate_polygon(unit_square(q));
  const Witness w = build_witness(sq, LatticeBasis::standard(q), IndexSet{1, 2});
  CHECK(covolume(w.lattice) == FieldElement(q, Rational(1)));
  CHECK(all_a1(w.pairs));
}

TEST_CASE("decide") {
  const Field q = q_field();
  const Polygon sq = validate_polygon(unit_square(q));
  Verdict v = decide(sq);
  CHECK(v.tiles);
  CHECK(v.level == 1);
  check_witness(sq, v);

  const Polygon oct = validate_polygon(rational_octagon(q));
  v = decide(oct);
  check_witness(oct, v);
  CHECK(sample_verify(oct, *v.lattice, v.level, 200, 1).pass);

  v = decide(validate_polygon(regular_octagon()));
  CHECK_FALSE(v.tiles);
  CHECK_FALSE(v.lattice);
  CHECK_FALSE(v.tiling_class);
  CHECK(v.rejections.size() >= 4);
}

TEST_CASE("rational polygons and hexagons always tile") {
  Gen gen(9);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t n = static_cast<std::size_t>(gen.between(2, 6));
    const Polygon p = random_polygon(gen, q_field(), n, Style::Rational);
    const Verdict v = decide(p);
    check_witness(p, v);
  }
  for (int iter = 0; iter < 30; ++iter) {
    const Polygon p = random_polygon(gen, sqrt2_field(), 3, Style::Generic);
    const Verdict v = decide(p);
    check_witness(p, v);
    CHECK(v.J == IndexSet{1, 2, 3});
  }
}

TEST_CASE("decide agrees with brute force, and its witness verifies") {
  Gen gen(31);
  int tiles = 0, not_tiles = 0;
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = static_cast<std::size_t>(gen.between(2, 5));
    const Polygon p = random_polygon(gen, sqrt2_field(), n, Style::Mixed);
    const Verdict v = decide(p);
    const Verdict brute = brute_force_decide(p);
    CHECK(v.tiles == brute.tiles);
    if (v.tiles) {
      ++tiles;
      check_witness(p, v);
      CHECK(sample_verify(p, *v.lattice, v.level, 40, static_cast<std::uint64_t>(iter)).pass);
    } else {
      ++not_tiles;
    }
  }
  CHECK(tiles > 5);
  CHECK(not_tiles > 5);
}

TEST_CASE("verdict is invariant under rational scaling") {
  Gen gen(44);
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t n = static_cast<std::size_t>(gen.between(2, 5));
    const auto verts = symmetric_polygon_vertices(gen, sqrt2_field(), n, Style::Mixed);
    Rational c = gen.small_rational(4, 3);
    if (c == 0) c = Rational(-3, 2);
    std::vector<PlanarVector> scaled;
    for (const auto& v : verts) scaled.push_back(FieldElement(sqrt2_field(), c) * v);
    const Polygon p = validate_polygon(verts);
    const Polygon ps = validate_polygon(scaled);
    const Verdict a = decide(p), b = decide(ps);
    CHECK(a.tiles == b.tiles);
    if (a.tiles && b.tiles) {
      CHECK(a.level == b.level);
      check_witness(ps, b);
    }
  }
}
