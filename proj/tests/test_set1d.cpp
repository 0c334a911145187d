#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "blockline/errors.hpp"
#include "blockline/random.hpp"
#include "blockline/set1d.hpp"
#include "support/generators.hpp"

using namespace blockline;

TEST_CASE("contains on the three primitive kinds") {
  CHECK(ClosedSet1D::lattice(0.0, 1.0).contains(3.0));
  CHECK_FALSE(ClosedSet1D::interval(0.0, 1.0).contains(1.5));
  CHECK(ClosedSet1D::point(0.7).contains(0.7));
  CHECK_FALSE(ClosedSet1D{}.contains(0.0));
}

TEST_CASE("successor picks the least element at or above") {
  CHECK(ClosedSet1D::lattice(0.0, 1.0).successor(0.3) == 1.0);

  ClosedSet1D two;
  two.add_interval(-0.5, 0.5).add_interval(2.0, 3.0);
  CHECK(two.successor(1.0) == 2.0);

  ClosedSet1D pts = ClosedSet1D::from_points({0.0, 1.0});
  CHECK_THROWS_WITH_AS(pts.successor(1.5), doctest::Contains("NoElementAbove"),
                       Error);
}

TEST_CASE("predecessor mirrors successor") {
  CHECK(ClosedSet1D::lattice(0.0, 1.0).predecessor(0.3) == 0.0);

  ClosedSet1D two;
  two.add_interval(-0.5, 0.5).add_interval(2.0, 3.0);
  CHECK(two.predecessor(1.0) == 0.5);

  ClosedSet1D pts = ClosedSet1D::from_points({0.0, 1.0});
  CHECK_THROWS_WITH_AS(pts.predecessor(-0.2),
                       doctest::Contains("NoElementBelow"), Error);
}

TEST_CASE("successor lands exactly on lattice points") {
  ClosedSet1D z = ClosedSet1D::lattice(0.0, 1.0);
  CHECK(z.successor(1.0) == 1.0);
  CHECK(z.predecessor(1.0) == 1.0);
  CHECK(z.successor(-3.0) == -3.0);
  ClosedSet1D shifted = ClosedSet1D::lattice(0.1, 0.2);
  double v = shifted.successor(0.7);  // 0.1 + 3*0.2 computed with roundoff
  CHECK(shifted.contains(v));
  CHECK(v == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("unit density") {
  CHECK(ClosedSet1D::lattice(0.0, 1.0).is_unit_dense());
  CHECK_FALSE(ClosedSet1D::lattice(0.0, 2.0).is_unit_dense());
  CHECK(ClosedSet1D::full_line().is_unit_dense());
  CHECK_FALSE(ClosedSet1D{}.is_unit_dense());
  CHECK_FALSE(ClosedSet1D::interval(0.0, kInf).is_unit_dense());

  // Equal-period lattices fold together.
  ClosedSet1D pair = ClosedSet1D::lattice(0.0, 1.5);
  pair.add_lattice(0.75, 1.5);
  CHECK(pair.is_unit_dense());

  // A sparse lattice patched by solid parts over a finite stretch only.
  ClosedSet1D patched = ClosedSet1D::lattice(0.0, 3.0);
  patched.add_interval(-20.0, 20.0);
  CHECK_FALSE(patched.is_unit_dense());

  // Halflines with small middle gaps.
  ClosedSet1D halves;
  halves.add_interval(-kInf, 0.0).add_interval(0.9, 1.4).add_interval(2.3, kInf);
  CHECK(halves.is_unit_dense());
  ClosedSet1D wide;
  wide.add_interval(-kInf, 0.0).add_interval(1.5, kInf);
  CHECK_FALSE(wide.is_unit_dense());
}

TEST_CASE("shift moves every primitive") {
  ClosedSet1D z = ClosedSet1D::lattice(0.0, 1.0).shifted(0.5);
  CHECK(z.lattices()[0].offset == 0.5);
  CHECK(z.lattices()[0].period == 1.0);

  ClosedSet1D iv = ClosedSet1D::interval(0.0, 1.0).shifted(-1.0);
  CHECK(iv.intervals()[0].lo == -1.0);
  CHECK(iv.intervals()[0].hi == 0.0);

  CHECK(ClosedSet1D::point(3.0).shifted(2.0).contains(5.0));
}

// The half-open construction (-inf, -1/2] union (1/2, inf) needs an open
// endpoint; every primitive here is closed, so that set is not representable
// and no operation can produce it.
TEST_CASE("only closed primitives exist") {
  ClosedSet1D s = ClosedSet1D::interval(0.5, kInf);
  CHECK(s.contains(0.5));  // the endpoint always belongs to the set
  CHECK(s.successor(0.2) == 0.5);
}

TEST_CASE("successor and predecessor are tight and monotone") {
  Rng rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    ClosedSet1D set = testsupport::random_dense_set(rng);
    double prev_succ = -kInf, prev_pred = -kInf;
    double x = rng.uniform(-8.0, 8.0);
    for (int k = 0; k < 8; ++k) {
      x += rng.uniform(0.0, 1.0);  // sorted probes
      double s = set.successor(x);
      double p = set.predecessor(x);
      CHECK(set.contains(s));
      CHECK(set.contains(p));
      CHECK(s >= x - 2 * kPointTol);
      CHECK(p <= x + 2 * kPointTol);
      CHECK(s >= prev_succ);
      CHECK(p >= prev_pred);
      prev_succ = s;
      prev_pred = p;
      // Nothing of the set lies strictly between x and its successor.
      for (int t = 1; t <= 4; ++t) {
        double y = x + (s - x) * t / 5.0;
        if (y > x + 1e-9 && y < s - 1e-9) CHECK_FALSE(set.contains(y));
      }
    }
  }
}

TEST_CASE("dense sets answer every query within one unit") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    ClosedSet1D set = testsupport::random_dense_set(rng);
    REQUIRE(set.is_unit_dense());
    double x = rng.uniform(-30.0, 30.0);
    double s = set.successor(x);
    CHECK(s - x <= 1.0 + 1e-9);
    CHECK(x - set.predecessor(x) <= 1.0 + 1e-9);
  }
}

TEST_CASE("shift is membership-equivariant") {
  Rng rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    ClosedSet1D set = testsupport::random_dense_set(rng);
    double c = rng.uniform(-5.0, 5.0);
    ClosedSet1D moved = set.shifted(c);
    double x = rng.uniform(-10.0, 10.0);
    double probe = set.successor(x);  // a definite member
    CHECK(moved.contains(probe + c));
    CHECK(moved.successor(x + c) == doctest::Approx(set.successor(x) + c).epsilon(1e-12));
  }
}

TEST_CASE("empty set fails loudly") {
  ClosedSet1D empty;
  CHECK_FALSE(empty.is_unit_dense());
  CHECK_THROWS_AS(empty.successor(0.0), Error);
  CHECK_THROWS_AS(empty.predecessor(0.0), Error);
}

TEST_CASE("invalid primitives are rejected") {
  ClosedSet1D s;
  CHECK_THROWS_AS(s.add_interval(2.0, 1.0), Error);
  CHECK_THROWS_AS(s.add_lattice(0.0, 0.0), Error);
  CHECK_THROWS_AS(s.add_lattice(0.0, -1.0), Error);
  CHECK_THROWS_AS(s.add_point(kInf), Error);
}
