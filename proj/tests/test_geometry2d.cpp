#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "blockline/compass2d.hpp"
#include "blockline/errors.hpp"
#include "blockline/geometry2d.hpp"
#include "blockline/random.hpp"

using namespace blockline;

namespace {

BoxUnionSet2D integer_grid_boxes(int radius, double step = 1.0) {
  BoxUnionSet2D set;
  for (int i = -radius; i <= radius; ++i)
    for (int j = -radius; j <= radius; ++j)
      set.boxes.push_back({i * step, i * step, j * step, j * step});
  return set;
}

}  // namespace

TEST_CASE("nearest point clamps into boxes") {
  BoxUnionSet2D unit{{{0.0, 1.0, 0.0, 1.0}}, {}};
  Vec2 q = nearest_point(unit, {2.0, 0.5}, NormKind::euclidean);
  CHECK(q.x == 1.0);
  CHECK(q.y == 0.5);

  BoxUnionSet2D two{{{-2.0, -1.0, -kInf, kInf}, {1.0, 2.0, -kInf, kInf}}, {}};
  Vec2 tie = nearest_point(two, {0.0, 0.0}, NormKind::euclidean);
  CHECK(tie.x == -1.0);  // equal distances resolve to the lowest box index
  CHECK(tie.y == 0.0);

  BoxUnionSet2D north{{{-3.0, 3.0, 1.0, kInf}}, {}};
  Vec2 up = nearest_point(north, {0.0, 0.0}, NormKind::euclidean);
  CHECK(up.x == 0.0);
  CHECK(up.y == 1.0);

  CHECK_THROWS_WITH_AS(nearest_point(BoxUnionSet2D{}, {0, 0}, NormKind::euclidean),
                       doctest::Contains("EmptySet"), Error);
}

TEST_CASE("nearest point beats random set samples") {
  Rng rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    BoxUnionSet2D set;
    int nb = 1 + static_cast<int>(rng.below(4));
    for (int b = 0; b < nb; ++b) {
      double lx = rng.uniform(-5, 5), ly = rng.uniform(-5, 5);
      set.boxes.push_back(
          {lx, lx + rng.uniform(0, 3), ly, ly + rng.uniform(0, 3)});
    }
    for (NormKind kind : {NormKind::euclidean, NormKind::maximum}) {
      Vec2 p{rng.uniform(-8, 8), rng.uniform(-8, 8)};
      Vec2 q = nearest_point(set, p, kind);
      CHECK(set.contains(q, 1e-12));
      double d = dist(p, q, kind);
      for (int s = 0; s < 1000; ++s) {
        const Box2& b = set.boxes[rng.below(set.boxes.size())];
        Vec2 r{rng.uniform(b.lx, b.hx), rng.uniform(b.ly, b.hy)};
        CHECK(d <= dist(p, r, kind) + 1e-12);
      }
    }
  }
}

TEST_CASE("sampled density on integer grids") {
  DensityProbe probe = DensityProbe::sampled(-3.0, 3.0, -3.0, 3.0, 0.05);
  CHECK(is_grid_dense_2d(integer_grid_boxes(5), NormKind::euclidean, probe));
  CHECK_FALSE(
      is_grid_dense_2d(integer_grid_boxes(4, 2.0), NormKind::euclidean, probe));
}

TEST_CASE("analytic density accepts the generated family") {
  for (int m : {2, 5, 10, 50}) {
    GridSequence2D seq = build_compass_sequence({m});
    for (int i = 1; i < seq.n(); ++i)
      CHECK(is_grid_dense_2d(seq.set(i), NormKind::euclidean,
                             DensityProbe::analytic()));
  }
}

TEST_CASE("analytic density rejects a thinned family") {
  GridSequence2D seq = build_compass_sequence({4});
  BoxUnionSet2D weak = seq.set(1);
  for (std::size_t b = 0; b < weak.boxes.size(); ++b) {
    // Push the corners far out; the pockets then exceed unit reach.
    switch (weak.labels[b]) {
      case CompassLabel::QNE: weak.boxes[b].lx += 2.0; weak.boxes[b].ly += 2.0; break;
      case CompassLabel::QNW: weak.boxes[b].hx -= 2.0; weak.boxes[b].ly += 2.0; break;
      case CompassLabel::QSE: weak.boxes[b].lx += 2.0; weak.boxes[b].hy -= 2.0; break;
      case CompassLabel::QSW: weak.boxes[b].hx -= 2.0; weak.boxes[b].hy -= 2.0; break;
      default: break;
    }
  }
  CHECK_FALSE(is_grid_dense_2d(weak, NormKind::euclidean, DensityProbe::analytic()));

  // The sampled probe agrees.
  CHECK_FALSE(is_grid_dense_2d(weak, NormKind::euclidean,
                               DensityProbe::sampled(-6, 6, -6, 6, 0.1)));
}

TEST_CASE("analytic and sampled density agree on the family") {
  GridSequence2D seq = build_compass_sequence({3});
  for (int i = 1; i < seq.n(); ++i) {
    bool analytic = is_grid_dense_2d(seq.set(i), NormKind::euclidean,
                                     DensityProbe::analytic());
    bool sampled = is_grid_dense_2d(seq.set(i), NormKind::euclidean,
                                    DensityProbe::sampled(-7, 7, -7, 7, 0.05));
    CHECK(analytic == sampled);
  }
}

TEST_CASE("diameter basics") {
  std::vector<Vec2> same{{0, 0}, {0, 0}, {0, 0}};
  CHECK(diameter(same, NormKind::euclidean) == 0.0);

  std::vector<Vec2> pair{{1, 0}, {-1, 0}};
  CHECK(diameter(pair, NormKind::euclidean) == 2.0);

  const double k = 2.0 * std::sqrt(3.0) - 3.0;
  std::vector<Vec2> tri{{k, 1.0}, {1.0, -1.0}, {-1.0, -k}};
  double expect = 4.0 * std::sqrt(2.0 - std::sqrt(3.0));
  CHECK(diameter(tri, NormKind::euclidean) ==
        doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("diameter norm comparison and invariances") {
  Rng rng(808);
  for (int trial = 0; trial < 200; ++trial) {
    int count = 2 + static_cast<int>(rng.below(8));
    std::vector<Vec2> zs;
    for (int i = 0; i < count; ++i)
      zs.push_back({rng.uniform(-5, 5), rng.uniform(-5, 5)});

    double de = diameter(zs, NormKind::euclidean);
    double dm = diameter(zs, NormKind::maximum);
    CHECK(dm <= de + 1e-12);
    CHECK(de <= std::sqrt(2.0) * dm + 1e-12);

    // Translation invariance.
    Vec2 shift{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    std::vector<Vec2> moved;
    for (Vec2 z : zs) moved.push_back(z + shift);
    CHECK(diameter(moved, NormKind::euclidean) == doctest::Approx(de).epsilon(1e-12));

    // Permutation invariance: reverse order.
    std::vector<Vec2> rev(zs.rbegin(), zs.rend());
    CHECK(diameter(rev, NormKind::euclidean) == de);
  }
}
