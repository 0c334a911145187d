#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>

#include "blockline/blocks.hpp"
#include "blockline/errors.hpp"
#include "blockline/random.hpp"

using namespace blockline;

TEST_CASE("prefix sums") {
  CHECK(prefix_sums({{1.0, 1.0, 1.0}, 1}) ==
        std::vector<double>{0.0, 1.0, 2.0, 3.0});

  auto p = prefix_sums({{0.3, 0.9, 0.2, 0.8}, 1});
  REQUIRE(p.size() == 5);
  double expect[] = {0.0, 0.3, 1.2, 1.4, 2.2};
  for (int i = 0; i < 5; ++i)
    CHECK(p[static_cast<std::size_t>(i)] ==
          doctest::Approx(expect[i]).epsilon(1e-12));

  CHECK(prefix_sums({{}, 1}) == std::vector<double>{0.0});

  CHECK_THROWS_WITH_AS(prefix_sums({{0.5, 1.2}, 1}),
                       doctest::Contains("ValidationError"), Error);
  CHECK_THROWS_AS(prefix_sums({{-0.1}, 1}), Error);
}

TEST_CASE("all-ones with two blocks is tight") {
  BlockPartition part = partition({{1.0, 1.0, 1.0}, 2});
  CHECK(part.spread == 1.0);
  REQUIRE(part.sizes.size() == 2);
  double lo = std::min(part.sizes[0], part.sizes[1]);
  double hi = std::max(part.sizes[0], part.sizes[1]);
  CHECK(lo == 1.0);
  CHECK(hi == 2.0);
}

TEST_CASE("even split has zero spread") {
  BlockPartition part = partition({{0.5, 0.5}, 2});
  CHECK(part.spread == 0.0);
  CHECK(part.sizes == std::vector<double>{0.5, 0.5});
}

TEST_CASE("four mixed values, three blocks") {
  BlockInstance inst{{0.3, 0.9, 0.2, 0.8}, 3};
  BlockPartition part = partition(inst);
  CHECK(part.spread <= 1.0);

  OracleResult oracle = oracle_min_spread(inst);
  CHECK(oracle.spread == doctest::Approx(0.7).epsilon(1e-9));
  CHECK(oracle.partition.boundaries == std::vector<int>{0, 1, 2, 4});
  CHECK(oracle.spread <= part.spread + 1e-15);
}

TEST_CASE("oracle trivia") {
  CHECK(oracle_min_spread({{1.0, 1.0, 1.0}, 2}).spread == 1.0);
  CHECK(oracle_min_spread({{0.4, 0.9, 0.1}, 1}).spread == 0.0);
  CHECK_THROWS_WITH_AS(oracle_min_spread({std::vector<double>(64, 0.5), 12}),
                       doctest::Contains("CapExceeded"), Error);
}

TEST_CASE("degenerate shapes") {
  // More blocks than values: the extras are empty.
  BlockPartition part = partition({{1.0, 1.0}, 5});
  CHECK(part.spread <= 1.0);
  double total = std::accumulate(part.sizes.begin(), part.sizes.end(), 0.0);
  CHECK(total == doctest::Approx(2.0).epsilon(1e-12));

  // Empty input.
  BlockPartition none = partition({{}, 3});
  CHECK(none.spread == 0.0);
  CHECK(none.boundaries == std::vector<int>{0, 0, 0, 0});

  // Single block.
  BlockPartition one = partition({{0.2, 0.9, 0.4}, 1});
  CHECK(one.spread == 0.0);
  CHECK(one.sizes.size() == 1);

  // Zero values create repeated prefix entries.
  BlockPartition zeros = partition({{0.0, 0.0, 1.0, 0.0}, 3});
  CHECK(zeros.spread <= 1.0);
  for (std::size_t j = 1; j < zeros.boundaries.size(); ++j)
    CHECK(zeros.boundaries[j] >= zeros.boundaries[j - 1]);
}

TEST_CASE("all-equal inputs") {
  // n divides m: exact zero spread.
  CHECK(partition({std::vector<double>(12, 0.75), 4}).spread == 0.0);
  // n does not divide m and values are 1: spread exactly 1.
  CHECK(partition({std::vector<double>(7, 1.0), 3}).spread == 1.0);
}

TEST_CASE("random instances: guarantee and oracle comparison") {
  Rng rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    int m = static_cast<int>(rng.below(13));
    int n = 1 + static_cast<int>(rng.below(5));
    BlockInstance inst;
    inst.blocks = n;
    for (int i = 0; i < m; ++i) inst.values.push_back(rng.unit());

    BlockPartition part = partition(inst);
    CHECK(part.spread <= 1.0);

    // Boundaries are monotone and sizes match prefix differences.
    auto prefix = prefix_sums(inst);
    REQUIRE(part.boundaries.size() == static_cast<std::size_t>(n) + 1);
    CHECK(part.boundaries.front() == 0);
    CHECK(part.boundaries.back() == m);
    double total = 0.0;
    for (std::size_t j = 1; j < part.boundaries.size(); ++j) {
      CHECK(part.boundaries[j] >= part.boundaries[j - 1]);
      double b = prefix[static_cast<std::size_t>(part.boundaries[j])] -
                 prefix[static_cast<std::size_t>(part.boundaries[j - 1])];
      CHECK(b == part.sizes[j - 1]);
      total += part.sizes[j - 1];
    }
    CHECK(std::abs(total - prefix.back()) <= 1e-9);

    OracleResult oracle = oracle_min_spread(inst);
    CHECK(oracle.spread <= part.spread + 1e-15);
  }
}
