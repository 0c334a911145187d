#include "blockline/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "blockline/errors.hpp"
#include "blockline/transversal1d.hpp"

namespace blockline {

void BlockInstance::validate() const {
  if (blocks < 1) fail(errc::validation, "block count must be positive");
  for (std::size_t i = 0; i < values.size(); ++i) {
    double v = values[i];
    if (!std::isfinite(v) || v < 0.0 || v > 1.0)
      fail(errc::validation, "value " + std::to_string(i) +
                                 " outside [0, 1]: " + std::to_string(v));
  }
}

std::vector<double> prefix_sums(const BlockInstance& inst) {
  inst.validate();
  std::vector<double> prefix(inst.values.size() + 1, 0.0);
  for (std::size_t i = 0; i < inst.values.size(); ++i)
    prefix[i + 1] = prefix[i] + inst.values[i];
  return prefix;
}

namespace {

BlockPartition from_boundaries(const std::vector<double>& prefix,
                               std::vector<int> boundaries) {
  BlockPartition part;
  part.sizes.reserve(boundaries.size() - 1);
  for (std::size_t j = 1; j < boundaries.size(); ++j)
    part.sizes.push_back(
        prefix[static_cast<std::size_t>(boundaries[j])] -
        prefix[static_cast<std::size_t>(boundaries[j - 1])]);
  auto [mn, mx] = std::minmax_element(part.sizes.begin(), part.sizes.end());
  part.spread = *mx - *mn;
  part.boundaries = std::move(boundaries);
  return part;
}

}  // namespace

BlockPartition partition(const BlockInstance& inst) {
  const std::vector<double> prefix = prefix_sums(inst);
  const int m = inst.m();
  const int n = inst.blocks;
  const double s = prefix[static_cast<std::size_t>(m)];

  GridSequence1D seq;
  seq.dense = false;
  seq.target = s;
  seq.sets.reserve(static_cast<std::size_t>(n) + 1);
  seq.sets.push_back(ClosedSet1D::point(0.0));
  if (n > 1) {
    ClosedSet1D interior = ClosedSet1D::from_points(prefix);
    for (int j = 1; j < n; ++j) seq.sets.push_back(interior);
  }
  seq.sets.push_back(ClosedSet1D::point(s));

  // Any valid partition has min block size >= 0, so offsets below zero are
  // never needed; staying nonnegative keeps the chosen values monotone and
  // makes the value -> index mapping unambiguous.
  SolveResult res = solve_exact_finite(seq, 0.0);
  const std::vector<double>& vals = res.transversal.points;

  std::vector<int> boundaries(static_cast<std::size_t>(n) + 1, 0);
  boundaries[static_cast<std::size_t>(n)] = m;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    double v = vals[static_cast<std::size_t>(j)];
    while (k <= m && std::abs(prefix[static_cast<std::size_t>(k)] - v) > kPointTol)
      ++k;
    if (k > m)
      fail(errc::internal, "transversal value missing from prefix array");
    boundaries[static_cast<std::size_t>(j)] = k;
  }
  return from_boundaries(prefix, std::move(boundaries));
}

OracleResult oracle_min_spread(const BlockInstance& inst, std::uint64_t cap) {
  const std::vector<double> prefix = prefix_sums(inst);
  const int m = inst.m();
  const int n = inst.blocks;

  // C(m + n - 1, n - 1) monotone boundary tuples.
  double combos = 1.0;
  for (int i = 1; i <= n - 1; ++i)
    combos *= static_cast<double>(m + n - i) / static_cast<double>(i);
  if (combos > static_cast<double>(cap))
    fail(errc::cap_exceeded,
         "enumeration needs " + std::to_string(combos) + " tuples, cap is " +
             std::to_string(cap));

  std::vector<int> bounds(static_cast<std::size_t>(n) + 1, 0);
  bounds[static_cast<std::size_t>(n)] = m;
  std::vector<int> best_bounds;
  double best_spread = kInf;

  // Lexicographic enumeration; strict improvement keeps the first (smallest)
  // witness among ties.
  auto visit = [&](auto&& self, int j) -> void {
    if (j == n) {
      double mn = kInf, mx = -kInf;
      for (int i = 1; i <= n; ++i) {
        double b = prefix[static_cast<std::size_t>(bounds[static_cast<std::size_t>(i)])] -
                   prefix[static_cast<std::size_t>(bounds[static_cast<std::size_t>(i - 1)])];
        mn = std::min(mn, b);
        mx = std::max(mx, b);
      }
      if (mx - mn < best_spread) {
        best_spread = mx - mn;
        best_bounds = bounds;
      }
      return;
    }
    for (int x = bounds[static_cast<std::size_t>(j - 1)]; x <= m; ++x) {
      bounds[static_cast<std::size_t>(j)] = x;
      self(self, j + 1);
    }
  };
  visit(visit, 1);

  OracleResult out;
  out.partition = from_boundaries(prefix, std::move(best_bounds));
  out.spread = out.partition.spread;
  return out;
}

}  // namespace blockline
