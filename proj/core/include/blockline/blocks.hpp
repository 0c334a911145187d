#pragma once

#include <cstdint>
#include <vector>

namespace blockline {

// A sequence of workloads in [0, 1] to be cut into `blocks` contiguous
// pieces (possibly empty; blocks may outnumber values).
struct BlockInstance {
  std::vector<double> values;
  int blocks = 1;

  int m() const { return static_cast<int>(values.size()); }
  void validate() const;
};

// Contiguous partition described by cut positions into the prefix array:
// boundaries[0] = 0 <= ... <= boundaries[n] = m.
struct BlockPartition {
  std::vector<int> boundaries;
  std::vector<double> sizes;  // sizes[j] = prefix[b[j+1]] - prefix[b[j]]
  double spread = 0.0;        // max size - min size
};

// (a_0, ..., a_m) with a_0 = 0; nondecreasing, consecutive gaps <= 1.
std::vector<double> prefix_sums(const BlockInstance& inst);

// Balanced contiguous partition with spread <= 1, found by the exact
// finite-point transversal solver over the prefix values.
BlockPartition partition(const BlockInstance& inst);

struct OracleResult {
  double spread = 0.0;
  BlockPartition partition;
};

// Exhaustive minimum over all monotone boundary tuples; ties resolve to the
// lexicographically smallest tuple. Refuses instances with more than `cap`
// tuples. Independent of the solver path by construction.
OracleResult oracle_min_spread(const BlockInstance& inst,
                               std::uint64_t cap = 10'000'000);

}  // namespace blockline
