#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "blockline/set1d.hpp"

namespace blockline {

inline constexpr double kDefaultEps = 1e-9;

// The sequence A_0, ..., A_n with singleton endpoints {0} and {target}.
// dense = true requires every interior set to meet every unit interval;
// dense = false is block mode, where interior sets may be bounded and
// propagation records missing elements as infeasibility instead of failing.
struct GridSequence1D {
  std::vector<ClosedSet1D> sets;
  double target = 0.0;
  bool dense = true;

  int n() const { return static_cast<int>(sets.size()) - 1; }
  const ClosedSet1D& set(int i) const { return sets[static_cast<std::size_t>(i)]; }

  // Enforces the endpoint and (when dense) density invariants.
  void validate() const;
  static GridSequence1D checked(std::vector<ClosedSet1D> sets, double target,
                                bool dense);
};

// Reachable-position windows [L_i, R_i] for i = 1..n under steps constrained
// to [x_lo, x_hi + 1]. With x_lo == x_hi this is the single-offset window.
// Infeasibility is a value, not an error, so searches can read it
// directionally.
struct WindowState {
  enum class Status { feasible, infeasible_low, infeasible_high, empty };

  double x_lo = 0.0;
  double x_hi = 0.0;
  std::vector<double> lower;  // lower[i-1] = L_i
  std::vector<double> upper;  // upper[i-1] = R_i
  Status status = Status::feasible;
  int status_index = 0;  // first window index (1-based) where flagged

  double L(int i) const { return lower[static_cast<std::size_t>(i - 1)]; }
  double R(int i) const { return upper[static_cast<std::size_t>(i - 1)]; }
  bool feasible_through(int h) const {
    return status == Status::feasible || status_index > h;
  }
};

WindowState propagate(const GridSequence1D& seq, double x_lo, double x_hi);

struct OffsetWindow {
  double lo = 0.0;
  double hi = 0.0;
  bool exact = false;
};

// Finds offsets such that p lands in the window at index h: either an exact
// offset (lo == hi) or a bracket of width <= eps whose relaxed window still
// contains p. Brackets are found by doubling outward from p/h -+ 1 unless a
// hint is supplied.
OffsetWindow find_window_offset(
    const GridSequence1D& seq, double p, int h, double eps = kDefaultEps,
    std::optional<std::pair<double, double>> bracket_hint = std::nullopt);

struct Transversal1D {
  std::vector<double> points;  // a_0, ..., a_n

  std::vector<double> z() const;  // z_i = a_i - a_{i-1}
  double spread() const;          // max z - min z (0 when n <= 1)
};

// Backtracks a transversal from a window state whose final window contains
// the sequence target. Every step lands in [x_lo, x_hi + 1], so the spread is
// at most 1 + (x_hi - x_lo).
Transversal1D extract(const GridSequence1D& seq, const WindowState& state);

struct SolveResult {
  Transversal1D transversal;
  OffsetWindow window;
};

// Dense-mode solver: normalizes the target to zero, runs the offset search
// from the bracket [-1, 0], extracts, and shifts back. Guarantees spread
// <= 1 + eps, and <= 1 when the search hits exactly.
SolveResult solve(const GridSequence1D& seq, double eps = kDefaultEps);

// Exact solver for sequences whose interior sets are finite point unions.
// Searches a finite candidate list that covers every breakpoint of the
// piecewise window functions, so a spread <= 1 transversal is found whenever
// one exists. min_offset restricts the offset search (block mode uses 0).
SolveResult solve_exact_finite(const GridSequence1D& seq,
                               std::optional<double> min_offset = std::nullopt);

}  // namespace blockline
