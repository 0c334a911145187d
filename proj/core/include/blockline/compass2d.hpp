#pragma once

#include <optional>
#include <vector>

#include "blockline/geometry2d.hpp"
#include "blockline/transversal1d.hpp"

namespace blockline {

// The planar sequence A_0, ..., A_n with singleton endpoints {(0,0)} and
// {target}. Interior sets generated here carry compass labels.
struct GridSequence2D {
  std::vector<BoxUnionSet2D> sets;
  Vec2 target{};

  int n() const { return static_cast<int>(sets.size()) - 1; }
  const BoxUnionSet2D& set(int i) const {
    return sets[static_cast<std::size_t>(i)];
  }
  bool labeled_interior() const;
  void validate_shape() const;  // endpoint singletons and box sanity
};

// Parameters of the generated compass sequence: 2m + 2 sets, shrink step
// delta = 3 / (m - 1).
struct CompassParams {
  int m = 2;

  double delta() const { return 3.0 / (m - 1); }
  int n() const { return 2 * m + 1; }
  void validate() const;
};

// The compass sequence: interior set i <= m is a vertical strip pair of
// half-width 3-(i-1)delta starting at |y| = 1, a horizontal halfline pair
// starting at |x| = 4-(i-1)delta, and four corner quadrants offset
// (4.5-(i-1)delta, 1.5); sets m+1..2m mirror sets m..1 across x = y.
GridSequence2D build_compass_sequence(CompassParams params);

// The closed-form transversal whose step vectors trace an equilateral
// triangle; its diameter is 4*sqrt(2-sqrt(3)). Membership against the
// generated sequence is verified.
Transversal2D triangle_transversal(CompassParams params);

// a_i = nearest set point to i*(target/n). Every step stays within one unit
// of the drift, so the diameter is at most 4.
Transversal2D trivial_transversal(const GridSequence2D& seq, NormKind kind);

// Shift A_i by -i*(target/n); the target becomes 0 and all step differences
// are preserved.
GridSequence2D normalize(const GridSequence2D& seq);
Transversal2D normalize(const GridSequence2D& seq, const Transversal2D& t);

// Embed a one-dimensional sequence as vertical strips. Lattice parts are
// expanded into points over lattice_window when given and rejected
// otherwise; silent truncation would break density claims.
GridSequence2D lift_1d(const GridSequence1D& seq,
                       std::optional<Interval1D> lattice_window = std::nullopt);

struct Jump {
  int index;  // step i whose endpoints sit in differently labeled components
  CompassLabel from;
  CompassLabel to;
};

// Classifies each interior transversal point to its containing component
// (priority N, S, E, W, then corners) and lists the label changes.
std::vector<Jump> jump_sequence(const GridSequence2D& seq,
                                const Transversal2D& t);

std::optional<CompassLabel> classify_point(const BoxUnionSet2D& set, Vec2 p,
                                           double tol = 1e-9);

}  // namespace blockline
