#pragma once

#include <limits>
#include <optional>
#include <vector>

namespace blockline {

// Absolute tolerance for point membership and lattice rounding. All
// downstream guarantees carry an explicit eps, so double precision with this
// slack is enough; no exact arithmetic is attempted.
inline constexpr double kPointTol = 1e-12;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Closed interval [lo, hi]; lo may be -inf and hi may be +inf.
struct Interval1D {
  double lo = 0.0;
  double hi = 0.0;
};

// The arithmetic progression {offset + k * period : k integer}, period > 0.
struct Lattice1D {
  double offset = 0.0;
  double period = 1.0;
};

// A closed subset of the real line, stored as a finite union of closed
// intervals, single points, and lattices. Immutable once built; queries are
// safe to run concurrently.
class ClosedSet1D {
 public:
  ClosedSet1D() = default;  // the empty set

  static ClosedSet1D interval(double lo, double hi);
  static ClosedSet1D point(double at);
  static ClosedSet1D lattice(double offset, double period);
  static ClosedSet1D full_line() { return interval(-kInf, kInf); }
  static ClosedSet1D from_points(std::vector<double> pts);

  ClosedSet1D& add_interval(double lo, double hi);
  ClosedSet1D& add_point(double at);
  ClosedSet1D& add_lattice(double offset, double period);

  bool empty() const {
    return intervals_.empty() && points_.empty() && lattices_.empty();
  }

  bool contains(double x) const;

  // min{a in set : a >= x} (resp. max{a in set : a <= x}), with kPointTol
  // slack so that an x computed with roundoff still matches the element it
  // was derived from.
  std::optional<double> try_successor(double x) const;
  std::optional<double> try_predecessor(double x) const;
  double successor(double x) const;    // throws errc::no_element_above
  double predecessor(double x) const;  // throws errc::no_element_below

  // True iff every closed interval of length one meets the set. Exact for
  // interval/point unions and for lattices taken individually or grouped by
  // equal period; interleavings of lattices with distinct periods are not
  // credited (each lattice contributes its own period as covering gap).
  bool is_unit_dense() const;

  // The set translated by c, primitive by primitive.
  ClosedSet1D shifted(double c) const;

  bool points_only() const { return intervals_.empty() && lattices_.empty(); }
  bool singleton(double value, double tol = kPointTol) const;

  const std::vector<Interval1D>& intervals() const { return intervals_; }
  const std::vector<double>& points() const { return points_; }  // sorted
  const std::vector<Lattice1D>& lattices() const { return lattices_; }

 private:
  std::vector<Interval1D> intervals_;
  std::vector<double> points_;
  std::vector<Lattice1D> lattices_;
};

}  // namespace blockline
