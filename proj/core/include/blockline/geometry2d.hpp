#pragma once

#include <span>
#include <vector>

#include "blockline/set1d.hpp"

namespace blockline {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double c, Vec2 v) { return {c * v.x, c * v.y}; }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

enum class NormKind { euclidean, maximum };

double norm(Vec2 v, NormKind kind);
inline double dist(Vec2 a, Vec2 b, NormKind kind) { return norm(a - b, kind); }

// Axis-aligned closed box [lx, hx] x [ly, hy]; bounds may be infinite and a
// box may degenerate to a segment or point.
struct Box2 {
  double lx = 0.0, hx = 0.0, ly = 0.0, hy = 0.0;

  bool contains(Vec2 p, double tol = kPointTol) const {
    return p.x >= lx - tol && p.x <= hx + tol && p.y >= ly - tol &&
           p.y <= hy + tol;
  }
  Vec2 clamp(Vec2 p) const;
  void validate() const;
};

// Compass components of the generated sequences. The enum order is the
// classification priority for points on shared boundaries.
enum class CompassLabel { N, S, E, W, QNE, QNW, QSE, QSW };

const char* compass_name(CompassLabel label);

// A closed planar set given as a finite union of boxes, optionally carrying
// one compass label per box.
struct BoxUnionSet2D {
  std::vector<Box2> boxes;
  std::vector<CompassLabel> labels;  // empty, or one per box

  bool empty() const { return boxes.empty(); }
  bool labeled() const { return !boxes.empty() && labels.size() == boxes.size(); }
  bool contains(Vec2 p, double tol = kPointTol) const;
  void validate() const;
};

// A set point at minimum distance from p: per-box coordinate clamp, then the
// best box, ties to the lowest box index.
Vec2 nearest_point(const BoxUnionSet2D& set, Vec2 p, NormKind kind);
double distance_to(const BoxUnionSet2D& set, Vec2 p, NormKind kind);

struct DensityProbe {
  enum class Mode { sampled, analytic };
  Mode mode = Mode::sampled;
  double x_lo = -6.0, x_hi = 6.0;
  double y_lo = -6.0, y_hi = 6.0;
  double resolution = 0.05;

  static DensityProbe sampled(double x_lo, double x_hi, double y_lo,
                              double y_hi, double resolution = 0.05) {
    return {Mode::sampled, x_lo, x_hi, y_lo, y_hi, resolution};
  }
  static DensityProbe analytic() {
    DensityProbe p;
    p.mode = Mode::analytic;
    return p;
  }
};

// Whether every unit ball meets the set. Sampled mode checks a lattice of
// probe points inside the window; analytic mode evaluates the compass-family
// gap pockets in closed form and requires labeled boxes.
bool is_grid_dense_2d(const BoxUnionSet2D& set, NormKind kind,
                      const DensityProbe& probe);

// Exact pairwise maximum, O(n^2).
double diameter(std::span<const Vec2> zs, NormKind kind);

struct Transversal2D {
  std::vector<Vec2> points;  // a_0, ..., a_n

  std::vector<Vec2> zs() const;
  double diameter(NormKind kind) const;
};

}  // namespace blockline
