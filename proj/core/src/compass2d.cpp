#include "blockline/compass2d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "blockline/errors.hpp"

namespace blockline {

namespace {

constexpr double kMemberTol = 1e-9;

BoxUnionSet2D singleton_set(Vec2 p) {
  BoxUnionSet2D s;
  s.boxes.push_back({p.x, p.x, p.y, p.y});
  return s;
}

bool is_singleton(const BoxUnionSet2D& set, Vec2 p, double tol) {
  if (set.boxes.empty()) return false;
  for (const Box2& b : set.boxes)
    if (std::abs(b.lx - p.x) > tol || std::abs(b.hx - p.x) > tol ||
        std::abs(b.ly - p.y) > tol || std::abs(b.hy - p.y) > tol)
      return false;
  return true;
}

// Mirror across the line x = y: swap coordinates, and swap the compass roles
// accordingly (N <-> E, S <-> W, QNW <-> QSE).
Box2 swap_box(const Box2& b) { return {b.ly, b.hy, b.lx, b.hx}; }

CompassLabel swap_label(CompassLabel l) {
  switch (l) {
    case CompassLabel::N: return CompassLabel::E;
    case CompassLabel::E: return CompassLabel::N;
    case CompassLabel::S: return CompassLabel::W;
    case CompassLabel::W: return CompassLabel::S;
    case CompassLabel::QNW: return CompassLabel::QSE;
    case CompassLabel::QSE: return CompassLabel::QNW;
    case CompassLabel::QNE: return CompassLabel::QNE;
    case CompassLabel::QSW: return CompassLabel::QSW;
  }
  return l;
}

BoxUnionSet2D reflect_set(const BoxUnionSet2D& set) {
  BoxUnionSet2D out;
  out.boxes.resize(set.boxes.size());
  out.labels.resize(set.labels.size());
  for (std::size_t i = 0; i < set.boxes.size(); ++i) {
    out.boxes[i] = swap_box(set.boxes[i]);
    if (i < set.labels.size()) out.labels[i] = swap_label(set.labels[i]);
  }
  // Keep boxes in label-priority order so emitted sequences are stable.
  std::vector<std::size_t> order(out.boxes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return static_cast<int>(out.labels[a]) < static_cast<int>(out.labels[b]);
  });
  BoxUnionSet2D sorted;
  for (std::size_t i : order) {
    sorted.boxes.push_back(out.boxes[i]);
    sorted.labels.push_back(out.labels[i]);
  }
  return sorted;
}

Vec2 drift_offset(Vec2 target, int n, int i) {
  return {(target.x / n) * i, (target.y / n) * i};
}

Box2 shift_box(const Box2& b, Vec2 by) {
  auto mv = [](double v, double d) { return std::isfinite(v) ? v + d : v; };
  return {mv(b.lx, by.x), mv(b.hx, by.x), mv(b.ly, by.y), mv(b.hy, by.y)};
}

}  // namespace

bool GridSequence2D::labeled_interior() const {
  for (int i = 1; i < n(); ++i)
    if (!set(i).labeled()) return false;
  return n() >= 2;
}

void GridSequence2D::validate_shape() const {
  if (sets.size() < 2) fail(errc::validation, "sequence needs two sets");
  for (const auto& s : sets) s.validate();
  if (!is_singleton(sets.front(), {0.0, 0.0}, kPointTol))
    fail(errc::validation, "first set must be the origin singleton");
  if (!is_singleton(sets.back(), target, kPointTol))
    fail(errc::validation, "last set must be the target singleton");
}

void CompassParams::validate() const {
  if (m < 2) fail(errc::validation, "construction needs m >= 2");
}

GridSequence2D build_compass_sequence(CompassParams params) {
  params.validate();
  const int m = params.m;
  GridSequence2D seq;
  seq.target = {0.0, 0.0};
  seq.sets.reserve(static_cast<std::size_t>(params.n()) + 1);
  seq.sets.push_back(singleton_set({0.0, 0.0}));

  std::vector<BoxUnionSet2D> first_phase;
  for (int i = 1; i <= m; ++i) {
    // Evaluated as exact integer ratios so the final set degenerates cleanly
    // (half-width 0 at i = m).
    double a = 3.0 * (m - i) / (m - 1);
    double c = (4.0 * (m - 1) - 3.0 * (i - 1)) / (m - 1);
    double e = (4.5 * (m - 1) - 3.0 * (i - 1)) / (m - 1);
    BoxUnionSet2D s;
    s.boxes = {
        {-a, a, 1.0, kInf},      // N
        {-a, a, -kInf, -1.0},    // S
        {c, kInf, 0.0, 0.0},     // E
        {-kInf, -c, 0.0, 0.0},   // W
        {e, kInf, 1.5, kInf},    // QNE
        {-kInf, -e, 1.5, kInf},  // QNW
        {e, kInf, -kInf, -1.5},  // QSE
        {-kInf, -e, -kInf, -1.5} // QSW
    };
    s.labels = {CompassLabel::N,   CompassLabel::S,   CompassLabel::E,
                CompassLabel::W,   CompassLabel::QNE, CompassLabel::QNW,
                CompassLabel::QSE, CompassLabel::QSW};
    first_phase.push_back(std::move(s));
  }
  for (int i = 1; i <= m; ++i)
    seq.sets.push_back(first_phase[static_cast<std::size_t>(i - 1)]);
  for (int i = m + 1; i <= 2 * m; ++i)
    seq.sets.push_back(
        reflect_set(first_phase[static_cast<std::size_t>(2 * m - i)]));
  seq.sets.push_back(singleton_set({0.0, 0.0}));
  return seq;
}

Transversal2D triangle_transversal(CompassParams params) {
  params.validate();
  const int m = params.m;
  const double k = 2.0 * std::sqrt(3.0) - 3.0;

  Transversal2D t;
  t.points.reserve(static_cast<std::size_t>(params.n()) + 1);
  t.points.push_back({0.0, 0.0});
  for (int i = 1; i <= m; ++i)
    t.points.push_back({k * (m - i) / (m - 1), 1.0});
  for (int i = 1; i <= m; ++i)
    t.points.push_back({1.0, k * (i - 1) / (m - 1)});
  t.points.push_back({0.0, 0.0});

  GridSequence2D seq = build_compass_sequence(params);
  for (int i = 0; i <= seq.n(); ++i)
    if (!seq.set(i).contains(t.points[static_cast<std::size_t>(i)], kMemberTol))
      fail(errc::membership_violation,
           "closed-form point " + std::to_string(i) + " left its set");
  return t;
}

Transversal2D trivial_transversal(const GridSequence2D& seq, NormKind kind) {
  seq.validate_shape();
  const int n = seq.n();
  Transversal2D t;
  t.points.reserve(static_cast<std::size_t>(n) + 1);
  t.points.push_back({0.0, 0.0});
  for (int i = 1; i < n; ++i) {
    Vec2 drift = drift_offset(seq.target, n, i);
    Vec2 a = nearest_point(seq.set(i), drift, kind);
    if (dist(a, drift, kind) > 1.0 + kMemberTol)
      fail(errc::density_violation,
           "set " + std::to_string(i) + " has no point within one unit of its drift");
    t.points.push_back(a);
  }
  t.points.push_back(seq.target);
  return t;
}

GridSequence2D normalize(const GridSequence2D& seq) {
  const int n = seq.n();
  GridSequence2D out;
  out.sets.reserve(seq.sets.size());
  for (int i = 0; i <= n; ++i) {
    Vec2 off = drift_offset(seq.target, n, i);
    BoxUnionSet2D s = seq.set(i);
    for (Box2& b : s.boxes) b = shift_box(b, {-off.x, -off.y});
    out.sets.push_back(std::move(s));
  }
  Vec2 off_n = drift_offset(seq.target, n, n);
  out.target = seq.target - off_n;
  return out;
}

Transversal2D normalize(const GridSequence2D& seq, const Transversal2D& t) {
  const int n = seq.n();
  Transversal2D out;
  out.points.reserve(t.points.size());
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    Vec2 off = drift_offset(seq.target, n, static_cast<int>(i));
    out.points.push_back(t.points[i] - off);
  }
  return out;
}

GridSequence2D lift_1d(const GridSequence1D& seq,
                       std::optional<Interval1D> lattice_window) {
  GridSequence1D shape = seq;
  shape.dense = false;  // endpoint check only; 1D density is not required here
  shape.validate();
  const int n = seq.n();

  GridSequence2D out;
  out.target = {seq.target, 0.0};
  out.sets.reserve(seq.sets.size());
  out.sets.push_back(singleton_set({0.0, 0.0}));
  for (int i = 1; i < n; ++i) {
    const ClosedSet1D& s = seq.set(i);
    BoxUnionSet2D lifted;
    for (const Interval1D& iv : s.intervals())
      lifted.boxes.push_back({iv.lo, iv.hi, -kInf, kInf});
    for (double p : s.points()) lifted.boxes.push_back({p, p, -kInf, kInf});
    for (const Lattice1D& l : s.lattices()) {
      if (!lattice_window)
        fail(errc::unsupported_primitive,
             "unbounded lattice cannot be lifted without a window");
      for (double v = l.offset +
                      std::ceil((lattice_window->lo - l.offset) / l.period) *
                          l.period;
           v <= lattice_window->hi; v += l.period)
        lifted.boxes.push_back({v, v, -kInf, kInf});
    }
    if (lifted.empty())
      fail(errc::validation, "interior set " + std::to_string(i) + " is empty");
    out.sets.push_back(std::move(lifted));
  }
  out.sets.push_back(singleton_set(out.target));
  return out;
}

std::optional<CompassLabel> classify_point(const BoxUnionSet2D& set, Vec2 p,
                                           double tol) {
  if (!set.labeled()) return std::nullopt;
  std::optional<CompassLabel> best;
  for (std::size_t i = 0; i < set.boxes.size(); ++i)
    if (set.boxes[i].contains(p, tol)) {
      if (!best || static_cast<int>(set.labels[i]) < static_cast<int>(*best))
        best = set.labels[i];
    }
  return best;
}

std::vector<Jump> jump_sequence(const GridSequence2D& seq,
                                const Transversal2D& t) {
  const int n = seq.n();
  if (!seq.labeled_interior())
    fail(errc::unlabeled_sequence, "jump classification needs labeled sets");
  if (static_cast<int>(t.points.size()) != n + 1)
    fail(errc::validation, "transversal length does not match the sequence");

  std::vector<CompassLabel> where(static_cast<std::size_t>(n) + 1,
                                  CompassLabel::N);
  for (int i = 1; i < n; ++i) {
    auto label = classify_point(seq.set(i), t.points[static_cast<std::size_t>(i)]);
    if (!label)
      fail(errc::membership_violation,
           "point " + std::to_string(i) + " lies in no labeled component");
    where[static_cast<std::size_t>(i)] = *label;
  }

  std::vector<Jump> jumps;
  for (int i = 2; i < n; ++i) {
    CompassLabel a = where[static_cast<std::size_t>(i - 1)];
    CompassLabel b = where[static_cast<std::size_t>(i)];
    if (a != b) jumps.push_back({i, a, b});
  }
  return jumps;
}

}  // namespace blockline
