#include "blockline/geometry2d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "blockline/errors.hpp"

namespace blockline {

double norm(Vec2 v, NormKind kind) {
  switch (kind) {
    case NormKind::euclidean: return std::sqrt(v.x * v.x + v.y * v.y);
    case NormKind::maximum: return std::max(std::abs(v.x), std::abs(v.y));
  }
  return 0.0;
}

Vec2 Box2::clamp(Vec2 p) const {
  return {std::min(std::max(p.x, lx), hx), std::min(std::max(p.y, ly), hy)};
}

void Box2::validate() const {
  if (std::isnan(lx) || std::isnan(hx) || std::isnan(ly) || std::isnan(hy) ||
      lx > hx || ly > hy || lx == kInf || hx == -kInf || ly == kInf ||
      hy == -kInf)
    fail(errc::validation, "box bounds out of order");
}

const char* compass_name(CompassLabel label) {
  switch (label) {
    case CompassLabel::N: return "N";
    case CompassLabel::S: return "S";
    case CompassLabel::E: return "E";
    case CompassLabel::W: return "W";
    case CompassLabel::QNE: return "QNE";
    case CompassLabel::QNW: return "QNW";
    case CompassLabel::QSE: return "QSE";
    case CompassLabel::QSW: return "QSW";
  }
  return "?";
}

bool BoxUnionSet2D::contains(Vec2 p, double tol) const {
  return std::any_of(boxes.begin(), boxes.end(),
                     [&](const Box2& b) { return b.contains(p, tol); });
}

void BoxUnionSet2D::validate() const {
  for (const Box2& b : boxes) b.validate();
  if (!labels.empty() && labels.size() != boxes.size())
    fail(errc::validation, "labels must be absent or one per box");
}

Vec2 nearest_point(const BoxUnionSet2D& set, Vec2 p, NormKind kind) {
  if (set.empty()) fail(errc::empty_set, "nearest point of an empty set");
  Vec2 best{};
  double best_d = kInf;
  for (const Box2& b : set.boxes) {
    Vec2 q = b.clamp(p);
    double d = dist(p, q, kind);
    if (d < best_d) {
      best_d = d;
      best = q;
    }
  }
  return best;
}

double distance_to(const BoxUnionSet2D& set, Vec2 p, NormKind kind) {
  return dist(p, nearest_point(set, p, kind), kind);
}

namespace {

double dist_pt(Vec2 a, Vec2 b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y));
}

// Largest value of min_i |p - site_i| over an axis-aligned rectangle.
// Interior maxima sit at the circumcenter or on a segment midpoint between
// two sites; along an edge the running minimum is convex between bisector
// crossings, so edge maxima sit at corners or crossings.
double max_min_dist_rect(const std::array<Vec2, 3>& sites, double x0, double x1,
                         double y0, double y1) {
  std::vector<Vec2> cands;
  cands.push_back({x0, y0});
  cands.push_back({x0, y1});
  cands.push_back({x1, y0});
  cands.push_back({x1, y1});
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      cands.push_back(0.5 * (sites[i] + sites[j]));

  {  // circumcenter: 2(B-A).p = |B|^2-|A|^2, 2(C-B).p = |C|^2-|B|^2
    Vec2 A = sites[0], B = sites[1], C = sites[2];
    double a1 = 2 * (B.x - A.x), b1 = 2 * (B.y - A.y);
    double c1 = B.x * B.x + B.y * B.y - A.x * A.x - A.y * A.y;
    double a2 = 2 * (C.x - B.x), b2 = 2 * (C.y - B.y);
    double c2 = C.x * C.x + C.y * C.y - B.x * B.x - B.y * B.y;
    double det = a1 * b2 - a2 * b1;
    if (std::abs(det) > 1e-14)
      cands.push_back({(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det});
  }

  // Bisector crossings with the four edges.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Vec2 A = sites[i], B = sites[j];
      double a = 2 * (B.x - A.x), b = 2 * (B.y - A.y);
      double c = B.x * B.x + B.y * B.y - A.x * A.x - A.y * A.y;
      if (std::abs(b) > 1e-14) {
        cands.push_back({x0, (c - a * x0) / b});
        cands.push_back({x1, (c - a * x1) / b});
      }
      if (std::abs(a) > 1e-14) {
        cands.push_back({(c - b * y0) / a, y0});
        cands.push_back({(c - b * y1) / a, y1});
      }
    }

  double best = 0.0;
  constexpr double tol = 1e-9;
  for (Vec2 p : cands) {
    if (p.x < x0 - tol || p.x > x1 + tol || p.y < y0 - tol || p.y > y1 + tol)
      continue;
    double d = std::min({dist_pt(p, sites[0]), dist_pt(p, sites[1]),
                         dist_pt(p, sites[2])});
    best = std::max(best, d);
  }
  return best;
}

struct QuadParams {
  double a, b;  // vertical strip: half-width, start height
  double c, d;  // horizontal strip: start abscissa, half-height
  double e, f;  // corner quadrant offsets
};

// Worst uncovered distance in one quadrant of the compass family, in closed
// form. Regions: the bounded pocket between the three strip corners, the band
// above the vertical strip, and the band beyond the horizontal strip.
double quadrant_gap(const QuadParams& q) {
  if (!(q.a >= 0 && q.b > 0 && q.c > 0 && q.d >= 0 && q.e >= q.c - 1e-9 &&
        q.f >= q.b - 1e-9 && q.c >= q.a && q.b >= q.d))
    fail(errc::validation, "analytic density expects the compass family");
  double worst = std::min(q.b, q.c);  // central band, worst at the origin
  if (q.f > q.d) {
    double g = std::max(0.0, q.e - q.c);
    worst = std::max(worst, (g * g + (q.f - q.d) * (q.f - q.d)) /
                                (2.0 * (q.f - q.d)));
  }
  if (q.e > q.a) {
    double g = std::max(0.0, q.f - q.b);
    worst = std::max(worst, ((q.e - q.a) * (q.e - q.a) + g * g) /
                                (2.0 * (q.e - q.a)));
  }
  std::array<Vec2, 3> sites{Vec2{q.a, q.b}, Vec2{q.c, q.d}, Vec2{q.e, q.f}};
  worst = std::max(worst, max_min_dist_rect(sites, q.a, q.c, q.d, q.b));
  return worst;
}

const Box2& labeled_box(const BoxUnionSet2D& set, CompassLabel want) {
  for (std::size_t i = 0; i < set.boxes.size(); ++i)
    if (set.labels[i] == want) return set.boxes[i];
  fail(errc::validation, std::string("analytic density: missing ") +
                             compass_name(want) + " box");
}

bool analytic_dense(const BoxUnionSet2D& set) {
  if (!set.labeled())
    fail(errc::unlabeled_sequence, "analytic density needs labeled boxes");
  const Box2& N = labeled_box(set, CompassLabel::N);
  const Box2& S = labeled_box(set, CompassLabel::S);
  const Box2& E = labeled_box(set, CompassLabel::E);
  const Box2& W = labeled_box(set, CompassLabel::W);
  const Box2& QNE = labeled_box(set, CompassLabel::QNE);
  const Box2& QNW = labeled_box(set, CompassLabel::QNW);
  const Box2& QSE = labeled_box(set, CompassLabel::QSE);
  const Box2& QSW = labeled_box(set, CompassLabel::QSW);
  if (N.hy != kInf || S.ly != -kInf || E.hx != kInf || W.lx != -kInf ||
      QNE.hx != kInf || QNE.hy != kInf || QNW.lx != -kInf || QNW.hy != kInf ||
      QSE.hx != kInf || QSE.ly != -kInf || QSW.lx != -kInf || QSW.ly != -kInf)
    fail(errc::validation, "analytic density expects the compass family");

  const QuadParams quads[4] = {
      {N.hx, N.ly, E.lx, E.hy, QNE.lx, QNE.ly},       // NE
      {-N.lx, N.ly, -W.hx, W.hy, -QNW.hx, QNW.ly},    // NW
      {S.hx, -S.hy, E.lx, -E.ly, QSE.lx, -QSE.hy},    // SE
      {-S.lx, -S.hy, -W.hx, -W.ly, -QSW.hx, -QSW.hy}  // SW
  };
  for (const QuadParams& q : quads)
    if (quadrant_gap(q) > 1.0) return false;
  return true;
}

}  // namespace

bool is_grid_dense_2d(const BoxUnionSet2D& set, NormKind kind,
                      const DensityProbe& probe) {
  if (set.empty()) return false;
  if (probe.mode == DensityProbe::Mode::analytic) return analytic_dense(set);

  if (!(probe.resolution > 0.0) || probe.x_lo > probe.x_hi ||
      probe.y_lo > probe.y_hi)
    fail(errc::validation, "bad sampling window");
  auto steps = [&](double lo, double hi) {
    return static_cast<long>(std::floor((hi - lo) / probe.resolution)) + 1;
  };
  long nx = steps(probe.x_lo, probe.x_hi), ny = steps(probe.y_lo, probe.y_hi);
  if (nx * ny > 4'000'000)
    fail(errc::validation, "sampling window too fine: " +
                               std::to_string(nx * ny) + " probes");
  for (long i = 0; i < nx; ++i)
    for (long j = 0; j < ny; ++j) {
      Vec2 p{probe.x_lo + i * probe.resolution,
             probe.y_lo + j * probe.resolution};
      if (distance_to(set, p, kind) > 1.0) return false;
    }
  return true;
}

double diameter(std::span<const Vec2> zs, NormKind kind) {
  if (zs.empty()) fail(errc::validation, "diameter of an empty list");
  double best = 0.0;
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j)
      best = std::max(best, dist(zs[i], zs[j], kind));
  return best;
}

std::vector<Vec2> Transversal2D::zs() const {
  std::vector<Vec2> out;
  out.reserve(points.size() > 0 ? points.size() - 1 : 0);
  for (std::size_t i = 1; i < points.size(); ++i)
    out.push_back(points[i] - points[i - 1]);
  return out;
}

double Transversal2D::diameter(NormKind kind) const {
  auto z = zs();
  return blockline::diameter(z, kind);
}

}  // namespace blockline
