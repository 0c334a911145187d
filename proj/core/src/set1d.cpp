#include "blockline/set1d.hpp"

#include <algorithm>
#include <cmath>

#include "blockline/errors.hpp"

namespace blockline {

namespace {

bool finite(double x) { return std::isfinite(x); }

// Smallest lattice element >= x - kPointTol. Ceiling arithmetic first, then
// a one-step correction so that x sitting on (or a hair past) a lattice
// element resolves to that element instead of the next one.
double lattice_successor(const Lattice1D& l, double x) {
  double k = std::ceil((x - l.offset) / l.period);
  double cand = l.offset + k * l.period;
  if (cand - l.period >= x - kPointTol) cand -= l.period;
  while (cand < x - kPointTol) cand += l.period;
  return cand;
}

double lattice_predecessor(const Lattice1D& l, double x) {
  double k = std::floor((x - l.offset) / l.period);
  double cand = l.offset + k * l.period;
  if (cand + l.period <= x + kPointTol) cand += l.period;
  while (cand > x + kPointTol) cand -= l.period;
  return cand;
}

}  // namespace

ClosedSet1D ClosedSet1D::interval(double lo, double hi) {
  return ClosedSet1D{}.add_interval(lo, hi);
}

ClosedSet1D ClosedSet1D::point(double at) { return ClosedSet1D{}.add_point(at); }

ClosedSet1D ClosedSet1D::lattice(double offset, double period) {
  return ClosedSet1D{}.add_lattice(offset, period);
}

ClosedSet1D ClosedSet1D::from_points(std::vector<double> pts) {
  ClosedSet1D s;
  s.points_ = std::move(pts);
  std::sort(s.points_.begin(), s.points_.end());
  s.points_.erase(std::unique(s.points_.begin(), s.points_.end()),
                  s.points_.end());
  for (double p : s.points_)
    if (!finite(p)) fail(errc::validation, "point must be finite");
  return s;
}

ClosedSet1D& ClosedSet1D::add_interval(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi)
    fail(errc::validation, "interval requires lo <= hi");
  if (lo == kInf || hi == -kInf)
    fail(errc::validation, "interval bounds reversed at infinity");
  intervals_.push_back({lo, hi});
  return *this;
}

ClosedSet1D& ClosedSet1D::add_point(double at) {
  if (!finite(at)) fail(errc::validation, "point must be finite");
  points_.insert(std::upper_bound(points_.begin(), points_.end(), at), at);
  return *this;
}

ClosedSet1D& ClosedSet1D::add_lattice(double offset, double period) {
  if (!finite(offset) || !finite(period) || period <= 0.0)
    fail(errc::validation, "lattice requires finite offset and period > 0");
  lattices_.push_back({offset, period});
  return *this;
}

bool ClosedSet1D::contains(double x) const {
  for (const auto& iv : intervals_)
    if (x >= iv.lo - kPointTol && x <= iv.hi + kPointTol) return true;
  for (double p : points_)
    if (std::abs(x - p) <= kPointTol) return true;
  for (const auto& l : lattices_) {
    double k = std::round((x - l.offset) / l.period);
    if (std::abs(x - (l.offset + k * l.period)) <= kPointTol) return true;
  }
  return false;
}

std::optional<double> ClosedSet1D::try_successor(double x) const {
  std::optional<double> best;
  auto consider = [&](double cand) {
    if (!best || cand < *best) best = cand;
  };
  for (const auto& iv : intervals_)
    if (iv.hi >= x - kPointTol) consider(std::min(std::max(x, iv.lo), iv.hi));
  auto it = std::lower_bound(points_.begin(), points_.end(), x - kPointTol);
  if (it != points_.end()) consider(*it);
  for (const auto& l : lattices_) consider(lattice_successor(l, x));
  return best;
}

std::optional<double> ClosedSet1D::try_predecessor(double x) const {
  std::optional<double> best;
  auto consider = [&](double cand) {
    if (!best || cand > *best) best = cand;
  };
  for (const auto& iv : intervals_)
    if (iv.lo <= x + kPointTol) consider(std::max(std::min(x, iv.hi), iv.lo));
  auto it = std::upper_bound(points_.begin(), points_.end(), x + kPointTol);
  if (it != points_.begin()) consider(*(it - 1));
  for (const auto& l : lattices_) consider(lattice_predecessor(l, x));
  return best;
}

double ClosedSet1D::successor(double x) const {
  auto s = try_successor(x);
  if (!s) fail(errc::no_element_above, "no set element at or above query");
  return *s;
}

double ClosedSet1D::predecessor(double x) const {
  auto p = try_predecessor(x);
  if (!p) fail(errc::no_element_below, "no set element at or below query");
  return *p;
}

bool ClosedSet1D::is_unit_dense() const {
  if (empty()) return false;

  bool unbounded_below = !lattices_.empty();
  bool unbounded_above = !lattices_.empty();
  for (const auto& iv : intervals_) {
    if (iv.lo == -kInf) unbounded_below = true;
    if (iv.hi == kInf) unbounded_above = true;
    if (iv.lo == -kInf && iv.hi == kInf) return true;
  }
  if (!unbounded_below || !unbounded_above) return false;

  // A single lattice of period <= 1 covers the line densely enough on its own.
  double min_period = kInf;
  for (const auto& l : lattices_) {
    if (l.period <= 1.0) return true;
    min_period = std::min(min_period, l.period);
  }

  // Lattices sharing a period act jointly: fold offsets modulo the period and
  // measure the largest cyclic gap.
  for (std::size_t i = 0; i < lattices_.size(); ++i) {
    double p = lattices_[i].period;
    std::vector<double> residues;
    for (const auto& l : lattices_)
      if (std::abs(l.period - p) <= kPointTol) {
        double r = std::fmod(l.offset, p);
        if (r < 0) r += p;
        residues.push_back(r);
      }
    std::sort(residues.begin(), residues.end());
    double gap = residues.front() + p - residues.back();
    for (std::size_t j = 1; j < residues.size(); ++j)
      gap = std::max(gap, residues[j] - residues[j - 1]);
    if (gap <= 1.0) return true;
  }

  // Remaining case: sparse lattices plus finitely many solid parts. Beyond
  // the finite horizon only lattice structure and half-infinite intervals
  // remain, so gaps there are already decided; inside the horizon we
  // materialize lattice points exactly and sweep the merged cover.
  double lo_horizon = kInf, hi_horizon = -kInf;
  auto widen = [&](double v) {
    if (!finite(v)) return;
    lo_horizon = std::min(lo_horizon, v);
    hi_horizon = std::max(hi_horizon, v);
  };
  for (const auto& iv : intervals_) {
    widen(iv.lo);
    widen(iv.hi);
  }
  for (double pt : points_) widen(pt);

  bool tail_below = false, tail_above = false;
  for (const auto& iv : intervals_) {
    if (iv.lo == -kInf) tail_below = true;
    if (iv.hi == kInf) tail_above = true;
  }
  // Tails not covered by a half-infinite interval are pure lattice territory,
  // and every lattice period exceeds one here.
  if (!tail_below || !tail_above) return false;
  if (lo_horizon > hi_horizon) return true;  // two halflines, nothing between

  double pad = finite(min_period) ? min_period : 0.0;
  double sweep_lo = lo_horizon - pad - 1.0;
  double sweep_hi = hi_horizon + pad + 1.0;

  // Covered segments inside the sweep window.
  std::vector<Interval1D> segs;
  for (const auto& iv : intervals_)
    segs.push_back({std::max(iv.lo, sweep_lo), std::min(iv.hi, sweep_hi)});
  for (double pt : points_) segs.push_back({pt, pt});
  for (const auto& l : lattices_) {
    double v = lattice_successor(l, sweep_lo);
    for (; v <= sweep_hi; v += l.period) segs.push_back({v, v});
  }
  std::sort(segs.begin(), segs.end(),
            [](const Interval1D& a, const Interval1D& b) { return a.lo < b.lo; });

  double reach = sweep_lo;
  for (const auto& seg : segs) {
    if (seg.lo > reach + 1.0) return false;
    reach = std::max(reach, seg.hi);
  }
  return reach + 1.0 >= sweep_hi;
}

ClosedSet1D ClosedSet1D::shifted(double c) const {
  ClosedSet1D out;
  out.intervals_.reserve(intervals_.size());
  for (const auto& iv : intervals_)
    out.intervals_.push_back(
        {iv.lo == -kInf ? -kInf : iv.lo + c, iv.hi == kInf ? kInf : iv.hi + c});
  out.points_.reserve(points_.size());
  for (double p : points_) out.points_.push_back(p + c);
  out.lattices_.reserve(lattices_.size());
  for (const auto& l : lattices_) out.lattices_.push_back({l.offset + c, l.period});
  return out;
}

bool ClosedSet1D::singleton(double value, double tol) const {
  if (!lattices_.empty()) return false;
  std::optional<double> only;
  for (const auto& iv : intervals_) {
    if (iv.hi - iv.lo > tol) return false;
    if (only && std::abs(*only - iv.lo) > tol) return false;
    only = iv.lo;
  }
  for (double p : points_) {
    if (only && std::abs(*only - p) > tol) return false;
    only = p;
  }
  return only && std::abs(*only - value) <= tol;
}

std::string_view error_code_name(errc code) {
  switch (code) {
    case errc::validation: return "ValidationError";
    case errc::io: return "IoError";
    case errc::no_element_above: return "NoElementAbove";
    case errc::no_element_below: return "NoElementBelow";
    case errc::bracket_failure: return "BracketFailure";
    case errc::extraction_failure: return "ExtractionFailure";
    case errc::infeasible: return "Infeasible";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::empty_set: return "EmptySet";
    case errc::density_violation: return "DensityViolation";
    case errc::membership_violation: return "MembershipViolation";
    case errc::infeasible_pattern: return "InfeasiblePattern";
    case errc::unlabeled_sequence: return "UnlabeledSequence";
    case errc::unsupported_primitive: return "UnsupportedPrimitive";
    case errc::internal: return "InternalError";
  }
  return "InternalError";
}

}  // namespace blockline
