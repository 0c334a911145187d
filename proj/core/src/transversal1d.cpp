#include "blockline/transversal1d.hpp"

#include <algorithm>
#include <cmath>

#include "blockline/errors.hpp"

namespace blockline {

namespace {

constexpr double kBracketLimit = 1.15292150460684698e18;  // 2^60
constexpr double kExtractTol = 1e-10;

enum class Side { low, exact, high };

// Directional reading of a single-offset window at index h. Infeasible-low
// means the lower recursion ran off the top of a bounded set, which only
// happens when the offset is too high; infeasible-high is the mirror case.
// An empty window (possible in block mode only) is read as "offset too
// high"; the exact solver backs the search with a full scan, so this choice
// affects only the probe order there.
Side classify(const WindowState& st, double p, int h) {
  if (!st.feasible_through(h)) {
    switch (st.status) {
      case WindowState::Status::infeasible_low: return Side::high;
      case WindowState::Status::infeasible_high: return Side::low;
      default: return Side::high;
    }
  }
  if (st.R(h) < p) return Side::low;
  if (st.L(h) > p) return Side::high;
  return Side::exact;
}

Side probe(const GridSequence1D& seq, double x, double p, int h) {
  return classify(propagate(seq, x, x), p, h);
}

}  // namespace

void GridSequence1D::validate() const {
  if (sets.size() < 2)
    fail(errc::validation, "sequence needs at least two sets");
  if (!sets.front().singleton(0.0))
    fail(errc::validation, "first set must be the singleton {0}");
  if (!sets.back().singleton(target))
    fail(errc::validation, "last set must be the singleton {target}");
  if (dense) {
    for (int i = 1; i < n(); ++i)
      if (!set(i).is_unit_dense())
        fail(errc::density_violation,
             "interior set " + std::to_string(i) + " misses a unit interval");
  }
}

GridSequence1D GridSequence1D::checked(std::vector<ClosedSet1D> sets,
                                       double target, bool dense) {
  GridSequence1D seq{std::move(sets), target, dense};
  seq.validate();
  return seq;
}

WindowState propagate(const GridSequence1D& seq, double x_lo, double x_hi) {
  if (!(x_lo <= x_hi)) fail(errc::validation, "window offsets out of order");
  const int n = seq.n();
  WindowState st;
  st.x_lo = x_lo;
  st.x_hi = x_hi;
  st.lower.assign(static_cast<std::size_t>(n), kInf);
  st.upper.assign(static_cast<std::size_t>(n), -kInf);

  auto width_floor = [](double lo, double hi, bool dense) {
    if (!dense) return hi;
    double floor_hi = lo + 1.0;
    while (floor_hi - lo < 1.0) floor_hi = std::nextafter(floor_hi, kInf);
    return std::max(hi, floor_hi);
  };

  double lo = x_lo;
  double hi = width_floor(lo, x_hi + 1.0, seq.dense);
  for (int i = 1; i <= n; ++i) {
    st.lower[static_cast<std::size_t>(i - 1)] = lo;
    st.upper[static_cast<std::size_t>(i - 1)] = hi;
    if (i == n) break;
    auto succ = seq.set(i).try_successor(lo);
    auto pred = seq.set(i).try_predecessor(hi);
    if (!succ) {
      st.status = WindowState::Status::infeasible_low;
      st.status_index = i + 1;
      return st;
    }
    if (!pred) {
      st.status = WindowState::Status::infeasible_high;
      st.status_index = i + 1;
      return st;
    }
    lo = x_lo + *succ;
    // Dense sequences guarantee windows of width at least one; keep that
    // exact under rounding by never letting hi dip below lo + 1 even after
    // the subtraction rounds.
    hi = width_floor(lo, x_hi + 1.0 + *pred, seq.dense);
    if (hi < lo) {
      st.status = WindowState::Status::empty;
      st.status_index = i + 1;
      return st;
    }
  }
  return st;
}

OffsetWindow find_window_offset(
    const GridSequence1D& seq, double p, int h, double eps,
    std::optional<std::pair<double, double>> bracket_hint) {
  if (h < 1 || h > seq.n()) fail(errc::validation, "window index out of range");
  if (!(eps > 0.0)) fail(errc::validation, "eps must be positive");
  if (!seq.dense)
    fail(errc::validation, "offset search requires a dense sequence");

  double lo, hi;
  if (bracket_hint) {
    lo = bracket_hint->first;
    hi = bracket_hint->second;
  } else {
    lo = p / h - 1.0;
    hi = p / h + 1.0;
  }

  Side side = probe(seq, lo, p, h);
  if (side == Side::exact) return {lo, lo, true};
  for (double step = std::max(1.0, hi - lo); side == Side::high;) {
    lo -= step;
    step *= 2.0;
    if (std::abs(lo) > kBracketLimit)
      fail(errc::bracket_failure, "no lower bracket within 2^60");
    side = probe(seq, lo, p, h);
    if (side == Side::exact) return {lo, lo, true};
  }
  side = probe(seq, hi, p, h);
  if (side == Side::exact) return {hi, hi, true};
  for (double step = std::max(1.0, hi - lo); side == Side::low;) {
    hi += step;
    step *= 2.0;
    if (std::abs(hi) > kBracketLimit)
      fail(errc::bracket_failure, "no upper bracket within 2^60");
    side = probe(seq, hi, p, h);
    if (side == Side::exact) return {hi, hi, true};
  }

  // Invariant: probe(lo) == low, probe(hi) == high. Stop at half the
  // requested width so extraction keeps headroom for rounding.
  for (int iter = 0; iter < 200 && hi - lo > 0.5 * eps; ++iter) {
    double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    switch (probe(seq, mid, p, h)) {
      case Side::low: lo = mid; break;
      case Side::high: hi = mid; break;
      case Side::exact: return {mid, mid, true};
    }
  }
  return {lo, hi, false};
}

std::vector<double> Transversal1D::z() const {
  std::vector<double> out;
  out.reserve(points.size() > 0 ? points.size() - 1 : 0);
  for (std::size_t i = 1; i < points.size(); ++i)
    out.push_back(points[i] - points[i - 1]);
  return out;
}

double Transversal1D::spread() const {
  auto diffs = z();
  if (diffs.empty()) return 0.0;
  auto [mn, mx] = std::minmax_element(diffs.begin(), diffs.end());
  return *mx - *mn;
}

Transversal1D extract(const GridSequence1D& seq, const WindowState& state) {
  const int n = seq.n();
  if (!state.feasible_through(n))
    fail(errc::validation, "window state is infeasible at the target index");
  const double s = seq.target;
  if (s < state.L(n) - kExtractTol || s > state.R(n) + kExtractTol)
    fail(errc::validation, "target lies outside the final window");

  std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
  a[static_cast<std::size_t>(n)] = s;
  for (int i = n - 1; i >= 1; --i) {
    double next = a[static_cast<std::size_t>(i + 1)];
    double low = std::max(state.L(i), next - state.x_hi - 1.0);
    double cap = std::min(state.R(i), next - state.x_lo);
    auto e = seq.set(i).try_successor(low);
    if (!e || *e > cap + kExtractTol)
      fail(errc::extraction_failure,
           "no admissible element at index " + std::to_string(i));
    a[static_cast<std::size_t>(i)] = *e;
  }
  a[0] = 0.0;
  return Transversal1D{std::move(a)};
}

SolveResult solve(const GridSequence1D& seq, double eps) {
  seq.validate();
  if (!seq.dense) fail(errc::validation, "solve requires a dense sequence");
  const int n = seq.n();
  const double t = seq.target / n;

  GridSequence1D norm;
  norm.dense = true;
  norm.sets.reserve(seq.sets.size());
  for (int i = 0; i <= n; ++i) norm.sets.push_back(seq.set(i).shifted(-i * t));
  norm.target = seq.target - n * t;

  OffsetWindow win =
      find_window_offset(norm, norm.target, n, eps, std::make_pair(-1.0, 0.0));
  WindowState state = propagate(norm, win.lo, win.hi);
  Transversal1D shifted = extract(norm, state);

  Transversal1D out;
  out.points.resize(shifted.points.size());
  for (int i = 0; i <= n; ++i)
    out.points[static_cast<std::size_t>(i)] =
        shifted.points[static_cast<std::size_t>(i)] + i * t;
  out.points.front() = 0.0;
  out.points.back() = seq.target;
  return {std::move(out), win};
}

SolveResult solve_exact_finite(const GridSequence1D& seq,
                               std::optional<double> min_offset) {
  GridSequence1D plain = seq;
  plain.dense = false;
  plain.validate();
  const int n = plain.n();
  for (int i = 1; i < n; ++i) {
    if (!plain.set(i).points_only() || plain.set(i).empty())
      fail(errc::validation,
           "exact solver requires interior sets of finitely many points");
  }

  std::vector<double> pool{0.0, plain.target};
  for (int i = 1; i < n; ++i)
    pool.insert(pool.end(), plain.set(i).points().begin(),
                plain.set(i).points().end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  // Every breakpoint of the window recursion is a difference of pool values,
  // possibly shifted by one; midpoints of consecutive candidates cover the
  // open intervals between breakpoints.
  std::vector<double> cands;
  cands.reserve(2 * pool.size() * pool.size() + 2);
  for (double a : pool)
    for (double b : pool) {
      double d = a - b;
      if (!min_offset || d >= *min_offset) cands.push_back(d);
      double d1 = d - 1.0;
      if (!min_offset || d1 >= *min_offset) cands.push_back(d1);
    }
  if (min_offset) cands.push_back(*min_offset);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  {
    std::vector<double> with_mid;
    with_mid.reserve(2 * cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (i > 0) {
        double mid = cands[i - 1] + 0.5 * (cands[i] - cands[i - 1]);
        if (mid > cands[i - 1] && mid < cands[i]) with_mid.push_back(mid);
      }
      with_mid.push_back(cands[i]);
    }
    cands = std::move(with_mid);
  }
  if (cands.empty()) fail(errc::infeasible, "no candidate offsets");

  const double s = plain.target;
  auto probe_at = [&](std::size_t k) {
    return classify(propagate(plain, cands[k], cands[k]), s, n);
  };

  // The predicate over sorted candidates reads low* exact* high*; the first
  // probe that lands in the exact run wins.
  std::optional<std::size_t> hit;
  {
    std::size_t l = 0, r = cands.size();
    while (l < r) {
      std::size_t mid = l + (r - l) / 2;
      Side side = probe_at(mid);
      if (side == Side::exact) {
        hit = mid;
        break;
      }
      if (side == Side::low)
        l = mid + 1;
      else
        r = mid;
    }
  }
  if (!hit) {
    // Completeness fallback: block-mode windows can go empty on inputs with
    // gaps above one, which breaks the three-way monotonicity the bisection
    // relies on. A full scan settles feasibility.
    for (std::size_t k = 0; k < cands.size(); ++k)
      if (probe_at(k) == Side::exact) {
        hit = k;
        break;
      }
    if (!hit) fail(errc::infeasible, "no offset admits a transversal");
  }

  const double x = cands[*hit];
  WindowState state = propagate(plain, x, x);
  Transversal1D tr = extract(plain, state);
  return {std::move(tr), {x, x, true}};
}

}  // namespace blockline
