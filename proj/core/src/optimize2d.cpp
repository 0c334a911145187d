#include "blockline/optimize2d.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "blockline/errors.hpp"
#include "blockline/random.hpp"

namespace blockline {

namespace {

constexpr double kImproveTol = 1e-12;
constexpr int kSlateSize = 16;
constexpr double kRadiusHi = 1.0;
constexpr double kRadiusLo = 1e-4;

Vec2 drift(const GridSequence2D& seq, int i) {
  const int n = seq.n();
  return {(seq.target.x / n) * i, (seq.target.y / n) * i};
}

Transversal2D initial_transversal(const GridSequence2D& seq, NormKind kind,
                                  SearchConfig::Init init, Rng& rng) {
  const int n = seq.n();
  switch (init) {
    case SearchConfig::Init::trivial:
      return trivial_transversal(seq, kind);
    case SearchConfig::Init::triangle: {
      if (n < 5 || n % 2 == 0 || norm(seq.target, NormKind::maximum) > kPointTol)
        fail(errc::validation,
             "triangle start needs an odd-length sequence with target 0");
      Transversal2D t = triangle_transversal(CompassParams{(n - 1) / 2});
      for (int i = 0; i <= n; ++i)
        if (!seq.set(i).contains(t.points[static_cast<std::size_t>(i)], 1e-9))
          fail(errc::membership_violation,
               "triangle start leaves set " + std::to_string(i));
      return t;
    }
    case SearchConfig::Init::random: {
      Transversal2D t;
      t.points.reserve(static_cast<std::size_t>(n) + 1);
      t.points.push_back({0.0, 0.0});
      for (int i = 1; i < n; ++i) {
        Vec2 c = drift(seq, i);
        double dx = rng.uniform(-4.0, 4.0);
        double dy = rng.uniform(-4.0, 4.0);
        t.points.push_back(
            nearest_point(seq.set(i), {c.x + dx, c.y + dy}, kind));
      }
      t.points.push_back(seq.target);
      return t;
    }
  }
  fail(errc::internal, "unknown initialization");
}

struct RunOutcome {
  Transversal2D t;
  double diameter;
};

RunOutcome run_one(const GridSequence2D& seq, NormKind kind,
                   Transversal2D start, int iterations, Rng rng) {
  const int n = seq.n();
  std::vector<Vec2>& a = start.points;
  std::vector<Vec2> z = start.zs();
  double cur = diameter(z, kind);
  if (n < 2 || iterations <= 0) return {std::move(start), cur};

  std::vector<Vec2> slate(kSlateSize);
  for (int k = 0; k < iterations; ++k) {
    const int i =
        (k < n - 1) ? 1 + k : 1 + static_cast<int>(rng.below(
                                      static_cast<std::uint64_t>(n - 1)));
    const double frac =
        iterations > 1 ? static_cast<double>(k) / (iterations - 1) : 1.0;
    const double radius = kRadiusHi * std::pow(kRadiusLo / kRadiusHi, frac);

    // Pairs untouched by moving a_i (z indices i-1 and i, zero-based).
    const std::size_t za = static_cast<std::size_t>(i - 1);
    const std::size_t zb = static_cast<std::size_t>(i);
    double rest = 0.0;
    for (std::size_t p = 0; p < z.size(); ++p) {
      if (p == za || p == zb) continue;
      for (std::size_t q = p + 1; q < z.size(); ++q) {
        if (q == za || q == zb) continue;
        rest = std::max(rest, dist(z[p], z[q], kind));
      }
    }

    for (int c = 0; c < kSlateSize; ++c) {
      double dx = rng.uniform(-radius, radius);
      double dy = rng.uniform(-radius, radius);
      Vec2 probe{a[static_cast<std::size_t>(i)].x + dx,
                 a[static_cast<std::size_t>(i)].y + dy};
      slate[static_cast<std::size_t>(c)] = nearest_point(seq.set(i), probe, kind);
    }

    double best_d = cur;
    int best_c = -1;
    Vec2 best_za{}, best_zb{};
    for (int c = 0; c < kSlateSize; ++c) {
      Vec2 cand = slate[static_cast<std::size_t>(c)];
      Vec2 nza = cand - a[static_cast<std::size_t>(i - 1)];
      Vec2 nzb = a[static_cast<std::size_t>(i + 1)] - cand;
      double d = std::max(rest, dist(nza, nzb, kind));
      for (std::size_t q = 0; q < z.size() && d < best_d; ++q) {
        if (q == za || q == zb) continue;
        d = std::max({d, dist(nza, z[q], kind), dist(nzb, z[q], kind)});
      }
      if (d < best_d - kImproveTol) {
        best_d = d;
        best_c = c;
        best_za = nza;
        best_zb = nzb;
      }
    }
    if (best_c >= 0) {
      a[static_cast<std::size_t>(i)] = slate[static_cast<std::size_t>(best_c)];
      z[za] = best_za;
      z[zb] = best_zb;
      cur = best_d;
    }
  }
  return {std::move(start), cur};
}

}  // namespace

SearchResult local_search_from(const GridSequence2D& seq, NormKind kind,
                               const Transversal2D& initial, int iterations,
                               std::uint64_t seed) {
  if (static_cast<int>(initial.points.size()) != seq.n() + 1)
    fail(errc::validation, "initial transversal length mismatch");
  RunOutcome out = run_one(seq, kind, initial, iterations, Rng(mix_seed(seed)));
  return {std::move(out.t), out.diameter, 0};
}

SearchResult local_search(const GridSequence2D& seq, NormKind kind,
                          const SearchConfig& cfg) {
  if (cfg.restarts < 1) fail(errc::validation, "restarts must be positive");
  seq.validate_shape();

  std::vector<RunOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  auto work = [&](int r) {
    Rng rng(mix_seed(cfg.seed + static_cast<std::uint64_t>(r)));
    Transversal2D start = initial_transversal(seq, kind, cfg.init, rng);
    outcomes[static_cast<std::size_t>(r)] =
        run_one(seq, kind, std::move(start), cfg.iterations, std::move(rng));
  };

  int threads = std::min(cfg.threads, cfg.restarts);
  if (threads <= 1) {
    for (int r = 0; r < cfg.restarts; ++r) work(r);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (int r = next.fetch_add(1); r < cfg.restarts;
             r = next.fetch_add(1))
          work(r);
      });
    for (auto& th : pool) th.join();
  }

  // Reduce by (diameter, restart index): schedule-independent.
  int best = 0;
  for (int r = 1; r < cfg.restarts; ++r)
    if (outcomes[static_cast<std::size_t>(r)].diameter <
        outcomes[static_cast<std::size_t>(best)].diameter)
      best = r;
  auto& win = outcomes[static_cast<std::size_t>(best)];
  return {std::move(win.t), win.diameter, best};
}

namespace {

double eval_diameter(const std::vector<Vec2>& z, NormKind kind,
                     std::size_t* arg_p = nullptr,
                     std::size_t* arg_q = nullptr) {
  double best = 0.0;
  std::size_t bp = 0, bq = 0;
  for (std::size_t p = 0; p < z.size(); ++p)
    for (std::size_t q = p + 1; q < z.size(); ++q) {
      double d = dist(z[p], z[q], kind);
      if (d > best) {
        best = d;
        bp = p;
        bq = q;
      }
    }
  if (arg_p) *arg_p = bp;
  if (arg_q) *arg_q = bq;
  return best;
}

std::vector<Vec2> zs_of(const std::vector<Vec2>& a) {
  std::vector<Vec2> z;
  z.reserve(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) z.push_back(a[i] - a[i - 1]);
  return z;
}

}  // namespace

SearchResult assignment_search(const GridSequence2D& seq,
                               const std::vector<CompassLabel>& pattern,
                               NormKind kind, int iterations) {
  const int n = seq.n();
  if (!seq.labeled_interior())
    fail(errc::unlabeled_sequence, "assignment search needs labeled sets");
  if (static_cast<int>(pattern.size()) != n - 1)
    fail(errc::validation, "pattern must assign each interior index");

  std::vector<Box2> cell(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i < n; ++i) {
    const BoxUnionSet2D& s = seq.set(i);
    bool found = false;
    for (std::size_t b = 0; b < s.boxes.size(); ++b)
      if (s.labels[b] == pattern[static_cast<std::size_t>(i - 1)]) {
        cell[static_cast<std::size_t>(i)] = s.boxes[b];
        found = true;
        break;
      }
    if (!found)
      fail(errc::infeasible_pattern,
           std::string("no ") +
               compass_name(pattern[static_cast<std::size_t>(i - 1)]) +
               " component at index " + std::to_string(i));
  }

  std::vector<Vec2> a(static_cast<std::size_t>(n) + 1);
  a[0] = {0.0, 0.0};
  a[static_cast<std::size_t>(n)] = seq.target;
  for (int i = 1; i < n; ++i)
    a[static_cast<std::size_t>(i)] =
        cell[static_cast<std::size_t>(i)].clamp(drift(seq, i));

  std::vector<Vec2> best_a = a;
  double best_f = eval_diameter(zs_of(a), kind);

  // Projected subgradient on the convex restriction. The subgradient uses the
  // single active pair with the lowest indices.
  const double step_c = 0.5;
  std::vector<Vec2> grad(a.size());
  for (int k = 1; k <= iterations; ++k) {
    std::vector<Vec2> z = zs_of(a);
    std::size_t p, q;
    double f = eval_diameter(z, kind, &p, &q);
    if (f < best_f) {
      best_f = f;
      best_a = a;
    }
    if (f < 1e-15) break;

    Vec2 u;
    Vec2 d = z[p] - z[q];
    if (kind == NormKind::euclidean) {
      u = (1.0 / f) * d;
    } else {
      u = std::abs(d.x) >= std::abs(d.y)
              ? Vec2{d.x >= 0 ? 1.0 : -1.0, 0.0}
              : Vec2{0.0, d.y >= 0 ? 1.0 : -1.0};
    }
    std::fill(grad.begin(), grad.end(), Vec2{});
    grad[p + 1] = grad[p + 1] + u;
    grad[p] = grad[p] - u;
    grad[q + 1] = grad[q + 1] - u;
    grad[q] = grad[q] + u;

    double step = step_c / std::sqrt(static_cast<double>(k));
    for (int i = 1; i < n; ++i) {
      std::size_t ii = static_cast<std::size_t>(i);
      a[ii] = cell[ii].clamp(a[ii] - step * grad[ii]);
    }
  }

  // Clamped pattern polish from the subgradient's best iterate; the plain
  // c/sqrt(k) schedule alone lands short of the advertised tolerance.
  a = best_a;
  for (double radius = 0.25; radius > 1e-8; radius *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (int i = 1; i < n; ++i) {
        std::size_t ii = static_cast<std::size_t>(i);
        const Vec2 center = a[ii];
        static constexpr double dirs[8][2] = {{1, 0},  {-1, 0}, {0, 1},
                                              {0, -1}, {1, 1},  {1, -1},
                                              {-1, 1}, {-1, -1}};
        for (const auto& d : dirs) {
          Vec2 cand = cell[ii].clamp(
              {center.x + radius * d[0], center.y + radius * d[1]});
          if (cand == a[ii]) continue;
          Vec2 keep = a[ii];
          a[ii] = cand;
          double f = eval_diameter(zs_of(a), kind);
          if (f < best_f - 1e-13) {
            best_f = f;
            best_a = a;
            improved = true;
          } else {
            a[ii] = keep;
          }
        }
      }
    }
    a = best_a;
  }

  return {Transversal2D{std::move(best_a)}, best_f, 0};
}

namespace {

double tri_max(Vec2 z1, Vec2 zj, Vec2 zn) {
  return std::max({dist(z1, zj, NormKind::euclidean),
                   dist(z1, zn, NormKind::euclidean),
                   dist(zj, zn, NormKind::euclidean)});
}

}  // namespace

TriangleSolution min_triangle_diameter(double delta) {
  if (!(delta >= 0.0 && delta < 1.0))
    fail(errc::validation, "delta must lie in [0, 1)");

  // Grid over the two boundary parameters with the corner constraints tight:
  // z1 = (x1, 1), zj = (1-delta, -1+delta), zn = (-1, yn).
  const Vec2 zj{1.0 - delta, -1.0 + delta};
  double best = kInf, bx = 0.0, by = 0.0;
  for (int i = 0; i <= 300; ++i)
    for (int j = 0; j <= 300; ++j) {
      double x1 = -1.5 + 0.01 * i;
      double yn = -1.5 + 0.01 * j;
      double f = tri_max({x1, 1.0}, zj, {-1.0, yn});
      if (f < best) {
        best = f;
        bx = x1;
        by = yn;
      }
    }

  // Refine over all six coordinates, projecting onto the constraints, so the
  // active set is verified rather than assumed.
  std::array<double, 6> v{bx, 1.0, zj.x, zj.y, -1.0, by};
  auto clamp_all = [&](std::array<double, 6>& w) {
    w[1] = std::max(w[1], 1.0);           // z1.y >= 1
    w[2] = std::max(w[2], 1.0 - delta);   // zj.x >= 1-delta
    w[3] = std::min(w[3], -1.0 + delta);  // zj.y <= -1+delta
    w[4] = std::min(w[4], -1.0);          // zn.x <= -1
  };
  auto value = [&](const std::array<double, 6>& w) {
    return tri_max({w[0], w[1]}, {w[2], w[3]}, {w[4], w[5]});
  };
  clamp_all(v);
  best = value(v);
  for (double step = 0.02; step > 1e-9; step *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (int i = 0; i < 6; ++i)
        for (double sgn : {1.0, -1.0}) {
          std::array<double, 6> w = v;
          w[static_cast<std::size_t>(i)] += sgn * step;
          clamp_all(w);
          double f = value(w);
          if (f < best - 1e-14) {
            best = f;
            v = w;
            improved = true;
          }
        }
      // Diagonal moves on the free pair keep the search from stalling on the
      // max-of-norms kinks.
      for (double sx : {1.0, -1.0})
        for (double sy : {1.0, -1.0}) {
          std::array<double, 6> w = v;
          w[0] += sx * step;
          w[5] += sy * step;
          clamp_all(w);
          double f = value(w);
          if (f < best - 1e-14) {
            best = f;
            v = w;
            improved = true;
          }
        }
    }
  }

  return {best, {v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}};
}

}  // namespace blockline
