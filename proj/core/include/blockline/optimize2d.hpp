#pragma once

#include <cstdint>
#include <vector>

#include "blockline/compass2d.hpp"
#include "blockline/geometry2d.hpp"

namespace blockline {

struct SearchConfig {
  enum class Init { trivial, triangle, random };

  int restarts = 20;
  int iterations = 2000;
  std::uint64_t seed = 0;
  Init init = Init::trivial;
  int threads = 1;  // restarts may run concurrently; the merge is ordered
};

struct SearchResult {
  Transversal2D transversal;
  double diameter = 0.0;
  int restart_index = 0;
};

// Seeded iterative improvement: sweep the interior indices round-robin and
// then at random, replacing each point by the best of a slate of
// nearest-point projections of perturbed positions at an annealed radius.
// Only strict improvements are accepted, so the diameter never increases.
// Best-found evidence only; no global optimality is claimed.
SearchResult local_search(const GridSequence2D& seq, NormKind kind,
                          const SearchConfig& cfg);

// Single run from an explicit starting transversal.
SearchResult local_search_from(const GridSequence2D& seq, NormKind kind,
                               const Transversal2D& initial, int iterations,
                               std::uint64_t seed);

// Minimizes the diameter with each interior point confined to one labeled
// box, which makes the objective convex: projected subgradient descent
// (step c/sqrt(k)) followed by a clamped pattern polish.
SearchResult assignment_search(const GridSequence2D& seq,
                               const std::vector<CompassLabel>& pattern,
                               NormKind kind, int iterations = 20000);

struct TriangleSolution {
  double diameter = 0.0;
  Vec2 z1{}, zj{}, zn{};
};

// Minimum diameter of a triangle z1, zj, zn subject to z1.y >= 1,
// zj.x >= 1 - delta, zj.y <= -1 + delta, zn.x <= -1: coarse grid over the
// boundary parameters, then local refinement over all six coordinates.
TriangleSolution min_triangle_diameter(double delta);

}  // namespace blockline
