#pragma once

// Test-only oracles, independent of the enumeration code paths they check.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "ftpoly/analysis.hpp"
#include "ftpoly/enumerate.hpp"

namespace ftpoly::testing {

/// Every feasible 0/1 point, found by evaluating each of the 2^{2m} points.
inline std::vector<Point> brute_force_v0(const ConstraintSystem& cs) {
  const std::size_t n = cs.dimension();
  std::vector<Point> out;
  Point p(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i) & 1U;
    if (cs.is_feasible(p)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Rank of the coefficient rows active at v.
inline std::size_t active_rank(const ConstraintSystem& cs, const Vertex& v) {
  std::vector<std::vector<Rational>> rows;
  for (ConstraintId id : v.active.ids()) rows.push_back(cs.row(id).coeffs);
  return exact_rank(std::move(rows));
}

/// All-pairs shortest paths by Floyd-Warshall.
inline GraphMetrics floyd_warshall(const PolytopeGraph& g) {
  const std::size_t n = g.vertices.size();
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, w] : g.edges) d[u][w] = d[w][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  GraphMetrics out;
  out.eccentricities.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    out.eccentricities[i] = *std::max_element(d[i].begin(), d[i].end());
    out.diameter = std::max(out.diameter, out.eccentricities[i]);
  }
  return out;
}

}  // namespace ftpoly::testing
