#pragma once

// Vertex enumeration of P_R by fractional-pattern structure: every vertex has
// at most two fractional coordinates, so candidates are 0/1 patterns with
// zero, one or two free coordinates solved against the tight knapsack rows.

#include <cstddef>
#include <utility>
#include <vector>

#include "ftpoly/core.hpp"

namespace ftpoly {

enum class VertexClass { V0, V1, V2 };

const char* to_string(VertexClass c) noexcept;

struct Vertex {
  Point coords;
  ConstraintMask active;
  VertexClass cls = VertexClass::V0;
  std::vector<std::size_t> i1;  // x_i = 1
  std::vector<std::size_t> i0;  // x_i = 0
  std::vector<std::size_t> if_; // 0 < x_i < 1
  Rational alpha;               // S/2 - sum_{i in I_1} s_i
  bool degenerate = false;      // |active| > 2m

  /// I*(v) = I_1 u I_f, sorted.
  std::vector<std::size_t> support() const;
};

/// Fills active set, class, index sets, alpha and the degeneracy flag of a
/// feasible point. Does not check vertexhood.
Vertex make_vertex(const ConstraintSystem& cs, Point coords);

inline constexpr std::size_t kDefaultDimensionCap = 16;

std::vector<Vertex> enumerate_v0(const ConstraintSystem& cs);
std::vector<Vertex> enumerate_v1(const ConstraintSystem& cs);
std::vector<Vertex> enumerate_v2(const ConstraintSystem& cs);

/// Union of the three classes, deduplicated, in lexicographic coordinate
/// order. Throws DimensionCap when 2m > cap.
std::vector<Vertex> enumerate_all(const ConstraintSystem& cs, std::size_t cap = kDefaultDimensionCap);

struct PolytopeGraph {
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < w, sorted
  std::vector<std::vector<std::size_t>> neighbors;
  std::vector<std::size_t> degrees;
};

/// Two vertices are adjacent iff they are the only vertices active on every
/// constraint they share. Requires the complete vertex set.
PolytopeGraph build_adjacency(std::vector<Vertex> vertices, const ConstraintSystem& cs);

struct GraphMetrics {
  std::size_t diameter = 0;
  std::vector<std::size_t> eccentricities;
};

/// BFS from every vertex. Throws Disconnected.
GraphMetrics graph_metrics(const PolytopeGraph& g);

}  // namespace ftpoly
