#pragma once

// Brute-force oracles, closed-form degenerate-vertex construction, and
// verifiers for the structural facts about P_R's vertices.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ftpoly/core.hpp"
#include "ftpoly/enumerate.hpp"

namespace ftpoly {

inline constexpr std::size_t kPartitionOracleCap = 24;
inline constexpr std::size_t kIlpOracleCap = 20;
inline constexpr std::size_t kBasisOracleCap = 6;

struct PartitionCertificate {
  std::vector<std::size_t> subset;  // 0-based, sorted, size m
  Element sum_left = 0;
  Element sum_right = 0;
};

/// Exhaustive search over m-subsets in lexicographic index order.
/// Throws ScaleCap when 2m > 24.
std::optional<PartitionCertificate> exact_partition_oracle(const Instance& inst);

struct IlpOptimum {
  std::size_t optimum = 0;
  Point argmax;  // feasible 0/1 point with the lexicographically smallest I_1
};

/// Scans all 0/1 points of the ILP2 formulation. Throws ScaleCap when 2m > 20.
IlpOptimum ilp2_bruteforce(const Instance& inst);

/// The V1 point with ones on `subset`, 2 eps / (2M + s_max) at `index`, zeros
/// elsewhere. Throws NotAPartition, IndexInSubset or NotHalfMax.
Vertex construct_degenerate_vertex(const Instance& inst, const std::vector<std::size_t>& subset, std::size_t index);

struct DegenerateSite {
  std::vector<std::size_t> subset;
  std::size_t index;
};

/// Every (valid m-subset, half-max index outside it) pair. Throws ScaleCap.
std::vector<DegenerateSite> predicted_degenerate_sites(const Instance& inst);

std::size_t predict_degenerate_count(const Instance& inst);

enum class LemmaStatus { Holds, Violated, NotApplicable };

const char* to_string(LemmaStatus s) noexcept;

struct LemmaReport {
  std::string id;
  std::vector<Element> instance;
  LemmaStatus status = LemmaStatus::Holds;
  std::vector<Point> witnesses;
  std::string detail;

  bool holds() const { return witnesses.empty(); }
};

LemmaReport verify_simplicity_lemma(const Instance& inst, const std::vector<Vertex>& vertices);
LemmaReport verify_m_minus_1_lemma(const Instance& inst, const std::vector<Vertex>& vertices);
LemmaReport verify_v0_partition_lemma(const Instance& inst, const std::vector<Vertex>& vertices);
LemmaReport verify_slack_observation(const Instance& inst, const std::vector<Vertex>& vertices);
LemmaReport verify_theorem(const Instance& inst, const std::vector<Vertex>& vertices);

/// m-1 <= |I_1| for fractional vertices and |I_1| <= m for all vertices.
LemmaReport verify_support_bounds(const Instance& inst, const std::vector<Vertex>& vertices);

/// All verifiers above, in a fixed order.
std::vector<LemmaReport> verify_all(const Instance& inst, const std::vector<Vertex>& vertices);

/// Ground-truth vertex set: solves every 2m-subset of the 4m+2 rows by exact
/// Gaussian elimination and keeps feasible solutions. Sorted, unique.
/// Throws ScaleCap when 2m > 6.
std::vector<Point> oracle_enumerate_basis(const ConstraintSystem& cs);

/// Rank of a rational matrix given as rows.
std::size_t exact_rank(std::vector<std::vector<Rational>> rows);

/// Unique solution of a square system, or nullopt when singular.
std::optional<Point> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

/// Uniform elements in [lo, hi].
Instance random_instance(std::mt19937_64& rng, std::size_t size, Element lo, Element hi);

/// Instance with a planted exact partition and, for size >= 4, at least one
/// planted half-max element: m-1 sampled values are mirrored into both halves,
/// then a pair s_max/2 is appended and everything is shuffled.
Instance planted_instance(std::mt19937_64& rng, std::size_t size, Element hi);

}  // namespace ftpoly
