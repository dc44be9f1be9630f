#pragma once

// Exact Partition instances, the derived ILP2 constants, and the halfspace
// system of the LP relaxation P_R (the unit 2m-cube cut by two knapsack rows).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ftpoly/rational.hpp"

namespace ftpoly {

using Element = std::int64_t;

/// Elements are bounded so that S, M and every knapsack coefficient fit in
/// an Element without overflow.
inline constexpr Element kMaxAbsElement = Element{1} << 40;

/// Ordered multiset s_1..s_{2m}. Indices, not values, identify elements.
class Instance {
 public:
  /// Throws Empty, OddCount or OutOfRange.
  explicit Instance(std::vector<Element> elements);

  std::span<const Element> elements() const { return elements_; }
  Element operator[](std::size_t i) const { return elements_[i]; }
  std::size_t size() const { return elements_.size(); }
  std::size_t half() const { return elements_.size() / 2; }

  Element min() const;
  Element max() const;
  Element sum() const;
  bool positive() const { return min() >= 1; }

  std::string str() const;  // "{3,3,4,2}"

  bool operator==(const Instance&) const = default;

 private:
  std::vector<Element> elements_;
};

struct Translated {
  Instance instance;
  Element shift;
};

/// Adds shift = 1 - min to every element when min <= 0; identity otherwise.
Translated translate_positive(const Instance& inst);

struct Oddified {
  Instance instance;
  int added;  // 0 or 1
};

/// Adds one to every element when s_max is even so that no element can equal
/// s_max / 2. Requires a positive instance (NotPositive otherwise).
Oddified oddify(const Instance& inst);

struct DerivedConstants {
  Element total;  // S
  Element s_max;
  Element big_m;  // M = S + 1
  Rational epsilon;
  std::vector<Element> d;  // d_i = s_max - s_i
  Rational k1_rhs;         // S/2 + mM + eps
  Rational k2_rhs;         // (sum d)/2 + mM + eps

  Element sum_d() const;
};

/// Requires a positive instance.
DerivedConstants derive_constants(const Instance& inst);

enum class ConstraintKind { LowerBound, UpperBound, K1, K2 };

/// One row coeffs . x <= rhs. Lower bounds are stored as -x_i <= 0.
struct Halfspace {
  ConstraintKind kind;
  std::size_t index;  // coordinate for box rows, 0 for knapsack rows
  std::vector<Rational> coeffs;
  Rational rhs;

  bool operator==(const Halfspace&) const = default;
};

/// Position of a row in the canonical order
/// LowerBound(0..n-1), UpperBound(0..n-1), K1, K2.
using ConstraintId = std::size_t;

/// Hard ceiling on 2m imposed by the 64-bit active-set representation.
inline constexpr std::size_t kMaxSupportedDimension = 30;

/// Set of constraint ids packed into one word.
class ConstraintMask {
 public:
  constexpr ConstraintMask() = default;
  constexpr explicit ConstraintMask(std::uint64_t bits) : bits_(bits) {}

  void insert(ConstraintId id) { bits_ |= std::uint64_t{1} << id; }
  bool contains(ConstraintId id) const { return (bits_ >> id) & 1U; }
  std::size_t count() const;
  std::uint64_t bits() const { return bits_; }
  std::vector<ConstraintId> ids() const;

  ConstraintMask operator&(ConstraintMask o) const { return ConstraintMask(bits_ & o.bits_); }
  bool includes(ConstraintMask o) const { return (bits_ & o.bits_) == o.bits_; }
  bool operator==(const ConstraintMask&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

class ConstraintSystem {
 public:
  /// Rows built from the instance in canonical order.
  ConstraintSystem(Instance inst, DerivedConstants consts);

  std::size_t dimension() const { return instance_.size(); }
  std::size_t size() const { return rows_.size(); }
  std::span<const Halfspace> rows() const { return rows_; }
  const Halfspace& row(ConstraintId id) const { return rows_.at(id); }

  ConstraintId lower(std::size_t i) const { return i; }
  ConstraintId upper(std::size_t i) const { return dimension() + i; }
  ConstraintId k1() const { return 2 * dimension(); }
  ConstraintId k2() const { return 2 * dimension() + 1; }

  const Instance& instance() const { return instance_; }
  const DerivedConstants& constants() const { return consts_; }

  /// "x1>=0", "x1<=1", "K1", "K2" (1-based coordinates).
  std::string label(ConstraintId id) const;

  /// rhs - coeffs . p; negative means violated, zero means active.
  /// Throws DimensionMismatch.
  Rational slack(ConstraintId id, std::span<const Rational> p) const;
  bool is_feasible(std::span<const Rational> p) const;
  ConstraintMask active_set(std::span<const Rational> p) const;

 private:
  void check_dimension(std::span<const Rational> p) const;

  Instance instance_;
  DerivedConstants consts_;
  std::vector<Halfspace> rows_;
};

ConstraintSystem build_constraints(const Instance& inst, const DerivedConstants& consts);

/// Convenience: derive_constants + build_constraints.
ConstraintSystem build_constraints(const Instance& inst);

}  // namespace ftpoly
