#include "doctest.h"

#include <random>

#include "ftpoly/analysis.hpp"
#include "ftpoly/core.hpp"
#include "ftpoly/error.hpp"

using namespace ftpoly;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ftpoly::Error");
  return ErrorCode::Io;
}

Point pt(std::initializer_list<Rational> xs) { return Point(xs); }

}  // namespace

TEST_CASE("new_instance validates the element count") {
  Instance a({3, 3, 4, 2});
  CHECK(a.size() == 4);
  CHECK(a.half() == 2);

  Instance b({1, 1});
  CHECK(b.size() == 2);
  CHECK(b.half() == 1);

  CHECK(code_of([] { Instance({3, 3, 4}); }) == ErrorCode::OddCount);
  CHECK(code_of([] { Instance(std::vector<Element>{}); }) == ErrorCode::Empty);
  CHECK(code_of([] { Instance({kMaxAbsElement + 1, 1}); }) == ErrorCode::OutOfRange);
}

TEST_CASE("new_instance does not translate") {
  Instance a({0, -2, 5, 1});
  CHECK(a.min() == -2);
  CHECK_FALSE(a.positive());
}

TEST_CASE("translate_positive") {
  auto same = translate_positive(Instance({3, 3, 4, 2}));
  CHECK(same.shift == 0);
  CHECK(same.instance == Instance({3, 3, 4, 2}));

  auto moved = translate_positive(Instance({0, -2, 5, 1}));
  CHECK(moved.shift == 3);
  CHECK(moved.instance == Instance({3, 1, 8, 4}));

  auto ones = translate_positive(Instance({-1, -1}));
  CHECK(ones.shift == 2);
  CHECK(ones.instance == Instance({1, 1}));
}

TEST_CASE("oddify") {
  auto a = oddify(Instance({3, 3, 4, 2}));
  CHECK(a.added == 1);
  CHECK(a.instance == Instance({4, 4, 5, 3}));

  auto b = oddify(Instance({2, 2, 3, 1}));
  CHECK(b.added == 0);
  CHECK(b.instance == Instance({2, 2, 3, 1}));

  auto c = oddify(Instance({1, 1}));
  CHECK(c.added == 0);
  CHECK(c.instance == Instance({1, 1}));

  CHECK(code_of([] { oddify(Instance({0, 2})); }) == ErrorCode::NotPositive);
}

TEST_CASE("derive_constants") {
  SUBCASE("{3,3,4,2}") {
    auto c = derive_constants(Instance({3, 3, 4, 2}));
    CHECK(c.total == 12);
    CHECK(c.s_max == 4);
    CHECK(c.big_m == 13);
    CHECK(c.epsilon == Rational(1, 26));
    CHECK(c.d == std::vector<Element>{1, 1, 0, 2});
    CHECK(c.k1_rhs == 32 + Rational(1, 26));
    CHECK(c.k2_rhs == 28 + Rational(1, 26));
    // The quoted degenerate coordinate 1/390 equals 2 eps / (2M + s_max).
    CHECK(2 * c.epsilon / (2 * 13 + 4) == Rational(1, 390));
  }
  SUBCASE("{2,2,3,1}") {
    auto c = derive_constants(Instance({2, 2, 3, 1}));
    CHECK(c.total == 8);
    CHECK(c.s_max == 3);
    CHECK(c.big_m == 9);
    CHECK(c.epsilon == Rational(1, 18));
    CHECK(c.d == std::vector<Element>{1, 1, 0, 2});
  }
  SUBCASE("{1,1}") {
    auto c = derive_constants(Instance({1, 1}));
    CHECK(c.total == 2);
    CHECK(c.s_max == 1);
    CHECK(c.big_m == 3);
    CHECK(c.epsilon == Rational(1, 6));
    CHECK(c.d == std::vector<Element>{0, 0});
  }
}

TEST_CASE("build_constraints: canonical order and knapsack rows") {
  auto cs = build_constraints(Instance({3, 3, 4, 2}));
  REQUIRE(cs.size() == 10);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(cs.row(cs.lower(i)).kind == ConstraintKind::LowerBound);
    CHECK(cs.row(cs.upper(i)).kind == ConstraintKind::UpperBound);
    CHECK(cs.row(cs.lower(i)).index == i);
  }
  CHECK(cs.row(cs.k1()).coeffs == std::vector<Rational>{16, 16, 17, 15});
  CHECK(cs.row(cs.k1()).rhs == 32 + Rational(1, 26));
  CHECK(cs.row(cs.k2()).coeffs == std::vector<Rational>{14, 14, 13, 15});
  CHECK(cs.row(cs.k2()).rhs == 28 + Rational(1, 26));
  CHECK(cs.label(cs.lower(2)) == "x3>=0");
  CHECK(cs.label(cs.upper(0)) == "x1<=1");

  auto small = build_constraints(Instance({1, 1}));
  CHECK(small.size() == 6);
  CHECK(small.row(small.k2()).coeffs == std::vector<Rational>{3, 3});
  CHECK(small.row(small.k2()).rhs == 3 + Rational(1, 6));
}

TEST_CASE("slack and feasibility") {
  auto cs = build_constraints(Instance({3, 3, 4, 2}));
  const Point degenerate = pt({1, 1, 0, Rational(1, 390)});
  CHECK(cs.slack(cs.k1(), degenerate) == 0);
  CHECK(cs.slack(cs.k2(), degenerate) == 0);
  CHECK(cs.is_feasible(degenerate));

  const Point partition = pt({1, 1, 0, 0});
  CHECK(cs.slack(cs.k1(), partition) == Rational(1, 26));

  const Point origin(4, Rational(0));
  for (std::size_t i = 0; i < 4; ++i) CHECK(cs.slack(cs.lower(i), origin) == 0);
  CHECK(cs.is_feasible(origin));
  CHECK_FALSE(cs.is_feasible(pt({1, 1, 1, 1})));

  CHECK(code_of([&] { cs.slack(cs.k1(), pt({1, 1})); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { cs.is_feasible(pt({1})); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("property: constants identities on random positive instances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t size = 2 * (1 + trial % 5);
    const Instance inst = random_instance(rng, size, 1, 50);
    const auto c = derive_constants(inst);
    CHECK(c.big_m == c.total + 1);
    CHECK(c.epsilon == Rational(1, 2 * c.big_m));
    CHECK(c.epsilon > 0);
    CHECK(c.epsilon < Rational(1, 2));
    CHECK(c.sum_d() == static_cast<Element>(size) * c.s_max - c.total);
    CHECK(c.k2_rhs - c.k1_rhs == rational(c.sum_d() - c.total, 2));
    for (std::size_t i = 0; i < size; ++i) {
      CHECK(c.d[i] >= 0);
      CHECK((c.d[i] == 0) == (inst[i] == c.s_max));
    }
  }
}

TEST_CASE("property: oddify yields odd s_max and is idempotent") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = random_instance(rng, 2 * (1 + trial % 4), 1, 30);
    const auto once = oddify(inst);
    CHECK(once.instance.max() % 2 == 1);
    const auto twice = oddify(once.instance);
    CHECK(twice.added == 0);
    CHECK(twice.instance == once.instance);
  }
}

TEST_CASE("property: transforms preserve the exact-partition answer") {
  // Exhaustive over a sampled grid: 2m <= 8, |s_i| <= 6.
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t size = 2 * (1 + trial % 4);
    const Instance raw = random_instance(rng, size, -6, 6);
    const bool before = exact_partition_oracle(raw).has_value();
    const auto t = translate_positive(raw);
    CHECK(t.instance.positive());
    CHECK(t.instance.min() == (raw.min() >= 1 ? raw.min() : 1));
    CHECK(exact_partition_oracle(t.instance).has_value() == before);
    CHECK(exact_partition_oracle(oddify(t.instance).instance).has_value() == before);
  }
}

TEST_CASE("property: no 0/1 point is active on a knapsack row") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t size = 2 * (1 + trial % 4);
    const auto cs = build_constraints(random_instance(rng, size, 1, 12));
    Point p(size);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
      for (std::size_t i = 0; i < size; ++i) p[i] = (mask >> i) & 1U;
      CHECK(cs.slack(cs.k1(), p) != 0);
      CHECK(cs.slack(cs.k2(), p) != 0);
    }
  }
}

TEST_CASE("rational text round trip") {
  Rational r;
  CHECK(parse_rational("833/26", r));
  CHECK(r == 32 + Rational(1, 26));
  CHECK(to_string(r) == "833/26");
  CHECK(parse_rational("-4/2", r));
  CHECK(to_string(r) == "-2");
  CHECK_FALSE(parse_rational("1/0", r));
  CHECK_FALSE(parse_rational("1/", r));
  CHECK_FALSE(parse_rational("x", r));
  CHECK_FALSE(parse_rational("2.5", r));
}
