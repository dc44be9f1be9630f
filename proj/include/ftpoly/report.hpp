#pragma once

// Pipelines behind the command-line subcommands and their rendered reports.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ftpoly/analysis.hpp"
#include "ftpoly/core.hpp"
#include "ftpoly/enumerate.hpp"

namespace ftpoly {

struct AnalyzeOptions {
  bool preprocess = false;
  std::size_t max_dim = kDefaultDimensionCap;
};

struct Report {
  std::vector<Element> raw;
  Element shift = 0;
  int added = 0;
  bool preprocessed = false;
  std::optional<ConstraintSystem> system;  // set by analyze
  PolytopeGraph graph;
  GraphMetrics metrics;
  std::vector<LemmaReport> lemmas;
  std::optional<PartitionCertificate> partition;

  const Instance& instance() const { return system->instance(); }
  const DerivedConstants& constants() const { return system->constants(); }
  std::size_t degenerate_count() const;
  std::map<std::size_t, std::size_t> degree_histogram() const;
  bool verifiers_ok() const;
};

/// translate -> optional oddify -> constants -> enumerate -> adjacency ->
/// metrics -> verifiers -> partition oracle.
Report analyze(const std::vector<Element>& raw, const AnalyzeOptions& opts);

/// Constraint system of the (translated, optionally oddified) instance.
ConstraintSystem prepare_system(const std::vector<Element>& raw, bool preprocess, Element* shift = nullptr,
                                int* added = nullptr);

nlohmann::ordered_json to_json(const Report& r);
std::string render_json(const Report& r);
std::string render_table(const Report& r);

struct SolveResult {
  std::vector<Element> elements;  // after translation
  Element shift = 0;
  std::optional<PartitionCertificate> certificate;
  IlpOptimum ilp;
  bool consistent = false;  // ILP2 optimum == m  <=>  certificate exists
};

SolveResult solve(const std::vector<Element>& raw);
std::string render_solve(const SolveResult& r);

struct CheckOptions {
  std::size_t count = 100;
  std::uint64_t seed = 7;
  std::vector<std::size_t> sizes{4, 6};
  Element max_element = 20;
};

struct CheckFailure {
  std::string check;
  std::vector<Element> instance;
  std::string detail;
};

struct CheckSummary {
  std::vector<std::string> checks;                          // column names
  std::map<std::size_t, std::vector<std::size_t>> ran;      // size -> per-check runs
  std::map<std::size_t, std::vector<std::size_t>> passed;   // size -> per-check passes
  std::vector<CheckFailure> failures;

  bool all_pass() const { return failures.empty(); }
};

/// Runs every verifier plus the cross-module checks on `count` generated
/// instances per size; odd-numbered instances carry planted partitions and
/// half-max elements. Deterministic for a fixed seed.
CheckSummary check_lemmas(const CheckOptions& opts);
std::string render_check(const CheckSummary& s);

}  // namespace ftpoly
