// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ftpoly/analysis.hpp"
#include "ftpoly/report.hpp"

using namespace ftpoly;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
};

// Vertex lists collected by criteria 3-6 for the invariant sweep.
struct Collected {
  Instance inst;
  std::vector<Vertex> vertices;
};
std::vector<Collected> g_collected;

void fail(Outcome& o, const std::string& why) {
  if (o.ok) o.note = why;
  o.ok = false;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<Vertex> enumerate_and_keep(const Instance& inst) {
  auto vs = enumerate_all(build_constraints(inst));
  g_collected.push_back({inst, vs});
  return vs;
}

std::string run_cli(const std::string& args, int& code) {
  std::string out;
  FILE* pipe = popen(("'" FTPOLY_CLI "' " + args).c_str(), "r");
  if (!pipe) {
    code = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Outcome counterexample() {
  Outcome o;
  const auto t0 = Clock::now();
  int code = 0;
  const std::string out = run_cli("analyze 3,3,4,2 --json", code);
  const double dt = seconds_since(t0);
  if (code != 0) {
    fail(o, "analyze exited with " + std::to_string(code));
    return o;
  }
  const auto j = nlohmann::json::parse(out);
  if (j["census"]["degenerate"] != 1) fail(o, "degenerate count is not 1");
  if (j["degenerate"].size() != 1) return o;
  const auto& d = j["degenerate"][0];
  if (d["coords"].get<std::vector<std::string>>() != std::vector<std::string>{"1", "1", "0", "1/390"}) fail(o, "coordinates differ");
  auto active = d["active"].get<std::vector<std::string>>();
  std::sort(active.begin(), active.end());
  std::vector<std::string> want{"K1", "K2", "x1<=1", "x2<=1", "x3>=0"};
  std::sort(want.begin(), want.end());
  if (active != want) fail(o, "active set differs");
  if (d["degree"] != 6) fail(o, "degree is not 6");
  if (dt >= 1.0) fail(o, "runtime " + std::to_string(dt) + " s");
  o.note = o.ok ? "v* = (1, 1, 0, 1/390), 5 active, degree 6" : o.note;
  return o;
}

Outcome censuses() {
  Outcome o;
  auto t0 = Clock::now();
  const Report a = analyze({3, 3, 4, 2}, {});
  if (seconds_since(t0) >= 1.0) fail(o, "{3,3,4,2} too slow");
  if (a.graph.vertices.size() != 23) fail(o, "{3,3,4,2} has " + std::to_string(a.graph.vertices.size()));
  t0 = Clock::now();
  const Report b = analyze({2, 2, 3, 1}, {});
  if (seconds_since(t0) >= 1.0) fail(o, "{2,2,3,1} too slow");
  if (b.graph.vertices.size() != 24) fail(o, "{2,2,3,1} has " + std::to_string(b.graph.vertices.size()));
  if (b.degenerate_count() != 0) fail(o, "{2,2,3,1} has degenerate vertices");
  for (std::size_t deg : b.graph.degrees) {
    if (deg != 4) fail(o, "{2,2,3,1} has a vertex of degree " + std::to_string(deg));
  }
  if (o.ok) o.note = "23 and 24 vertices, second polytope simple";
  return o;
}

Outcome preprocessing() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20260301);
  const std::size_t sizes[] = {4, 6, 8};
  for (int k = 0; k < 500; ++k) {
    const Instance raw = random_instance(rng, sizes[k % 3], 1, 20);
    const Instance odd = oddify(raw).instance;
    const auto vs = enumerate_and_keep(odd);
    if (std::any_of(vs.begin(), vs.end(), [](const Vertex& v) { return v.degenerate; }))
      fail(o, "degenerate vertex after oddify on " + raw.str());
    if (exact_partition_oracle(raw).has_value() != exact_partition_oracle(odd).has_value())
      fail(o, "verdict changed on " + raw.str());
  }
  const double dt = seconds_since(t0);
  if (dt >= 120.0) fail(o, "runtime " + std::to_string(dt) + " s");
  if (o.ok) o.note = "500 instances in " + std::to_string(dt).substr(0, 5) + " s";
  return o;
}

Outcome degenerate_count_formula() {
  Outcome o;
  std::mt19937_64 rng(20260302);
  std::size_t total = 0;
  for (int k = 0; k < 200; ++k) {
    const Instance inst = planted_instance(rng, k % 2 == 0 ? 4 : 6, 20);
    const auto cs = build_constraints(inst);
    const auto vs = enumerate_and_keep(inst);
    const std::size_t census =
        static_cast<std::size_t>(std::count_if(vs.begin(), vs.end(), [](const Vertex& v) { return v.degenerate; }));
    if (predict_degenerate_count(inst) != census) fail(o, "count mismatch on " + inst.str());
    for (const auto& site : predicted_degenerate_sites(inst)) {
      const Vertex v = construct_degenerate_vertex(inst, site.subset, site.index);
      const bool present =
          std::any_of(vs.begin(), vs.end(), [&](const Vertex& w) { return w.coords == v.coords; });
      if (!present) fail(o, "constructed vertex missing on " + inst.str());
      if (cs.slack(cs.k1(), v.coords) != 0 || cs.slack(cs.k2(), v.coords) != 0)
        fail(o, "knapsack slack nonzero on " + inst.str());
    }
    total += census;
  }
  if (o.ok) o.note = "200 planted instances, " + std::to_string(total) + " degenerate vertices matched";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t instances = 0;
  for (Element a = 1; a <= 6; ++a)
    for (Element b = 1; b <= 6; ++b)
      for (Element c = 1; c <= 6; ++c)
        for (Element d = 1; d <= 6; ++d) {
          const Instance inst({a, b, c, d});
          const auto cs = build_constraints(inst);
          const auto vs = enumerate_and_keep(inst);
          std::vector<Point> got;
          got.reserve(vs.size());
          for (const auto& v : vs) got.push_back(v.coords);
          if (got != oracle_enumerate_basis(cs)) fail(o, "vertex sets differ on " + inst.str());
          ++instances;
        }
  const double dt = seconds_since(t0);
  if (instances != 1296) fail(o, "swept " + std::to_string(instances) + " instances");
  if (dt >= 300.0) fail(o, "runtime " + std::to_string(dt) + " s");
  if (o.ok) o.note = "1296 instances in " + std::to_string(dt).substr(0, 5) + " s";
  return o;
}

Outcome formulation() {
  Outcome o;
  std::mt19937_64 rng(20260303);
  std::size_t yes = 0;
  for (int k = 0; k < 1000; ++k) {
    const Instance inst = random_instance(rng, 2 * (1 + k % 3), 1, 10);
    const bool has = exact_partition_oracle(inst).has_value();
    if ((ilp2_bruteforce(inst).optimum == inst.half()) != has) fail(o, "mismatch on " + inst.str());
    yes += has;
    enumerate_and_keep(inst);
  }
  if (o.ok) o.note = "1000 instances, " + std::to_string(yes) + " YES";
  return o;
}

Outcome invariants() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [inst, vs] : g_collected) {
    const auto cs = build_constraints(inst);
    const std::size_t m = inst.half();
    const Rational& eps = cs.constants().epsilon;
    for (const auto& v : vs) {
      ++checked;
      if (v.cls != VertexClass::V0 && v.i1.size() + 1 < m) fail(o, "|I1| < m-1 on " + inst.str());
      if (v.degenerate && v.i1.size() + 1 == m) fail(o, "degenerate with |I1| = m-1 on " + inst.str());
      if (v.cls == VertexClass::V0 && v.i1.size() == m) {
        if (v.alpha != 0) fail(o, "V0 with |I1| = m has alpha != 0 on " + inst.str());
        if (cs.slack(cs.k1(), v.coords) != eps || cs.slack(cs.k2(), v.coords) != eps)
          fail(o, "slack is not epsilon on " + inst.str());
      }
    }
  }
  if (g_collected.empty()) fail(o, "no vertices collected");
  if (o.ok) o.note = std::to_string(checked) + " vertices over " + std::to_string(g_collected.size()) + " instances";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"counterexample reproduction", counterexample},
      {"vertex censuses", censuses},
      {"preprocessing removes degeneracy", preprocessing},
      {"degenerate count formula", degenerate_count_formula},
      {"basis oracle equivalence", oracle_equivalence},
      {"ILP2 formulation soundness", formulation},
      {"structural invariants", invariants},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %d. %s: %s\n", o.ok ? "PASS" : "FAIL", n, name, o.note.c_str());
    failed += !o.ok;
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
