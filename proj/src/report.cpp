#include "ftpoly/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "ftpoly/error.hpp"

namespace ftpoly {

using nlohmann::ordered_json;

std::size_t Report::degenerate_count() const {
  return static_cast<std::size_t>(
      std::count_if(graph.vertices.begin(), graph.vertices.end(), [](const Vertex& v) { return v.degenerate; }));
}

std::map<std::size_t, std::size_t> Report::degree_histogram() const {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t d : graph.degrees) ++h[d];
  return h;
}

bool Report::verifiers_ok() const {
  return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaReport& l) { return l.holds(); });
}

ConstraintSystem prepare_system(const std::vector<Element>& raw, bool preprocess, Element* shift, int* added) {
  Translated t = translate_positive(Instance(raw));
  int plus = 0;
  Instance inst = t.instance;
  if (preprocess) {
    Oddified o = oddify(inst);
    inst = o.instance;
    plus = o.added;
  }
  if (shift) *shift = t.shift;
  if (added) *added = plus;
  return build_constraints(inst);
}

Report analyze(const std::vector<Element>& raw, const AnalyzeOptions& opts) {
  Report r;
  r.raw = raw;
  r.preprocessed = opts.preprocess;
  Instance checked(raw);
  if (checked.size() > opts.max_dim)
    throw Error(ErrorCode::DimensionCap, "dimension 2m = " + std::to_string(checked.size()) +
                                             " exceeds the cap " + std::to_string(opts.max_dim));
  r.system = prepare_system(raw, opts.preprocess, &r.shift, &r.added);
  const ConstraintSystem& cs = *r.system;
  r.graph = build_adjacency(enumerate_all(cs, opts.max_dim), cs);
  r.metrics = graph_metrics(r.graph);
  r.lemmas = verify_all(cs.instance(), r.graph.vertices);
  r.partition = exact_partition_oracle(cs.instance());
  return r;
}

namespace {

ordered_json labels(const ConstraintSystem& cs, ConstraintMask mask) {
  ordered_json out = ordered_json::array();
  for (ConstraintId id : mask.ids()) out.push_back(cs.label(id));
  return out;
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> out;
  for (std::size_t i : idx) out.push_back(i + 1);
  return out;
}

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + to_string(p[i]);
  return s + ")";
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

}  // namespace

ordered_json to_json(const Report& r) {
  const ConstraintSystem& cs = *r.system;
  const DerivedConstants& c = r.constants();
  const auto& vs = r.graph.vertices;

  ordered_json j;
  j["input"] = r.raw;
  j["transforms"] = {{"shift", r.shift}, {"added", r.added}, {"preprocess", r.preprocessed}};
  j["instance"] = std::vector<Element>(r.instance().elements().begin(), r.instance().elements().end());
  j["constants"] = {{"S", c.total},
                    {"s_max", c.s_max},
                    {"M", c.big_m},
                    {"epsilon", to_string(c.epsilon)},
                    {"d", c.d},
                    {"k1_rhs", to_string(c.k1_rhs)},
                    {"k2_rhs", to_string(c.k2_rhs)}};

  std::size_t per_class[3] = {0, 0, 0};
  for (const auto& v : vs) ++per_class[static_cast<int>(v.cls)];
  j["census"] = {{"vertices", vs.size()}, {"V0", per_class[0]},        {"V1", per_class[1]},
                 {"V2", per_class[2]},    {"degenerate", r.degenerate_count()}, {"edges", r.graph.edges.size()}};

  ordered_json degenerate = ordered_json::array();
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (!vs[k].degenerate) continue;
    degenerate.push_back({{"id", k},
                          {"coords", to_strings(vs[k].coords)},
                          {"active", labels(cs, vs[k].active)},
                          {"degree", r.graph.degrees[k]}});
  }
  j["degenerate"] = std::move(degenerate);

  ordered_json hist = ordered_json::object();
  for (auto [deg, n] : r.degree_histogram()) hist[std::to_string(deg)] = n;
  j["degree_histogram"] = std::move(hist);
  j["diameter"] = r.metrics.diameter;

  ordered_json vertices = ordered_json::array();
  for (std::size_t k = 0; k < vs.size(); ++k) {
    const Vertex& v = vs[k];
    vertices.push_back({{"id", k},
                        {"coords", to_strings(v.coords)},
                        {"class", to_string(v.cls)},
                        {"I1", one_based(v.i1)},
                        {"If", one_based(v.if_)},
                        {"alpha", to_string(v.alpha)},
                        {"active", labels(cs, v.active)},
                        {"degenerate", v.degenerate},
                        {"degree", r.graph.degrees[k]},
                        {"eccentricity", r.metrics.eccentricities[k]}});
  }
  j["vertices"] = std::move(vertices);

  ordered_json edges = ordered_json::array();
  for (auto [u, w] : r.graph.edges) edges.push_back({u, w});
  j["edges"] = std::move(edges);

  ordered_json lemmas = ordered_json::array();
  for (const auto& l : r.lemmas) {
    ordered_json wit = ordered_json::array();
    for (const auto& p : l.witnesses) wit.push_back(to_strings(p));
    lemmas.push_back({{"id", l.id}, {"status", to_string(l.status)}, {"detail", l.detail}, {"witnesses", wit}});
  }
  j["lemmas"] = std::move(lemmas);

  if (r.partition) {
    j["partition"] = {{"exists", true},
                      {"subset", one_based(r.partition->subset)},
                      {"sum_left", r.partition->sum_left},
                      {"sum_right", r.partition->sum_right}};
  } else {
    j["partition"] = {{"exists", false}};
  }
  j["verifiers_ok"] = r.verifiers_ok();
  return j;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string render_table(const Report& r) {
  const ConstraintSystem& cs = *r.system;
  const DerivedConstants& c = r.constants();
  const auto& vs = r.graph.vertices;
  std::ostringstream os;
  Instance raw(r.raw);
  os << "input      " << raw.str() << "\n";
  os << "instance   " << r.instance().str() << "  (shift " << r.shift << ", added " << r.added
     << (r.preprocessed ? ", preprocessed" : "") << ")\n";
  os << "constants  S=" << c.total << " s_max=" << c.s_max << " M=" << c.big_m << " eps=" << to_string(c.epsilon)
     << " K1<=" << to_string(c.k1_rhs) << " K2<=" << to_string(c.k2_rhs) << "\n";

  std::size_t per_class[3] = {0, 0, 0};
  for (const auto& v : vs) ++per_class[static_cast<int>(v.cls)];
  os << "vertices   " << vs.size() << "  (V0 " << per_class[0] << ", V1 " << per_class[1] << ", V2 " << per_class[2]
     << ")  edges " << r.graph.edges.size() << "  diameter " << r.metrics.diameter << "\n";
  os << "degrees   ";
  for (auto [deg, n] : r.degree_histogram()) os << ' ' << deg << "x" << n;
  os << "\ndegenerate " << r.degenerate_count() << "\n";
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (!vs[k].degenerate) continue;
    os << "  v" << k << ' ' << point_str(vs[k].coords) << "  degree " << r.graph.degrees[k] << "  active";
    for (ConstraintId id : vs[k].active.ids()) os << ' ' << cs.label(id);
    os << "\n";
  }

  os << "\n  id  class  ecc  deg  coords\n";
  for (std::size_t k = 0; k < vs.size(); ++k) {
    os << std::setw(4) << k << "  " << std::setw(5) << to_string(vs[k].cls) << std::setw(5)
       << r.metrics.eccentricities[k] << std::setw(5) << r.graph.degrees[k] << "  " << point_str(vs[k].coords)
       << (vs[k].degenerate ? "  *" : "") << "\n";
  }

  os << "\nchecks\n";
  for (const auto& l : r.lemmas) {
    os << "  " << std::left << std::setw(26) << l.id << std::setw(15) << to_string(l.status) << std::right << l.detail
       << "\n";
    for (const auto& w : l.witnesses) os << "    witness " << point_str(w) << "\n";
  }
  if (r.partition) {
    os << "partition  yes, subset " << join(one_based(r.partition->subset)) << " (" << r.partition->sum_left << " | "
       << r.partition->sum_right << ")\n";
  } else {
    os << "partition  no\n";
  }
  return os.str();
}

SolveResult solve(const std::vector<Element>& raw) {
  Instance inst(raw);
  SolveResult out;
  Translated t = translate_positive(inst);
  out.elements.assign(t.instance.elements().begin(), t.instance.elements().end());
  out.shift = t.shift;
  out.certificate = exact_partition_oracle(inst);
  out.ilp = ilp2_bruteforce(t.instance);
  out.consistent = (out.ilp.optimum == inst.half()) == out.certificate.has_value();
  return out;
}

std::string render_solve(const SolveResult& r) {
  std::ostringstream os;
  if (r.certificate) {
    os << "YES exact partition, subset " << join(one_based(r.certificate->subset)) << " (" << r.certificate->sum_left
       << " | " << r.certificate->sum_right << ")\n";
  } else {
    os << "NO exact partition\n";
  }
  os << "ILP2 optimum " << r.ilp.optimum << " at " << point_str(r.ilp.argmax) << "\n";
  if (r.shift != 0) os << "(elements shifted by " << r.shift << " before building ILP2)\n";
  if (!r.consistent) os << "INCONSISTENT: ILP2 optimum disagrees with the partition oracle\n";
  return os.str();
}

namespace {

const std::vector<std::string> kCheckNames = {
    "simplicity",        "m-1-not-degenerate", "v0-encodes-partition",       "knapsack-slack-epsilon",
    "degenerate-construction", "support-bounds", "degenerate-count",          "oddify-nondegenerate",
    "oddify-keeps-verdict",    "ilp2-iff-partition", "oracle-equivalence"};

}  // namespace

CheckSummary check_lemmas(const CheckOptions& opts) {
  CheckSummary s;
  s.checks = kCheckNames;
  std::mt19937_64 rng(opts.seed);
  for (std::size_t size : opts.sizes) {
    auto& ran = s.ran[size];
    auto& passed = s.passed[size];
    ran.assign(kCheckNames.size(), 0);
    passed.assign(kCheckNames.size(), 0);
    for (std::size_t k = 0; k < opts.count; ++k) {
      const Instance inst =
          k % 2 == 0 ? random_instance(rng, size, 1, opts.max_element) : planted_instance(rng, size, opts.max_element);
      auto record = [&](std::size_t check, bool ok, const std::string& detail) {
        ++ran[check];
        if (ok) {
          ++passed[check];
        } else {
          s.failures.push_back({kCheckNames[check], std::vector<Element>(inst.elements().begin(), inst.elements().end()),
                                detail});
        }
      };
      const ConstraintSystem cs = build_constraints(inst);
      const auto vertices = enumerate_all(cs, kMaxSupportedDimension);
      const auto reports = verify_all(inst, vertices);
      for (std::size_t i = 0; i < reports.size(); ++i) record(i, reports[i].holds(), reports[i].detail);

      const std::size_t degenerate =
          static_cast<std::size_t>(std::count_if(vertices.begin(), vertices.end(), [](const Vertex& v) { return v.degenerate; }));
      const std::size_t predicted = predict_degenerate_count(inst);
      record(6, predicted == degenerate,
             std::to_string(predicted) + " predicted, " + std::to_string(degenerate) + " enumerated");

      const Instance odd = oddify(inst).instance;
      const auto odd_vertices = enumerate_all(build_constraints(odd), kMaxSupportedDimension);
      const bool odd_simple =
          std::none_of(odd_vertices.begin(), odd_vertices.end(), [](const Vertex& v) { return v.degenerate; });
      record(7, odd_simple, "oddified " + odd.str());
      record(8, exact_partition_oracle(inst).has_value() == exact_partition_oracle(odd).has_value(),
             "oddified " + odd.str());

      if (size <= kIlpOracleCap) {
        const bool yes = exact_partition_oracle(inst).has_value();
        const std::size_t opt = ilp2_bruteforce(inst).optimum;
        record(9, (opt == inst.half()) == yes, "ILP2 optimum " + std::to_string(opt));
      }
      if (size <= 4) {
        std::vector<Point> coords;
        for (const auto& v : vertices) coords.push_back(v.coords);
        record(10, coords == oracle_enumerate_basis(cs), "vertex sets differ");
      }
    }
  }
  return s;
}

std::string render_check(const CheckSummary& s) {
  std::ostringstream os;
  os << std::left << std::setw(26) << "check";
  for (const auto& [size, _] : s.ran) os << std::setw(12) << ("2m=" + std::to_string(size));
  os << "\n";
  for (std::size_t c = 0; c < s.checks.size(); ++c) {
    os << std::setw(26) << s.checks[c];
    for (const auto& [size, ran] : s.ran) {
      const std::size_t n = ran[c];
      const std::string cell =
          n == 0 ? "-" : std::to_string(s.passed.at(size)[c]) + "/" + std::to_string(n);
      os << std::setw(12) << cell;
    }
    os << "\n";
  }
  for (const auto& f : s.failures) {
    os << "FAIL " << f.check << " on " << Instance(f.instance).str() << ": " << f.detail << "\n";
  }
  os << (s.all_pass() ? "all checks passed\n" : "some checks FAILED\n");
  return os.str();
}

}  // namespace ftpoly
