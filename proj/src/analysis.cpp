#include "ftpoly/analysis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "ftpoly/error.hpp"

namespace ftpoly {

namespace {

void require_scale(const Instance& inst, std::size_t cap, const char* what) {
  if (inst.size() > cap)
    throw Error(ErrorCode::ScaleCap, std::string(what) + " supports 2m <= " + std::to_string(cap) + ", got " +
                                         std::to_string(inst.size()));
}

// Calls visit(indices) for each k-subset of [0, n) in lexicographic order;
// stops early when visit returns true.
template <class Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k > n) return;
  while (true) {
    if (visit(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Element subset_sum(const Instance& inst, const std::vector<std::size_t>& subset) {
  Element s = 0;
  for (std::size_t i : subset) s += inst[i];
  return s;
}

bool is_half_max(const Instance& inst, std::size_t i) { return 2 * inst[i] == inst.max(); }

bool has_half_max(const Instance& inst) {
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (is_half_max(inst, i)) return true;
  }
  return false;
}

}  // namespace

std::optional<PartitionCertificate> exact_partition_oracle(const Instance& inst) {
  require_scale(inst, kPartitionOracleCap, "exact_partition_oracle");
  const Element total = inst.sum();
  std::optional<PartitionCertificate> found;
  if (total % 2 != 0) return found;
  for_each_combination(inst.size(), inst.half(), [&](const std::vector<std::size_t>& subset) {
    const Element left = subset_sum(inst, subset);
    if (2 * left != total) return false;
    found = PartitionCertificate{subset, left, total - left};
    return true;
  });
  return found;
}

IlpOptimum ilp2_bruteforce(const Instance& inst) {
  require_scale(inst, kIlpOracleCap, "ilp2_bruteforce");
  const ConstraintSystem cs = build_constraints(inst);
  const std::size_t n = inst.size();
  IlpOptimum best;
  std::vector<std::size_t> best_ones;
  bool have = false;
  Point p(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> ones;
    for (std::size_t i = 0; i < n; ++i) {
      const bool on = (mask >> i) & 1U;
      p[i] = on ? 1 : 0;
      if (on) ones.push_back(i);
    }
    if (!cs.is_feasible(p)) continue;
    if (!have || ones.size() > best.optimum || (ones.size() == best.optimum && ones < best_ones)) {
      have = true;
      best.optimum = ones.size();
      best.argmax = p;
      best_ones = std::move(ones);
    }
  }
  return best;
}

Vertex construct_degenerate_vertex(const Instance& inst, const std::vector<std::size_t>& subset, std::size_t index) {
  const std::size_t n = inst.size();
  std::vector<std::size_t> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != inst.half() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      (!sorted.empty() && sorted.back() >= n) || 2 * subset_sum(inst, sorted) != inst.sum())
    throw Error(ErrorCode::NotAPartition, "subset is not an exact partition of " + inst.str());
  if (index >= n) throw Error(ErrorCode::OutOfRange, "index " + std::to_string(index + 1) + " out of range");
  if (std::binary_search(sorted.begin(), sorted.end(), index))
    throw Error(ErrorCode::IndexInSubset, "index " + std::to_string(index + 1) + " belongs to the subset");
  if (!is_half_max(inst, index))
    throw Error(ErrorCode::NotHalfMax, "s_" + std::to_string(index + 1) + " = " + std::to_string(inst[index]) +
                                           " is not s_max/2");

  const ConstraintSystem cs = build_constraints(inst);
  const DerivedConstants& c = cs.constants();
  Point p(n, Rational(0));
  for (std::size_t i : sorted) p[i] = 1;
  p[index] = 2 * c.epsilon / rational(2 * c.big_m + c.s_max);
  Vertex v = make_vertex(cs, std::move(p));
  if (!cs.is_feasible(v.coords) || !v.active.contains(cs.k1()) || !v.active.contains(cs.k2()) ||
      v.active.count() != n + 1)
    throw std::logic_error("constructed degenerate vertex fails its postconditions for " + inst.str());
  return v;
}

std::vector<DegenerateSite> predicted_degenerate_sites(const Instance& inst) {
  require_scale(inst, kPartitionOracleCap, "predict_degenerate_count");
  std::vector<DegenerateSite> sites;
  const Element total = inst.sum();
  if (total % 2 != 0) return sites;
  for_each_combination(inst.size(), inst.half(), [&](const std::vector<std::size_t>& subset) {
    if (2 * subset_sum(inst, subset) != total) return false;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      if (is_half_max(inst, i) && !std::binary_search(subset.begin(), subset.end(), i)) sites.push_back({subset, i});
    }
    return false;
  });
  return sites;
}

std::size_t predict_degenerate_count(const Instance& inst) { return predicted_degenerate_sites(inst).size(); }

const char* to_string(LemmaStatus s) noexcept {
  switch (s) {
    case LemmaStatus::Holds: return "holds";
    case LemmaStatus::Violated: return "violated";
    case LemmaStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

LemmaReport start_report(std::string id, const Instance& inst) {
  LemmaReport r;
  r.id = std::move(id);
  r.instance.assign(inst.elements().begin(), inst.elements().end());
  return r;
}

LemmaReport& finish(LemmaReport& r) {
  if (!r.witnesses.empty()) r.status = LemmaStatus::Violated;
  return r;
}

}  // namespace

LemmaReport verify_simplicity_lemma(const Instance& inst, const std::vector<Vertex>& vertices) {
  LemmaReport r = start_report("simplicity", inst);
  if (has_half_max(inst)) {
    r.status = LemmaStatus::NotApplicable;
    r.detail = "instance has an element equal to s_max/2";
    return r;
  }
  for (const auto& v : vertices) {
    if (v.degenerate) r.witnesses.push_back(v.coords);
  }
  r.detail = "no half-max element; degenerate vertices: " + std::to_string(r.witnesses.size());
  return finish(r);
}

LemmaReport verify_m_minus_1_lemma(const Instance& inst, const std::vector<Vertex>& vertices) {
  LemmaReport r = start_report("m-1-not-degenerate", inst);
  std::size_t checked = 0;
  for (const auto& v : vertices) {
    if (v.cls != VertexClass::V1 || v.i1.size() + 1 != inst.half()) continue;
    ++checked;
    if (v.degenerate) r.witnesses.push_back(v.coords);
  }
  r.detail = std::to_string(checked) + " V1 vertices with |I_1| = m-1";
  return finish(r);
}

LemmaReport verify_v0_partition_lemma(const Instance& inst, const std::vector<Vertex>& vertices) {
  LemmaReport r = start_report("v0-encodes-partition", inst);
  std::size_t checked = 0;
  for (const auto& v : vertices) {
    if (v.cls != VertexClass::V0 || v.i1.size() != inst.half()) continue;
    ++checked;
    if (v.alpha != 0 || 2 * subset_sum(inst, v.i1) != inst.sum()) r.witnesses.push_back(v.coords);
  }
  r.detail = std::to_string(checked) + " V0 vertices with |I_1| = m";
  return finish(r);
}

LemmaReport verify_slack_observation(const Instance& inst, const std::vector<Vertex>& vertices) {
  LemmaReport r = start_report("knapsack-slack-epsilon", inst);
  const ConstraintSystem cs = build_constraints(inst);
  const Rational& eps = cs.constants().epsilon;
  std::size_t checked = 0;
  for (const auto& v : vertices) {
    if (v.cls != VertexClass::V0 || v.i1.size() != inst.half()) continue;
    ++checked;
    if (cs.slack(cs.k1(), v.coords) != eps || cs.slack(cs.k2(), v.coords) != eps) r.witnesses.push_back(v.coords);
  }
  r.detail = std::to_string(checked) + " V0 vertices with |I_1| = m";
  return finish(r);
}

LemmaReport verify_theorem(const Instance& inst, const std::vector<Vertex>& vertices) {
  LemmaReport r = start_report("degenerate-construction", inst);
  const auto sites = predicted_degenerate_sites(inst);
  std::vector<Point> constructed;
  constructed.reserve(sites.size());
  std::size_t found = 0;
  for (const auto& site : sites) {
    Vertex v = construct_degenerate_vertex(inst, site.subset, site.index);
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v.coords,
                               [](const Vertex& a, const Point& p) { return a.coords < p; });
    if (it != vertices.end() && it->coords == v.coords && it->degenerate) {
      ++found;
    } else {
      r.witnesses.push_back(v.coords);
    }
    constructed.push_back(std::move(v.coords));
  }
  std::sort(constructed.begin(), constructed.end());
  std::size_t enumerated = 0;
  for (const auto& v : vertices) {
    if (!v.degenerate) continue;
    ++enumerated;
    if (!std::binary_search(constructed.begin(), constructed.end(), v.coords)) r.witnesses.push_back(v.coords);
  }
  r.detail = std::to_string(sites.size()) + " predicted, " + std::to_string(found) + " found, " +
             std::to_string(enumerated) + " degenerate enumerated";
  return finish(r);
}

LemmaReport verify_support_bounds(const Instance& inst, const std::vector<Vertex>& vertices) {
  LemmaReport r = start_report("support-bounds", inst);
  const std::size_t m = inst.half();
  for (const auto& v : vertices) {
    const bool low = v.cls != VertexClass::V0 && v.i1.size() + 1 < m;
    if (low || v.i1.size() > m) r.witnesses.push_back(v.coords);
  }
  r.detail = "m-1 <= |I_1| for V1/V2, |I_1| <= m for all";
  return finish(r);
}

std::vector<LemmaReport> verify_all(const Instance& inst, const std::vector<Vertex>& vertices) {
  return {verify_simplicity_lemma(inst, vertices), verify_m_minus_1_lemma(inst, vertices),
          verify_v0_partition_lemma(inst, vertices), verify_slack_observation(inst, vertices),
          verify_theorem(inst, vertices),          verify_support_bounds(inst, vertices)};
}

namespace {

// Forward elimination in place; returns the rank.
std::size_t eliminate(std::vector<std::vector<Rational>>& a, std::vector<Rational>* rhs) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    if (rhs) std::swap((*rhs)[pivot], (*rhs)[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
      if (rhs) (*rhs)[r] -= f * (*rhs)[rank];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(std::vector<std::vector<Rational>> rows) { return eliminate(rows, nullptr); }

std::optional<Point> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (eliminate(a, &b) != n) return std::nullopt;
  Point x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }
  return x;
}

std::vector<Point> oracle_enumerate_basis(const ConstraintSystem& cs) {
  require_scale(cs.instance(), kBasisOracleCap, "oracle_enumerate_basis");
  const std::size_t n = cs.dimension();
  std::vector<Point> out;
  for_each_combination(cs.size(), n, [&](const std::vector<std::size_t>& basis) {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t id : basis) {
      a.push_back(cs.row(id).coeffs);
      b.push_back(cs.row(id).rhs);
    }
    auto x = solve_square(std::move(a), std::move(b));
    if (x && cs.is_feasible(*x)) out.push_back(std::move(*x));
    return false;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Instance random_instance(std::mt19937_64& rng, std::size_t size, Element lo, Element hi) {
  std::uniform_int_distribution<Element> dist(lo, hi);
  std::vector<Element> out(size);
  for (auto& e : out) e = dist(rng);
  return Instance(std::move(out));
}

Instance planted_instance(std::mt19937_64& rng, std::size_t size, Element hi) {
  if (size < 4 || hi < 2) return random_instance(rng, size, 1, std::max<Element>(hi, 1));
  const std::size_t m = size / 2;
  std::uniform_int_distribution<Element> dist(1, hi);
  std::vector<Element> half(m - 1);
  for (auto& e : half) e = dist(rng);
  const Element top = *std::max_element(half.begin(), half.end());
  if (top % 2 != 0) {
    const Element fixed = (top == 1 || top < hi) ? top + 1 : top - 1;
    for (auto& e : half) {
      if (e == top) e = fixed;
    }
  }
  const Element s_max = *std::max_element(half.begin(), half.end());
  std::vector<Element> out = half;
  out.insert(out.end(), half.begin(), half.end());
  out.push_back(s_max / 2);
  out.push_back(s_max / 2);
  std::shuffle(out.begin(), out.end(), rng);
  return Instance(std::move(out));
}

}  // namespace ftpoly
