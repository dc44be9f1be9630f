#include "ftpoly/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "ftpoly/error.hpp"

namespace ftpoly {

const char* to_string(VertexClass c) noexcept {
  switch (c) {
    case VertexClass::V0: return "V0";
    case VertexClass::V1: return "V1";
    case VertexClass::V2: return "V2";
  }
  return "?";
}

std::vector<std::size_t> Vertex::support() const {
  std::vector<std::size_t> out = i1;
  out.insert(out.end(), if_.begin(), if_.end());
  std::sort(out.begin(), out.end());
  return out;
}

Vertex make_vertex(const ConstraintSystem& cs, Point coords) {
  Vertex v;
  v.active = cs.active_set(coords);
  const auto& inst = cs.instance();
  Rational picked(0);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) {
      v.i0.push_back(i);
    } else if (coords[i] == 1) {
      v.i1.push_back(i);
      picked += rational(inst[i]);
    } else {
      v.if_.push_back(i);
    }
  }
  v.cls = v.if_.empty() ? VertexClass::V0 : (v.if_.size() == 1 ? VertexClass::V1 : VertexClass::V2);
  v.alpha = rational(cs.constants().total, 2) - picked;
  v.degenerate = v.active.count() > cs.dimension();
  v.coords = std::move(coords);
  return v;
}

namespace {

// Depth-first walk over 0/1 assignments of the non-free coordinates, carrying
// both knapsack left-hand sides. Subtrees already exceeding a right-hand side
// are cut: every coefficient is positive and every remaining term is >= 0.
class PatternWalk {
 public:
  PatternWalk(const ConstraintSystem& cs, std::uint64_t free_bits)
      : n_(cs.dimension()),
        free_(free_bits),
        c1_(cs.row(cs.k1()).coeffs),
        c2_(cs.row(cs.k2()).coeffs),
        r1_(cs.row(cs.k1()).rhs),
        r2_(cs.row(cs.k2()).rhs),
        lhs1_(0),
        lhs2_(0) {}

  template <class Visit>
  void run(Visit&& visit) {
    ones_ = 0;
    step(0, visit);
  }

  const Rational& lhs1() const { return lhs1_; }
  const Rational& lhs2() const { return lhs2_; }
  std::uint64_t ones() const { return ones_; }

 private:
  template <class Visit>
  void step(std::size_t i, Visit& visit) {
    while (i < n_ && ((free_ >> i) & 1U)) ++i;
    if (i == n_) {
      visit(*this);
      return;
    }
    step(i + 1, visit);
    lhs1_ += c1_[i];
    lhs2_ += c2_[i];
    if (lhs1_ <= r1_ && lhs2_ <= r2_) {
      ones_ |= std::uint64_t{1} << i;
      step(i + 1, visit);
      ones_ &= ~(std::uint64_t{1} << i);
    }
    lhs1_ -= c1_[i];
    lhs2_ -= c2_[i];
  }

  std::size_t n_;
  std::uint64_t free_;
  const std::vector<Rational>& c1_;
  const std::vector<Rational>& c2_;
  const Rational& r1_;
  const Rational& r2_;
  Rational lhs1_;
  Rational lhs2_;
  std::uint64_t ones_ = 0;
};

Point pattern_point(std::size_t n, std::uint64_t ones) {
  Point p(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if ((ones >> i) & 1U) p[i] = 1;
  }
  return p;
}

bool coords_less(const Vertex& a, const Vertex& b) { return a.coords < b.coords; }
bool coords_equal(const Vertex& a, const Vertex& b) { return a.coords == b.coords; }

void canonicalize(std::vector<Vertex>& vs) {
  std::sort(vs.begin(), vs.end(), coords_less);
  vs.erase(std::unique(vs.begin(), vs.end(), coords_equal), vs.end());
}

}  // namespace

std::vector<Vertex> enumerate_v0(const ConstraintSystem& cs) {
  std::vector<Vertex> out;
  PatternWalk walk(cs, 0);
  walk.run([&](const PatternWalk& w) { out.push_back(make_vertex(cs, pattern_point(cs.dimension(), w.ones()))); });
  canonicalize(out);
  return out;
}

std::vector<Vertex> enumerate_v1(const ConstraintSystem& cs) {
  const std::size_t n = cs.dimension();
  const Halfspace& k1 = cs.row(cs.k1());
  const Halfspace& k2 = cs.row(cs.k2());
  std::vector<Vertex> out;
  for (std::size_t j = 0; j < n; ++j) {
    PatternWalk walk(cs, std::uint64_t{1} << j);
    walk.run([&](const PatternWalk& w) {
      // Tight on K1, then tight on K2; the other knapsack must still hold.
      const Rational from_k1 = (k1.rhs - w.lhs1()) / k1.coeffs[j];
      const Rational from_k2 = (k2.rhs - w.lhs2()) / k2.coeffs[j];
      for (int tight = 0; tight < 2; ++tight) {
        const Rational& x = tight == 0 ? from_k1 : from_k2;
        if (sgn(x) <= 0 || x >= 1) continue;
        const Rational other = tight == 0 ? w.lhs2() + k2.coeffs[j] * x : w.lhs1() + k1.coeffs[j] * x;
        if (other > (tight == 0 ? k2.rhs : k1.rhs)) continue;
        Point p = pattern_point(n, w.ones());
        p[j] = x;
        out.push_back(make_vertex(cs, std::move(p)));
      }
    });
  }
  canonicalize(out);
  return out;
}

std::vector<Vertex> enumerate_v2(const ConstraintSystem& cs) {
  const std::size_t n = cs.dimension();
  const Halfspace& k1 = cs.row(cs.k1());
  const Halfspace& k2 = cs.row(cs.k2());
  std::vector<Vertex> out;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      // Cramer's rule on {K1 tight, K2 tight} in (x_j, x_k); the determinant
      // is (s_j - s_k)(2M + s_max), zero exactly for equal elements.
      const Rational det = k1.coeffs[j] * k2.coeffs[k] - k1.coeffs[k] * k2.coeffs[j];
      if (sgn(det) == 0) continue;
      PatternWalk walk(cs, (std::uint64_t{1} << j) | (std::uint64_t{1} << k));
      walk.run([&](const PatternWalk& w) {
        const Rational r1 = k1.rhs - w.lhs1();
        const Rational r2 = k2.rhs - w.lhs2();
        Rational xj = (r1 * k2.coeffs[k] - k1.coeffs[k] * r2) / det;
        if (sgn(xj) <= 0 || xj >= 1) return;
        Rational xk = (k1.coeffs[j] * r2 - r1 * k2.coeffs[j]) / det;
        if (sgn(xk) <= 0 || xk >= 1) return;
        Point p = pattern_point(n, w.ones());
        p[j] = std::move(xj);
        p[k] = std::move(xk);
        out.push_back(make_vertex(cs, std::move(p)));
      });
    }
  }
  canonicalize(out);
  return out;
}

std::vector<Vertex> enumerate_all(const ConstraintSystem& cs, std::size_t cap) {
  if (cs.dimension() > cap)
    throw Error(ErrorCode::DimensionCap, "dimension 2m = " + std::to_string(cs.dimension()) +
                                             " exceeds the enumeration cap " + std::to_string(cap));
  std::vector<Vertex> all = enumerate_v0(cs);
  for (auto* part : {&enumerate_v1, &enumerate_v2}) {
    std::vector<Vertex> more = part(cs);
    all.insert(all.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  canonicalize(all);
  return all;
}

PolytopeGraph build_adjacency(std::vector<Vertex> vertices, const ConstraintSystem& cs) {
  PolytopeGraph g;
  g.vertices = std::move(vertices);
  const std::size_t count = g.vertices.size();
  // An edge is a face of dimension one; its equality set needs rank 2m - 1.
  const std::size_t min_common = cs.dimension() == 0 ? 0 : cs.dimension() - 1;
  g.neighbors.assign(count, {});
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t w = u + 1; w < count; ++w) {
      const ConstraintMask common = g.vertices[u].active & g.vertices[w].active;
      if (common.count() < min_common) continue;
      std::size_t on_face = 0;
      for (std::size_t v = 0; v < count && on_face <= 2; ++v) {
        if (g.vertices[v].active.includes(common)) ++on_face;
      }
      if (on_face == 2) {
        g.edges.emplace_back(u, w);
        g.neighbors[u].push_back(w);
        g.neighbors[w].push_back(u);
      }
    }
  }
  g.degrees.reserve(count);
  for (const auto& nb : g.neighbors) g.degrees.push_back(nb.size());
  return g;
}

GraphMetrics graph_metrics(const PolytopeGraph& g) {
  const std::size_t count = g.vertices.size();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  GraphMetrics out;
  out.eccentricities.assign(count, 0);
  std::vector<std::size_t> dist(count);
  for (std::size_t src = 0; src < count; ++src) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    std::deque<std::size_t> queue{src};
    dist[src] = 0;
    std::size_t reached = 1;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : g.neighbors[u]) {
        if (dist[w] != kUnseen) continue;
        dist[w] = dist[u] + 1;
        ++reached;
        queue.push_back(w);
      }
    }
    if (reached != count)
      throw Error(ErrorCode::Disconnected, "1-skeleton is disconnected: vertex " + std::to_string(src) + " reaches " +
                                               std::to_string(reached) + " of " + std::to_string(count));
    out.eccentricities[src] = *std::max_element(dist.begin(), dist.end());
    out.diameter = std::max(out.diameter, out.eccentricities[src]);
  }
  return out;
}

}  // namespace ftpoly
