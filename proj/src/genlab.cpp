#include "thintree/genlab.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "thintree/connectivity.hpp"
#include "thintree/error.hpp"
#include "thintree/io.hpp"

namespace thintree {
namespace {

Point pt(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

// Rational point close to (r cos t, r sin t); exact enough for convexity.
Point polar(double r, double t) {
  static constexpr std::int64_t kDen = 1'000'000;
  auto q = [](double v) { return Rational(static_cast<std::int64_t>(std::llround(v * kDen)), kDen); };
  return {q(r * std::cos(t)), q(r * std::sin(t))};
}

// 0 for angles in [0, pi), 1 for [pi, 2 pi).
int half_plane(const Point& d) { return (d.second > 0 || (d.second == 0 && d.first > 0)) ? 0 : 1; }

std::vector<Point> regular_polygon(int n, double radius) {
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) out.push_back(polar(radius, 2 * std::numbers::pi * i / n));
  return out;
}

void need(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kBadParams, what);
}

EmbeddedGraph stacked_triangulation(int n, std::uint64_t seed) {
  need(n >= 4, "stacked triangulation needs n >= 4");
  std::vector<Point> points{pt(0, 12), pt(-12, -6), pt(12, -6), pt(0, 0)};
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
  std::vector<std::array<int, 3>> faces{{0, 1, 3}, {1, 2, 3}, {2, 0, 3}};
  Rng rng(seed);
  for (int v = 4; v < n; ++v) {
    std::size_t pick = rng.below(faces.size());
    auto [a, b, c] = faces[pick];
    points.push_back({(points[a].first + points[b].first + points[c].first) / 3,
                      (points[a].second + points[b].second + points[c].second) / 3});
    edges.push_back({a, v});
    edges.push_back({b, v});
    edges.push_back({c, v});
    faces[pick] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
  }
  return embed_straight_line(points, edges);
}

// Turns a planar embedding of genus 0 into one of genus 1 by swapping two
// darts at the first vertex where that works. None when no single swap does.
std::optional<EmbeddedGraph> add_handle(const EmbeddedGraph& g) {
  std::vector<std::vector<DartId>> rotations(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) rotations[v] = g.rotation(v);
  std::vector<std::pair<DartId, DartId>> twins;
  for (EdgeId e : g.edges()) twins.emplace_back(2 * e, 2 * e + 1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int deg = static_cast<int>(rotations[v].size());
    for (int i = 0; i < deg; ++i) {
      for (int j = i + 1; j < deg; ++j) {
        auto trial = rotations;
        std::swap(trial[v][i], trial[v][j]);
        EmbeddedGraph h = build_embedding(g.vertex_count(), trial, twins);
        if (genus(h) == 1) return h;
      }
    }
  }
  return std::nullopt;
}

std::optional<EmbeddedGraph> planar_embedding(int n, const std::vector<SupportEdge>& support) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                      boost::property<boost::vertex_index_t, int>,
                                      boost::property<boost::edge_index_t, int>>;
  using EdgeDesc = boost::graph_traits<Graph>::edge_descriptor;
  Graph bg(n);
  int index = 0;
  for (const auto& s : support) {
    auto [e, ok] = boost::add_edge(s.u, s.v, bg);
    boost::put(boost::edge_index, bg, e, index++);
  }
  std::vector<std::vector<EdgeDesc>> storage(n);
  auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
  bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                    boost::boyer_myrvold_params::embedding = embedding);
  if (!planar) return std::nullopt;
  std::vector<std::vector<int>> neighbors(n);
  for (int v = 0; v < n; ++v) {
    for (const EdgeDesc& e : storage[v]) {
      int a = static_cast<int>(boost::source(e, bg));
      int b = static_cast<int>(boost::target(e, bg));
      neighbors[v].push_back(a == v ? b : a);
    }
  }
  EmbeddedGraph g = embed_neighbor_rotations(neighbors);
  if (genus(g) != 0) throw Error(ErrorCode::kBadParams, "planarity test returned a non-planar rotation system");
  return g;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kBadParams, "empty range");
  return engine_() % bound;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorCode::kBadParams, "empty range");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

EmbeddedGraph embed_straight_line(const std::vector<Point>& points, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<int>> neighbors(n);
  for (auto [a, b] : edges) {
    need(a >= 0 && a < n && b >= 0 && b < n && a != b, "bad straight-line edge");
    neighbors[a].push_back(b);
    neighbors[b].push_back(a);
  }
  for (int v = 0; v < n; ++v) {
    auto dir = [&](int w) { return Point{points[w].first - points[v].first, points[w].second - points[v].second}; };
    std::sort(neighbors[v].begin(), neighbors[v].end(), [&](int a, int b) {
      Point da = dir(a);
      Point db = dir(b);
      int ha = half_plane(da);
      int hb = half_plane(db);
      if (ha != hb) return ha < hb;
      return da.first * db.second - da.second * db.first > 0;
    });
  }
  return embed_neighbor_rotations(neighbors);
}

EmbeddedGraph embed_neighbor_rotations(const std::vector<std::vector<int>>& neighbors) {
  const int n = static_cast<int>(neighbors.size());
  std::map<std::pair<int, int>, EdgeId> ids;
  for (int u = 0; u < n; ++u) {
    for (int v : neighbors[u]) {
      need(v >= 0 && v < n && v != u, "neighbour list has a loop or a bad vertex");
      if (u < v) {
        need(!ids.count({u, v}), "neighbour lists must describe a simple graph");
        ids[{u, v}] = 0;
      }
    }
  }
  EdgeId next = 0;
  for (auto& [key, id] : ids) id = next++;
  std::vector<std::vector<DartId>> rotations(n);
  std::vector<int> seen(2 * next, 0);
  for (int u = 0; u < n; ++u) {
    for (int v : neighbors[u]) {
      auto it = ids.find({std::min(u, v), std::max(u, v)});
      need(it != ids.end(), "neighbour lists are not symmetric");
      DartId d = u < v ? 2 * it->second : 2 * it->second + 1;
      need(!seen[d]++, "neighbour lists must describe a simple graph");
      rotations[u].push_back(d);
    }
  }
  std::vector<std::pair<DartId, DartId>> twins;
  for (EdgeId e = 0; e < next; ++e) {
    need(seen[2 * e] && seen[2 * e + 1], "neighbour lists are not symmetric");
    twins.emplace_back(2 * e, 2 * e + 1);
  }
  return build_embedding(n, rotations, twins);
}

EmbeddedGraph planar_base(const std::string& name, int n, std::uint64_t seed) {
  if (name == "k4") {
    return embed_straight_line({pt(0, 4), pt(-4, -2), pt(4, -2), pt(0, 0)},
                               {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
  }
  if (name == "cube") {
    std::vector<Point> p{pt(-2, -2), pt(2, -2), pt(2, 2), pt(-2, 2), pt(-1, -1), pt(1, -1), pt(1, 1), pt(-1, 1)};
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 4; ++i) {
      e.push_back({i, (i + 1) % 4});
      e.push_back({4 + i, 4 + (i + 1) % 4});
      e.push_back({i, i + 4});
    }
    return embed_straight_line(p, e);
  }
  if (name == "octahedron") {
    return embed_straight_line({pt(0, 4), pt(-4, -2), pt(4, -2), pt(0, -1), pt(1, 1), pt(-1, 1)},
                               {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                                {3, 1}, {3, 2}, {4, 0}, {4, 2}, {5, 0}, {5, 1}});
  }
  if (name == "prism") {
    need(n >= 3, "prism needs n >= 3");
    auto p = regular_polygon(n, 2.0);
    auto inner = regular_polygon(n, 1.0);
    p.insert(p.end(), inner.begin(), inner.end());
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
      e.push_back({i, (i + 1) % n});
      e.push_back({n + i, n + (i + 1) % n});
      e.push_back({i, n + i});
    }
    return embed_straight_line(p, e);
  }
  if (name == "cycle") {
    need(n >= 3, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return embed_straight_line(regular_polygon(n, 1.0), e);
  }
  if (name == "wheel") {
    need(n >= 4, "wheel needs n >= 4");
    auto p = regular_polygon(n - 1, 1.0);
    p.push_back(pt(0, 0));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n - 1; ++i) {
      e.push_back({i, (i + 1) % (n - 1)});
      e.push_back({i, n - 1});
    }
    return embed_straight_line(p, e);
  }
  if (name == "stacked") return stacked_triangulation(n, seed);
  throw Error(ErrorCode::kBadParams, "unknown planar base '" + name + "'");
}

EmbeddedGraph torus_grid(int rows, int cols, int mult, int seam_mult) {
  need(rows >= 3 && cols >= 3, "torus grid needs rows, cols >= 3");
  need(mult >= 1 && seam_mult >= 0, "torus grid needs mult >= 1 and seam-mult >= 0");
  const int n = rows * cols;
  auto id = [&](int r, int c) { return ((r + rows) % rows) * cols + (c + cols) % cols; };
  auto horizontal = [&](int r, int c) { return id(r, c); };       // (r,c) -> (r,c+1)
  auto vertical = [&](int r, int c) { return n + id(r, c); };     // (r,c) -> (r+1,c)
  std::vector<std::vector<DartId>> rotations(n);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      rotations[id(r, c)] = {2 * horizontal(r, c), 2 * vertical(r, c), 2 * horizontal(r, c - 1) + 1,
                             2 * vertical(r - 1, c) + 1};
    }
  }
  std::vector<std::pair<DartId, DartId>> twins;
  for (EdgeId e = 0; e < 2 * n; ++e) twins.emplace_back(2 * e, 2 * e + 1);
  EmbeddedGraph base = build_embedding(n, rotations, twins);
  std::vector<int> copies(2 * n, mult);
  if (seam_mult > 0) {
    for (int r = 0; r < rows; ++r) copies[horizontal(r, 0)] = seam_mult;
  }
  return amplify(base, copies).graph;
}

CostModel parse_cost_model(const std::string& name) {
  if (name == "unit") return CostModel::kUnit;
  if (name == "uniform-range") return CostModel::kUniformRange;
  if (name == "asymmetric-skew") return CostModel::kAsymmetricSkew;
  throw Error(ErrorCode::kBadParams, "unknown cost model '" + name + "'");
}

std::string cost_model_name(CostModel m) {
  switch (m) {
    case CostModel::kUnit:
      return "unit";
    case CostModel::kUniformRange:
      return "uniform-range";
    case CostModel::kAsymmetricSkew:
      return "asymmetric-skew";
  }
  return "unit";
}

EmbeddedGraph assign_costs(const EmbeddedGraph& g, CostModel model, std::int64_t lo, std::int64_t hi, Rng& rng) {
  std::map<EdgeId, Decimal> costs;
  if (model != CostModel::kUnit) {
    need(0 <= lo && lo <= hi, "cost range needs 0 <= lo <= hi");
    for (EdgeId e : g.edges()) costs[e] = Decimal::from_int(rng.range(lo, hi));
  }
  return with_costs(g, costs);
}

AtspInstance random_metric(int n, CostModel model, std::int64_t lo, std::int64_t hi, std::uint64_t seed) {
  need(n >= 1, "instance needs n >= 1");
  need(0 <= lo && lo <= hi, "cost range needs 0 <= lo <= hi");
  Rng rng(seed);
  AtspInstance inst;
  inst.n = n;
  inst.cost.assign(n, std::vector<Decimal>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      switch (model) {
        case CostModel::kUnit:
          inst.cost[i][j] = inst.cost[j][i] = Decimal::from_int(1);
          break;
        case CostModel::kUniformRange:
          inst.cost[i][j] = Decimal::from_int(rng.range(lo, hi));
          inst.cost[j][i] = Decimal::from_int(rng.range(lo, hi));
          break;
        case CostModel::kAsymmetricSkew: {
          std::int64_t base = rng.range(lo, hi);
          inst.cost[i][j] = Decimal::from_int(base);
          inst.cost[j][i] = Decimal::from_int(base + rng.range(0, hi - lo));
          break;
        }
      }
    }
  }
  return metric_completion(inst);
}

LpSupportInstance lp_support_instance(int n, int genus_wanted, CostModel model, std::int64_t lo, std::int64_t hi,
                                      std::uint64_t seed, int max_attempts) {
  need(n >= 3, "LP support instance needs n >= 3");
  need(genus_wanted == 0 || genus_wanted == 1, "support genus must be 0 or 1");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    AtspInstance inst = random_metric(n, model, lo, hi, seed + static_cast<std::uint64_t>(attempt) * 1000003ULL);
    HkSolution hk = solve_held_karp(inst);
    auto support = symmetrize(hk, inst);
    auto emb = planar_embedding(n, support);
    if (!emb) continue;
    if (genus_wanted == 1) {
      // A support that is a single cycle admits no handle; try another metric.
      emb = add_handle(*emb);
      if (!emb) continue;
    }
    return LpSupportInstance{inst, *emb, attempt + 1};
  }
  throw Error(ErrorCode::kBadParams, "no suitable Held-Karp support within " + std::to_string(max_attempts) + " attempts");
}

Family parse_family(const std::string& name) {
  if (name == "planar-amplified") return Family::kPlanarAmplified;
  if (name == "torus-grid") return Family::kTorusGrid;
  if (name == "random-metric") return Family::kRandomMetric;
  if (name == "lp-support-instance") return Family::kLpSupportInstance;
  throw Error(ErrorCode::kBadParams, "unknown family '" + name + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kPlanarAmplified:
      return "planar-amplified";
    case Family::kTorusGrid:
      return "torus-grid";
    case Family::kRandomMetric:
      return "random-metric";
    case Family::kLpSupportInstance:
      return "lp-support-instance";
  }
  return "";
}

std::int64_t GenSpec::param(const std::string& key, std::int64_t fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

Generated generate(const GenSpec& spec) {
  Generated out;
  auto finish_graph = [&](const EmbeddedGraph& g) {
    out.emb = format_emb(g);
    out.genus = genus(g);
    if (g.vertex_count() >= 2) out.k = edge_connectivity(g);
  };
  const std::int64_t lo = spec.param("cost-lo", 1);
  const std::int64_t hi = spec.param("cost-hi", 100);
  switch (spec.family) {
    case Family::kPlanarAmplified: {
      const std::int64_t mult = spec.param("mult", 1);
      need(mult >= 1 && mult <= 100000, "mult must be in [1, 100000]");
      EmbeddedGraph base = planar_base(spec.base, static_cast<int>(spec.param("n", 0)), spec.seed);
      std::vector<int> copies(base.edge_capacity(), static_cast<int>(mult));
      Rng rng(spec.seed + 1);
      finish_graph(assign_costs(amplify(base, copies).graph, spec.cost_model, lo, hi, rng));
      break;
    }
    case Family::kTorusGrid: {
      EmbeddedGraph g = torus_grid(static_cast<int>(spec.param("rows", 3)), static_cast<int>(spec.param("cols", 3)),
                                   static_cast<int>(spec.param("mult", 1)),
                                   static_cast<int>(spec.param("seam-mult", 0)));
      Rng rng(spec.seed + 1);
      finish_graph(assign_costs(g, spec.cost_model, lo, hi, rng));
      break;
    }
    case Family::kRandomMetric: {
      out.atsp = format_atsp(random_metric(static_cast<int>(spec.param("n", 8)), spec.cost_model, lo, hi, spec.seed));
      break;
    }
    case Family::kLpSupportInstance: {
      auto inst = lp_support_instance(static_cast<int>(spec.param("n", 6)), static_cast<int>(spec.param("genus", 0)),
                                      spec.cost_model, lo, hi, spec.seed, static_cast<int>(spec.param("attempts", 200)));
      out.atsp = format_atsp(inst.instance);
      out.emb = format_emb(inst.support_embedding);
      out.genus = genus(inst.support_embedding);
      break;
    }
  }
  return out;
}

}  // namespace thintree
