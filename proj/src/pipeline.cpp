#include "thintree/pipeline.hpp"

#include <algorithm>
#include <numeric>

#include "thintree/error.hpp"
#include "thintree/surgery.hpp"
#include "thintree/thin_tree.hpp"

namespace thintree {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

Decimal cost_of(const EmbeddedGraph& g, const std::vector<EdgeId>& edges) {
  Decimal sum;
  for (EdgeId e : edges) sum += g.cost(e);
  return sum;
}

}  // namespace

Surd genus_factor(int genus) {
  if (genus < 0) throw Error(ErrorCode::kPrecondition, "negative genus");
  if (genus == 0) return Surd(Rational(10));
  return Surd(Rational(7 * alpha(genus)), genus);
}

BoundedGenusResult bounded_genus_thin_tree(const EmbeddedGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "bounded_genus_thin_tree needs a connected graph");
  BoundedGenusResult r;
  r.genus = genus(g);
  r.alpha = alpha(r.genus);
  r.planar_branch = r.genus == 0;
  if (g.vertex_count() <= 1) return r;
  r.k = edge_connectivity(g);
  r.thinness_bound = genus_factor(r.genus) / Rational(r.k);

  if (r.planar_branch) {
    r.tree_edges = thin_spanning_tree(g).tree_edges;
    return r;
  }

  SurgeryResult s = increase_dual_girth(g, r.k, r.genus);
  r.surgery_iterations = static_cast<int>(s.log.iterations.size());
  r.surgery_deleted = s.log.total_deleted;
  r.components_after_surgery = s.final_components;

  UnionFind forest(g.vertex_count());
  std::vector<int> labels = component_labels(s.graph);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (labels[v] != v) continue;  // labels are smallest member vertices
    DerivedGraph part = extract_component(s.graph, v);
    for (EdgeId e : thin_spanning_tree(part.graph).tree_edges) {
      EdgeId original = part.edge_origin[e];
      auto [a, b] = g.endpoints(original);
      forest.unite(a, b);
      r.tree_edges.push_back(original);
    }
  }

  std::vector<EdgeId> candidates = g.edges();
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](EdgeId a, EdgeId b) { return g.cost(a) < g.cost(b); });
  for (EdgeId e : candidates) {
    auto [a, b] = g.endpoints(e);
    if (forest.unite(a, b)) {
      r.connector_edges.push_back(e);
      r.tree_edges.push_back(e);
    }
  }
  std::sort(r.tree_edges.begin(), r.tree_edges.end());
  std::sort(r.connector_edges.begin(), r.connector_edges.end());
  if (static_cast<int>(r.tree_edges.size()) != g.vertex_count() - 1) {
    throw Error(ErrorCode::kDisconnected, "merged forest does not span");
  }
  return r;
}

WeightedThinTree weighted_thin_tree(const EmbeddedGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "weighted_thin_tree needs a connected graph");
  WeightedThinTree w;
  w.genus = genus(g);
  w.g_value = genus_factor(w.genus);
  w.c_graph = g.total_cost();
  if (g.vertex_count() <= 1) {
    w.rounds_planned = 1;
    w.trace.push_back({0, 0, true, {}, Decimal()});
    return w;
  }
  w.k = edge_connectivity(g);
  w.thinness = w.g_value * Rational(2, w.k);

  // t = max(1, floor(k / 2g)): largest t with 2 g t <= k.
  int t = 1;
  while ((w.g_value * Rational(2 * (t + 1))).compare(Rational(w.k)) <= 0) ++t;
  w.rounds_planned = t;

  EmbeddedGraph residual = g;
  for (int i = 0; i < t; ++i) {
    ExtractionRound round;
    round.round = i;
    round.connectivity = edge_connectivity(residual);
    round.meets_schedule = (w.g_value * Rational(i)).compare(Rational(w.k - round.connectivity)) >= 0;
    if (round.connectivity == 0) {
      w.truncated = true;
      w.warning = "residual graph disconnected after " + std::to_string(i) + " of " + std::to_string(t) +
                  " rounds";
      break;
    }
    if (!round.meets_schedule) {
      throw Error(ErrorCode::kExtractionFailure,
                  "round " + std::to_string(i) + " residual connectivity " + std::to_string(round.connectivity) +
                      " below k - i*g(k) with k=" + std::to_string(w.k) + ", g(k)=" + w.g_value.str());
    }
    round.tree_edges = bounded_genus_thin_tree(residual).tree_edges;
    round.cost = cost_of(g, round.tree_edges);
    residual = residual.without_edges(round.tree_edges);
    w.trace.push_back(std::move(round));
  }

  for (int i = 1; i < static_cast<int>(w.trace.size()); ++i) {
    if (w.trace[i].cost < w.trace[w.chosen_round].cost) w.chosen_round = i;
  }
  w.tree_edges = w.trace[w.chosen_round].tree_edges;
  w.c_tree = w.trace[w.chosen_round].cost;
  w.cost_ratio = w.c_graph.units() == 0 ? Rational(0) : w.c_tree.to_rational() / w.c_graph.to_rational();
  return w;
}

}  // namespace thintree
