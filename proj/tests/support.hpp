// Small reference implementations used only by the tests. They deliberately
// avoid the library's algorithms (no chain contraction, no multi-source BFS).
#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "thintree/dual_graph.hpp"
#include "thintree/embedded_graph.hpp"
#include "thintree/genlab.hpp"

namespace testing_support {

using namespace thintree;

inline std::vector<int> bfs(const DualGraph& d, int source, EdgeId banned = kNone) {
  std::vector<int> dist(d.face_count(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& inc : d.incidences(u)) {
      if (inc.edge == banned || dist[inc.neighbor] >= 0) continue;
      dist[inc.neighbor] = dist[u] + 1;
      queue.push_back(inc.neighbor);
    }
  }
  return dist;
}

// Shortest cycle through each edge: 1 for a loop, else 1 + dist in D - e.
inline int naive_dual_girth(const DualGraph& d) {
  int best = -1;
  for (const auto& de : d.dual_edges()) {
    int len = -1;
    if (de.left == de.right) {
      len = 1;
    } else {
      int dist = bfs(d, de.left, de.edge)[de.right];
      if (dist >= 0) len = dist + 1;
    }
    if (len > 0 && (best < 0 || len < best)) best = len;
  }
  return best;
}

inline int naive_edge_distance(const DualGraph& d, EdgeId e, EdgeId f) {
  const auto& a = d.dual_edge(e);
  const auto& b = d.dual_edge(f);
  int best = -1;
  for (int s : {a.left, a.right}) {
    auto dist = bfs(d, s);
    for (int t : {b.left, b.right}) {
      if (dist[t] >= 0 && (best < 0 || dist[t] < best)) best = dist[t];
    }
  }
  return best;
}

inline int naive_min_pairwise(const DualGraph& d, const std::vector<EdgeId>& edges) {
  int best = -1;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      int v = naive_edge_distance(d, edges[i], edges[j]);
      if (v >= 0 && (best < 0 || v < best)) best = v;
    }
  }
  return best;
}

// Union-find connectivity of (V, edges), ignoring embedding data.
inline bool spans(const EmbeddedGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> parent(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int parts = g.vertex_count();
  for (EdgeId e : edges) {
    int a = find(g.owner(2 * e));
    int b = find(g.owner(2 * e + 1));
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts <= 1;
}

inline EmbeddedGraph amplified(const EmbeddedGraph& base, int q) {
  std::vector<int> copies(base.edge_capacity(), q);
  return amplify(base, copies).graph;
}

}  // namespace testing_support
