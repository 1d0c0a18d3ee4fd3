#include "thintree/dual_graph.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <queue>
#include <string>
#include <tuple>

#include "thintree/error.hpp"

namespace thintree {

DualGraph geometric_dual(const EmbeddedGraph& g) {
  DualGraph d;
  d.faces_ = trace_faces(g);
  d.slot_.assign(g.edge_capacity(), kNone);
  for (EdgeId e : g.edges()) {
    d.slot_[e] = static_cast<int>(d.edges_.size());
    d.edges_.push_back({e, d.faces_.face_of_dart[2 * e], d.faces_.face_of_dart[2 * e + 1]});
  }
  d.incidence_.resize(d.faces_.count());
  for (int f = 0; f < d.faces_.count(); ++f) {
    for (DartId dart : d.faces_.faces[f].darts) {
      d.incidence_[f].push_back({edge_of(dart), d.faces_.face_of_dart[twin(dart)]});
    }
  }
  return d;
}

int dual_girth(const DualGraph& d) {
  const int n = d.face_count();
  for (const auto& de : d.dual_edges()) {
    if (de.left == de.right) return 1;
  }
  std::vector<char> alive(d.edge_capacity(), 0);
  for (const auto& de : d.dual_edges()) alive[de.edge] = 1;
  std::vector<int> deg(n);
  for (int f = 0; f < n; ++f) deg[f] = d.degree(f);

  // Edges hanging off degree-one vertices lie on no cycle.
  std::vector<int> stack;
  for (int f = 0; f < n; ++f) {
    if (deg[f] == 1) stack.push_back(f);
  }
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    if (deg[f] != 1) continue;
    for (const auto& inc : d.incidences(f)) {
      if (!alive[inc.edge]) continue;
      alive[inc.edge] = 0;
      --deg[f];
      if (--deg[inc.neighbor] == 1) stack.push_back(inc.neighbor);
      break;
    }
  }

  int best = INT_MAX;
  std::vector<char> used(d.edge_capacity(), 0);
  struct Contracted {
    int a, b, w;
  };
  std::vector<Contracted> contracted;

  auto next_live = [&](int f, EdgeId came_by) -> const Incidence* {
    for (const auto& inc : d.incidences(f)) {
      if (alive[inc.edge] && inc.edge != came_by) return &inc;
    }
    return nullptr;
  };

  // Collapse every chain of degree-two vertices into one weighted edge.
  for (int a = 0; a < n; ++a) {
    if (deg[a] < 3) continue;
    for (const auto& start : d.incidences(a)) {
      if (!alive[start.edge] || used[start.edge]) continue;
      used[start.edge] = 1;
      int w = 1;
      int cur = start.neighbor;
      EdgeId came = start.edge;
      while (deg[cur] == 2) {
        const Incidence* step = next_live(cur, came);
        used[step->edge] = 1;
        came = step->edge;
        cur = step->neighbor;
        ++w;
      }
      if (cur == a) {
        best = std::min(best, w);
      } else {
        contracted.push_back({a, cur, w});
      }
    }
  }
  // Components without branch vertices are plain cycles.
  for (const auto& de : d.dual_edges()) {
    if (!alive[de.edge] || used[de.edge]) continue;
    int start = de.left;
    int cur = de.right;
    EdgeId came = de.edge;
    used[de.edge] = 1;
    int w = 1;
    while (cur != start) {
      const Incidence* step = next_live(cur, came);
      used[step->edge] = 1;
      came = step->edge;
      cur = step->neighbor;
      ++w;
    }
    best = std::min(best, w);
  }

  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (contracted index, other)
  for (int i = 0; i < static_cast<int>(contracted.size()); ++i) {
    adj[contracted[i].a].push_back({i, contracted[i].b});
    adj[contracted[i].b].push_back({i, contracted[i].a});
  }
  std::vector<int> dist(n, INT_MAX);
  std::vector<int> touched;
  for (int i = 0; i < static_cast<int>(contracted.size()); ++i) {
    const auto& ce = contracted[i];
    if (ce.w >= best) continue;
    int limit = best - ce.w;  // only paths shorter than this improve
    using Item = std::pair<int, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (int t : touched) dist[t] = INT_MAX;
    touched.clear();
    dist[ce.a] = 0;
    touched.push_back(ce.a);
    pq.push({0, ce.a});
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (du != dist[u] || du >= limit) continue;
      if (u == ce.b) {
        best = std::min(best, du + ce.w);
        break;
      }
      for (auto [j, v] : adj[u]) {
        if (j == i) continue;
        int nd = du + contracted[j].w;
        if (nd < dist[v]) {
          if (dist[v] == INT_MAX) touched.push_back(v);
          dist[v] = nd;
          pq.push({nd, v});
        }
      }
    }
  }
  if (best == INT_MAX) throw Error(ErrorCode::kNoCycle, "dual graph is a forest");
  return best;
}

std::vector<int> dual_distances(const DualGraph& d, std::span<const int> sources,
                                const std::vector<char>* alive) {
  std::vector<int> dist(d.face_count(), kNone);
  std::deque<int> queue;
  for (int s : sources) {
    if (dist[s] == kNone) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& inc : d.incidences(u)) {
      if (alive != nullptr && !(*alive)[inc.edge]) continue;
      if (dist[inc.neighbor] == kNone) {
        dist[inc.neighbor] = dist[u] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

int edge_distance(const DualGraph& d, EdgeId e, EdgeId f) {
  for (EdgeId x : {e, f}) {
    if (!d.has_edge(x)) throw Error(ErrorCode::kEdgeAbsent, "dual edge " + std::to_string(x) + " absent");
  }
  const auto& de = d.dual_edge(e);
  const auto& df = d.dual_edge(f);
  int sources[] = {de.left, de.right};
  auto dist = dual_distances(d, sources);
  int best = kNone;
  for (int end : {df.left, df.right}) {
    if (dist[end] != kNone && (best == kNone || dist[end] < best)) best = dist[end];
  }
  return best;
}

int min_pairwise_edge_distance(const DualGraph& d, std::span<const EdgeId> edges) {
  std::vector<int> label(d.face_count(), kNone);
  std::vector<int> dist(d.face_count(), kNone);
  std::deque<int> queue;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (!d.has_edge(edges[i])) {
      throw Error(ErrorCode::kEdgeAbsent, "dual edge " + std::to_string(edges[i]) + " absent");
    }
    const auto& de = d.dual_edge(edges[i]);
    for (int end : {de.left, de.right}) {
      if (label[end] != kNone && label[end] != i) return 0;
      if (label[end] == kNone) {
        label[end] = i;
        dist[end] = 0;
        queue.push_back(end);
      }
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& inc : d.incidences(u)) {
      if (label[inc.neighbor] == kNone) {
        label[inc.neighbor] = label[u];
        dist[inc.neighbor] = dist[u] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  int best = kNone;
  for (const auto& de : d.dual_edges()) {
    int a = de.left;
    int b = de.right;
    if (label[a] == kNone || label[b] == kNone || label[a] == label[b]) continue;
    int cand = dist[a] + dist[b] + 1;
    if (best == kNone || cand < best) best = cand;
  }
  return best;
}

Cut Cut::of(int vertex_count, std::span<const VertexId> side) {
  Cut cut;
  cut.in_side_.assign(vertex_count, 0);
  int size = 0;
  for (VertexId v : side) {
    if (v < 0 || v >= vertex_count) throw Error(ErrorCode::kBadParams, "cut vertex out of range");
    if (!cut.in_side_[v]) ++size;
    cut.in_side_[v] = 1;
  }
  if (size == 0 || size == vertex_count) {
    throw Error(ErrorCode::kBadParams, "cut side must be nonempty and proper");
  }
  return cut;
}

Cut Cut::from_mask(int vertex_count, std::uint64_t mask) {
  std::vector<VertexId> side;
  for (VertexId v = 0; v < vertex_count; ++v) {
    if ((mask >> v) & 1U) side.push_back(v);
  }
  return of(vertex_count, side);
}

std::vector<VertexId> Cut::side() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (in_side_[v]) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> cut_edges(const EmbeddedGraph& g, const Cut& cut) {
  std::vector<EdgeId> out;
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.endpoints(e);
    if (cut.contains(u) != cut.contains(v)) out.push_back(e);
  }
  return out;
}

std::vector<DualCycle> cut_to_dual_cycles(const EmbeddedGraph& g, const DualGraph& d, const Cut& cut) {
  if (cut.vertex_count() != g.vertex_count()) {
    throw Error(ErrorCode::kBadParams, "cut built for a different vertex count");
  }
  std::vector<char> in_cut(d.edge_capacity(), 0);
  for (EdgeId e : cut_edges(g, cut)) in_cut[e] = 1;

  const int n = d.face_count();
  std::vector<std::vector<Incidence>> avail(n);
  for (int f = 0; f < n; ++f) {
    for (const auto& inc : d.incidences(f)) {
      if (in_cut[inc.edge]) avail[f].push_back(inc);
    }
    if (avail[f].size() % 2 != 0) {
      throw Error(ErrorCode::kParityViolation,
                  "face " + std::to_string(f) + " meets the cut " + std::to_string(avail[f].size()) + " times");
    }
    std::sort(avail[f].begin(), avail[f].end(),
              [](const Incidence& a, const Incidence& b) { return a.edge < b.edge; });
  }

  std::vector<char> used(d.edge_capacity(), 0);
  std::vector<std::size_t> cursor(n, 0);
  auto take = [&](int f) -> const Incidence* {
    while (cursor[f] < avail[f].size()) {
      const Incidence& inc = avail[f][cursor[f]++];
      if (!used[inc.edge]) return &inc;
    }
    return nullptr;
  };

  std::vector<DualCycle> cycles;
  std::vector<int> pos(n, kNone);
  for (int s = 0; s < n; ++s) {
    while (true) {
      std::vector<int> path_faces{s};
      std::vector<EdgeId> path_edges;
      pos[s] = 0;
      int cur = s;
      bool progressed = false;
      while (true) {
        const Incidence* inc = take(cur);
        if (inc == nullptr) {
          if (!path_edges.empty()) throw Error(ErrorCode::kParityViolation, "dual walk got stuck");
          break;
        }
        progressed = true;
        used[inc->edge] = 1;
        int nxt = inc->neighbor;
        if (pos[nxt] != kNone) {
          int i = pos[nxt];
          DualCycle c;
          c.faces.assign(path_faces.begin() + i, path_faces.end());
          c.edges.assign(path_edges.begin() + i, path_edges.end());
          c.edges.push_back(inc->edge);
          cycles.push_back(std::move(c));
          for (std::size_t j = i + 1; j < path_faces.size(); ++j) pos[path_faces[j]] = kNone;
          path_faces.resize(i + 1);
          path_edges.resize(i);
          cur = nxt;
          if (path_edges.empty()) break;
        } else {
          pos[nxt] = static_cast<int>(path_faces.size());
          path_faces.push_back(nxt);
          path_edges.push_back(inc->edge);
          cur = nxt;
        }
      }
      pos[s] = kNone;
      if (!progressed) break;
    }
  }
  return cycles;
}

}  // namespace thintree
