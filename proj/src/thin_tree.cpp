#include "thintree/thin_tree.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "thintree/error.hpp"

namespace thintree {

int alpha(int genus) {
  if (genus < 0) throw Error(ErrorCode::kPrecondition, "negative genus");
  // floor(2 log2(g + 3/2)) = max j with 2^(j+2) <= (2g + 3)^2.
  unsigned __int128 target = static_cast<unsigned __int128>(2 * static_cast<std::int64_t>(genus) + 3);
  target *= target;
  int j = -2;
  while ((static_cast<unsigned __int128>(1) << (j + 3)) <= target) ++j;
  return 4 + j;
}

DualView::DualView(const DualGraph& dual)
    : dual_(&dual), alive_(dual.edge_capacity(), 0), degree_(dual.face_count(), 0) {
  for (const auto& de : dual.dual_edges()) {
    alive_[de.edge] = 1;
    ++degree_[de.left];
    ++degree_[de.right];
    ++live_;
  }
}

std::vector<EdgeId> DualView::live_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(alive_.size()); ++e) {
    if (alive_[e]) out.push_back(e);
  }
  return out;
}

void DualView::remove(EdgeId e) {
  if (!alive_.at(e)) throw Error(ErrorCode::kEdgeAbsent, "edge " + std::to_string(e) + " not live");
  alive_[e] = 0;
  const auto& de = dual_->dual_edge(e);
  --degree_[de.left];
  --degree_[de.right];
  --live_;
}

std::vector<EdgeId> DualView::prune_degree_one() {
  std::vector<EdgeId> removed;
  std::vector<int> stack;
  for (int f = 0; f < static_cast<int>(degree_.size()); ++f) {
    if (degree_[f] == 1) stack.push_back(f);
  }
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    if (degree_[f] != 1) continue;
    for (const auto& inc : dual_->incidences(f)) {
      if (!alive_[inc.edge]) continue;
      remove(inc.edge);
      removed.push_back(inc.edge);
      if (degree_[inc.neighbor] == 1) stack.push_back(inc.neighbor);
      break;
    }
  }
  return removed;
}

std::vector<Thread> find_threads(const DualView& view) {
  const DualGraph& d = view.dual();
  for (int f = 0; f < d.face_count(); ++f) {
    if (view.degree(f) == 1) {
      throw Error(ErrorCode::kDegreeOneVertex, "dual vertex " + std::to_string(f) + " has degree one");
    }
  }
  std::vector<char> used(d.edge_capacity(), 0);
  auto next_live = [&](int f, EdgeId came_by) -> const Incidence* {
    for (const auto& inc : d.incidences(f)) {
      if (view.alive(inc.edge) && inc.edge != came_by) return &inc;
    }
    return nullptr;
  };
  auto walk = [&](int start, const Incidence& first, auto stop) {
    Thread t;
    t.vertices.push_back(start);
    used[first.edge] = 1;
    t.edges.push_back(first.edge);
    int cur = first.neighbor;
    EdgeId came = first.edge;
    t.vertices.push_back(cur);
    while (!stop(cur)) {
      const Incidence* step = next_live(cur, came);
      used[step->edge] = 1;
      t.edges.push_back(step->edge);
      came = step->edge;
      cur = step->neighbor;
      t.vertices.push_back(cur);
    }
    t.kind = (cur == start) ? ThreadKind::kCycle : ThreadKind::kPath;
    return t;
  };

  std::vector<Thread> threads;
  for (int a = 0; a < d.face_count(); ++a) {
    if (view.degree(a) < 3) continue;
    for (const auto& inc : d.incidences(a)) {
      if (!view.alive(inc.edge) || used[inc.edge]) continue;
      threads.push_back(walk(a, inc, [&](int v) { return view.degree(v) != 2; }));
    }
  }
  // What is left are components in which every vertex has degree two.
  for (const auto& de : d.dual_edges()) {
    if (!view.alive(de.edge) || used[de.edge]) continue;
    Incidence first{de.edge, de.right};
    int start = de.left;
    threads.push_back(walk(start, first, [&](int v) { return v == start; }));
  }
  return threads;
}

EdgeId middle_edge(const Thread& thread, const DualView& view) {
  const int len = thread.length();
  if (len == 0) throw Error(ErrorCode::kPrecondition, "empty thread");
  std::vector<EdgeId> order;
  if (thread.kind == ThreadKind::kPath) {
    order = thread.edges;
    if (thread.vertices.front() > thread.vertices.back()) std::reverse(order.begin(), order.end());
  } else {
    // vertices[i] --edges[i]--> vertices[i+1]; the last vertex repeats the first.
    int start_pos = 0;
    int branch_pos = kNone;
    for (int i = 0; i < len; ++i) {
      if (view.degree(thread.vertices[i]) != 2) branch_pos = i;
      if (thread.vertices[i] < thread.vertices[start_pos]) start_pos = i;
    }
    if (branch_pos != kNone) start_pos = branch_pos;
    std::vector<EdgeId> forward;
    std::vector<EdgeId> backward;
    for (int i = 0; i < len; ++i) {
      forward.push_back(thread.edges[(start_pos + i) % len]);
      backward.push_back(thread.edges[(start_pos - 1 - i + 2 * len) % len]);
    }
    order = forward.front() <= backward.front() ? forward : backward;
  }
  return order[(len + 1) / 2 - 1];
}

std::vector<EdgeId> select_far_edge_set(const DualGraph& dual, int girth, int alpha_value,
                                        std::vector<SelectionStep>* trace) {
  if (girth < 1 || alpha_value < 1) throw Error(ErrorCode::kPrecondition, "girth and alpha must be positive");
  DualView view(dual);
  view.prune_degree_one();
  std::vector<EdgeId> selected;
  while (view.live_edge_count() > 0) {
    auto threads = find_threads(view);
    const Thread* best = nullptr;
    EdgeId best_min = kNone;
    for (const auto& t : threads) {
      if (static_cast<std::int64_t>(t.length()) * alpha_value < girth) continue;
      EdgeId t_min = *std::min_element(t.edges.begin(), t.edges.end());
      if (best == nullptr || t.length() > best->length() ||
          (t.length() == best->length() && t_min < best_min)) {
        best = &t;
        best_min = t_min;
      }
    }
    if (best == nullptr) {
      throw Error(ErrorCode::kNoLongThread, "no thread of length >= " + std::to_string(girth) + "/" +
                                                std::to_string(alpha_value) + " among " +
                                                std::to_string(threads.size()) + " threads");
    }
    EdgeId e = middle_edge(*best, view);
    selected.push_back(e);
    view.remove(e);
    auto pruned = view.prune_degree_one();
    if (trace != nullptr) trace->push_back({e, best->length(), std::move(pruned)});
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

std::vector<EdgeId> bfs_spanning_tree(const EmbeddedGraph& g, std::span<const EdgeId> edges) {
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> adj(g.vertex_count());
  for (EdgeId e : sorted) {
    auto [u, v] = g.endpoints(e);
    if (u == v) continue;
    adj[u].push_back({e, v});
    adj[v].push_back({e, u});
  }
  std::vector<EdgeId> tree;
  if (g.vertex_count() == 0) return tree;
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<VertexId> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (auto [e, v] : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      tree.push_back(e);
      queue.push_back(v);
    }
  }
  if (static_cast<int>(tree.size()) != g.vertex_count() - 1) {
    throw Error(ErrorCode::kDisconnected, "edge set does not span the graph");
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

ThinTreeResult thin_spanning_tree(const EmbeddedGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "thin_spanning_tree needs a connected graph");
  ThinTreeResult r;
  r.genus = genus(g);
  r.alpha = alpha(r.genus);
  if (g.vertex_count() <= 1) return r;

  DualGraph dual = geometric_dual(g);
  r.dual_girth = dual_girth(dual);
  r.thinness_bound = Rational(2 * r.alpha, r.dual_girth);
  r.far_set = select_far_edge_set(dual, r.dual_girth, r.alpha);
  r.tree_edges = bfs_spanning_tree(g, r.far_set);

  r.measured_distance = min_pairwise_edge_distance(dual, r.far_set);
  if (r.measured_distance == kNone) {
    r.certificate_distance = r.dual_girth;
    r.certified_thinness = Rational(1, r.dual_girth);
  } else {
    r.certificate_distance = std::clamp(r.measured_distance, 1, r.dual_girth);
    r.certified_thinness = Rational(1, std::min(r.measured_distance + 1, r.dual_girth));
  }
  return r;
}

}  // namespace thintree
