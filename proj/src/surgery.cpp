#include "thintree/surgery.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "thintree/connectivity.hpp"
#include "thintree/error.hpp"

namespace thintree {
namespace {

using SortedIncidences = std::vector<std::vector<Incidence>>;

SortedIncidences sorted_incidences(const DualGraph& d) {
  SortedIncidences out(d.face_count());
  for (int f = 0; f < d.face_count(); ++f) {
    out[f] = d.incidences(f);
    std::sort(out[f].begin(), out[f].end(),
              [](const Incidence& a, const Incidence& b) { return a.edge < b.edge; });
  }
  return out;
}

std::vector<int> bfs_without(const SortedIncidences& adj, int source, EdgeId banned) {
  std::vector<int> dist(adj.size(), kNone);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& inc : adj[u]) {
      if (inc.edge == banned || dist[inc.neighbor] != kNone) continue;
      dist[inc.neighbor] = dist[u] + 1;
      queue.push_back(inc.neighbor);
    }
  }
  return dist;
}

// Cycle from -> (e0) -> to -> ... -> from, greedily taking the smallest edge
// that stays on a shortest path back to `from`.
DualCycle greedy_cycle(const SortedIncidences& adj, EdgeId e0, int from, int to,
                       const std::vector<int>& dist_to_from) {
  DualCycle c;
  c.edges.push_back(e0);
  c.faces.push_back(from);
  int cur = to;
  while (cur != from) {
    c.faces.push_back(cur);
    const Incidence* step = nullptr;
    for (const auto& inc : adj[cur]) {
      if (inc.edge != e0 && dist_to_from[inc.neighbor] == dist_to_from[cur] - 1) {
        step = &inc;
        break;
      }
    }
    c.edges.push_back(step->edge);
    cur = step->neighbor;
  }
  return c;
}

struct Snapshot {
  int genus;
  int components;
  int faces;
};

Snapshot snapshot(const EmbeddedGraph& g) {
  return {genus(g), component_count(g), trace_faces(g).count()};
}

void validate_cycle(const EmbeddedGraph& g, const DualCycle& c) {
  const int len = c.length();
  if (len == 0 || static_cast<int>(c.faces.size()) != len) {
    throw Error(ErrorCode::kBadParams, "dual cycle needs matching non-empty edge and face lists");
  }
  std::set<EdgeId> edges(c.edges.begin(), c.edges.end());
  std::set<int> faces(c.faces.begin(), c.faces.end());
  if (static_cast<int>(edges.size()) != len || static_cast<int>(faces.size()) != len) {
    throw Error(ErrorCode::kBadParams, "dual cycle repeats an edge or a face");
  }
  for (EdgeId e : c.edges) {
    if (!g.has_edge(e)) throw Error(ErrorCode::kEdgeAbsent, "edge " + std::to_string(e) + " not in graph");
  }
  DualGraph d = geometric_dual(g);
  for (int i = 0; i < len; ++i) {
    const DualEdge& de = d.dual_edge(c.edges[i]);
    int a = c.faces[i];
    int b = c.faces[(i + 1) % len];
    if (!((de.left == a && de.right == b) || (de.left == b && de.right == a))) {
      throw Error(ErrorCode::kBadParams,
                  "dual edge " + std::to_string(c.edges[i]) + " does not join consecutive cycle faces");
    }
  }
}

}  // namespace

Surd girth_threshold(int k, int genus) {
  if (k <= 0 || genus <= 0) throw Error(ErrorCode::kPrecondition, "threshold needs k > 0 and genus > 0");
  // k / (3 sqrt(g)) = (k / (3 g)) * sqrt(g)
  return Surd(Rational(k, 3 * genus), genus);
}

std::optional<DualCycle> find_short_dual_cycle(const DualGraph& d, const Surd& threshold) {
  if (threshold.compare(Rational(0)) <= 0) throw Error(ErrorCode::kPrecondition, "threshold must be positive");
  if (d.edge_count() == 0) return std::nullopt;
  int girth = 0;
  try {
    girth = dual_girth(d);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNoCycle) return std::nullopt;
    throw;
  }
  if (threshold.compare(Rational(girth)) <= 0) return std::nullopt;

  // Edges are scanned in increasing id, so the first edge found on a shortest
  // cycle is the smallest edge of that cycle.
  SortedIncidences adj = sorted_incidences(d);
  for (const DualEdge& de : d.dual_edges()) {
    if (de.left == de.right) {
      if (girth == 1) return DualCycle{{de.edge}, {de.left}};
      continue;
    }
    std::vector<int> dist_left = bfs_without(adj, de.left, de.edge);
    if (dist_left[de.right] != girth - 1) continue;
    std::vector<int> dist_right = bfs_without(adj, de.right, de.edge);
    DualCycle a = greedy_cycle(adj, de.edge, de.left, de.right, dist_left);
    DualCycle b = greedy_cycle(adj, de.edge, de.right, de.left, dist_right);
    return std::lexicographical_compare(b.edges.begin(), b.edges.end(), a.edges.begin(), a.edges.end()) ? b
                                                                                                         : a;
  }
  throw Error(ErrorCode::kNoCycle, "girth reported but no shortest cycle found");
}

EmbeddedGraph delete_dual_cycle(const EmbeddedGraph& g, const DualCycle& cycle, SurgeryStep* record) {
  validate_cycle(g, cycle);
  Snapshot before = snapshot(g);
  EmbeddedGraph h = g.without_edges(cycle.edges);
  Snapshot after = snapshot(h);
  const int len = cycle.length();

  if (!(after.genus < before.genus || after.components > before.components)) {
    throw Error(ErrorCode::kDichotomyViolation,
                "deleting a dual cycle of length " + std::to_string(len) + " kept genus " +
                    std::to_string(before.genus) + "->" + std::to_string(after.genus) + " and components " +
                    std::to_string(before.components) + "->" + std::to_string(after.components));
  }
  if (after.faces != before.faces - len + 2) {
    throw Error(ErrorCode::kDichotomyViolation,
                "face count " + std::to_string(after.faces) + " after cutting, expected " +
                    std::to_string(before.faces - len + 2));
  }
  if (record != nullptr) {
    record->cycle_edges = cycle.edges;
    std::sort(record->cycle_edges.begin(), record->cycle_edges.end());
    record->cycle_length = len;
    record->genus_before = before.genus;
    record->genus_after = after.genus;
    record->components_before = before.components;
    record->components_after = after.components;
    record->faces_before = before.faces;
    record->faces_after = after.faces;
  }
  return h;
}

SurgeryResult increase_dual_girth(const EmbeddedGraph& g, int k, int genus_value) {
  if (genus_value == 0) throw Error(ErrorCode::kZeroGenus, "planar input; use the planar branch");
  if (genus_value < 0 || k < 1) throw Error(ErrorCode::kPrecondition, "need k >= 1 and genus >= 1");
  const int measured_genus = genus(g);
  if (measured_genus != genus_value) {
    throw Error(ErrorCode::kPrecondition, "given genus " + std::to_string(genus_value) +
                                              " but embedding has genus " + std::to_string(measured_genus));
  }
  const int measured_k = edge_connectivity(g);
  if (measured_k < k) {
    throw Error(ErrorCode::kNotEdgeConnected,
                "graph is " + std::to_string(measured_k) + "-edge-connected, need " + std::to_string(k));
  }

  SurgeryResult r;
  r.k = k;
  r.genus = genus_value;
  r.threshold = girth_threshold(k, genus_value);
  r.initial_components = component_count(g);
  r.graph = g;
  while (true) {
    DualGraph d = geometric_dual(r.graph);
    auto cycle = find_short_dual_cycle(d, r.threshold);
    if (!cycle) break;
    SurgeryStep step;
    r.graph = delete_dual_cycle(r.graph, *cycle, &step);
    r.log.total_deleted += step.cycle_length;
    r.log.iterations.push_back(std::move(step));
  }
  r.final_genus = genus(r.graph);
  r.final_components = component_count(r.graph);
  DualGraph d = geometric_dual(r.graph);
  if (d.edge_count() > 0) {
    try {
      r.final_dual_girth = dual_girth(d);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoCycle) throw;
    }
  }
  return r;
}

std::vector<std::string> surgery_violations(const SurgeryResult& r) {
  std::vector<std::string> out;
  const int m = static_cast<int>(r.log.iterations.size());
  int sum = 0;
  for (int i = 0; i < m; ++i) {
    const SurgeryStep& s = r.log.iterations[i];
    const std::string tag = "iteration " + std::to_string(i) + ": ";
    sum += s.cycle_length;
    if (r.threshold.compare(Rational(s.cycle_length)) <= 0) out.push_back(tag + "cycle not below threshold");
    if (!(s.genus_after < s.genus_before || s.components_after > s.components_before)) {
      out.push_back(tag + "neither genus dropped nor components grew");
    }
    if (s.genus_after > s.genus_before || s.components_after < s.components_before) {
      out.push_back(tag + "genus grew or components merged");
    }
  }
  if (sum != r.log.total_deleted) out.push_back("total_deleted differs from the sum of cycle lengths");
  if (m > 0 && (r.threshold * Rational(m)).compare(Rational(r.log.total_deleted)) < 0) {
    out.push_back("total_deleted exceeds m * threshold");
  }
  if (r.final_components >= 2 && Rational(r.final_components * r.k, 2) > Rational(r.log.total_deleted)) {
    out.push_back("fewer deleted edges than the components force");
  }
  if (m > r.genus - r.final_genus + r.final_components - r.initial_components) {
    out.push_back("iteration count exceeds genus drop plus component growth");
  }
  if (static_cast<std::int64_t>(r.final_components) * r.final_components > 4 * static_cast<std::int64_t>(r.genus)) {
    out.push_back("more than 2 sqrt(genus) components");
  }
  if (r.final_dual_girth != kNone && r.threshold.compare(Rational(r.final_dual_girth)) > 0) {
    out.push_back("final dual girth below threshold");
  }
  return out;
}

}  // namespace thintree
