#include "thintree/embedded_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "thintree/error.hpp"

namespace thintree {

std::vector<EdgeId> EmbeddedGraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(edge_count_);
  for (EdgeId e = 0; e < edge_capacity(); ++e) {
    if (alive_[e]) out.push_back(e);
  }
  return out;
}

std::vector<DartId> EmbeddedGraph::rotation(VertexId v) const {
  std::vector<DartId> out;
  DartId start = first_dart_[v];
  if (start == kNone) return out;
  DartId smallest = start;
  for (DartId d = next_[start]; d != start; d = next_[d]) smallest = std::min(smallest, d);
  DartId d = smallest;
  do {
    out.push_back(d);
    d = next_[d];
  } while (d != smallest);
  return out;
}

int EmbeddedGraph::degree(VertexId v) const {
  DartId start = first_dart_[v];
  if (start == kNone) return 0;
  int deg = 1;
  for (DartId d = next_[start]; d != start; d = next_[d]) ++deg;
  return deg;
}

Decimal EmbeddedGraph::total_cost() const {
  Decimal sum;
  for (EdgeId e = 0; e < edge_capacity(); ++e) {
    if (alive_[e]) sum += cost(e);
  }
  return sum;
}

EmbeddedGraph EmbeddedGraph::without_edges(std::span<const EdgeId> doomed) const {
  EmbeddedGraph h = *this;
  for (EdgeId e : doomed) {
    if (!h.has_edge(e)) {
      throw Error(ErrorCode::kEdgeAbsent, "cannot delete absent edge " + std::to_string(e));
    }
    for (DartId d : {2 * e, 2 * e + 1}) {
      VertexId v = h.owner_[d];
      DartId p = h.prev_[d];
      DartId n = h.next_[d];
      if (n == d) {
        h.first_dart_[v] = kNone;
      } else {
        h.next_[p] = n;
        h.prev_[n] = p;
        if (h.first_dart_[v] == d) h.first_dart_[v] = n;
      }
      h.owner_[d] = kNone;
      h.next_[d] = kNone;
      h.prev_[d] = kNone;
    }
    h.alive_[e] = 0;
    --h.edge_count_;
  }
  return h;
}

EmbeddedGraph build_embedding(int vertex_count,
                              const std::vector<std::vector<DartId>>& rotations,
                              const std::vector<std::pair<DartId, DartId>>& twin_pairs,
                              const std::map<EdgeId, Decimal>& costs) {
  if (vertex_count < 0) throw Error(ErrorCode::kBadParams, "negative vertex count");
  if (static_cast<int>(rotations.size()) != vertex_count) {
    throw Error(ErrorCode::kMalformedRotation, "expected one rotation per vertex");
  }
  EdgeId capacity = 0;
  for (auto [a, b] : twin_pairs) {
    if (a < 0 || b < 0) throw Error(ErrorCode::kBadTwin, "negative dart id");
    capacity = std::max(capacity, edge_of(std::max(a, b)) + 1);
  }

  EmbeddedGraph g;
  g.vertex_count_ = vertex_count;
  g.alive_.assign(capacity, 0);
  g.owner_.assign(2 * capacity, kNone);
  g.next_.assign(2 * capacity, kNone);
  g.prev_.assign(2 * capacity, kNone);
  g.first_dart_.assign(vertex_count, kNone);

  for (auto [a, b] : twin_pairs) {
    if (twin(a) != b || edge_of(a) != edge_of(b)) {
      throw Error(ErrorCode::kBadTwin, "darts " + std::to_string(a) + " and " + std::to_string(b) +
                                           " are not the pair {2e, 2e+1}");
    }
    if (g.alive_[edge_of(a)]) {
      throw Error(ErrorCode::kBadTwin, "edge " + std::to_string(edge_of(a)) + " listed twice");
    }
    g.alive_[edge_of(a)] = 1;
    ++g.edge_count_;
  }

  for (VertexId v = 0; v < vertex_count; ++v) {
    const auto& rot = rotations[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      DartId d = rot[i];
      if (d < 0 || d >= 2 * capacity || !g.alive_[edge_of(d)]) {
        throw Error(ErrorCode::kMalformedRotation,
                    "vertex " + std::to_string(v) + " lists unknown dart " + std::to_string(d));
      }
      if (g.owner_[d] != kNone) {
        throw Error(ErrorCode::kMalformedRotation, "dart " + std::to_string(d) + " listed twice");
      }
      g.owner_[d] = v;
      DartId n = rot[(i + 1) % rot.size()];
      if (n >= 0 && n < 2 * capacity) {
        g.next_[d] = n;
        g.prev_[n] = d;
      }
    }
    if (!rot.empty()) g.first_dart_[v] = rot.front();
  }
  for (DartId d = 0; d < 2 * capacity; ++d) {
    if (g.alive_[edge_of(d)] && g.owner_[d] == kNone) {
      throw Error(ErrorCode::kMalformedRotation, "dart " + std::to_string(d) + " missing from rotations");
    }
  }

  if (!costs.empty()) {
    g.has_costs_ = true;
    g.cost_.assign(capacity, Decimal());
    for (EdgeId e = 0; e < capacity; ++e) {
      if (!g.alive_[e]) continue;
      auto it = costs.find(e);
      if (it == costs.end()) {
        throw Error(ErrorCode::kBadParams, "edge " + std::to_string(e) + " has no cost");
      }
      g.cost_[e] = it->second;
    }
  }
  return g;
}

FaceSet trace_faces(const EmbeddedGraph& g) {
  FaceSet fs;
  fs.face_of_dart.assign(g.dart_capacity(), kNone);
  for (DartId d = 0; d < g.dart_capacity(); ++d) {
    if (!g.has_dart(d) || fs.face_of_dart[d] != kNone) continue;
    int id = fs.count();
    Face face;
    DartId cur = d;
    do {
      fs.face_of_dart[cur] = id;
      face.darts.push_back(cur);
      cur = g.face_next(cur);
    } while (cur != d);
    fs.faces.push_back(std::move(face));
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) fs.faces.push_back(Face{{}, v});
  }
  return fs;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<int> component_labels(const EmbeddedGraph& g) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.endpoints(e);
    int ru = find_root(parent, u);
    int rv = find_root(parent, v);
    if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
  }
  // Label components 0.. in order of their smallest vertex.
  std::vector<int> label(g.vertex_count(), kNone);
  std::vector<int> root_label(g.vertex_count(), kNone);
  int next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int r = find_root(parent, v);
    if (root_label[r] == kNone) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

int component_count(const EmbeddedGraph& g) {
  auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool is_connected(const EmbeddedGraph& g) { return component_count(g) <= 1; }

int euler_characteristic(const EmbeddedGraph& g) {
  return g.vertex_count() - g.edge_count() + trace_faces(g).count();
}

int genus(const EmbeddedGraph& g) {
  int defect = 2 * component_count(g) - euler_characteristic(g);
  if (defect < 0 || defect % 2 != 0) {
    throw Error(ErrorCode::kOddEulerDefect,
                "2*kappa - (V - E + F) = " + std::to_string(defect) + " is not a nonnegative even number");
  }
  return defect / 2;
}

EmbeddedGraph with_costs(const EmbeddedGraph& g, const std::map<EdgeId, Decimal>& costs) {
  std::vector<std::vector<DartId>> rotations(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) rotations[v] = g.rotation(v);
  std::vector<std::pair<DartId, DartId>> twins;
  for (EdgeId e : g.edges()) twins.emplace_back(2 * e, 2 * e + 1);
  return build_embedding(g.vertex_count(), rotations, twins, costs);
}

DerivedGraph amplify(const EmbeddedGraph& g, std::span<const int> copies) {
  if (static_cast<int>(copies.size()) < g.edge_capacity()) {
    throw Error(ErrorCode::kBadParams, "multiplicity vector shorter than edge id space");
  }
  DerivedGraph out;
  std::vector<EdgeId> base(g.edge_capacity(), kNone);
  std::map<EdgeId, Decimal> costs;
  for (EdgeId e : g.edges()) {
    if (copies[e] < 0) throw Error(ErrorCode::kBadParams, "negative multiplicity");
    base[e] = static_cast<EdgeId>(out.edge_origin.size());
    for (int i = 0; i < copies[e]; ++i) {
      if (g.has_costs()) costs[base[e] + i] = g.cost(e);
      out.edge_origin.push_back(e);
    }
  }
  std::vector<std::vector<DartId>> rotations(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out.vertex_origin.push_back(v);
    for (DartId d : g.rotation(v)) {
      EdgeId e = edge_of(d);
      int q = copies[e];
      if ((d & 1) == 0) {
        for (int i = 0; i < q; ++i) rotations[v].push_back(2 * (base[e] + i));
      } else {
        for (int i = q - 1; i >= 0; --i) rotations[v].push_back(2 * (base[e] + i) + 1);
      }
    }
  }
  std::vector<std::pair<DartId, DartId>> twins;
  for (EdgeId e = 0; e < static_cast<EdgeId>(out.edge_origin.size()); ++e) twins.emplace_back(2 * e, 2 * e + 1);
  out.graph = build_embedding(g.vertex_count(), rotations, twins, costs);
  return out;
}

DerivedGraph extract_component(const EmbeddedGraph& g, VertexId seed) {
  auto labels = component_labels(g);
  int want = labels.at(seed);
  DerivedGraph out;
  std::vector<VertexId> new_vertex(g.vertex_count(), kNone);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (labels[v] == want) {
      new_vertex[v] = static_cast<VertexId>(out.vertex_origin.size());
      out.vertex_origin.push_back(v);
    }
  }
  std::vector<EdgeId> new_edge(g.edge_capacity(), kNone);
  std::map<EdgeId, Decimal> costs;
  for (EdgeId e : g.edges()) {
    if (labels[g.endpoints(e).first] != want) continue;
    new_edge[e] = static_cast<EdgeId>(out.edge_origin.size());
    if (g.has_costs()) costs[new_edge[e]] = g.cost(e);
    out.edge_origin.push_back(e);
  }
  std::vector<std::vector<DartId>> rotations(out.vertex_origin.size());
  for (std::size_t i = 0; i < out.vertex_origin.size(); ++i) {
    for (DartId d : g.rotation(out.vertex_origin[i])) {
      rotations[i].push_back(2 * new_edge[edge_of(d)] + (d & 1));
    }
  }
  std::vector<std::pair<DartId, DartId>> twins;
  for (EdgeId e = 0; e < static_cast<EdgeId>(out.edge_origin.size()); ++e) twins.emplace_back(2 * e, 2 * e + 1);
  out.graph = build_embedding(static_cast<int>(out.vertex_origin.size()), rotations, twins, costs);
  return out;
}

}  // namespace thintree
