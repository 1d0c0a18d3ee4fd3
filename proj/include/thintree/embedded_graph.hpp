#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "thintree/numeric.hpp"

namespace thintree {

using VertexId = int;
using EdgeId = int;
using DartId = int;

inline constexpr int kNone = -1;

// Edge e owns darts 2e and 2e+1.
inline constexpr DartId twin(DartId d) { return d ^ 1; }
inline constexpr EdgeId edge_of(DartId d) { return d >> 1; }

/// A multigraph with a rotation system, i.e. a cellular embedding on an
/// orientable surface. Loops and parallel edges are allowed. Edge ids are
/// stable under deletion, so the id space may be sparse.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return edge_count_; }
  // One past the largest edge id ever present.
  int edge_capacity() const { return static_cast<int>(alive_.size()); }
  int dart_capacity() const { return 2 * edge_capacity(); }

  bool has_edge(EdgeId e) const {
    return e >= 0 && e < edge_capacity() && alive_[e];
  }
  bool has_dart(DartId d) const { return has_edge(edge_of(d)); }
  // Live edge ids in increasing order.
  std::vector<EdgeId> edges() const;

  VertexId owner(DartId d) const { return owner_[d]; }
  DartId rotation_next(DartId d) const { return next_[d]; }
  DartId rotation_prev(DartId d) const { return prev_[d]; }
  // Face permutation: hop to the twin, then rotate counterclockwise.
  DartId face_next(DartId d) const { return next_[twin(d)]; }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
    return {owner_[2 * e], owner_[2 * e + 1]};
  }
  bool is_loop(EdgeId e) const { return owner_[2 * e] == owner_[2 * e + 1]; }

  // Counterclockwise dart order around v, starting at its smallest dart.
  std::vector<DartId> rotation(VertexId v) const;
  int degree(VertexId v) const;

  bool has_costs() const { return has_costs_; }
  Decimal cost(EdgeId e) const { return has_costs_ ? cost_[e] : Decimal::from_int(1); }
  Decimal total_cost() const;

  // Removes the edges and splices both darts out of their rotations.
  EmbeddedGraph without_edges(std::span<const EdgeId> doomed) const;

  friend EmbeddedGraph build_embedding(int, const std::vector<std::vector<DartId>>&,
                                       const std::vector<std::pair<DartId, DartId>>&,
                                       const std::map<EdgeId, Decimal>&);

 private:
  int vertex_count_ = 0;
  int edge_count_ = 0;
  std::vector<char> alive_;
  std::vector<VertexId> owner_;
  std::vector<DartId> next_;
  std::vector<DartId> prev_;
  std::vector<VertexId> first_dart_;
  std::vector<Decimal> cost_;
  bool has_costs_ = false;
};

/// Validates and assembles an embedding. Each twin pair must be {2e, 2e+1};
/// the rotations must list every dart exactly once. `costs` is either empty
/// or covers every edge.
EmbeddedGraph build_embedding(int vertex_count,
                              const std::vector<std::vector<DartId>>& rotations,
                              const std::vector<std::pair<DartId, DartId>>& twin_pairs,
                              const std::map<EdgeId, Decimal>& costs = {});

/// Same embedding with the given edge costs (empty map removes costs).
EmbeddedGraph with_costs(const EmbeddedGraph& g, const std::map<EdgeId, Decimal>& costs);

/// A face is a cycle of the face permutation. An isolated vertex bounds a
/// face of its own with an empty walk.
struct Face {
  std::vector<DartId> darts;
  VertexId isolated_vertex = kNone;
};

struct FaceSet {
  // Dart-bearing faces first, ordered by their smallest dart (each walk
  // starts there), then one face per isolated vertex in vertex order.
  std::vector<Face> faces;
  std::vector<int> face_of_dart;  // kNone for absent darts

  int count() const { return static_cast<int>(faces.size()); }
};

FaceSet trace_faces(const EmbeddedGraph& g);

std::vector<int> component_labels(const EmbeddedGraph& g);
int component_count(const EmbeddedGraph& g);
bool is_connected(const EmbeddedGraph& g);

// V - E + F.
int euler_characteristic(const EmbeddedGraph& g);

/// Total genus kappa - (V - E + F)/2. Throws OddEulerDefect if the Euler
/// defect is odd or negative.
int genus(const EmbeddedGraph& g);

struct DerivedGraph {
  EmbeddedGraph graph;
  std::vector<VertexId> vertex_origin;  // new vertex -> source vertex
  std::vector<EdgeId> edge_origin;      // new edge -> source edge
};

/// Replaces edge e by copies[e] parallel edges inserted consecutively in both
/// rotations, so neighbouring copies bound a bigon. Zero copies drops the
/// edge. Costs are inherited. New edge ids are dense, grouped by source edge.
DerivedGraph amplify(const EmbeddedGraph& g, std::span<const int> copies);

/// The connected component containing `seed`, with dense ids.
DerivedGraph extract_component(const EmbeddedGraph& g, VertexId seed);

}  // namespace thintree
