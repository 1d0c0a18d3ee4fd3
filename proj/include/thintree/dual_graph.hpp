#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "thintree/embedded_graph.hpp"

namespace thintree {

struct DualEdge {
  EdgeId edge = kNone;
  int left = kNone;   // face of dart 2e
  int right = kNone;  // face of dart 2e+1
};

struct Incidence {
  EdgeId edge;
  int neighbor;
};

/// Geometric dual: one vertex per primal face, dual edge e* shares the id of
/// its primal edge e. Immutable after construction.
class DualGraph {
 public:
  int face_count() const { return faces_.count(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int edge_capacity() const { return static_cast<int>(slot_.size()); }
  bool has_edge(EdgeId e) const { return e >= 0 && e < edge_capacity() && slot_[e] != kNone; }

  // Increasing edge id.
  const std::vector<DualEdge>& dual_edges() const { return edges_; }
  const DualEdge& dual_edge(EdgeId e) const { return edges_[slot_[e]]; }

  // Incidences of face f in walk order; a dual loop appears twice.
  const std::vector<Incidence>& incidences(int f) const { return incidence_[f]; }
  int degree(int f) const { return static_cast<int>(incidence_[f].size()); }

  const FaceSet& faces() const { return faces_; }

  friend DualGraph geometric_dual(const EmbeddedGraph& g);

 private:
  FaceSet faces_;
  std::vector<DualEdge> edges_;
  std::vector<int> slot_;
  std::vector<std::vector<Incidence>> incidence_;
};

DualGraph geometric_dual(const EmbeddedGraph& g);

/// Length of a shortest cycle in the dual (loop = 1, parallel pair = 2).
/// Throws NoCycle when the dual is a forest.
int dual_girth(const DualGraph& d);

/// Unweighted BFS distances from a set of dual vertices, optionally over a
/// subset of live edges. Unreachable vertices get kNone.
std::vector<int> dual_distances(const DualGraph& d, std::span<const int> sources,
                                const std::vector<char>* alive = nullptr);

/// Closest distance between the endpoints of two dual edges (0 when they
/// share an endpoint). Throws EdgeAbsent.
int edge_distance(const DualGraph& d, EdgeId e, EdgeId f);

/// Smallest pairwise edge_distance within a set of dual edges, computed with a
/// single multi-source BFS. Returns kNone for fewer than two edges or when no
/// two of them are connected.
int min_pairwise_edge_distance(const DualGraph& d, std::span<const EdgeId> edges);

/// A closed walk in the dual: faces[i] --edges[i]--> faces[i+1 mod len].
struct DualCycle {
  std::vector<EdgeId> edges;
  std::vector<int> faces;

  int length() const { return static_cast<int>(edges.size()); }
};

/// Vertex subset U with 0 < |U| < V.
class Cut {
 public:
  static Cut of(int vertex_count, std::span<const VertexId> side);
  static Cut from_mask(int vertex_count, std::uint64_t mask);

  int vertex_count() const { return static_cast<int>(in_side_.size()); }
  bool contains(VertexId v) const { return in_side_[v] != 0; }
  std::vector<VertexId> side() const;

 private:
  std::vector<char> in_side_;
};

/// Edges of G crossing the cut.
std::vector<EdgeId> cut_edges(const EmbeddedGraph& g, const Cut& cut);

/// Splits S* (dual edges of the cut) into edge-disjoint simple cycles.
/// Throws ParityViolation if some face meets the cut an odd number of times.
std::vector<DualCycle> cut_to_dual_cycles(const EmbeddedGraph& g, const DualGraph& d, const Cut& cut);

}  // namespace thintree
