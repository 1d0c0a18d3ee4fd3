#pragma once

#include <span>
#include <vector>

#include "thintree/dual_graph.hpp"
#include "thintree/embedded_graph.hpp"
#include "thintree/numeric.hpp"

namespace thintree {

/// 4 + floor(2 log2(genus + 3/2)), evaluated in integers.
int alpha(int genus);

enum class ThreadKind { kPath, kCycle };

/// Maximal chain of degree-two dual vertices. For a path, vertices has
/// length+1 entries; for a cycle the first vertex is repeated at the end.
struct Thread {
  std::vector<EdgeId> edges;
  std::vector<int> vertices;
  ThreadKind kind = ThreadKind::kPath;

  int length() const { return static_cast<int>(edges.size()); }
};

/// The dual restricted to a shrinking set of live edges.
class DualView {
 public:
  explicit DualView(const DualGraph& dual);

  const DualGraph& dual() const { return *dual_; }
  bool alive(EdgeId e) const { return alive_[e] != 0; }
  const std::vector<char>& alive_mask() const { return alive_; }
  int degree(int face) const { return degree_[face]; }
  int live_edge_count() const { return live_; }
  std::vector<EdgeId> live_edges() const;

  void remove(EdgeId e);
  // Iteratively strips degree-one vertices; returns the removed edges.
  std::vector<EdgeId> prune_degree_one();

 private:
  const DualGraph* dual_;
  std::vector<char> alive_;
  std::vector<int> degree_;
  int live_ = 0;
};

/// Every live edge lands in exactly one thread. Throws DegreeOneVertex if the
/// view still has a vertex of degree one.
std::vector<Thread> find_threads(const DualView& view);

/// Edge at position ceil(L/2) counted from the thread's start: the smaller
/// endpoint of a path, or the unique branch vertex (else the smallest vertex)
/// of a cycle, walking first along the smaller of its two edges there.
EdgeId middle_edge(const Thread& thread, const DualView& view);

struct SelectionStep {
  EdgeId selected = kNone;
  int thread_length = 0;
  std::vector<EdgeId> pruned;
};

/// Repeatedly takes the middle edge of the longest thread with
/// length * alpha >= girth, then strips degree-one vertices, until the dual
/// is empty. Throws NoLongThread if no thread qualifies.
std::vector<EdgeId> select_far_edge_set(const DualGraph& dual, int girth, int alpha,
                                        std::vector<SelectionStep>* trace = nullptr);

/// Breadth-first spanning tree of (V, edges) from vertex 0, visiting
/// incident edges by increasing id. Throws Disconnected if it does not span.
std::vector<EdgeId> bfs_spanning_tree(const EmbeddedGraph& g, std::span<const EdgeId> edges);

struct ThinTreeResult {
  std::vector<EdgeId> tree_edges;  // sorted
  std::vector<EdgeId> far_set;     // F, sorted
  int dual_girth = 0;
  int genus = 0;
  int alpha = 0;
  Rational thinness_bound;         // 2 alpha / g*
  // m = min pairwise dual distance of F*, clamped to [1, g*]; F is 1/m-thin.
  int certificate_distance = 0;
  // Raw minimum pairwise distance, kNone if F* has fewer than two edges.
  int measured_distance = kNone;
  // 1 / min(measured + 1, g*): the cycle-packing form of the same certificate.
  Rational certified_thinness;
};

/// Spanning tree with thinness 2*alpha/g* for a connected embedded graph.
/// A single vertex yields an empty tree with zero bounds.
ThinTreeResult thin_spanning_tree(const EmbeddedGraph& g);

}  // namespace thintree
