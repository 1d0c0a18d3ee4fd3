#pragma once

#include <string>
#include <vector>

#include "thintree/connectivity.hpp"
#include "thintree/embedded_graph.hpp"
#include "thintree/numeric.hpp"

namespace thintree {

/// f(genus): 10 for planar graphs, 7 sqrt(genus) alpha(genus) otherwise.
Surd genus_factor(int genus);

struct BoundedGenusResult {
  std::vector<EdgeId> tree_edges;  // sorted
  int k = 0;
  int genus = 0;
  int alpha = 0;
  bool planar_branch = true;
  // f(genus) / k; zero for a single vertex.
  Surd thinness_bound;
  // Genus branch only.
  int surgery_iterations = 0;
  int surgery_deleted = 0;
  int components_after_surgery = 1;
  std::vector<EdgeId> connector_edges;  // sorted
};

/// Spanning tree of a connected graph with thinness f(genus)/k, where k is the
/// measured edge connectivity. Throws Disconnected.
BoundedGenusResult bounded_genus_thin_tree(const EmbeddedGraph& g);

struct ExtractionRound {
  int round = 0;
  int connectivity = 0;  // measured k_i of the residual graph
  bool meets_schedule = true;  // k_i >= k - i * g
  std::vector<EdgeId> tree_edges;
  Decimal cost;
};

struct WeightedThinTree {
  std::vector<EdgeId> tree_edges;  // sorted
  int k = 0;
  int genus = 0;
  Surd g_value;        // g(k) = f(genus)
  Surd thinness;       // 2 g(k) / k
  Rational cost_ratio; // c_tree / c_graph
  Decimal c_tree;
  Decimal c_graph;
  int rounds_planned = 0;
  int chosen_round = 0;
  bool truncated = false;
  std::string warning;
  std::vector<ExtractionRound> trace;
};

/// Extracts floor(k / 2g(k)) (at least one) edge-disjoint thin spanning trees
/// from successive residual graphs and returns the cheapest. A residual graph
/// that falls apart ends the extraction early with a warning; one that stays
/// connected but drops below the k - i g(k) schedule throws ExtractionFailure.
WeightedThinTree weighted_thin_tree(const EmbeddedGraph& g);

}  // namespace thintree
