#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thintree/embedded_graph.hpp"
#include "thintree/numeric.hpp"
#include "thintree/pipeline.hpp"

namespace thintree {

struct AtspInstance {
  int n = 0;
  std::vector<std::vector<Decimal>> cost;  // cost[i][i] == 0

  Decimal arc(int i, int j) const { return cost[i][j]; }
};

/// `ATSP 1 <n>` followed by n rows of n nonnegative decimals.
AtspInstance parse_atsp(std::string_view text);
std::string format_atsp(const AtspInstance& inst);

/// Shortest-path closure, so the triangle inequality holds.
AtspInstance metric_completion(const AtspInstance& inst);
bool satisfies_triangle_inequality(const AtspInstance& inst);

using Arc = std::pair<int, int>;

struct HkOptions {
  // Exact rational arithmetic; by default for n <= 10.
  bool exact = false;
  bool exact_auto = true;
  int max_rounds = 2000;
  double epsilon = 1e-9;
};

struct HkSolution {
  std::map<Arc, Rational> x;  // positive entries only
  Rational objective;
  int cuts_added = 0;
  std::vector<std::uint64_t> cuts;  // vertex masks S with x(out(S)) >= 1 imposed
  bool exact = true;
  double tolerance = 0;  // 0 in exact mode
};

/// Held-Karp relaxation by cutting planes over degree equalities, separating
/// the most violated subtour cut with max-flow. Throws Infeasible,
/// IterationLimit, Precondition (n < 3).
HkSolution solve_held_karp(const AtspInstance& inst, const HkOptions& options = {});

/// Smallest x(out(S)) over nonempty proper S containing vertex 0 and its
/// smallest-mask minimiser, by max-flow.
std::pair<Rational, std::uint64_t> min_subtour_cut(int n, const std::map<Arc, Rational>& x);

struct SupportEdge {
  int u = 0;  // u < v
  int v = 0;
  Rational y;
  Decimal cost;  // min of the two directions
};

/// y_uv = x_uv + x_vu with costs min(c(u,v), c(v,u)); sorted by (u, v).
std::vector<SupportEdge> symmetrize(const HkSolution& x, const AtspInstance& inst);

/// floor(D * y) copies per support edge.
std::vector<int> discretize(const std::vector<SupportEdge>& support, std::int64_t denominator);

struct DiscreteSupport {
  EmbeddedGraph support;      // the supplied embedding, restricted and costed
  std::vector<int> edge_pair; // support-graph edge -> index into the support list
  DerivedGraph multigraph;    // amplified support
  int k = 0;                  // measured edge connectivity
  std::int64_t required_k = 0;  // 2D - |support|
};

/// Matches the support pairs against the embedding (each pair exactly once,
/// extra embedding edges dropped), amplifies by floor(D y), measures k.
/// Throws EmbeddingMismatch and ConnectivityShortfall.
DiscreteSupport build_discrete_support(const EmbeddedGraph& embedding, const std::vector<SupportEdge>& support,
                                       std::int64_t denominator);

/// Each tree edge in its cheaper direction (ties from smaller vertex).
std::vector<Arc> orient_tree(const std::vector<std::pair<int, int>>& tree_pairs, const AtspInstance& inst);

struct Tour {
  std::vector<int> order;
  Decimal cost;
};

struct RoundingReport {
  Tour tour;
  Decimal circulation_cost;
  Decimal tree_cost;
  // The circulation costs at most tree_cost + circulation_slack.
  Surd circulation_slack;  // 2 alpha c(x)
};

/// Integral min-cost circulation with f >= 1 on tree arcs and capacity
/// ceil(2 alpha x_a) + 1, Euler tour, shortcut. `alpha` is the thinness of
/// the oriented tree with respect to x. Throws CirculationInfeasible and
/// CostBoundViolated.
RoundingReport round_to_tour(const AtspInstance& inst, const HkSolution& x, const std::vector<Arc>& tree,
                             const Surd& alpha);

struct AtspOptions {
  std::int64_t denominator = 0;  // 0 means n^3
  HkOptions hk;
};

struct AtspReport {
  AtspInstance metric;
  HkSolution hk;
  std::vector<SupportEdge> support;
  std::int64_t denominator = 0;
  int support_genus = 0;
  int multigraph_k = 0;
  std::int64_t required_k = 0;
  WeightedThinTree thin_tree;
  std::vector<Arc> oriented_tree;
  Surd alpha_x;          // thinness of the tree with respect to x
  Rational sigma_x;      // c(oriented tree) / c(x)
  Surd beta;
  Surd approximation_bound;  // 3 beta (1 + 1/n) c(x)
  bool within_approximation_bound = false;
  RoundingReport rounding;
  Rational ratio;        // tour cost / OPT_HK
};

AtspReport atsp_approx(const AtspInstance& inst, const EmbeddedGraph& support_embedding,
                       const AtspOptions& options = {});

}  // namespace thintree
