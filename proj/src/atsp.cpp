#include "thintree/atsp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thintree/connectivity.hpp"
#include "thintree/error.hpp"
#include "thintree/flow.hpp"
#include "thintree/simplex.hpp"
#include "thintree/thin_tree.hpp"

namespace thintree {
namespace {

constexpr std::int64_t kSnap = 1'000'000'000;

Rational snap(double v) {
  return Rational(static_cast<std::int64_t>(std::llround(v * static_cast<double>(kSnap))), kSnap);
}

Rational to_rational(const Rational& v) { return v; }
Rational to_rational(double v) { return snap(v); }

template <typename T>
T cost_value(Decimal d) {
  if constexpr (std::is_floating_point_v<T>) {
    return d.to_double();
  } else {
    return d.to_rational();
  }
}

std::uint64_t mask_of(const std::vector<char>& side) {
  std::uint64_t m = 0;
  for (std::size_t v = 0; v < side.size(); ++v) {
    if (side[v]) m |= std::uint64_t{1} << v;
  }
  return m;
}

void check_status(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return;
    case LpStatus::kInfeasible:
      throw Error(ErrorCode::kInfeasible, "restricted Held-Karp LP is infeasible");
    case LpStatus::kUnbounded:
      throw Error(ErrorCode::kInfeasible, "restricted Held-Karp LP is unbounded");
    case LpStatus::kIterationLimit:
      throw Error(ErrorCode::kIterationLimit, "simplex pivot limit reached");
  }
}

template <typename T>
HkSolution cutting_plane(const AtspInstance& inst, const HkOptions& options) {
  const int n = inst.n;
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) arcs.emplace_back(i, j);
    }
  }
  const int m = static_cast<int>(arcs.size());
  std::vector<T> cost(m);
  for (int a = 0; a < m; ++a) cost[a] = cost_value<T>(inst.arc(arcs[a].first, arcs[a].second));

  Simplex<T> lp(cost);
  for (int v = 0; v < n; ++v) {
    std::vector<T> out(m, T(0));
    std::vector<T> in(m, T(0));
    for (int a = 0; a < m; ++a) {
      if (arcs[a].first == v) out[a] = T(1);
      if (arcs[a].second == v) in[a] = T(1);
    }
    lp.add_equality(std::move(out), T(1));
    lp.add_equality(std::move(in), T(1));
  }
  check_status(lp.solve());

  HkSolution sol;
  sol.exact = !std::is_floating_point_v<T>;
  sol.tolerance = sol.exact ? 0.0 : options.epsilon;
  const Rational cutoff = sol.exact ? Rational(1) : Rational(1) - snap(options.epsilon);
  while (true) {
    std::vector<T> values = lp.primal_values();
    sol.x.clear();
    for (int a = 0; a < m; ++a) {
      Rational v = to_rational(values[a]);
      if (v > 0) sol.x[arcs[a]] = v;
    }
    auto [value, mask] = min_subtour_cut(n, sol.x);
    if (!(value < cutoff)) break;
    if (sol.cuts_added >= options.max_rounds) {
      throw Error(ErrorCode::kIterationLimit, "cutting plane exceeded " + std::to_string(options.max_rounds) + " rounds");
    }
    std::vector<T> row(m, T(0));
    for (int a = 0; a < m; ++a) {
      bool from_in = (mask >> arcs[a].first) & 1;
      bool to_in = (mask >> arcs[a].second) & 1;
      if (from_in && !to_in) row[a] = T(1);
    }
    check_status(lp.add_cut(row, T(1)));
    sol.cuts.push_back(mask);
    ++sol.cuts_added;
  }
  sol.objective = 0;
  for (const auto& [arc, v] : sol.x) sol.objective += v * inst.arc(arc.first, arc.second).to_rational();
  return sol;
}

}  // namespace

AtspInstance parse_atsp(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string magic;
  std::string version;
  std::string count;
  if (!(in >> magic >> version >> count) || magic != "ATSP" || version != "1") {
    throw Error(ErrorCode::kParse, "expected header 'ATSP 1 <n>'");
  }
  AtspInstance inst;
  try {
    inst.n = std::stoi(count);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParse, "bad vertex count '" + count + "'");
  }
  if (inst.n < 1 || inst.n > 4096) throw Error(ErrorCode::kParse, "vertex count out of range");
  inst.cost.assign(inst.n, std::vector<Decimal>(inst.n));
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.n; ++j) {
      std::string token;
      if (!(in >> token)) throw Error(ErrorCode::kParse, "cost matrix ends early");
      inst.cost[i][j] = Decimal::parse(token);
    }
    if (inst.cost[i][i].units() != 0) {
      throw Error(ErrorCode::kParse, "diagonal entry " + std::to_string(i) + " is not zero");
    }
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::kParse, "trailing token '" + extra + "'");
  return inst;
}

std::string format_atsp(const AtspInstance& inst) {
  std::string out = "ATSP 1 " + std::to_string(inst.n) + "\n";
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.n; ++j) {
      if (j > 0) out += ' ';
      out += inst.cost[i][j].str();
    }
    out += '\n';
  }
  return out;
}

AtspInstance metric_completion(const AtspInstance& inst) {
  AtspInstance out = inst;
  const int n = inst.n;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Decimal via = out.cost[i][k] + out.cost[k][j];
        if (via < out.cost[i][j]) out.cost[i][j] = via;
      }
    }
  }
  return out;
}

bool satisfies_triangle_inequality(const AtspInstance& inst) {
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.n; ++j) {
      for (int k = 0; k < inst.n; ++k) {
        if (inst.cost[i][k] + inst.cost[k][j] < inst.cost[i][j]) return false;
      }
    }
  }
  return true;
}

std::pair<Rational, std::uint64_t> min_subtour_cut(int n, const std::map<Arc, Rational>& x) {
  if (n < 2) throw Error(ErrorCode::kPrecondition, "need at least two vertices");
  if (n > 63) throw Error(ErrorCode::kTooLarge, "subtour masks support at most 63 vertices");
  MaxFlow<Rational> net(n);
  for (const auto& [arc, v] : x) net.add_edge(arc.first, arc.second, v);
  Rational best = -1;
  std::uint64_t best_mask = 0;
  for (int t = 1; t < n; ++t) {
    Rational value = net.run(0, t);
    std::uint64_t mask = mask_of(net.source_side());
    if (best < 0 || value < best || (value == best && mask < best_mask)) {
      best = value;
      best_mask = mask;
    }
  }
  return {best, best_mask};
}

HkSolution solve_held_karp(const AtspInstance& inst, const HkOptions& options) {
  if (inst.n < 3) throw Error(ErrorCode::kPrecondition, "Held-Karp needs n >= 3");
  if (inst.n > 63) throw Error(ErrorCode::kTooLarge, "Held-Karp solver supports at most 63 vertices");
  bool exact = options.exact || (options.exact_auto && inst.n <= 10);
  return exact ? cutting_plane<Rational>(inst, options) : cutting_plane<double>(inst, options);
}

std::vector<SupportEdge> symmetrize(const HkSolution& x, const AtspInstance& inst) {
  std::map<std::pair<int, int>, Rational> y;
  for (const auto& [arc, v] : x.x) {
    if (v <= 0) continue;
    y[{std::min(arc.first, arc.second), std::max(arc.first, arc.second)}] += v;
  }
  std::vector<SupportEdge> out;
  for (const auto& [pair, v] : y) {
    Decimal c = std::min(inst.arc(pair.first, pair.second), inst.arc(pair.second, pair.first));
    out.push_back({pair.first, pair.second, v, c});
  }
  return out;
}

std::vector<int> discretize(const std::vector<SupportEdge>& support, std::int64_t denominator) {
  if (denominator < 1) throw Error(ErrorCode::kBadParams, "denominator must be positive");
  std::vector<int> copies;
  for (const auto& e : support) {
    BigInt c = floor(e.y * Rational(denominator));
    if (c > 1'000'000'000) throw Error(ErrorCode::kTooLarge, "too many parallel copies");
    copies.push_back(static_cast<int>(c));
  }
  return copies;
}

DiscreteSupport build_discrete_support(const EmbeddedGraph& embedding, const std::vector<SupportEdge>& support,
                                       std::int64_t denominator) {
  std::map<std::pair<int, int>, int> wanted;
  for (int i = 0; i < static_cast<int>(support.size()); ++i) {
    const auto& s = support[i];
    if (s.u >= embedding.vertex_count() || s.v >= embedding.vertex_count()) {
      throw Error(ErrorCode::kEmbeddingMismatch, "support vertex outside the embedding");
    }
    wanted[{s.u, s.v}] = i;
  }
  DiscreteSupport ds;
  std::vector<EdgeId> extras;
  std::map<std::pair<int, int>, EdgeId> found;
  std::map<EdgeId, Decimal> costs;
  for (EdgeId e : embedding.edges()) {
    auto [a, b] = embedding.endpoints(e);
    std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    auto it = wanted.find(key);
    if (a == b || it == wanted.end()) {
      extras.push_back(e);
      continue;
    }
    if (found.count(key)) {
      throw Error(ErrorCode::kEmbeddingMismatch,
                  "support pair " + std::to_string(key.first) + "-" + std::to_string(key.second) +
                      " embedded more than once");
    }
    found[key] = e;
    costs[e] = support[it->second].cost;
  }
  for (const auto& [key, idx] : wanted) {
    if (!found.count(key)) {
      throw Error(ErrorCode::kEmbeddingMismatch, "support pair " + std::to_string(key.first) + "-" +
                                                     std::to_string(key.second) + " missing from the embedding");
    }
  }
  ds.support = with_costs(embedding.without_edges(extras), costs);
  ds.edge_pair.assign(ds.support.edge_capacity(), kNone);
  std::vector<int> copies(ds.support.edge_capacity(), 0);
  std::vector<int> per_pair = discretize(support, denominator);
  for (const auto& [key, e] : found) {
    int idx = wanted[key];
    ds.edge_pair[e] = idx;
    copies[e] = per_pair[idx];
  }
  ds.multigraph = amplify(ds.support, copies);
  ds.k = ds.multigraph.graph.vertex_count() >= 2 ? edge_connectivity(ds.multigraph.graph) : 0;
  ds.required_k = 2 * denominator - static_cast<std::int64_t>(support.size());
  if (ds.k < ds.required_k) {
    throw Error(ErrorCode::kConnectivityShortfall, "discretized support is " + std::to_string(ds.k) +
                                                       "-edge-connected, expected at least " +
                                                       std::to_string(ds.required_k));
  }
  return ds;
}

std::vector<Arc> orient_tree(const std::vector<std::pair<int, int>>& tree_pairs, const AtspInstance& inst) {
  std::vector<Arc> out;
  for (auto [a, b] : tree_pairs) {
    int u = std::min(a, b);
    int v = std::max(a, b);
    out.push_back(inst.arc(v, u) < inst.arc(u, v) ? Arc{v, u} : Arc{u, v});
  }
  return out;
}

RoundingReport round_to_tour(const AtspInstance& inst, const HkSolution& x, const std::vector<Arc>& tree,
                             const Surd& alpha) {
  const int n = inst.n;
  std::map<Arc, std::pair<std::int64_t, std::int64_t>> bounds;  // lower, upper
  for (const auto& [arc, v] : x.x) {
    BigInt up = (alpha * (Rational(2) * v)).ceil() + 1;
    bounds[arc] = {0, static_cast<std::int64_t>(up)};
  }
  Decimal tree_cost;
  for (const Arc& a : tree) {
    auto it = bounds.find(a);
    if (it == bounds.end()) it = bounds.emplace(a, std::make_pair(std::int64_t{0}, std::int64_t{1})).first;
    it->second.first = 1;
    tree_cost += inst.arc(a.first, a.second);
  }

  MinCostCirculation circ(n);
  std::vector<Arc> order;
  for (const auto& [arc, b] : bounds) {
    circ.add_arc(arc.first, arc.second, b.first, b.second, inst.arc(arc.first, arc.second).units());
    order.push_back(arc);
  }
  auto flow = circ.solve();
  if (!flow) throw Error(ErrorCode::kCirculationInfeasible, "no circulation meets the tree lower bounds");

  RoundingReport r;
  r.tree_cost = tree_cost;
  r.circulation_cost = Decimal::from_units(circ.cost_of(*flow));
  r.circulation_slack = alpha * (Rational(2) * x.objective);

  // Hierholzer over the multiset of arcs.
  std::vector<std::vector<std::pair<int, std::int64_t>>> out(n);  // (head, remaining)
  for (std::size_t i = 0; i < order.size(); ++i) {
    if ((*flow)[i] > 0) out[order[i].first].push_back({order[i].second, (*flow)[i]});
  }
  std::vector<std::size_t> cursor(n, 0);
  std::vector<int> stack{0};
  std::vector<int> circuit;
  while (!stack.empty()) {
    int u = stack.back();
    while (cursor[u] < out[u].size() && out[u][cursor[u]].second == 0) ++cursor[u];
    if (cursor[u] == out[u].size()) {
      circuit.push_back(u);
      stack.pop_back();
    } else {
      --out[u][cursor[u]].second;
      stack.push_back(out[u][cursor[u]].first);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  std::vector<char> seen(n, 0);
  for (int v : circuit) {
    if (!seen[v]) {
      seen[v] = 1;
      r.tour.order.push_back(v);
    }
  }
  if (static_cast<int>(r.tour.order.size()) != n) {
    throw Error(ErrorCode::kCirculationInfeasible, "circulation support does not reach every vertex");
  }
  for (int i = 0; i < n; ++i) r.tour.cost += inst.arc(r.tour.order[i], r.tour.order[(i + 1) % n]);

  if (r.circulation_cost < r.tour.cost) {
    throw Error(ErrorCode::kCostBoundViolated, "shortcutting increased the cost; costs are not metric");
  }
  Rational excess = r.circulation_cost.to_rational() - r.tree_cost.to_rational();
  if (r.circulation_slack.compare(excess) < 0) {
    throw Error(ErrorCode::kCostBoundViolated, "circulation cost " + r.circulation_cost.str() +
                                                   " exceeds c(T) + 2 alpha c(x)");
  }
  return r;
}

AtspReport atsp_approx(const AtspInstance& inst, const EmbeddedGraph& support_embedding,
                       const AtspOptions& options) {
  AtspReport rep;
  const int n = inst.n;
  if (support_embedding.vertex_count() != n) {
    throw Error(ErrorCode::kEmbeddingMismatch, "embedding has " + std::to_string(support_embedding.vertex_count()) +
                                                   " vertices, instance has " + std::to_string(n));
  }
  rep.metric = metric_completion(inst);
  rep.hk = solve_held_karp(rep.metric, options.hk);
  rep.support = symmetrize(rep.hk, rep.metric);
  rep.denominator = options.denominator > 0 ? options.denominator : static_cast<std::int64_t>(n) * n * n;

  DiscreteSupport ds = build_discrete_support(support_embedding, rep.support, rep.denominator);
  rep.support_genus = genus(ds.support);
  rep.multigraph_k = ds.k;
  rep.required_k = ds.required_k;

  rep.thin_tree = weighted_thin_tree(ds.multigraph.graph);
  if (rep.thin_tree.thinness.compare(Rational(1)) >= 0) {
    throw Error(ErrorCode::kPrecondition, "thin tree bound " + rep.thin_tree.thinness.str() +
                                              " is not below 1; raise the denominator");
  }
  std::vector<std::pair<int, int>> pairs;
  for (EdgeId e : rep.thin_tree.tree_edges) {
    const SupportEdge& s = rep.support[ds.edge_pair[ds.multigraph.edge_origin[e]]];
    pairs.emplace_back(s.u, s.v);
  }
  rep.oriented_tree = orient_tree(pairs, rep.metric);
  rep.alpha_x = rep.thin_tree.thinness * Rational(rep.denominator);
  Decimal tree_cost;
  for (const Arc& a : rep.oriented_tree) tree_cost += rep.metric.arc(a.first, a.second);
  rep.sigma_x = rep.hk.objective > 0 ? tree_cost.to_rational() / rep.hk.objective : Rational(0);
  rep.beta = genus_factor(rep.thin_tree.genus);
  rep.approximation_bound = rep.beta * (Rational(3) * (Rational(1) + Rational(1, n)) * rep.hk.objective);

  rep.rounding = round_to_tour(rep.metric, rep.hk, rep.oriented_tree, rep.alpha_x);
  rep.within_approximation_bound = rep.approximation_bound.compare(rep.rounding.tour.cost.to_rational()) >= 0;
  rep.ratio = rep.hk.objective > 0 ? rep.rounding.tour.cost.to_rational() / rep.hk.objective : Rational(1);
  return rep;
}

}  // namespace thintree
