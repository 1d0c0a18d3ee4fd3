#include "thintree/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "thintree/error.hpp"

namespace thintree {
namespace {

// Vertex pairs with their multiplicities in E and in F; loops dropped.
struct PairCount {
  int u;
  int v;
  std::int64_t in_e;
  std::int64_t in_f;
};

std::vector<PairCount> pair_counts(const EmbeddedGraph& g, std::span<const EdgeId> f) {
  std::set<EdgeId> chosen;
  for (EdgeId e : f) {
    if (!g.has_edge(e)) throw Error(ErrorCode::kEdgeAbsent, "edge " + std::to_string(e) + " not in graph");
    chosen.insert(e);
  }
  std::map<std::pair<int, int>, std::pair<std::int64_t, std::int64_t>> counts;
  for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
    if (!g.has_edge(e)) continue;
    int a = g.owner(2 * e);
    int b = g.owner(2 * e + 1);
    if (a == b) continue;
    auto& c = counts[{std::min(a, b), std::max(a, b)}];
    ++c.first;
    if (chosen.count(e)) ++c.second;
  }
  std::vector<PairCount> out;
  for (const auto& [key, c] : counts) out.push_back({key.first, key.second, c.first, c.second});
  return out;
}

// Calls visit(mask, e_count, f_count) for every nonempty U within {1..V-1}.
template <typename Visit>
void enumerate_cuts(int vertex_count, const std::vector<PairCount>& pairs, Visit visit) {
  std::vector<std::vector<int>> incident(vertex_count);
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
    incident[pairs[i].u].push_back(i);
    incident[pairs[i].v].push_back(i);
  }
  std::vector<char> in_u(vertex_count, 0);
  std::int64_t e_count = 0;
  std::int64_t f_count = 0;
  std::uint64_t mask = 0;
  const std::uint64_t total = std::uint64_t{1} << (vertex_count - 1);
  for (std::uint64_t step = 1; step < total; ++step) {
    // Gray code: flip bit = lowest set bit of step; bit b is vertex b+1.
    int bit = __builtin_ctzll(step);
    int v = bit + 1;
    for (int i : incident[v]) {
      const PairCount& p = pairs[i];
      int w = p.u == v ? p.v : p.u;
      int sign = (in_u[w] == in_u[v]) ? 1 : -1;
      e_count += sign * p.in_e;
      f_count += sign * p.in_f;
    }
    in_u[v] ^= 1;
    mask ^= std::uint64_t{1} << v;
    visit(mask, e_count, f_count);
  }
}

void check_size(const EmbeddedGraph& g) {
  if (g.vertex_count() > 24) throw Error(ErrorCode::kTooLarge, "brute force limited to 24 vertices");
}

}  // namespace

ThinnessReport brute_force_thinness(const EmbeddedGraph& g, std::span<const EdgeId> f) {
  check_size(g);
  auto pairs = pair_counts(g, f);
  ThinnessReport r;
  r.max_ratio = 0;
  if (g.vertex_count() <= 1) return r;
  std::int64_t best_f = -1;
  std::int64_t best_e = 1;
  enumerate_cuts(g.vertex_count(), pairs, [&](std::uint64_t mask, std::int64_t e, std::int64_t fc) {
    ++r.cuts_checked;
    if (e == 0) throw Error(ErrorCode::kDisconnected, "graph has an empty cut");
    // fc/e vs best_f/best_e by cross-multiplication.
    __int128 lhs = static_cast<__int128>(fc) * best_e;
    __int128 rhs = static_cast<__int128>(best_f) * e;
    if (best_f < 0 || lhs > rhs || (lhs == rhs && mask < r.witness_mask)) {
      best_f = fc;
      best_e = e;
      r.witness_mask = mask;
    }
  });
  r.max_ratio = Rational(best_f, best_e);
  return r;
}

int brute_force_edge_connectivity(const EmbeddedGraph& g) {
  check_size(g);
  if (g.vertex_count() < 2) throw Error(ErrorCode::kPrecondition, "edge connectivity needs at least two vertices");
  auto pairs = pair_counts(g, {});
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  enumerate_cuts(g.vertex_count(), pairs,
                 [&](std::uint64_t, std::int64_t e, std::int64_t) { best = std::min(best, e); });
  return static_cast<int>(best);
}

AtspOptimum brute_force_atsp(const AtspInstance& inst) {
  const int n = inst.n;
  if (n > 12) throw Error(ErrorCode::kTooLarge, "DP oracle limited to 12 vertices");
  if (n < 1) throw Error(ErrorCode::kPrecondition, "empty instance");
  if (n == 1) return {Decimal(), {0}};
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  const int full = 1 << n;
  // best[S][v]: cheapest path from 0 through exactly S ending at v (0, v in S).
  std::vector<std::vector<std::int64_t>> best(full, std::vector<std::int64_t>(n, kInf));
  std::vector<std::vector<int>> prev(full, std::vector<int>(n, -1));
  best[1][0] = 0;
  for (int s = 1; s < full; s += 2) {
    for (int v = 0; v < n; ++v) {
      if (best[s][v] >= kInf) continue;
      for (int w = 1; w < n; ++w) {
        if (s & (1 << w)) continue;
        int t = s | (1 << w);
        std::int64_t c = best[s][v] + inst.arc(v, w).units();
        if (c < best[t][w]) {
          best[t][w] = c;
          prev[t][w] = v;
        }
      }
    }
  }
  std::int64_t opt = kInf;
  int last = -1;
  for (int v = 1; v < n; ++v) {
    std::int64_t c = best[full - 1][v] + inst.arc(v, 0).units();
    if (c < opt) {
      opt = c;
      last = v;
    }
  }
  AtspOptimum r;
  r.cost = Decimal::from_units(opt);
  int s = full - 1;
  for (int v = last; v != 0;) {
    r.order.push_back(v);
    int p = prev[s][v];
    s ^= 1 << v;
    v = p;
  }
  r.order.push_back(0);
  std::reverse(r.order.begin(), r.order.end());
  return r;
}

Decimal verify_tour(std::span<const int> order, const AtspInstance& inst) {
  const int n = inst.n;
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::kNotHamiltonian,
                "tour has " + std::to_string(order.size()) + " entries, instance has " + std::to_string(n));
  }
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n) throw Error(ErrorCode::kNotHamiltonian, "vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw Error(ErrorCode::kNotHamiltonian, "vertex " + std::to_string(v) + " repeated");
    seen[v] = 1;
  }
  Decimal cost;
  for (int i = 0; i < n; ++i) cost += inst.arc(order[i], order[(i + 1) % n]);
  return cost;
}

std::pair<Rational, std::uint64_t> brute_force_min_out_cut(int n, const std::map<Arc, Rational>& x) {
  if (n < 2 || n > 20) throw Error(ErrorCode::kTooLarge, "cut enumeration needs 2 <= n <= 20");
  Rational best = -1;
  std::uint64_t best_mask = 0;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 1; s < full; ++s) {
    Rational out = 0;
    for (const auto& [arc, v] : x) {
      if (((s >> arc.first) & 1) && !((s >> arc.second) & 1)) out += v;
    }
    if (best < 0 || out < best) {
      best = out;
      best_mask = s;
    }
  }
  return {best, best_mask};
}

}  // namespace thintree
