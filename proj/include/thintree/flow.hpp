#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <type_traits>
#include <vector>

namespace thintree {

namespace detail {

template <typename T>
bool positive(const T& value) {
  if constexpr (std::is_floating_point_v<T>) {
    return value > T(1e-12);
  } else {
    return value > 0;
  }
}

}  // namespace detail

/// Dinic max-flow. `Cap` may be an integer, double or exact rational type.
template <typename Cap>
class MaxFlow {
 public:
  explicit MaxFlow(int n) : adj_(n), level_(n), iter_(n) {}

  int vertex_count() const { return static_cast<int>(adj_.size()); }

  // Returns the id of the forward arc; `rev_cap` makes it undirected.
  int add_edge(int from, int to, Cap cap, Cap rev_cap = Cap(0)) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, cap, Cap(0)});
    arcs_.push_back({from, rev_cap, Cap(0)});
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    return id;
  }

  // Resets previous flow and computes a maximum s-t flow.
  Cap run(int s, int t) {
    for (auto& a : arcs_) a.flow = Cap(0);
    Cap total(0);
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (true) {
        Cap pushed = dfs(s, t, std::nullopt);
        if (!detail::positive(pushed)) break;
        total += pushed;
      }
    }
    source_ = s;
    return total;
  }

  // Vertices reachable from the last source in the residual network; this
  // is the minimal source side of a minimum cut.
  std::vector<char> source_side() const {
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> queue{source_};
    seen[source_] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int id : adj_[u]) {
        const Arc& a = arcs_[id];
        if (!seen[a.to] && detail::positive(Cap(a.cap - a.flow))) {
          seen[a.to] = 1;
          queue.push_back(a.to);
        }
      }
    }
    return seen;
  }

  Cap flow_on(int arc_id) const { return arcs_[arc_id].flow; }

 private:
  struct Arc {
    int to;
    Cap cap;
    Cap flow;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<int> queue{s};
    level_[s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int id : adj_[u]) {
        const Arc& a = arcs_[id];
        if (level_[a.to] < 0 && detail::positive(Cap(a.cap - a.flow))) {
          level_[a.to] = level_[u] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  // `limit` unset means unbounded.
  Cap dfs(int u, int t, const std::optional<Cap>& limit) {
    if (u == t) return limit ? *limit : Cap(0);
    for (int& i = iter_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
      int id = adj_[u][i];
      Arc& a = arcs_[id];
      Cap residual = a.cap - a.flow;
      if (level_[a.to] != level_[u] + 1 || !detail::positive(residual)) continue;
      Cap want = (limit && *limit < residual) ? *limit : residual;
      Cap got = dfs(a.to, t, want);
      if (detail::positive(got)) {
        a.flow += got;
        arcs_[id ^ 1].flow -= got;
        return got;
      }
    }
    return Cap(0);
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
  int source_ = 0;
};

/// Minimum-cost circulation with integral lower/upper bounds and nonnegative
/// integral costs, solved by successive shortest paths.
class MinCostCirculation {
 public:
  explicit MinCostCirculation(int n) : n_(n) {}

  int add_arc(int from, int to, std::int64_t lower, std::int64_t upper, std::int64_t cost);

  // Flow per arc (in insertion order), or nullopt when no feasible
  // circulation exists.
  std::optional<std::vector<std::int64_t>> solve();

  std::int64_t cost_of(const std::vector<std::int64_t>& flow) const;

 private:
  struct Spec {
    int from, to;
    std::int64_t lower, upper, cost;
  };
  int n_;
  std::vector<Spec> arcs_;
};

}  // namespace thintree
