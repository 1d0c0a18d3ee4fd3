#include "thintree/flow.hpp"

#include <algorithm>

#include "thintree/error.hpp"

namespace thintree {

int MinCostCirculation::add_arc(int from, int to, std::int64_t lower, std::int64_t upper,
                                std::int64_t cost) {
  if (lower < 0 || upper < lower || cost < 0) {
    throw Error(ErrorCode::kBadParams, "circulation arc needs 0 <= lower <= upper and cost >= 0");
  }
  arcs_.push_back({from, to, lower, upper, cost});
  return static_cast<int>(arcs_.size()) - 1;
}

std::optional<std::vector<std::int64_t>> MinCostCirculation::solve() {
  const int source = n_;
  const int sink = n_ + 1;
  const int total = n_ + 2;
  struct Arc {
    int to;
    std::int64_t cap;
    std::int64_t cost;
  };
  std::vector<Arc> res;
  std::vector<std::vector<int>> adj(total);
  auto link = [&](int u, int v, std::int64_t cap, std::int64_t cost) {
    int id = static_cast<int>(res.size());
    res.push_back({v, cap, cost});
    res.push_back({u, 0, -cost});
    adj[u].push_back(id);
    adj[v].push_back(id + 1);
    return id;
  };

  std::vector<std::int64_t> excess(n_, 0);
  std::vector<int> arc_id(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Spec& a = arcs_[i];
    arc_id[i] = link(a.from, a.to, a.upper - a.lower, a.cost);
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
  }
  std::int64_t demand = 0;
  for (int v = 0; v < n_; ++v) {
    if (excess[v] > 0) {
      link(source, v, excess[v], 0);
      demand += excess[v];
    } else if (excess[v] < 0) {
      link(v, sink, -excess[v], 0);
    }
  }

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::int64_t sent = 0;
  std::vector<std::int64_t> dist(total);
  std::vector<int> via(total);
  std::vector<char> queued(total);
  while (sent < demand) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(via.begin(), via.end(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    queued.assign(total, 0);
    queued[source] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      queued[u] = 0;
      for (int id : adj[u]) {
        const Arc& a = res[id];
        if (a.cap > 0 && dist[u] + a.cost < dist[a.to]) {
          dist[a.to] = dist[u] + a.cost;
          via[a.to] = id;
          if (!queued[a.to]) {
            queued[a.to] = 1;
            queue.push_back(a.to);
          }
        }
      }
    }
    if (dist[sink] >= kInf) return std::nullopt;
    std::int64_t push = demand - sent;
    for (int v = sink; v != source; v = res[via[v] ^ 1].to) push = std::min(push, res[via[v]].cap);
    for (int v = sink; v != source; v = res[via[v] ^ 1].to) {
      res[via[v]].cap -= push;
      res[via[v] ^ 1].cap += push;
    }
    sent += push;
  }

  std::vector<std::int64_t> flow(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) flow[i] = arcs_[i].lower + res[arc_id[i] ^ 1].cap;
  return flow;
}

std::int64_t MinCostCirculation::cost_of(const std::vector<std::int64_t>& flow) const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < arcs_.size(); ++i) sum += flow[i] * arcs_[i].cost;
  return sum;
}

}  // namespace thintree
