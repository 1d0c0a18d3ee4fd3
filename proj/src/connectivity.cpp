#include "thintree/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "thintree/error.hpp"
#include "thintree/flow.hpp"

namespace thintree {

int edge_connectivity(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw Error(ErrorCode::kPrecondition, "edge connectivity needs at least two vertices");
  if (!is_connected(g)) return 0;
  std::map<std::pair<VertexId, VertexId>, std::int64_t> multiplicity;
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.endpoints(e);
    if (u == v) continue;
    ++multiplicity[{std::min(u, v), std::max(u, v)}];
  }
  MaxFlow<std::int64_t> net(n);
  for (const auto& [pair, count] : multiplicity) net.add_edge(pair.first, pair.second, count, count);
  std::int64_t best = -1;
  for (VertexId t = 1; t < n; ++t) {
    std::int64_t f = net.run(0, t);
    if (best < 0 || f < best) best = f;
  }
  return static_cast<int>(best);
}

}  // namespace thintree
