#pragma once

#include "thintree/embedded_graph.hpp"

namespace thintree {

/// Global minimum cut size of the multigraph via n-1 max-flow runs from
/// vertex 0; 0 when disconnected. Loops never cross a cut and are ignored.
/// Requires at least two vertices.
int edge_connectivity(const EmbeddedGraph& g);

}  // namespace thintree
