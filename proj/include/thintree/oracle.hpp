#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "thintree/atsp.hpp"
#include "thintree/embedded_graph.hpp"
#include "thintree/numeric.hpp"

namespace thintree {

struct ThinnessReport {
  Rational max_ratio;
  // Side U of the witness cut as a vertex bitmask; vertex 0 is never in U.
  std::uint64_t witness_mask = 0;
  std::int64_t cuts_checked = 0;
};

/// Exact max over all cuts of |F in cut| / |E in cut|, enumerating the
/// 2^(V-1) - 1 subsets of {1..V-1} in Gray-code order. Ties keep the smallest
/// mask. Throws TooLarge for V > 24, Disconnected, EdgeAbsent.
ThinnessReport brute_force_thinness(const EmbeddedGraph& g, std::span<const EdgeId> f);

/// Minimum cut size over all cuts; same enumeration and limits.
int brute_force_edge_connectivity(const EmbeddedGraph& g);

struct AtspOptimum {
  Decimal cost;
  std::vector<int> order;  // starts at vertex 0
};

/// Subset dynamic programme; n <= 12 or TooLarge.
AtspOptimum brute_force_atsp(const AtspInstance& inst);

/// Cost of the closed tour; NotHamiltonian unless order is a permutation.
Decimal verify_tour(std::span<const int> order, const AtspInstance& inst);

/// Smallest x(out(S)) over every nonempty proper S, by enumeration; n <= 20.
std::pair<Rational, std::uint64_t> brute_force_min_out_cut(int n, const std::map<Arc, Rational>& x);

}  // namespace thintree
