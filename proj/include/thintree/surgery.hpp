#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thintree/dual_graph.hpp"
#include "thintree/embedded_graph.hpp"
#include "thintree/numeric.hpp"

namespace thintree {

/// k / (3 sqrt(genus)) as an exact surd.
Surd girth_threshold(int k, int genus);

/// A shortest dual cycle if the dual girth is strictly below threshold,
/// otherwise none. Among shortest cycles, the one whose edge sequence (read
/// from its smallest edge, in the direction giving the smaller sequence) is
/// lexicographically smallest.
std::optional<DualCycle> find_short_dual_cycle(const DualGraph& d, const Surd& threshold);

struct SurgeryStep {
  std::vector<EdgeId> cycle_edges;  // sorted
  int cycle_length = 0;
  int genus_before = 0;
  int genus_after = 0;
  int components_before = 0;
  int components_after = 0;
  int faces_before = 0;
  int faces_after = 0;
};

/// Removes the primal edges of a simple dual cycle by rotation splicing.
/// Throws DichotomyViolation if neither the genus drops nor the component
/// count grows, or if the face count differs from F - len + 2 (each side of
/// the cut merges into a single face). Throws BadParams if the cycle is not a
/// simple cycle of the current dual.
EmbeddedGraph delete_dual_cycle(const EmbeddedGraph& g, const DualCycle& cycle,
                                SurgeryStep* record = nullptr);

struct SurgeryLog {
  std::vector<SurgeryStep> iterations;
  int total_deleted = 0;
};

struct SurgeryResult {
  EmbeddedGraph graph;
  SurgeryLog log;
  int k = 0;
  int genus = 0;  // of the input; held fixed in the threshold
  Surd threshold;
  int initial_components = 0;
  int final_genus = 0;
  int final_components = 0;
  // kNone when the final dual is a forest.
  int final_dual_girth = kNone;
};

/// Deletes short dual cycles until the dual girth reaches k / (3 sqrt(genus)).
/// Throws ZeroGenus for genus 0, Precondition if genus disagrees with the
/// embedding, NotEdgeConnected if the measured connectivity is below k.
SurgeryResult increase_dual_girth(const EmbeddedGraph& g, int k, int genus);

/// Every log invariant that fails on a finished run, as readable messages.
/// Empty means the run satisfies the threshold, dichotomy, accounting and
/// component-count bounds.
std::vector<std::string> surgery_violations(const SurgeryResult& r);

}  // namespace thintree
