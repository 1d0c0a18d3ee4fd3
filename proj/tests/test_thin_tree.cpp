#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support.hpp"
#include "thintree/connectivity.hpp"
#include "thintree/error.hpp"
#include "thintree/oracle.hpp"
#include "thintree/thin_tree.hpp"

using namespace thintree;
using namespace testing_support;

namespace {

EmbeddedGraph parallel_pair(int copies) { return amplified(embed_neighbor_rotations({{1}, {0}}), copies); }

// Triangle with edge multiplicities 2, 3, 4; its dual is a theta graph.
EmbeddedGraph theta_primal() {
  EmbeddedGraph tri = planar_base("cycle", 3);
  std::vector<int> copies{2, 3, 4};
  return amplify(tri, copies).graph;
}

}  // namespace

TEST_SUITE("thin_tree") {
  TEST_CASE("alpha values") {
    CHECK(alpha(0) == 5);
    CHECK(alpha(1) == 6);
    CHECK(alpha(3) == 8);
    for (int g = 0; g < 2000; ++g) {
      double v = 2 * std::log2(g + 1.5);
      // Skip values too close to an integer for a floating cross-check.
      if (std::abs(v - std::round(v)) < 1e-9) continue;
      CHECK(alpha(g) == 4 + static_cast<int>(std::floor(v)));
    }
  }

  TEST_CASE("cycle dual is one cycle thread") {
    DualGraph d = geometric_dual(parallel_pair(8));
    DualView view(d);
    auto threads = find_threads(view);
    REQUIRE(threads.size() == 1);
    CHECK(threads[0].kind == ThreadKind::kCycle);
    CHECK(threads[0].length() == 8);
  }

  TEST_CASE("theta dual gives threads of length 2, 3, 4") {
    DualGraph d = geometric_dual(theta_primal());
    REQUIRE(d.face_count() == 9 - 3 + 2);
    DualView view(d);
    auto threads = find_threads(view);
    std::vector<int> lengths;
    for (const auto& t : threads) {
      CHECK(t.kind == ThreadKind::kPath);
      lengths.push_back(t.length());
    }
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<int>{2, 3, 4});
  }

  TEST_CASE("octahedron dual has only unit threads") {
    DualGraph d = geometric_dual(planar_base("cube"));
    DualView view(d);
    auto threads = find_threads(view);
    CHECK(threads.size() == 12);
    for (const auto& t : threads) CHECK(t.length() == 1);
  }

  TEST_CASE("threads partition the live edges") {
    DualGraph d = geometric_dual(amplified(planar_base("stacked", 10, 4), 3));
    DualView view(d);
    std::vector<EdgeId> seen;
    for (const auto& t : find_threads(view)) {
      seen.insert(seen.end(), t.edges.begin(), t.edges.end());
      for (std::size_t i = 1; i + 1 < t.vertices.size(); ++i) CHECK(view.degree(t.vertices[i]) == 2);
    }
    std::sort(seen.begin(), seen.end());
    CHECK(seen == view.live_edges());
  }

  TEST_CASE("degree-one vertex is rejected") {
    DualGraph d = geometric_dual(parallel_pair(8));
    DualView view(d);
    view.remove(0);
    CHECK_THROWS_AS(find_threads(view), Error);
  }

  TEST_CASE("middle edge of a path counts from the smaller end") {
    DualGraph d = geometric_dual(theta_primal());
    DualView view(d);
    for (const auto& t : find_threads(view)) {
      EdgeId mid = middle_edge(t, view);
      auto order = t.edges;
      if (t.vertices.front() > t.vertices.back()) std::reverse(order.begin(), order.end());
      CHECK(mid == order[(t.length() + 1) / 2 - 1]);
    }
  }

  TEST_CASE("far set on a nine-cycle dual") {
    EmbeddedGraph g = parallel_pair(9);
    DualGraph d = geometric_dual(g);
    CHECK(dual_girth(d) == 9);
    auto far = select_far_edge_set(d, 9, 5);
    CHECK(!far.empty());
    auto tree = bfs_spanning_tree(g, far);
    CHECK(tree.size() == 1);
  }

  TEST_CASE("girth one selects from every dual cycle") {
    EmbeddedGraph g = embed_neighbor_rotations({{1}, {0, 2}, {1}});
    DualGraph d = geometric_dual(g);
    CHECK(dual_girth(d) == 1);
    auto far = select_far_edge_set(d, 1, 5);
    CHECK(spans(g, far));
  }

  TEST_CASE("doubled cube certificate") {
    EmbeddedGraph g = amplified(planar_base("cube"), 2);
    DualGraph d = geometric_dual(g);
    ThinTreeResult r = thin_spanning_tree(g);
    CHECK(r.measured_distance == naive_min_pairwise(d, r.far_set));
    CHECK(r.thinness_bound == Rational(10, 6));
    CHECK(r.certificate_distance >= 1);
    CHECK(brute_force_thinness(g, r.tree_edges).max_ratio <= Rational(1, r.certificate_distance));
  }

  TEST_CASE("cube x12 meets the planar bound") {
    EmbeddedGraph g = amplified(planar_base("cube"), 12);
    ThinTreeResult r = thin_spanning_tree(g);
    CHECK(r.dual_girth == 36);
    CHECK(r.alpha == 5);
    CHECK(r.thinness_bound == Rational(10, 36));
    CHECK(r.tree_edges.size() == 7);
    auto report = brute_force_thinness(g, r.tree_edges);
    CHECK(report.cuts_checked == 127);
    CHECK(report.max_ratio <= r.thinness_bound);
    CHECK(report.max_ratio <= r.certified_thinness);
    CHECK(r.certified_thinness <= Rational(1, r.certificate_distance));
  }

  TEST_CASE("cycle x12 meets the planar bound") {
    EmbeddedGraph g = amplified(planar_base("cycle", 6), 12);
    ThinTreeResult r = thin_spanning_tree(g);
    CHECK(r.dual_girth == naive_dual_girth(geometric_dual(g)));
    CHECK(brute_force_thinness(g, r.tree_edges).max_ratio <= Rational(2 * 5, r.dual_girth));
  }

  TEST_CASE("disconnected input is rejected") {
    EmbeddedGraph g = embed_neighbor_rotations({{1}, {0}, {3}, {2}});
    CHECK_THROWS_AS(thin_spanning_tree(g), Error);
  }

  TEST_CASE("single vertex yields an empty tree") {
    EmbeddedGraph g = build_embedding(1, {{}}, {});
    ThinTreeResult r = thin_spanning_tree(g);
    CHECK(r.tree_edges.empty());
  }

  TEST_CASE("properties on generated instances") {
    std::vector<EmbeddedGraph> instances;
    for (int q : {1, 2, 3, 5}) {
      instances.push_back(amplified(planar_base("octahedron"), q));
      instances.push_back(amplified(planar_base("stacked", 9, q), q));
      instances.push_back(torus_grid(3, 3, q));
      instances.push_back(torus_grid(3, 4, q, 1));
    }
    for (const auto& g : instances) {
      DualGraph d = geometric_dual(g);
      ThinTreeResult r = thin_spanning_tree(g);
      CHECK(r.dual_girth == naive_dual_girth(d));
      // Tree lies in F, spans, and F meets every dual cycle.
      CHECK(std::includes(r.far_set.begin(), r.far_set.end(), r.tree_edges.begin(), r.tree_edges.end()));
      CHECK(static_cast<int>(r.tree_edges.size()) == g.vertex_count() - 1);
      CHECK(spans(g, r.tree_edges));
      int measured = naive_min_pairwise(d, r.far_set);
      if (measured >= 0) CHECK(r.measured_distance == measured);
      auto report = brute_force_thinness(g, r.far_set);
      CHECK(report.max_ratio <= r.certified_thinness);
      CHECK(report.max_ratio <= Rational(1, r.certificate_distance));
      CHECK(brute_force_thinness(g, r.tree_edges).max_ratio <= r.thinness_bound);
    }
  }

  TEST_CASE("selection trace accounts for every dual edge") {
    EmbeddedGraph g = amplified(planar_base("k4"), 4);
    DualGraph d = geometric_dual(g);
    const int girth = dual_girth(d);
    std::vector<SelectionStep> trace;
    select_far_edge_set(d, girth, 5, &trace);
    int removed = 0;
    for (const auto& s : trace) {
      CHECK(s.thread_length * 5 >= girth);
      removed += 1 + static_cast<int>(s.pruned.size());
    }
    CHECK(removed == d.edge_count());
  }
}
