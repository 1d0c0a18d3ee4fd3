#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "thintree/atsp.hpp"
#include "thintree/error.hpp"
#include "thintree/oracle.hpp"

using namespace thintree;
using namespace testing_support;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kPrecondition;
}

AtspInstance matrix(const std::vector<std::vector<int>>& rows) {
  AtspInstance inst;
  inst.n = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    std::vector<Decimal> r;
    for (int v : row) r.push_back(Decimal::from_int(v));
    inst.cost.push_back(r);
  }
  return inst;
}

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0 costs 1 per arc, everything else 10.
AtspInstance cheap_cycle(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 10));
  for (int i = 0; i < n; ++i) {
    rows[i][i] = 0;
    rows[i][(i + 1) % n] = 1;
  }
  return metric_completion(matrix(rows));
}

}  // namespace

TEST_SUITE("atsp") {
  TEST_CASE("ATSP text round trip") {
    AtspInstance inst = random_metric(5, CostModel::kAsymmetricSkew, 1, 40, 9);
    std::string text = format_atsp(inst);
    CHECK(format_atsp(parse_atsp(text)) == text);
    CHECK(code_of([] { parse_atsp("ATSP 1 2\n0 1\n1\n"); }) == ErrorCode::kParse);
  }

  TEST_CASE("metric completion") {
    AtspInstance inst = matrix({{0, 1, 50}, {50, 0, 1}, {1, 50, 0}});
    CHECK(!satisfies_triangle_inequality(inst));
    AtspInstance m = metric_completion(inst);
    CHECK(satisfies_triangle_inequality(m));
    CHECK(m.arc(0, 2) == Decimal::from_int(2));
  }

  TEST_CASE("Held-Karp on a cheap cycle") {
    HkSolution x = solve_held_karp(cheap_cycle(4));
    CHECK(x.exact);
    CHECK(x.objective == 4);
    CHECK(x.x.size() == 4);
    for (const auto& [arc, value] : x.x) CHECK(value == 1);
  }

  TEST_CASE("Held-Karp on three vertices") {
    AtspInstance inst = matrix({{0, 2, 3}, {4, 0, 5}, {6, 7, 0}});
    HkSolution x = solve_held_karp(inst);
    CHECK(x.objective == brute_force_atsp(inst).cost.to_rational());
  }

  TEST_CASE("two clusters need a subtour cut") {
    std::vector<std::vector<int>> rows(6, std::vector<int>(6, 100));
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        if (i == j) rows[i][j] = 0;
        else if ((i < 3) == (j < 3)) rows[i][j] = 1;
      }
    }
    AtspInstance inst = matrix(rows);
    HkSolution x = solve_held_karp(inst);
    CHECK(x.cuts_added >= 1);
    CHECK(brute_force_min_out_cut(6, x.x).first >= 1);
    CHECK(min_subtour_cut(6, x.x).first == brute_force_min_out_cut(6, x.x).first);
    CHECK(x.objective <= brute_force_atsp(inst).cost.to_rational());
    CHECK(x.objective >= 204);
  }

  TEST_CASE("floating mode agrees on random metrics") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      AtspInstance inst = random_metric(7, CostModel::kUniformRange, 1, 100, seed);
      HkOptions fp;
      fp.exact_auto = false;
      HkSolution a = solve_held_karp(inst);
      HkSolution b = solve_held_karp(inst, fp);
      CHECK(!b.exact);
      CHECK(std::abs(to_double(a.objective) - to_double(b.objective)) < 1e-6);
    }
  }

  TEST_CASE("symmetrize and discretize") {
    AtspInstance inst = cheap_cycle(4);
    HkSolution x = solve_held_karp(inst);
    auto support = symmetrize(x, inst);
    REQUIRE(support.size() == 4);
    for (const auto& e : support) {
      CHECK(e.u < e.v);
      CHECK(e.y == 1);
      CHECK(e.cost == Decimal::from_int(1));
    }
    CHECK(discretize(support, 8) == std::vector<int>{8, 8, 8, 8});
    support[0].y = Rational(3, 7);
    CHECK(discretize(support, 8)[0] == 3);
  }

  TEST_CASE("discrete support on a cycle embedding") {
    AtspInstance inst = cheap_cycle(4);
    auto support = symmetrize(solve_held_karp(inst), inst);
    EmbeddedGraph emb = planar_base("cycle", 4);
    DiscreteSupport ds = build_discrete_support(emb, support, 8);
    CHECK(ds.k == 16);
    CHECK(ds.required_k == 12);
    CHECK(ds.multigraph.graph.edge_count() == 32);
    ds = build_discrete_support(emb, support, 64);
    CHECK(ds.k >= 112);
  }

  TEST_CASE("support mismatches") {
    AtspInstance inst = cheap_cycle(4);
    auto support = symmetrize(solve_held_karp(inst), inst);
    // A path misses the pair {0, 3}.
    EmbeddedGraph path = embed_neighbor_rotations({{1}, {0, 2}, {1, 3}, {2}});
    CHECK(code_of([&] { build_discrete_support(path, support, 8); }) == ErrorCode::kEmbeddingMismatch);
    EmbeddedGraph small = planar_base("cycle", 3);
    CHECK(code_of([&] { build_discrete_support(small, support, 8); }) == ErrorCode::kEmbeddingMismatch);
  }

  TEST_CASE("tree orientation picks the cheaper direction") {
    AtspInstance inst = matrix({{0, 5, 1}, {2, 0, 3}, {3, 3, 0}});
    auto arcs = orient_tree({{0, 1}, {1, 2}}, inst);
    REQUIRE(arcs.size() == 2);
    CHECK(arcs[0] == Arc{1, 0});
    CHECK(arcs[1] == Arc{1, 2});
  }

  TEST_CASE("rounding a cheap cycle") {
    AtspInstance inst = cheap_cycle(5);
    HkSolution x = solve_held_karp(inst);
    std::vector<Arc> tree{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    RoundingReport r = round_to_tour(inst, x, tree, Surd(Rational(1)));
    CHECK(r.tour.cost == Decimal::from_int(5));
    CHECK(verify_tour(r.tour.order, inst) == r.tour.cost);
    CHECK(r.tree_cost == Decimal::from_int(4));
    CHECK(r.circulation_slack.compare(Rational(10)) == 0);
  }

  TEST_CASE("end to end on unit costs") {
    std::vector<std::vector<int>> rows(4, std::vector<int>(4, 1));
    for (int i = 0; i < 4; ++i) rows[i][i] = 0;
    AtspInstance inst = matrix(rows);
    AtspReport r = atsp_approx(inst, planar_base("k4"));
    CHECK(r.denominator == 64);
    CHECK(r.hk.objective == 4);
    CHECK(r.rounding.tour.cost == Decimal::from_int(4));
    CHECK(r.ratio == 1);
    CHECK(r.support_genus == 0);
  }

  TEST_CASE("end to end on a generated planar support") {
    for (std::uint64_t seed : {3, 8}) {
      LpSupportInstance lp = lp_support_instance(6, 0, CostModel::kUniformRange, 1, 100, seed);
      AtspReport r = atsp_approx(lp.instance, lp.support_embedding);
      Decimal opt = brute_force_atsp(lp.instance).cost;
      CHECK(verify_tour(r.rounding.tour.order, r.metric) == r.rounding.tour.cost);
      CHECK(r.rounding.tour.cost >= opt);
      CHECK(r.hk.objective <= opt.to_rational());
      CHECK(r.multigraph_k >= r.required_k);
    }
  }

  TEST_CASE("too small a denominator is rejected") {
    AtspInstance inst = cheap_cycle(4);
    AtspOptions options;
    options.denominator = 2;
    CHECK_THROWS_AS(atsp_approx(inst, planar_base("cycle", 4), options), Error);
  }
}
