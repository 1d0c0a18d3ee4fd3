// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "thintree/atsp.hpp"
#include "thintree/connectivity.hpp"
#include "thintree/dual_graph.hpp"
#include "thintree/error.hpp"
#include "thintree/genlab.hpp"
#include "thintree/io.hpp"
#include "thintree/oracle.hpp"
#include "thintree/pipeline.hpp"
#include "thintree/surgery.hpp"
#include "thintree/thin_tree.hpp"

using namespace thintree;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

struct Instance {
  std::string name;
  EmbeddedGraph graph;
  int declared_genus = 0;
};

EmbeddedGraph amplified(const EmbeddedGraph& base, int q) {
  std::vector<int> copies(base.edge_capacity(), q);
  return amplify(base, copies).graph;
}

// 500 embeddings: planar bases (some amplified) and torus grids, n <= 50.
std::vector<Instance> integrity_corpus() {
  std::vector<Instance> out;
  for (std::uint64_t seed = 0; out.size() < 500; ++seed) {
    Rng rng(seed);
    const int q = 1 + static_cast<int>(rng.below(3));
    std::string name;
    EmbeddedGraph g;
    int declared = 0;
    switch (seed % 5) {
      case 0: {
        int n = 4 + static_cast<int>(rng.below(47));
        g = planar_base("stacked", n, seed);
        name = "stacked(" + std::to_string(n) + ")";
        break;
      }
      case 1: {
        int n = 3 + static_cast<int>(rng.below(23));
        g = planar_base("prism", n);
        name = "prism(" + std::to_string(n) + ")";
        break;
      }
      case 2: {
        int n = 4 + static_cast<int>(rng.below(47));
        g = planar_base("wheel", n);
        name = "wheel(" + std::to_string(n) + ")";
        break;
      }
      case 3: {
        static const char* kFixed[] = {"k4", "cube", "octahedron"};
        name = kFixed[rng.below(3)];
        g = planar_base(name);
        break;
      }
      default: {
        int rows = 3 + static_cast<int>(rng.below(5));
        int cols = 3 + static_cast<int>(rng.below(5));
        int seam = static_cast<int>(rng.below(2));
        g = torus_grid(rows, cols, q, seam);
        declared = 1;
        name = "torus(" + std::to_string(rows) + "x" + std::to_string(cols) + ")";
        break;
      }
    }
    if (seed % 5 != 4) g = amplified(g, q);
    out.push_back({name + " x" + std::to_string(q) + " seed " + std::to_string(seed), g, declared});
  }
  return out;
}

// Orbits of the face permutation, traced directly from the rotations.
int count_faces(const EmbeddedGraph& g) {
  std::vector<char> seen(g.dart_capacity(), 0);
  int faces = 0;
  for (EdgeId e : g.edges()) {
    for (DartId start : {2 * e, 2 * e + 1}) {
      if (seen[start]) continue;
      ++faces;
      for (DartId d = start; !seen[d]; d = g.rotation_next(twin(d))) seen[d] = 1;
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) ++faces;
  }
  return faces;
}

Outcome criterion_integrity(const std::vector<Instance>& corpus) {
  Outcome o;
  int cut_instances = 0;
  std::int64_t cuts = 0;
  for (const auto& inst : corpus) {
    const EmbeddedGraph& g = inst.graph;
    const int v = g.vertex_count(), e = g.edge_count(), f = count_faces(g);
    o.expect(v <= 50, inst.name + ": more than 50 vertices");
    o.expect(v - e + f == 2 * component_count(g) - 2 * inst.declared_genus, inst.name + ": Euler formula");
    o.expect(genus(g) == inst.declared_genus, inst.name + ": genus");
    DualGraph d = geometric_dual(g);
    o.expect(d.face_count() == f, inst.name + ": dual vertex count");
    o.expect(d.edge_count() == e, inst.name + ": dual edge count");
    for (EdgeId id : g.edges()) {
      const DualEdge& de = d.dual_edge(id);
      const auto& left = d.faces().faces[de.left].darts;
      const auto& right = d.faces().faces[de.right].darts;
      o.expect(de.edge == id && std::count(left.begin(), left.end(), 2 * id) == 1 &&
                   std::count(right.begin(), right.end(), 2 * id + 1) == 1,
               inst.name + ": dual edge " + std::to_string(id));
    }
    if (v > 12) continue;
    ++cut_instances;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << v); ++mask) {
      Cut cut = Cut::from_mask(v, mask);
      auto crossing = cut_edges(g, cut);
      std::vector<EdgeId> used;
      bool linked = true;
      for (const auto& c : cut_to_dual_cycles(g, d, cut)) {
        for (int i = 0; i < c.length(); ++i) {
          const DualEdge& de = d.dual_edge(c.edges[i]);
          int a = c.faces[i], b = c.faces[(i + 1) % c.length()];
          linked = linked && ((de.left == a && de.right == b) || (de.left == b && de.right == a));
          used.push_back(c.edges[i]);
        }
      }
      std::sort(used.begin(), used.end());
      std::sort(crossing.begin(), crossing.end());
      o.expect(linked && used == crossing, inst.name + ": cut " + std::to_string(mask));
      ++cuts;
    }
  }
  o.detail = std::to_string(corpus.size()) + " embeddings, " + std::to_string(cuts) + " cuts on " +
             std::to_string(cut_instances) + " of them";
  return o;
}

Outcome criterion_whitney(const std::vector<Instance>& corpus) {
  Outcome o;
  int checked = 0;
  for (const auto& inst : corpus) {
    if (inst.declared_genus != 0) continue;
    DualGraph d = geometric_dual(inst.graph);
    int girth = dual_girth(d);
    int k = edge_connectivity(inst.graph);
    o.expect(girth >= k, inst.name + ": girth " + std::to_string(girth) + " < k " + std::to_string(k));
    ++checked;
  }
  o.detail = std::to_string(checked) + " planar instances";
  return o;
}

std::vector<Instance> small_corpus() {
  std::vector<Instance> out;
  for (int q : {1, 2, 3, 4, 6}) {
    out.push_back({"cube x" + std::to_string(q), amplified(planar_base("cube"), q), 0});
    out.push_back({"octahedron x" + std::to_string(q), amplified(planar_base("octahedron"), q), 0});
    out.push_back({"k4 x" + std::to_string(q), amplified(planar_base("k4"), q), 0});
    out.push_back({"prism(5) x" + std::to_string(q), amplified(planar_base("prism", 5), q), 0});
    out.push_back({"wheel(9) x" + std::to_string(q), amplified(planar_base("wheel", 9), q), 0});
    out.push_back({"torus 3x3 x" + std::to_string(q), torus_grid(3, 3, q), 1});
    out.push_back({"torus 3x4 seam x" + std::to_string(q), torus_grid(3, 4, q, 1), 1});
    out.push_back({"torus 4x3 seam x" + std::to_string(q), torus_grid(4, 3, q, 1), 1});
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int n = 5 + static_cast<int>(seed % 8);
    int q = 1 + static_cast<int>(seed % 4);
    out.push_back({"stacked(" + std::to_string(n) + ") x" + std::to_string(q) + " seed " + std::to_string(seed),
                   amplified(planar_base("stacked", n, seed), q), 0});
  }
  return out;
}

Outcome criterion_far_set(const std::vector<Instance>& corpus) {
  Outcome o;
  Rational worst_margin(1);
  for (const auto& inst : corpus) {
    ThinTreeResult r = thin_spanning_tree(inst.graph);
    Rational ratio = brute_force_thinness(inst.graph, r.far_set).max_ratio;
    Rational bound(1, r.certificate_distance);
    o.expect(ratio <= bound, inst.name + ": F is " + to_string(ratio) + "-thin, certificate 1/" +
                                 std::to_string(r.certificate_distance));
    worst_margin = std::min(worst_margin, Rational(bound - ratio));
  }
  o.detail = std::to_string(corpus.size()) + " runs, smallest slack " + to_string(worst_margin);
  return o;
}

Outcome criterion_planar_cube() {
  Outcome o;
  std::ostringstream detail;
  for (int q : {6, 12, 24}) {
    EmbeddedGraph g = amplified(planar_base("cube"), q);
    ThinTreeResult r = thin_spanning_tree(g);
    const int k = 3 * q;
    o.expect(edge_connectivity(g) == k, "cube x" + std::to_string(q) + ": connectivity");
    ThinnessReport report = brute_force_thinness(g, r.tree_edges);
    o.expect(report.cuts_checked == 127, "cube x" + std::to_string(q) + ": cut count");
    if (Rational(10, k) < 1) {
      o.expect(report.max_ratio <= Rational(10, k),
               "cube x" + std::to_string(q) + ": thinness " + to_string(report.max_ratio));
    }
    detail << (q == 6 ? "" : ", ") << "q=" << q << " thinness " << to_string(report.max_ratio) << " vs "
           << to_string(Rational(10, k));
  }
  o.detail = detail.str();
  return o;
}

std::vector<Instance> torus_corpus() {
  std::vector<Instance> out;
  for (int q = 1; q <= 6; ++q) {
    for (auto [rows, cols] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 4}, std::pair{3, 5}}) {
      for (int seam : {0, 1}) {
        std::string name = "torus " + std::to_string(rows) + "x" + std::to_string(cols) + " x" + std::to_string(q) +
                           (seam ? " seam" : "");
        out.push_back({name, torus_grid(rows, cols, q, seam), 1});
      }
    }
  }
  return out;
}

Outcome criterion_surgery(const std::vector<Instance>& corpus) {
  Outcome o;
  int with_surgery = 0;
  for (const auto& inst : corpus) {
    const int k = edge_connectivity(inst.graph);
    SurgeryResult r = increase_dual_girth(inst.graph, k, 1);
    if (!r.log.iterations.empty()) ++with_surgery;
    o.expect(r.final_components <= 2, inst.name + ": " + std::to_string(r.final_components) + " components");
    if (r.final_dual_girth != kNone) {
      const std::int64_t girth = r.final_dual_girth;
      o.expect(9 * 1 * girth * girth >= std::int64_t{k} * k, inst.name + ": final girth " + std::to_string(girth));
    }
    for (const auto& v : surgery_violations(r)) o.expect(false, inst.name + ": " + v);
  }
  o.detail = std::to_string(corpus.size()) + " torus grids, " + std::to_string(with_surgery) + " needed surgery";
  return o;
}

Outcome criterion_genus_branch(const std::vector<Instance>& corpus) {
  Outcome o;
  int checked = 0;
  for (const auto& inst : corpus) {
    if (inst.graph.vertex_count() > 16) continue;
    BoundedGenusResult r = bounded_genus_thin_tree(inst.graph);
    Rational ratio = brute_force_thinness(inst.graph, r.tree_edges).max_ratio;
    Surd bound = Surd(Rational(7 * alpha(1), r.k), 1);
    o.expect(!r.planar_branch && bound.compare(ratio) >= 0,
             inst.name + ": thinness " + to_string(ratio) + " vs " + bound.str());
    ++checked;
  }
  o.detail = std::to_string(checked) + " instances with n <= 16";
  return o;
}

Outcome criterion_weighted() {
  Outcome o;
  std::vector<Instance> bases;
  for (int q : {4, 8, 16, 30}) {
    bases.push_back({"cube x" + std::to_string(q), amplified(planar_base("cube"), q), 0});
    bases.push_back({"octahedron x" + std::to_string(q), amplified(planar_base("octahedron"), q), 0});
    bases.push_back({"stacked(10) x" + std::to_string(q), amplified(planar_base("stacked", 10, q), q), 0});
  }
  for (int q : {4, 8, 14}) {
    bases.push_back({"torus 3x4 x" + std::to_string(q), torus_grid(3, 4, q), 1});
    bases.push_back({"torus 3x3 seam x" + std::to_string(q), torus_grid(3, 3, q, 1), 1});
  }
  int runs = 0, multi_round = 0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      Rng rng(1000 * i + seed);
      EmbeddedGraph g = assign_costs(bases[i].graph, CostModel::kUniformRange, 1, 100, rng);
      std::string name = bases[i].name + " costs " + std::to_string(seed);
      if (g.vertex_count() > 12) continue;
      WeightedThinTree w = weighted_thin_tree(g);
      ++runs;
      if (w.trace.size() > 1) ++multi_round;
      Rational ratio = brute_force_thinness(g, w.tree_edges).max_ratio;
      o.expect(w.thinness.compare(ratio) >= 0, name + ": thinness " + to_string(ratio) + " vs " + w.thinness.str());
      Rational cost_bound_gap = w.c_tree.to_rational() / w.c_graph.to_rational();
      o.expect(w.thinness.compare(cost_bound_gap) >= 0, name + ": cost ratio " + to_string(cost_bound_gap));
      for (const auto& round : w.trace) {
        Surd schedule_gap = w.g_value * Rational(round.round);
        // k_i >= k - i g(k)  <=>  i g(k) >= k - k_i.
        o.expect(schedule_gap.compare(Rational(w.k - round.connectivity)) >= 0,
                 name + ": round " + std::to_string(round.round) + " connectivity " +
                     std::to_string(round.connectivity));
      }
    }
  }
  o.detail = std::to_string(runs) + " weighted runs, " + std::to_string(multi_round) + " with several rounds";
  return o;
}

Outcome criterion_held_karp() {
  Outcome o;
  const CostModel models[] = {CostModel::kUniformRange, CostModel::kAsymmetricSkew, CostModel::kUnit};
  int cuts = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 4 + i % 7;
    AtspInstance inst = random_metric(n, models[i % 3], 1, 100, 500 + i);
    HkSolution x = solve_held_karp(inst);
    cuts += x.cuts_added;
    AtspOptimum opt = brute_force_atsp(inst);
    std::string name = "metric n=" + std::to_string(n) + " #" + std::to_string(i);
    o.expect(to_double(x.objective) <= opt.cost.to_double() + 1e-6, name + ": LP above optimum");
    auto [value, mask] = brute_force_min_out_cut(n, x.x);
    o.expect(to_double(value) >= 1 - 1e-6, name + ": cut " + std::to_string(mask) + " at " + to_string(value));
  }
  o.detail = "100 metrics, n 4..10, " + std::to_string(cuts) + " cuts added";
  return o;
}

Outcome criterion_end_to_end() {
  Outcome o;
  std::ostringstream detail;
  Rational worst(0);
  int runs = 0;
  for (int n : {6, 8, 10}) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      LpSupportInstance lp = lp_support_instance(n, 0, CostModel::kUniformRange, 1, 100, 97 * seed + n);
      AtspReport r = atsp_approx(lp.instance, lp.support_embedding);
      std::string name = "n=" + std::to_string(n) + " seed " + std::to_string(seed);
      Decimal measured = verify_tour(r.rounding.tour.order, r.metric);
      o.expect(measured == r.rounding.tour.cost, name + ": tour cost mismatch");
      Rational bound = Rational(30) * Rational(n + 1, n) * r.hk.objective;
      o.expect(measured.to_rational() <= bound, name + ": tour " + measured.str() + " above " + to_string(bound));
      Decimal opt = brute_force_atsp(r.metric).cost;
      o.expect(measured >= opt, name + ": tour below optimum");
      worst = std::max(worst, r.ratio);
      ++runs;
    }
  }
  detail << runs << " instances, worst tour/OPT_HK ratio " << to_string(worst) << " (~" << to_double(worst) << ")";
  o.detail = detail.str();
  return o;
}

int run(const std::string& command) { return std::system((command + " > /dev/null 2>&1").c_str()); }

// Runs every CLI command twice into separate directories and compares bytes.
Outcome criterion_determinism(const std::string& cli) {
  Outcome o;
  const fs::path root = fs::temp_directory_path() / ("thintree_acceptance_" + std::to_string(::getpid()));
  const std::vector<std::string> commands = {
      "gen --family planar-amplified --base cube --mult 12 --seed 7 --out cube.emb > gen1.txt",
      "gen --family planar-amplified --base stacked --n 10 --mult 3 --cost-model uniform-range --seed 7 "
      "--out stacked.emb > gen2.txt",
      "gen --family torus-grid --rows 3 --cols 4 --mult 4 --seam-mult 1 --seed 7 --out torus.emb > gen3.txt",
      "gen --family random-metric --n 8 --cost-model asymmetric-skew --seed 7 --out metric.atsp > gen4.txt",
      "gen --family lp-support-instance --n 8 --cost-model uniform-range --seed 7 --out lp.atsp "
      "--emb-out lp.emb > gen5.txt",
      "thin-tree --in cube.emb --out tree.json --certify",
      "surgery --in torus.emb --k 13 --out surgery.emb --log surgery.jsonl",
      "pipeline --in torus.emb --out pipeline.json",
      "pipeline --in stacked.emb --weighted --out weighted.json",
      "atsp --in lp.atsp --emb lp.emb --out tour.json",
      "verify thinness --in cube.emb --edges tree.json > verify_thinness.txt",
      "verify tour --in lp.atsp --tour tour.json > verify_tour.txt",
  };
  std::map<std::string, std::string> first;
  for (int pass = 0; pass < 2; ++pass) {
    fs::path dir = root / std::to_string(pass);
    fs::create_directories(dir);
    for (const auto& c : commands) {
      int rc = std::system(("cd '" + dir.string() + "' && '" + cli + "' " + c + " 2> /dev/null").c_str());
      o.expect(rc == 0, "command failed: " + c);
    }
    for (const auto& entry : fs::directory_iterator(dir)) {
      std::string name = entry.path().filename().string();
      std::string text = read_text_file(entry.path());
      if (pass == 0) {
        first[name] = text;
      } else {
        o.expect(first.count(name) && first[name] == text, "output differs: " + name);
      }
    }
  }
  fs::remove_all(root);
  o.detail = std::to_string(commands.size()) + " commands, " + std::to_string(first.size()) + " output files";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-thintree-cli>\n";
    return 2;
  }
  const std::string cli = fs::absolute(argv[1]).string();

  std::vector<Instance> corpus = integrity_corpus();
  std::vector<Instance> small = small_corpus();
  std::vector<Instance> torus = torus_corpus();

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Euler formula, dual bijection and cut decomposition", [&] { return criterion_integrity(corpus); }},
      {"planar dual girth at least edge connectivity", [&] { return criterion_whitney(corpus); }},
      {"far set within its distance certificate", [&] { return criterion_far_set(small); }},
      {"amplified cube tree within 10/k", [] { return criterion_planar_cube(); }},
      {"torus surgery reaches the girth threshold", [&] { return criterion_surgery(torus); }},
      {"genus-branch tree within 7 sqrt(g) alpha / k", [&] { return criterion_genus_branch(torus); }},
      {"weighted tree thinness, cost and round schedule", [] { return criterion_weighted(); }},
      {"Held-Karp objective and separation", [] { return criterion_held_karp(); }},
      {"planar-support tours within 30(1+1/n) c(x)", [] { return criterion_end_to_end(); }},
      {"CLI outputs byte-identical across runs", [&] { return criterion_determinism(cli); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("threw: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ["
              << o.detail << "; " << std::fixed;
    std::cout.precision(1);
    std::cout << seconds << "s]\n";
    for (const auto& p : o.problems) std::cout << "     " << p << "\n";
  }
  return failures == 0 ? 0 : 1;
}
