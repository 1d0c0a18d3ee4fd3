// Command-line front end: instance generation, the thin-tree algorithms, the
// ATSP rounding pipeline and the brute-force verifiers. Reports are JSON with
// exact values written as "p/q" strings.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "thintree/atsp.hpp"
#include "thintree/connectivity.hpp"
#include "thintree/error.hpp"
#include "thintree/genlab.hpp"
#include "thintree/io.hpp"
#include "thintree/oracle.hpp"
#include "thintree/pipeline.hpp"
#include "thintree/surgery.hpp"
#include "thintree/thin_tree.hpp"

namespace {

using namespace thintree;
using Json = nlohmann::ordered_json;

constexpr int kMaxCertifyVertices = 24;

std::string q(const Rational& r) { return to_string(r); }

Json optional_int(int v) { return v == kNone ? Json(nullptr) : Json(v); }

void write_json(const std::string& path, const Json& j) { write_text_file(path, j.dump(2) + "\n"); }

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

// Accepts a bare array or an object with the named array field.
template <typename T>
std::vector<T> read_list(const std::string& path, const char* field) {
  Json j = read_json(path);
  const Json& list = j.is_array() ? j : j.value(field, Json());
  if (!list.is_array()) throw Error(ErrorCode::kParse, path + ": missing array '" + field + "'");
  try {
    return list.get<std::vector<T>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

Json certificate_json(const ThinnessReport& r) {
  return Json{{"max_ratio", q(r.max_ratio)}, {"witness_mask", r.witness_mask}, {"cuts_checked", r.cuts_checked}};
}

// ---- gen ----

struct GenArgs {
  std::string family = "planar-amplified";
  std::string base = "cube";
  std::string cost_model = "unit";
  std::uint64_t seed = 0;
  std::optional<std::int64_t> n, mult, rows, cols, seam_mult, genus, attempts, cost_lo, cost_hi;
  std::string out;
  std::string emb_out;
};

void run_gen(const GenArgs& a) {
  GenSpec spec;
  spec.family = parse_family(a.family);
  spec.base = a.base;
  spec.cost_model = parse_cost_model(a.cost_model);
  spec.seed = a.seed;
  auto put = [&](const char* key, const std::optional<std::int64_t>& v) {
    if (v) spec.params[key] = *v;
  };
  put("n", a.n);
  put("mult", a.mult);
  put("rows", a.rows);
  put("cols", a.cols);
  put("seam-mult", a.seam_mult);
  put("genus", a.genus);
  put("attempts", a.attempts);
  put("cost-lo", a.cost_lo);
  put("cost-hi", a.cost_hi);

  Generated g = generate(spec);
  Json summary{{"family", family_name(spec.family)}, {"seed", spec.seed}};
  if (g.atsp) {
    write_text_file(a.out, *g.atsp);
    if (g.emb) {
      if (a.emb_out.empty()) throw Error(ErrorCode::kBadParams, "this family also emits an embedding; pass --emb-out");
      write_text_file(a.emb_out, *g.emb);
    }
  } else if (g.emb) {
    write_text_file(a.out, *g.emb);
  }
  if (g.k) summary["k"] = *g.k;
  if (g.genus) summary["genus"] = *g.genus;
  std::cout << summary.dump() << "\n";
}

// ---- thin-tree ----

void run_thin_tree(const std::string& in, const std::string& out, bool certify) {
  EmbeddedGraph g = parse_emb(read_text_file(in));
  if (certify && g.vertex_count() > kMaxCertifyVertices) {
    throw Error(ErrorCode::kTooLarge, "--certify enumerates all cuts; refusing V = " +
                                          std::to_string(g.vertex_count()) + " > " +
                                          std::to_string(kMaxCertifyVertices));
  }
  ThinTreeResult r = thin_spanning_tree(g);
  Json j{{"tree_edges", r.tree_edges},
         {"far_set", r.far_set},
         {"dual_girth", r.dual_girth},
         {"genus", r.genus},
         {"alpha", r.alpha},
         {"thinness_bound", q(r.thinness_bound)},
         {"certificate_distance", r.certificate_distance},
         {"measured_distance", optional_int(r.measured_distance)},
         {"certified_thinness", q(r.certified_thinness)}};
  if (certify) {
    ThinnessReport far = brute_force_thinness(g, r.far_set);
    ThinnessReport tree = brute_force_thinness(g, r.tree_edges);
    Json c{{"far_set", certificate_json(far)}, {"tree", certificate_json(tree)}};
    c["far_set_within_certificate"] = far.max_ratio <= Rational(1, r.certificate_distance);
    c["tree_within_bound"] = tree.max_ratio <= r.thinness_bound;
    j["certify"] = c;
  }
  write_json(out, j);
}

// ---- surgery ----

Json step_json(int index, const SurgeryStep& s) {
  return Json{{"iteration", index},
              {"cycle_edges", s.cycle_edges},
              {"cycle_length", s.cycle_length},
              {"genus_before", s.genus_before},
              {"genus_after", s.genus_after},
              {"components_before", s.components_before},
              {"components_after", s.components_after},
              {"faces_before", s.faces_before},
              {"faces_after", s.faces_after}};
}

void run_surgery(const std::string& in, int k, const std::string& out, const std::string& log_path) {
  EmbeddedGraph g = parse_emb(read_text_file(in));
  SurgeryResult r = increase_dual_girth(g, k, genus(g));
  write_text_file(out, format_emb(r.graph));
  std::string log;
  for (std::size_t i = 0; i < r.log.iterations.size(); ++i) {
    log += step_json(static_cast<int>(i), r.log.iterations[i]).dump() + "\n";
  }
  Json summary{{"summary", true},
               {"iterations", r.log.iterations.size()},
               {"total_deleted", r.log.total_deleted},
               {"k", r.k},
               {"genus", r.genus},
               {"threshold", r.threshold.str()},
               {"initial_components", r.initial_components},
               {"final_genus", r.final_genus},
               {"final_components", r.final_components},
               {"final_dual_girth", optional_int(r.final_dual_girth)},
               {"violations", surgery_violations(r)}};
  log += summary.dump() + "\n";
  write_text_file(log_path, log);
}

// ---- pipeline ----

void run_pipeline(const std::string& in, bool weighted, const std::string& out) {
  EmbeddedGraph g = parse_emb(read_text_file(in));
  Json j;
  if (weighted) {
    WeightedThinTree w = weighted_thin_tree(g);
    Json trace = Json::array();
    for (const auto& round : w.trace) {
      trace.push_back(Json{{"round", round.round},
                           {"connectivity", round.connectivity},
                           {"meets_schedule", round.meets_schedule},
                           {"cost", round.cost.str()},
                           {"tree_edges", round.tree_edges}});
    }
    j = Json{{"tree_edges", w.tree_edges},
             {"k", w.k},
             {"genus", w.genus},
             {"g_value", w.g_value.str()},
             {"thinness", w.thinness.str()},
             {"cost_ratio", q(w.cost_ratio)},
             {"c_tree", w.c_tree.str()},
             {"c_graph", w.c_graph.str()},
             {"rounds_planned", w.rounds_planned},
             {"chosen_round", w.chosen_round},
             {"truncated", w.truncated},
             {"warning", w.warning},
             {"trace", trace}};
  } else {
    BoundedGenusResult r = bounded_genus_thin_tree(g);
    j = Json{{"tree_edges", r.tree_edges},
             {"k", r.k},
             {"genus", r.genus},
             {"alpha", r.alpha},
             {"planar_branch", r.planar_branch},
             {"thinness", r.thinness_bound.str()},
             {"surgery_iterations", r.surgery_iterations},
             {"surgery_deleted", r.surgery_deleted},
             {"components_after_surgery", r.components_after_surgery},
             {"connector_edges", r.connector_edges}};
  }
  write_json(out, j);
}

// ---- atsp ----

void run_atsp(const std::string& in, const std::string& emb_path, std::int64_t denominator, bool exact,
              const std::string& out) {
  AtspInstance inst = parse_atsp(read_text_file(in));
  EmbeddedGraph emb = parse_emb(read_text_file(emb_path));
  AtspOptions options;
  options.denominator = denominator;
  if (exact) {
    options.hk.exact = true;
    options.hk.exact_auto = false;
  }
  AtspReport r = atsp_approx(inst, emb, options);
  Json x = Json::array();
  for (const auto& [arc, value] : r.hk.x) x.push_back(Json{{"from", arc.first}, {"to", arc.second}, {"value", q(value)}});
  Json oriented = Json::array();
  for (const auto& [u, v] : r.oriented_tree) oriented.push_back(Json::array({u, v}));
  Json j{{"n", r.metric.n},
         {"opt_hk", q(r.hk.objective)},
         {"hk_exact", r.hk.exact},
         {"hk_cuts_added", r.hk.cuts_added},
         {"x", x},
         {"denominator", r.denominator},
         {"support_edges", r.support.size()},
         {"support_genus", r.support_genus},
         {"multigraph_k", r.multigraph_k},
         {"required_k", r.required_k},
         {"thin_tree_thinness", r.thin_tree.thinness.str()},
         {"thin_tree_cost_ratio", q(r.thin_tree.cost_ratio)},
         {"thin_tree_warning", r.thin_tree.warning},
         {"oriented_tree", oriented},
         {"alpha_x", r.alpha_x.str()},
         {"sigma_x", q(r.sigma_x)},
         {"beta", r.beta.str()},
         {"approximation_bound", r.approximation_bound.str()},
         {"within_approximation_bound", r.within_approximation_bound},
         {"tree_cost", r.rounding.tree_cost.str()},
         {"circulation_cost", r.rounding.circulation_cost.str()},
         {"circulation_slack", r.rounding.circulation_slack.str()},
         {"tour", r.rounding.tour.order},
         {"tour_cost", r.rounding.tour.cost.str()},
         {"ratio", q(r.ratio)}};
  write_json(out, j);
}

// ---- verify ----

void run_verify_thinness(const std::string& in, const std::string& edges_path) {
  EmbeddedGraph g = parse_emb(read_text_file(in));
  auto edges = read_list<EdgeId>(edges_path, "tree_edges");
  std::cout << certificate_json(brute_force_thinness(g, edges)).dump() << "\n";
}

void run_verify_tour(const std::string& in, const std::string& tour_path) {
  AtspInstance inst = metric_completion(parse_atsp(read_text_file(in)));
  auto order = read_list<int>(tour_path, "tour");
  Json j{{"valid", true}, {"cost", verify_tour(order, inst).str()}};
  if (inst.n <= 12) j["optimum"] = brute_force_atsp(inst).cost.str();
  std::cout << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thin spanning trees on embedded multigraphs and ATSP rounding"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", gen.family, "planar-amplified, torus-grid, random-metric, lp-support-instance");
  gen_cmd->add_option("--base", gen.base, "Planar base: k4, cube, octahedron, prism, cycle, wheel, stacked");
  gen_cmd->add_option("--n", gen.n, "Vertex count parameter");
  gen_cmd->add_option("--mult", gen.mult, "Parallel copies per edge");
  gen_cmd->add_option("--rows", gen.rows);
  gen_cmd->add_option("--cols", gen.cols);
  gen_cmd->add_option("--seam-mult", gen.seam_mult, "Copies on the seam column of a torus grid");
  gen_cmd->add_option("--genus", gen.genus, "Genus of the LP support embedding (0 or 1)");
  gen_cmd->add_option("--attempts", gen.attempts);
  gen_cmd->add_option("--cost-model", gen.cost_model, "unit, uniform-range, asymmetric-skew");
  gen_cmd->add_option("--cost-lo", gen.cost_lo);
  gen_cmd->add_option("--cost-hi", gen.cost_hi);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--out", gen.out, "EMB file, or ATSP file for metric families")->required();
  gen_cmd->add_option("--emb-out", gen.emb_out, "Support embedding for lp-support-instance");

  std::string in, out, log_path, aux;
  bool certify = false, weighted = false, exact = false;
  int k = 0;
  std::int64_t denominator = 0;

  auto* tree_cmd = app.add_subcommand("thin-tree", "Thin spanning tree of a graph embedded with genus 0 or more");
  tree_cmd->add_option("--in", in)->required();
  tree_cmd->add_option("--out", out)->required();
  tree_cmd->add_flag("--certify", certify, "Check the bounds against every cut");

  auto* surgery_cmd = app.add_subcommand("surgery", "Delete short dual cycles");
  surgery_cmd->add_option("--in", in)->required();
  surgery_cmd->add_option("--k", k)->required();
  surgery_cmd->add_option("--out", out)->required();
  surgery_cmd->add_option("--log", log_path)->required();

  auto* pipeline_cmd = app.add_subcommand("pipeline", "Bounded-genus or cost-aware thin tree");
  pipeline_cmd->add_option("--in", in)->required();
  pipeline_cmd->add_flag("--weighted", weighted);
  pipeline_cmd->add_option("--out", out)->required();

  auto* atsp_cmd = app.add_subcommand("atsp", "Round the Held-Karp solution into a tour");
  atsp_cmd->add_option("--in", in)->required();
  atsp_cmd->add_option("--emb", aux, "Embedding of the LP support")->required();
  atsp_cmd->add_option("--denominator", denominator, "Discretization denominator (default n^3)");
  atsp_cmd->add_flag("--exact", exact, "Exact rational LP at any size");
  atsp_cmd->add_option("--out", out)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Brute-force checks");
  verify_cmd->require_subcommand(1);
  auto* verify_thinness = verify_cmd->add_subcommand("thinness", "Exact thinness of an edge set");
  verify_thinness->add_option("--in", in)->required();
  verify_thinness->add_option("--edges", aux)->required();
  auto* verify_tour_cmd = verify_cmd->add_subcommand("tour", "Validate a tour and compare with the optimum");
  verify_tour_cmd->add_option("--in", in)->required();
  verify_tour_cmd->add_option("--tour", aux)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) run_gen(gen);
    else if (*tree_cmd) run_thin_tree(in, out, certify);
    else if (*surgery_cmd) run_surgery(in, k, out, log_path);
    else if (*pipeline_cmd) run_pipeline(in, weighted, out);
    else if (*atsp_cmd) run_atsp(in, aux, denominator, exact, out);
    else if (*verify_thinness) run_verify_thinness(in, aux);
    else if (*verify_tour_cmd) run_verify_tour(in, aux);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
