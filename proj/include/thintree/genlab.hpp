#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "thintree/atsp.hpp"
#include "thintree/embedded_graph.hpp"
#include "thintree/numeric.hpp"

namespace thintree {

/// mt19937_64 with plain modulo reduction, so any implementation of the
/// standard engine reproduces the same draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

using Point = std::pair<Rational, Rational>;

/// Rotation system of a straight-line drawing: neighbours sorted
/// counterclockwise by exact angle. Edges must be simple and non-crossing.
EmbeddedGraph embed_straight_line(const std::vector<Point>& points, const std::vector<std::pair<int, int>>& edges);

/// Simple graph given by cyclic neighbour lists. Edge ids follow the sorted
/// vertex pairs; dart 2e sits at the smaller endpoint.
EmbeddedGraph embed_neighbor_rotations(const std::vector<std::vector<int>>& neighbors);

/// Named planar base: k4, cube, octahedron, prism (n >= 3), cycle (n >= 3),
/// wheel (n >= 4 vertices), stacked (random stacked triangulation, n >= 4).
EmbeddedGraph planar_base(const std::string& name, int n = 0, std::uint64_t seed = 0);

/// rows x cols toroidal grid, every vertex rotating E, N, W, S. Horizontal
/// edges between columns 0 and 1 get `seam_mult` copies when positive,
/// every other edge `mult` copies.
EmbeddedGraph torus_grid(int rows, int cols, int mult, int seam_mult = 0);

enum class CostModel { kUnit, kUniformRange, kAsymmetricSkew };

CostModel parse_cost_model(const std::string& name);
std::string cost_model_name(CostModel m);

/// Integer costs drawn per edge in increasing edge id (unit: no costs).
EmbeddedGraph assign_costs(const EmbeddedGraph& g, CostModel model, std::int64_t lo, std::int64_t hi, Rng& rng);

/// Random costs, then shortest-path closure.
AtspInstance random_metric(int n, CostModel model, std::int64_t lo, std::int64_t hi, std::uint64_t seed);

struct LpSupportInstance {
  AtspInstance instance;  // metric
  EmbeddedGraph support_embedding;
  int attempts = 0;
};

/// Random metric whose Held-Karp support is planar, with an embedding of the
/// support of the requested genus (0, or 1 by one rotation transposition).
/// Throws BadParams when no attempt yields a planar support.
LpSupportInstance lp_support_instance(int n, int genus, CostModel model, std::int64_t lo, std::int64_t hi,
                                      std::uint64_t seed, int max_attempts = 200);

enum class Family { kPlanarAmplified, kTorusGrid, kRandomMetric, kLpSupportInstance };

Family parse_family(const std::string& name);
std::string family_name(Family f);

struct GenSpec {
  Family family = Family::kPlanarAmplified;
  std::string base = "cube";
  std::map<std::string, std::int64_t> params;
  CostModel cost_model = CostModel::kUnit;
  std::uint64_t seed = 0;

  std::int64_t param(const std::string& key, std::int64_t fallback) const;
};

struct Generated {
  std::optional<std::string> emb;   // EMB/1 text
  std::optional<std::string> atsp;  // ATSP/1 text
  std::optional<int> k;             // measured on the emitted graph
  std::optional<int> genus;
};

/// Throws BadParams for invalid parameters.
Generated generate(const GenSpec& spec);

}  // namespace thintree
