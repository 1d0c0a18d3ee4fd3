#include "thintree/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "thintree/error.hpp"

namespace thintree {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorCode::kParse,
                "line " + std::to_string(line_no) + ": expected integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

EmbeddedGraph parse_emb(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int vertex_count = 0;
  int edge_count = 0;
  std::vector<std::vector<DartId>> rotations;
  std::vector<char> seen_rot;
  std::vector<std::pair<DartId, DartId>> twins;
  std::map<EdgeId, Decimal> costs;
  int edges_without_cost = 0;

  while (std::getline(in, line)) {
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok.size() != 4 || tok[0] != "EMB" || tok[1] != "1") {
        throw Error(ErrorCode::kParse, "missing 'EMB 1 <V> <E>' header");
      }
      vertex_count = parse_int(tok[2], line_no);
      edge_count = parse_int(tok[3], line_no);
      if (vertex_count < 0 || edge_count < 0) throw Error(ErrorCode::kParse, "negative counts in header");
      rotations.resize(vertex_count);
      seen_rot.assign(vertex_count, 0);
      have_header = true;
      continue;
    }
    if (tok[0] == "rot") {
      if (tok.size() < 2) throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": rot needs a vertex");
      int v = parse_int(tok[1], line_no);
      if (v < 0 || v >= vertex_count) throw Error(ErrorCode::kParse, "rot vertex out of range");
      if (seen_rot[v]) throw Error(ErrorCode::kParse, "duplicate rot line for vertex " + std::to_string(v));
      seen_rot[v] = 1;
      for (std::size_t i = 2; i < tok.size(); ++i) rotations[v].push_back(parse_int(tok[i], line_no));
    } else if (tok[0] == "edge") {
      if (tok.size() != 4 && tok.size() != 5) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": edge <id> <dart> <dart> [cost]");
      }
      int e = parse_int(tok[1], line_no);
      int a = parse_int(tok[2], line_no);
      int b = parse_int(tok[3], line_no);
      if (e < 0) throw Error(ErrorCode::kParse, "negative edge id");
      if (std::min(a, b) != 2 * e || std::max(a, b) != 2 * e + 1) {
        throw Error(ErrorCode::kBadTwin, "edge " + std::to_string(e) + " must own darts " +
                                             std::to_string(2 * e) + " and " + std::to_string(2 * e + 1));
      }
      twins.emplace_back(a, b);
      if (tok.size() == 5) {
        costs[e] = Decimal::parse(tok[4]);
      } else {
        ++edges_without_cost;
      }
    } else {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": unknown directive '" +
                                         std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw Error(ErrorCode::kParse, "empty EMB input");
  for (int v = 0; v < vertex_count; ++v) {
    if (!seen_rot[v]) throw Error(ErrorCode::kParse, "missing rot line for vertex " + std::to_string(v));
  }
  if (static_cast<int>(twins.size()) != edge_count) {
    throw Error(ErrorCode::kParse, "header declares " + std::to_string(edge_count) + " edges, found " +
                                       std::to_string(twins.size()));
  }
  if (!costs.empty() && edges_without_cost > 0) {
    throw Error(ErrorCode::kParse, "either every edge carries a cost or none does");
  }
  return build_embedding(vertex_count, rotations, twins, costs);
}

std::string format_emb(const EmbeddedGraph& g) {
  std::ostringstream out;
  out << "EMB 1 " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "rot " << v;
    for (DartId d : g.rotation(v)) out << ' ' << d;
    out << '\n';
  }
  for (EdgeId e : g.edges()) {
    out << "edge " << e << ' ' << 2 * e << ' ' << 2 * e + 1;
    if (g.has_costs()) out << ' ' << g.cost(e).str();
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path.string());
  out << text;
}

}  // namespace thintree
