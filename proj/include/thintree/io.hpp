#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "thintree/embedded_graph.hpp"

namespace thintree {

/// EMB/1 text format:
///   EMB 1 <V> <E>
///   rot <vertex-id> <dart-id>...        (one line per vertex, counterclockwise)
///   edge <edge-id> <dart-a> <dart-b> [cost]
/// Edge ids may be sparse; dart ids are always 2e and 2e+1.
EmbeddedGraph parse_emb(std::string_view text);
std::string format_emb(const EmbeddedGraph& g);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace thintree
