#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bipnet/graph.hpp"

namespace bipnet {

// Edge list in the KONECT text layout: '%' lines are comments, data lines are
// `u v [weight [time]]` separated by whitespace.
struct NetworkFile {
  std::string path;
  bool bipartite = false;
  bool weighted = false;
  bool timestamped = false;
  std::vector<std::string> comments;
  std::vector<InputEdge> edges;
};

struct ParseOptions {
  bool bipartite = false;
  bool directed = false;
  DuplicatePolicy duplicates = DuplicatePolicy::aggregate;
};

NetworkFile parse_network_text(std::string_view text, bool bipartite, std::string path = "<input>");
NetworkFile read_network_file(const std::filesystem::path& path, bool bipartite);

using Network = std::variant<Graph, BipartiteGraph>;

Network build_network(const NetworkFile& file, const ParseOptions& opts);
Network parse_network(const std::filesystem::path& path, const ParseOptions& opts);

// Writes original labels, one edge per line. Weights are written when the
// graph is weighted or any edge carries a time; times when any edge has one.
void write_network(std::ostream& out, const Graph& g);
void write_network(std::ostream& out, const BipartiteGraph& g);

}  // namespace bipnet
