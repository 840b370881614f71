#include "bipnet/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "bipnet/error.hpp"

namespace bipnet {

namespace {

std::vector<std::string_view> fields_of(std::string_view line) {
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

[[noreturn]] void malformed(const std::string& path, std::size_t line, const std::string& what) {
  throw Error(ErrorKind::invalid_input, path + ":" + std::to_string(line) + ": " + what);
}

ExternalId parse_id(std::string_view s, const std::string& path, std::size_t line) {
  ExternalId v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) malformed(path, line, "bad node id '" + std::string(s) + "'");
  if (v < 0) malformed(path, line, "negative node id");
  return v;
}

double parse_real(std::string_view s, const std::string& path, std::size_t line) {
  // from_chars for double is missing from older libstdc++; strtod on a copy.
  const std::string copy(s);
  char* end = nullptr;
  const double v = std::strtod(copy.c_str(), &end);
  if (end != copy.c_str() + copy.size() || !std::isfinite(v))
    malformed(path, line, "bad number '" + copy + "'");
  return v;
}

void write_edge(std::ostream& out, ExternalId a, ExternalId b, const Edge& e, bool weights, bool times) {
  out << a << ' ' << b;
  if (weights || times) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", e.weight);
    out << ' ' << buf;
  }
  if (times) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", e.time.value_or(0.0));
    out << ' ' << buf;
  }
  out << '\n';
}

template <class G>
bool any_time(const G& g) {
  for (const Edge& e : g.edges())
    if (e.time) return true;
  return false;
}

}  // namespace

NetworkFile parse_network_text(std::string_view text, bool bipartite, std::string path) {
  NetworkFile file;
  file.path = std::move(path);
  file.bipartite = bipartite;
  std::size_t expected = 0;
  std::size_t number = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    const auto fields = fields_of(line);
    if (fields.empty()) continue;
    if (fields.front().front() == '%') {
      const std::size_t start = line.find('%');
      file.comments.emplace_back(line.substr(start, line.find_last_not_of("\r") + 1 - start));
      continue;
    }
    if (fields.size() < 2 || fields.size() > 4)
      malformed(file.path, number, "expected 2 to 4 fields, found " + std::to_string(fields.size()));
    if (expected == 0) expected = fields.size();
    else if (fields.size() != expected)
      malformed(file.path, number, "inconsistent field count (" + std::to_string(fields.size()) + " vs " +
                                       std::to_string(expected) + ")");
    InputEdge e;
    e.u = parse_id(fields[0], file.path, number);
    e.v = parse_id(fields[1], file.path, number);
    if (fields.size() >= 3) e.weight = parse_real(fields[2], file.path, number);
    if (fields.size() == 4) e.time = parse_real(fields[3], file.path, number);
    file.edges.push_back(e);
  }
  file.weighted = expected >= 3;
  file.timestamped = expected == 4;
  return file;
}

NetworkFile read_network_file(const std::filesystem::path& path, bool bipartite) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network_text(buf.str(), bipartite, path.string());
}

Network build_network(const NetworkFile& file, const ParseOptions& opts) {
  if (opts.bipartite) return build_bipartite(file.edges, opts.duplicates);
  return build_graph(file.edges, opts.directed, opts.duplicates);
}

Network parse_network(const std::filesystem::path& path, const ParseOptions& opts) {
  return build_network(read_network_file(path, opts.bipartite), opts);
}

void write_network(std::ostream& out, const Graph& g) {
  const bool times = any_time(g);
  out << (g.directed() ? "% asym " : "% sym ") << (g.weighted() ? "weighted" : "unweighted") << '\n';
  out << "% " << g.edge_count() << ' ' << g.node_count() << ' ' << g.node_count() << '\n';
  for (const Edge& e : g.edges()) write_edge(out, g.ids().external(e.u), g.ids().external(e.v), e, g.weighted(), times);
}

void write_network(std::ostream& out, const BipartiteGraph& g) {
  const bool times = any_time(g);
  out << "% bip " << (g.weighted() ? "weighted" : "unweighted") << '\n';
  out << "% " << g.edge_count() << ' ' << g.left_count() << ' ' << g.right_count() << '\n';
  for (const Edge& e : g.edges())
    write_edge(out, g.left_ids().external(e.u), g.right_ids().external(e.v), e, g.weighted(), times);
}

}  // namespace bipnet
