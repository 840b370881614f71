#include "bipnet/paths.hpp"

#include "bipnet/error.hpp"

namespace bipnet {
namespace {

std::uint64_t walk(const Graph& g, NodeId at, NodeId target, int remaining) {
  if (remaining == 0) return at == target ? 1 : 0;
  std::uint64_t total = 0;
  for (NodeId next : g.neighbors(at)) total += walk(g, next, target, remaining - 1);
  return total;
}

}  // namespace

std::uint64_t count_paths_bruteforce(const Graph& g, NodeId u, NodeId v, int k) {
  if (k < 0 || k > kMaxBruteforceWalkLength || g.node_count() > kMaxBruteforceNodes)
    throw Error(ErrorKind::scale_limit, "walk enumeration limited to 12 nodes and length 6");
  if (u < 0 || v < 0 || u >= g.node_count() || v >= g.node_count())
    throw Error(ErrorKind::invalid_input, "node id out of range");
  return walk(g, u, v, k);
}

}  // namespace bipnet
