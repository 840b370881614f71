#pragma once

#include <cstdint>

#include "bipnet/graph.hpp"

namespace bipnet {

inline constexpr int kMaxBruteforceWalkLength = 6;
inline constexpr NodeId kMaxBruteforceNodes = 12;

// Number of walks of length k from u to v (nodes may repeat), found by
// explicit enumeration. Edge weights are ignored. Intended as a reference
// for [A^k]_uv on small graphs; throws scale_limit beyond 12 nodes or k > 6.
std::uint64_t count_paths_bruteforce(const Graph& g, NodeId u, NodeId v, int k);

}  // namespace bipnet
