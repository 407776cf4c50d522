#pragma once

#include <cstdint>

#include "reorient/graph.hpp"
#include "reorient/sat.hpp"

namespace reorient {

/// Deterministic generators. The same seed yields the same instance on every platform
/// (std::mt19937_64 with plain modular reduction, no library distributions).

/// m arcs with uniformly random distinct ends.
MixedGraph random_digraph(int n, int m, std::uint64_t seed);

/// Connected cactus on n >= 1 vertices built by hanging cycles (length >= 2, so parallel
/// edge pairs occur) off earlier vertices.
MixedGraph random_cactus(int n, std::uint64_t seed);

/// Random S3BMAX2SAT instance on an even number of variables: 3/2 clauses per variable,
/// no clause repeating a variable.
SatInstance random_s3b_sat(int num_vars, std::uint64_t seed);

}  // namespace reorient
