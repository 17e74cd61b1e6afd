#ifndef SHX_COMBINATORICS_HPP
#define SHX_COMBINATORICS_HPP

#include <cstddef>
#include <vector>

#include "shx/hypergraph.hpp"

namespace shx {

// r-uniform pattern with at least one edge; vertices are anonymous labels.
struct UniformPattern {
  std::size_t vertex_count = 0;
  std::size_t r = 0;
  std::vector<std::vector<std::size_t>> edges;  // sorted r-subsets
};

UniformPattern uniform_pattern_of(const Hypergraph& h);

// Non-induced containment: true iff an injective vertex map sends every
// edge of the pattern onto an edge of the host. Backtracking with
// degree-order pruning.
bool contains_pattern(const Hypergraph& host, const UniformPattern& pattern);

// Exhaustive feasibility guard for the Turán search.
inline constexpr std::size_t kTuranMaxVertices = 9;
inline constexpr std::size_t kTuranMaxArity = 3;
inline constexpr std::size_t kTuranMaxEdgeSlots = 36;

struct TuranResult {
  std::size_t max_edges = 0;
  Hypergraph witness;  // one maximizer
};

// Exact maximum edge count over all pattern-free r-uniform graphs on
// vertex_count vertices, by monotone branch and bound over the edge-slot
// lattice (supersets of non-free sets are pruned).
TuranResult turan_number(std::size_t vertex_count, std::size_t r,
                         const UniformPattern& pattern);

// Finite density prefix ex / C(N, r) for N in [n_min, n_max]; every N must
// pass the guard. No limit is claimed.
struct DensityPoint {
  std::size_t n;
  std::size_t ex;
  double ratio;
};

std::vector<DensityPoint> turan_density_estimate(std::size_t r,
                                                 const UniformPattern& pattern,
                                                 std::size_t n_min,
                                                 std::size_t n_max);

}  // namespace shx

#endif  // SHX_COMBINATORICS_HPP
