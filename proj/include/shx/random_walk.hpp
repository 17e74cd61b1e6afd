#ifndef SHX_RANDOM_WALK_HPP
#define SHX_RANDOM_WALK_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shx/hypergraph.hpp"
#include "shx/matrix.hpp"
#include "shx/superhypergraph.hpp"

namespace shx {

enum class VertexSelection { uniform, weighted };
enum class DanglingPolicy { error, lazy_self_loop };

// Row-stochastic transition matrix over named states. P(v -> u) sums the
// two-factor products edge-selection (weight-proportional) times
// vertex-selection (uniform or gamma-weighted) over edges containing both
// endpoints.
struct TransitionKernel {
  std::vector<std::string> states;
  DenseMatrix matrix;
};

// Optional per-edge vertex-selection weights gamma_e(v), keyed by state
// name (base vertex name, or canonical supervertex text). Entries must be
// positive; members without an entry default to 1. Ignored under uniform
// selection.
using SelectionWeights = std::vector<std::map<std::string, double>>;

TransitionKernel transition_kernel(const Hypergraph& h, VertexSelection sel,
                                   const SelectionWeights& gamma,
                                   DanglingPolicy dangling);

// Walk over the supervertices: a superedge contains a state when one of its
// members is structurally equal to it. Every superedge member must be a
// listed supervertex and supervertices must be pairwise distinct.
TransitionKernel transition_kernel(const SuperHyperGraph& shg,
                                   VertexSelection sel,
                                   const SelectionWeights& gamma,
                                   DanglingPolicy dangling);

struct WalkConfig {
  std::size_t start_state = 0;
  std::size_t steps = 0;
  std::uint64_t seed = 0;
};

// Length steps + 1; transitions sampled by inverse CDF over the row in
// ascending state order. Bit-reproducible for a fixed seed.
std::vector<std::size_t> simulate(const TransitionKernel& kernel,
                                  const WalkConfig& cfg);

// Power iteration from the uniform distribution until the L1 residual of
// pi P = pi drops below tol. The chain must be irreducible (single strong
// component of the positive-entry digraph) and aperiodic.
std::vector<double> stationary(const TransitionKernel& kernel, double tol,
                               std::size_t max_iters = 1000000);

}  // namespace shx

#endif  // SHX_RANDOM_WALK_HPP
