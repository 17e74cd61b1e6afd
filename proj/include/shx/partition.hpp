#ifndef SHX_PARTITION_HPP
#define SHX_PARTITION_HPP

#include <cstdint>
#include <vector>

#include "shx/hypergraph.hpp"
#include "shx/superhypergraph.hpp"

namespace shx {

enum class PartitionObjective { cut, soed };

// k-way assignment of the vertices. Balance holds on every returned
// partition: ceil(|V| / (k c)) <= |V_i| <= floor(c |V| / k); infeasible
// bounds abort instead of returning a silently unbalanced result.
struct Partition {
  std::vector<int> assignment;  // vertex -> part in [0, k)
  int k = 1;
  double imbalance = 1.0;
};

// f_cut = sum_e w(e) (spanned(e) - 1); empty edges span 0 parts and
// contribute 0.
double cut_objective(const Hypergraph& h, const Partition& p);

// SOED = sum over edges spanning more than one part of w(e) * spanned(e).
double soed_objective(const Hypergraph& h, const Partition& p);

// 2-uniform weighted cut: total weight of edges crossing parts.
double weighted_cut(const Hypergraph& h, const Partition& p);

// Normalized-cut value of a partition (used by the clustering oracle):
// sum_i cut(C_i, ~C_i) / vol(C_i) with the fractional hyperedge cut.
double ncut_value(const Hypergraph& h, const Partition& p);

// One coarsening step by heavy-edge matching on clique-expansion star
// weights w(e) / (|e| - 1). Either shrinks the vertex count to at most
// ceil(0.6 |V|) or returns the input unchanged.
struct CoarseLevel {
  Hypergraph coarse;
  std::vector<std::size_t> fine_to_coarse;
  std::vector<int> coarse_vertex_weight;  // fine vertices represented
};

CoarseLevel coarsen(const Hypergraph& h);

struct PartitionResult {
  Partition partition;
  double objective = 0.0;
  // objective after each refinement pass, finest level last; never
  // increasing within a level
  std::vector<double> pass_objectives;
};

// Multilevel k-way partitioning: coarsen to at most max(2k, 20) vertices,
// seeded greedy initial partition, balance-respecting single-vertex FM
// refinement on the way back up with one rollback-to-best per pass.
PartitionResult multilevel_partition(const Hypergraph& h, int k, double c,
                                     std::uint64_t seed,
                                     PartitionObjective objective);
PartitionResult multilevel_partition(const SuperHyperGraph& shg, int k,
                                     double c, std::uint64_t seed,
                                     PartitionObjective objective);

// Spectral clustering: embed by the eigenvectors of the k smallest
// Laplacian eigenvalues, cluster embeddings with seeded k-means. Balance is
// not enforced.
Partition ncut_spectral(const Hypergraph& h, int k, std::uint64_t seed);

// Weighted degree of every base vertex in the expansion.
std::vector<double> degree_centrality(const SuperHyperGraph& shg);

}  // namespace shx

#endif  // SHX_PARTITION_HPP
