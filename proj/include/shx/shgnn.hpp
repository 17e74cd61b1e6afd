#ifndef SHX_SHGNN_HPP
#define SHX_SHGNN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "shx/matrix.hpp"
#include "shx/superhypergraph.hpp"

namespace shx {

// One spectral convolution layer: Y = act(D_V^-1/2 H' W D_E^-1 H'^T
// D_V^-1/2 X theta) over the expanded incidence H'. When edge_weights is
// empty the superedge weights of the input graph are used.
struct LayerParams {
  DenseMatrix theta;                  // d x c
  std::vector<double> edge_weights;   // per expanded hyperedge; empty = graph
  Activation activation;
};

enum class Readout { none, softmax };

struct NetworkConfig {
  std::vector<LayerParams> layers;
  Readout readout = Readout::none;
};

// Dynamic construction parameters: s supervertices from k-means over the
// feature rows, t superedges from k-means over the s centroids, unit edge
// weights.
struct DynamicConfig {
  int supervertex_count = 1;  // s, 1 <= s <= |V0|
  int superedge_count = 1;    // t, 1 <= t <= s
  int kmeans_iters = 100;
  std::uint64_t seed = 0;
};

// Evaluation order follows the sparse-first pipeline (H'^T (D_V^-1/2 X)
// before anything else); the n x n operator is never materialized.
DenseMatrix shgnn_convolve(const SuperHyperGraph& shg, const DenseMatrix& x,
                           const LayerParams& params);
DenseMatrix hgnn_convolve(const Hypergraph& h, const DenseMatrix& x,
                          const LayerParams& params);

DenseMatrix forward(const SuperHyperGraph& shg, const DenseMatrix& x,
                    const NetworkConfig& net);

// Attention coefficients over incident vertex/hyperedge pairs:
// alpha_ij = softmax_j of leaky_relu(a^T [x_i Theta || u_j Theta]) over the
// edges incident to i, with u_j the mean member feature (zero for an empty
// edge). Rows with at least one incident edge sum to 1.
SparseMatrix attention_incidence(const Hypergraph& h, const DenseMatrix& x,
                                 const std::vector<double>& attention_vector,
                                 const DenseMatrix& theta, double slope);

// X' = relu(D_v^-1 H~ W D_e^-1 H~^T X); degrees come from the crisp
// incidence, not the attention-weighted one.
DenseMatrix attention_convolve(const Hypergraph& h, const DenseMatrix& x,
                               const std::vector<double>& attention_vector,
                               const DenseMatrix& theta, double slope);

// Level-1 graph from feature clustering; deterministic for a fixed seed.
// Base vertex names default to v1..vn when none are supplied.
SuperHyperGraph dynamic_construct(const DenseMatrix& x,
                                  const DynamicConfig& cfg,
                                  std::vector<std::string> names = {});

struct DynamicLayer {
  DynamicConfig config;
  LayerParams params;
};

DenseMatrix dshgnn_forward(const DenseMatrix& x0,
                           const std::vector<DynamicLayer>& layers,
                           std::vector<std::string> names = {});

// Gradient of <upstream, Y> with respect to theta for a single layer;
// matches central finite differences away from activation kinks. Test
// utility; no training loop exists here.
DenseMatrix grad_theta(const SuperHyperGraph& shg, const DenseMatrix& x,
                       const LayerParams& params, const DenseMatrix& upstream);

}  // namespace shx

#endif  // SHX_SHGNN_HPP
