#ifndef SHX_FUZZY_HYPERGRAPH_HPP
#define SHX_FUZZY_HYPERGRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shx/hypergraph.hpp"
#include "shx/matrix.hpp"
#include "shx/shgnn.hpp"

namespace shx {

// Fuzzy hyperedge: vertex memberships in [0, 1], stored sparsely over the
// support (entries with membership 0 are dropped).
struct FuzzyEdge {
  std::vector<std::pair<std::size_t, double>> membership;  // sorted by vertex
  double weight = 1.0;
  std::int64_t id = 0;
};

class FuzzyHypergraph {
 public:
  FuzzyHypergraph() = default;
  FuzzyHypergraph(std::vector<std::string> vertices,
                  std::vector<FuzzyEdge> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<FuzzyEdge>& edges() const { return edges_; }

  // True when every vertex lies in the support of some edge; strict mode
  // requires it.
  bool is_covering() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<FuzzyEdge> edges_;
};

// max over edges of the max membership; 0 for an edgeless graph
double height(const FuzzyHypergraph& fh);

// Crisp c-level hypergraph: per edge keeps vertices with membership >= c,
// drops edges whose cut is empty; the vertex set is the union of the cuts
// in original vertex order. c must lie in (0, 1].
Hypergraph c_cut(const FuzzyHypergraph& fh, double c);

SparseMatrix fuzzy_incidence(const FuzzyHypergraph& fh);
std::pair<DiagonalMatrix, DiagonalMatrix> fuzzy_degrees(
    const FuzzyHypergraph& fh);
DenseMatrix fuzzy_laplacian(const FuzzyHypergraph& fh);

// Same convolution as the crisp pipeline with H_f in place of H; binary
// memberships reproduce the crisp result exactly.
DenseMatrix fhgnn_convolve(const FuzzyHypergraph& fh, const DenseMatrix& x,
                           const LayerParams& params);

}  // namespace shx

#endif  // SHX_FUZZY_HYPERGRAPH_HPP
