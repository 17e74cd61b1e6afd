#ifndef SHX_SPECTRAL_HPP
#define SHX_SPECTRAL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "shx/hypergraph.hpp"
#include "shx/matrix.hpp"

namespace shx {

// Dense materialization guard for the Laplacian/propagator. Above the cap
// the operators stay composed and are applied sparse-first.
inline constexpr std::size_t kDenseCap = 4096;

// Zero degrees use the pseudo-inverse convention 0^-1 := 0 and
// 0^-1/2 := 0, keeping every formula total on isolated vertices and empty
// hyperedges.
double pseudo_inverse(double x);
double pseudo_inverse_sqrt(double x);

// |V| x |E| 0/1 incidence in compressed form: (i, j) present iff vertex i
// belongs to hyperedge j.
SparseMatrix incidence_matrix(const Hypergraph& h);

// D_V from weighted row sums, D_E from unweighted column sums.
std::pair<DiagonalMatrix, DiagonalMatrix> degrees(const Hypergraph& h);

// Generic forms over an arbitrary real-valued incidence H with per-column
// weights w. The crisp hypergraph, the fuzzy hypergraph and the attention
// variant all route through these so their reductions agree bitwise.
std::pair<DiagonalMatrix, DiagonalMatrix> degrees_of(
    const SparseMatrix& incidence, const std::vector<double>& edge_weights);

// I - D_V^-1/2 H W D_E^-1 H^T D_V^-1/2, materialized symmetric (the product
// is formed as S S^T with the upper triangle mirrored). Refuses to
// materialize above dense_cap; use apply_propagator for larger instances.
DenseMatrix normalized_laplacian_of(const SparseMatrix& incidence,
                                    const std::vector<double>& edge_weights,
                                    std::size_t dense_cap = kDenseCap);

// The complement D_V^-1/2 H W D_E^-1 H^T D_V^-1/2 = I - Laplacian.
DenseMatrix normalized_propagator_of(const SparseMatrix& incidence,
                                     const std::vector<double>& edge_weights,
                                     std::size_t dense_cap = kDenseCap);

// Propagator applied to a feature block without materializing the n x n
// operator: H^T (D_V^-1/2 X) first, then the weighted column scaling, then
// H back up. Linear in nnz(H) at fixed feature width.
DenseMatrix apply_propagator(const SparseMatrix& incidence,
                             const std::vector<double>& edge_weights,
                             const DenseMatrix& x);

DenseMatrix normalized_laplacian(const Hypergraph& h);
DenseMatrix normalized_propagator(const Hypergraph& h);

std::vector<double> edge_weights_of(const Hypergraph& h);

// Symmetric eigendecomposition by cyclic Jacobi sweeps; eigenvalues in
// ascending order, eigenvectors as columns with a deterministic sign
// convention. Intended for small instances (tests, spectral clustering).
struct EigenDecomposition {
  std::vector<double> values;
  DenseMatrix vectors;
};

EigenDecomposition symmetric_eigen(const DenseMatrix& m);

}  // namespace shx

#endif  // SHX_SPECTRAL_HPP
