#include "shx/shgnn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shx/error.hpp"
#include "shx/kmeans.hpp"
#include "shx/rng.hpp"
#include "shx/spectral.hpp"

namespace shx {

namespace {

std::vector<double> layer_weights(const Hypergraph& h,
                                  const LayerParams& params) {
  if (params.edge_weights.empty()) return edge_weights_of(h);
  if (params.edge_weights.size() != h.edge_count())
    fail(errc::shape_mismatch, "layer edge weight count mismatch");
  for (double w : params.edge_weights)
    if (w < 0.0) fail(errc::domain, "layer edge weight is negative");
  return params.edge_weights;
}

void check_features(const Hypergraph& h, const DenseMatrix& x) {
  if (x.rows() != h.vertex_count())
    fail(errc::shape_mismatch, "feature row count does not match vertices");
  if (!x.all_finite()) fail(errc::domain, "non-finite feature entry");
}

}  // namespace

DenseMatrix hgnn_convolve(const Hypergraph& h, const DenseMatrix& x,
                          const LayerParams& params) {
  check_features(h, x);
  if (params.theta.rows() != x.cols())
    fail(errc::shape_mismatch, "theta row count does not match features");
  if (!params.theta.all_finite()) fail(errc::domain, "non-finite theta entry");
  const SparseMatrix inc = incidence_matrix(h);
  const DenseMatrix m = apply_propagator(inc, layer_weights(h, params), x);
  return apply_activation(matmul(m, params.theta), params.activation);
}

DenseMatrix shgnn_convolve(const SuperHyperGraph& shg, const DenseMatrix& x,
                           const LayerParams& params) {
  return hgnn_convolve(expand(shg), x, params);
}

DenseMatrix forward(const SuperHyperGraph& shg, const DenseMatrix& x,
                    const NetworkConfig& net) {
  const Hypergraph h = expand(shg);
  DenseMatrix cur = x;
  for (const auto& layer : net.layers) cur = hgnn_convolve(h, cur, layer);
  if (net.readout == Readout::softmax) cur = softmax_rows(cur);
  return cur;
}

SparseMatrix attention_incidence(const Hypergraph& h, const DenseMatrix& x,
                                 const std::vector<double>& attention_vector,
                                 const DenseMatrix& theta, double slope) {
  check_features(h, x);
  const std::size_t dprime = theta.cols();
  if (theta.rows() != x.cols())
    fail(errc::shape_mismatch, "theta row count does not match features");
  if (attention_vector.size() != 2 * dprime)
    fail(errc::shape_mismatch,
         "attention vector must have length 2 * cols(theta)");

  const DenseMatrix xp = matmul(x, theta);  // n x d'

  // u_j: mean raw member feature, transformed afterwards
  DenseMatrix u(h.edge_count(), x.cols());
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    const auto& members = h.edge(j).members;
    if (members.empty()) continue;
    for (std::size_t i : members)
      for (std::size_t c = 0; c < x.cols(); ++c) u.at(j, c) += x.at(i, c);
    for (std::size_t c = 0; c < x.cols(); ++c)
      u.at(j, c) /= static_cast<double>(members.size());
  }
  const DenseMatrix up = matmul(u, theta);  // m x d'

  std::vector<double> vertex_part(h.vertex_count(), 0.0);
  for (std::size_t i = 0; i < h.vertex_count(); ++i)
    for (std::size_t c = 0; c < dprime; ++c)
      vertex_part[i] += attention_vector[c] * xp.at(i, c);
  std::vector<double> edge_part(h.edge_count(), 0.0);
  for (std::size_t j = 0; j < h.edge_count(); ++j)
    for (std::size_t c = 0; c < dprime; ++c)
      edge_part[j] += attention_vector[dprime + c] * up.at(j, c);

  std::vector<std::vector<std::size_t>> incident(h.vertex_count());
  for (std::size_t j = 0; j < h.edge_count(); ++j)
    for (std::size_t i : h.edge(j).members) incident[i].push_back(j);

  std::vector<SparseMatrix::Triplet> ts;
  for (std::size_t i = 0; i < h.vertex_count(); ++i) {
    auto& edges = incident[i];
    if (edges.empty()) continue;
    std::sort(edges.begin(), edges.end());
    double mx = -HUGE_VAL;
    std::vector<double> logits(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const double pre = vertex_part[i] + edge_part[edges[k]];
      logits[k] = pre > 0.0 ? pre : slope * pre;
      mx = std::max(mx, logits[k]);
    }
    double sum = 0.0;
    for (double& l : logits) {
      l = std::exp(l - mx);
      sum += l;
    }
    for (std::size_t k = 0; k < edges.size(); ++k)
      ts.push_back({i, edges[k], logits[k] / sum});
  }
  return SparseMatrix::from_triplets(h.vertex_count(), h.edge_count(),
                                     std::move(ts));
}

DenseMatrix attention_convolve(const Hypergraph& h, const DenseMatrix& x,
                               const std::vector<double>& attention_vector,
                               const DenseMatrix& theta, double slope) {
  const SparseMatrix att =
      attention_incidence(h, x, attention_vector, theta, slope);
  auto [dv, de] = degrees(h);  // crisp degrees
  std::vector<double> col_scale(h.edge_count());
  for (std::size_t j = 0; j < h.edge_count(); ++j)
    col_scale[j] = h.edge(j).weight * pseudo_inverse(de.at(j));
  std::vector<double> row_scale(h.vertex_count());
  for (std::size_t i = 0; i < h.vertex_count(); ++i)
    row_scale[i] = pseudo_inverse(dv.at(i));

  DenseMatrix s = spmm_transpose_a(att, x);                  // m x d
  DenseMatrix s2 = scale_rows(s, DiagonalMatrix(col_scale));
  DenseMatrix m = spmm(att, s2);                             // n x d
  return relu(scale_rows(m, DiagonalMatrix(row_scale)));
}

SuperHyperGraph dynamic_construct(const DenseMatrix& x,
                                  const DynamicConfig& cfg,
                                  std::vector<std::string> names) {
  const std::size_t n = x.rows();
  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      names.push_back("v" + std::to_string(i + 1));
  }
  if (names.size() != n)
    fail(errc::shape_mismatch, "vertex name count mismatch");
  const int s = cfg.supervertex_count;
  const int t = cfg.superedge_count;
  if (s < 1 || static_cast<std::size_t>(s) > n)
    fail(errc::domain, "supervertex count must be in [1, |V0|]");
  if (t < 1 || t > s)
    fail(errc::domain, "superedge count must be in [1, s]");

  Rng rng(cfg.seed);
  const KMeansResult vertex_clusters = kmeans(x, s, cfg.kmeans_iters, rng);

  std::vector<std::vector<NestedElement>> groups(s);
  for (std::size_t i = 0; i < n; ++i)
    groups[vertex_clusters.assignment[i]].push_back(
        NestedElement::leaf(names[i]));
  std::vector<NestedElement> supervertices;
  supervertices.reserve(s);
  for (auto& g : groups)
    supervertices.push_back(canonicalize(NestedElement::set(std::move(g))));

  // the same stream continues into the centroid-level clustering
  const KMeansResult edge_clusters =
      kmeans(vertex_clusters.centroids, t, cfg.kmeans_iters, rng);
  std::vector<Superedge> superedges(t);
  for (int j = 0; j < t; ++j) superedges[j].id = j;
  for (int ci = 0; ci < s; ++ci)
    superedges[edge_clusters.assignment[ci]].members.push_back(
        supervertices[ci]);

  return SuperHyperGraph(std::move(names), 1, std::move(supervertices),
                         std::move(superedges));
}

DenseMatrix dshgnn_forward(const DenseMatrix& x0,
                           const std::vector<DynamicLayer>& layers,
                           std::vector<std::string> names) {
  DenseMatrix cur = x0;
  for (const auto& layer : layers) {
    const SuperHyperGraph shg = dynamic_construct(cur, layer.config, names);
    cur = shgnn_convolve(shg, cur, layer.params);
  }
  return cur;
}

DenseMatrix grad_theta(const SuperHyperGraph& shg, const DenseMatrix& x,
                       const LayerParams& params,
                       const DenseMatrix& upstream) {
  const Hypergraph h = expand(shg);
  check_features(h, x);
  if (upstream.rows() != h.vertex_count() ||
      upstream.cols() != params.theta.cols())
    fail(errc::shape_mismatch, "upstream shape mismatch");
  const SparseMatrix inc = incidence_matrix(h);
  const DenseMatrix m = apply_propagator(inc, layer_weights(h, params), x);
  const DenseMatrix pre = matmul(m, params.theta);
  DenseMatrix gated(pre.rows(), pre.cols());
  for (std::size_t i = 0; i < pre.rows(); ++i)
    for (std::size_t j = 0; j < pre.cols(); ++j)
      gated.at(i, j) = upstream.at(i, j) *
                       activation_derivative(pre.at(i, j), params.activation);
  return matmul_transpose_a(m, gated);
}

}  // namespace shx
