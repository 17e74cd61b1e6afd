#include "shx/fuzzy_hypergraph.hpp"

#include <algorithm>

#include "shx/error.hpp"
#include "shx/spectral.hpp"

namespace shx {

FuzzyHypergraph::FuzzyHypergraph(std::vector<std::string> vertices,
                                 std::vector<FuzzyEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    std::sort(e.membership.begin(), e.membership.end());
    for (std::size_t i = 1; i < e.membership.size(); ++i)
      if (e.membership[i].first == e.membership[i - 1].first)
        fail(errc::invalid_graph, "duplicate vertex in fuzzy edge");
    for (auto& [v, mu] : e.membership) {
      if (v >= vertices_.size())
        fail(errc::invalid_graph, "fuzzy edge member out of range");
      if (mu < 0.0 || mu > 1.0)
        fail(errc::invalid_graph, "fuzzy membership outside [0, 1]");
    }
    e.membership.erase(
        std::remove_if(e.membership.begin(), e.membership.end(),
                       [](const auto& p) { return p.second == 0.0; }),
        e.membership.end());
    if (e.weight < 0.0)
      fail(errc::invalid_graph, "fuzzy edge weight is negative");
  }
}

bool FuzzyHypergraph::is_covering() const {
  std::vector<bool> covered(vertices_.size(), false);
  for (const auto& e : edges_)
    for (const auto& [v, mu] : e.membership) covered[v] = true;
  return std::all_of(covered.begin(), covered.end(),
                     [](bool b) { return b; });
}

double height(const FuzzyHypergraph& fh) {
  double h = 0.0;
  for (const auto& e : fh.edges())
    for (const auto& [v, mu] : e.membership) h = std::max(h, mu);
  return h;
}

Hypergraph c_cut(const FuzzyHypergraph& fh, double c) {
  if (!(c > 0.0 && c <= 1.0))
    fail(errc::domain, "cut level must lie in (0, 1]");
  std::vector<bool> keep_vertex(fh.vertex_count(), false);
  std::vector<std::vector<std::size_t>> cut_edges;
  std::vector<std::size_t> edge_source;
  for (std::size_t j = 0; j < fh.edge_count(); ++j) {
    std::vector<std::size_t> members;
    for (const auto& [v, mu] : fh.edges()[j].membership)
      if (mu >= c) members.push_back(v);
    if (members.empty()) continue;
    for (std::size_t v : members) keep_vertex[v] = true;
    cut_edges.push_back(std::move(members));
    edge_source.push_back(j);
  }

  std::vector<std::string> vertices;
  std::vector<std::size_t> remap(fh.vertex_count(), 0);
  for (std::size_t v = 0; v < fh.vertex_count(); ++v)
    if (keep_vertex[v]) {
      remap[v] = vertices.size();
      vertices.push_back(fh.vertices()[v]);
    }

  std::vector<Hyperedge> edges;
  for (std::size_t k = 0; k < cut_edges.size(); ++k) {
    Hyperedge e;
    for (std::size_t v : cut_edges[k]) e.members.push_back(remap[v]);
    e.weight = fh.edges()[edge_source[k]].weight;
    e.id = fh.edges()[edge_source[k]].id;
    edges.push_back(std::move(e));
  }
  return Hypergraph(std::move(vertices), std::move(edges));
}

SparseMatrix fuzzy_incidence(const FuzzyHypergraph& fh) {
  std::vector<std::vector<std::pair<std::size_t, double>>> columns(
      fh.edge_count());
  for (std::size_t j = 0; j < fh.edge_count(); ++j)
    for (const auto& [v, mu] : fh.edges()[j].membership)
      columns[j].push_back({v, mu});
  return SparseMatrix::from_columns(fh.vertex_count(), columns);
}

namespace {

std::vector<double> fuzzy_weights(const FuzzyHypergraph& fh) {
  std::vector<double> w;
  w.reserve(fh.edge_count());
  for (const auto& e : fh.edges()) w.push_back(e.weight);
  return w;
}

}  // namespace

std::pair<DiagonalMatrix, DiagonalMatrix> fuzzy_degrees(
    const FuzzyHypergraph& fh) {
  return degrees_of(fuzzy_incidence(fh), fuzzy_weights(fh));
}

DenseMatrix fuzzy_laplacian(const FuzzyHypergraph& fh) {
  return normalized_laplacian_of(fuzzy_incidence(fh), fuzzy_weights(fh));
}

DenseMatrix fhgnn_convolve(const FuzzyHypergraph& fh, const DenseMatrix& x,
                           const LayerParams& params) {
  if (x.rows() != fh.vertex_count())
    fail(errc::shape_mismatch, "feature row count does not match vertices");
  if (params.theta.rows() != x.cols())
    fail(errc::shape_mismatch, "theta row count does not match features");
  std::vector<double> w = params.edge_weights.empty()
                              ? fuzzy_weights(fh)
                              : params.edge_weights;
  if (w.size() != fh.edge_count())
    fail(errc::shape_mismatch, "layer edge weight count mismatch");
  const DenseMatrix m = apply_propagator(fuzzy_incidence(fh), w, x);
  return apply_activation(matmul(m, params.theta), params.activation);
}

}  // namespace shx
