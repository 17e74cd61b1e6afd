#ifndef SHX_TESTS_SUPPORT_HPP
#define SHX_TESTS_SUPPORT_HPP

#include <cmath>
#include <string>
#include <vector>

#include "shx/hypergraph.hpp"
#include "shx/matrix.hpp"
#include "shx/rng.hpp"
#include "shx/superhypergraph.hpp"

// Brute-force reference computations, kept independent of the library's
// sparse pipeline: plain dense loops from the textbook formulas.
namespace testsupport {

inline std::vector<std::vector<double>> dense_incidence(
    const shx::Hypergraph& h) {
  std::vector<std::vector<double>> m(
      h.vertex_count(), std::vector<double>(h.edge_count(), 0.0));
  for (std::size_t j = 0; j < h.edge_count(); ++j)
    for (std::size_t v : h.edge(j).members) m[v][j] = 1.0;
  return m;
}

// D_V^-1/2 H W D_E^-1 H^T D_V^-1/2 with 0^-1 := 0, straight from the
// definition
inline shx::DenseMatrix oracle_propagator(
    const std::vector<std::vector<double>>& h,
    const std::vector<double>& weights) {
  const std::size_t n = h.size();
  const std::size_t m = n == 0 ? 0 : h[0].size();
  std::vector<double> dv(n, 0.0), de(m, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      dv[i] += h[i][j] * weights[j];
      de[j] += h[i][j];
    }
  auto pinv = [](double x) { return x > 0.0 ? 1.0 / x : 0.0; };
  shx::DenseMatrix p(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      double acc = 0.0;
      for (std::size_t j = 0; j < m; ++j)
        acc += std::sqrt(pinv(dv[a])) * h[a][j] * weights[j] * pinv(de[j]) *
               h[b][j] * std::sqrt(pinv(dv[b]));
      p.at(a, b) = acc;
    }
  return p;
}

inline shx::DenseMatrix oracle_propagator(const shx::Hypergraph& h) {
  std::vector<double> w;
  for (const auto& e : h.edges()) w.push_back(e.weight);
  return oracle_propagator(dense_incidence(h), w);
}

inline shx::DenseMatrix oracle_matmul(const shx::DenseMatrix& a,
                                      const shx::DenseMatrix& b) {
  shx::DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k)
        c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

inline double max_abs_diff(const shx::DenseMatrix& a,
                           const shx::DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return HUGE_VAL;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
  return worst;
}

inline shx::DenseMatrix random_dense(shx::Rng& rng, std::size_t rows,
                                     std::size_t cols) {
  shx::DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.next_signed();
  return m;
}

inline shx::Hypergraph random_hypergraph(shx::Rng& rng, std::size_t n,
                                         std::size_t m,
                                         std::size_t max_edge_size,
                                         bool unit_weights = true) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("x" + std::to_string(i + 1));
  std::vector<shx::Hyperedge> edges;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t size = 1 + rng.next_below(max_edge_size);
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < size; ++k) members.push_back(rng.next_below(n));
    const double w = unit_weights ? 1.0 : 0.25 + rng.next_double();
    edges.push_back({members, w, static_cast<std::int64_t>(j)});
  }
  return shx::Hypergraph(std::move(names), std::move(edges));
}

// spanning path plus random extra hyperedges: connected by construction
inline shx::Hypergraph random_connected_hypergraph(shx::Rng& rng,
                                                   std::size_t n,
                                                   std::size_t extra_edges,
                                                   std::size_t max_edge_size) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("x" + std::to_string(i + 1));
  std::vector<shx::Hyperedge> edges;
  std::int64_t id = 0;
  for (std::size_t v = 0; v + 1 < n; ++v)
    edges.push_back({{v, v + 1}, 1.0, id++});
  for (std::size_t j = 0; j < extra_edges; ++j) {
    const std::size_t size = 2 + rng.next_below(max_edge_size - 1);
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < size; ++k) members.push_back(rng.next_below(n));
    edges.push_back({members, 1.0, id++});
  }
  return shx::Hypergraph(std::move(names), std::move(edges));
}

// level-1 graph whose supervertices are singletons: the reduction case
inline shx::SuperHyperGraph singleton_shg(const shx::Hypergraph& h) {
  std::vector<shx::NestedElement> supervertices;
  for (const auto& name : h.vertices())
    supervertices.push_back(shx::NestedElement::set(
        {shx::NestedElement::leaf(name)}));
  std::vector<shx::Superedge> superedges;
  for (const auto& e : h.edges()) {
    shx::Superedge se;
    se.weight = e.weight;
    se.id = e.id;
    for (std::size_t v : e.members)
      se.members.push_back(shx::NestedElement::set(
          {shx::NestedElement::leaf(h.vertex_name(v))}));
    superedges.push_back(std::move(se));
  }
  return shx::SuperHyperGraph(h.vertices(), 1, std::move(supervertices),
                              std::move(superedges));
}

// random level-2 graph: supervertices are nested sets over the base names
inline shx::SuperHyperGraph random_nested_shg(shx::Rng& rng, std::size_t n,
                                              std::size_t edges) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("x" + std::to_string(i + 1));
  auto random_leaf_set = [&] {
    const std::size_t size = 1 + rng.next_below(3);
    std::vector<shx::NestedElement> children;
    for (std::size_t k = 0; k < size; ++k)
      children.push_back(shx::NestedElement::leaf(names[rng.next_below(n)]));
    return shx::NestedElement::set(std::move(children));
  };
  std::vector<shx::NestedElement> supervertices;
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.next_double() < 0.5) {
      supervertices.push_back(random_leaf_set());
    } else {
      supervertices.push_back(
          shx::NestedElement::set({random_leaf_set(), random_leaf_set()}));
    }
  }
  std::vector<shx::Superedge> superedges;
  for (std::size_t j = 0; j < edges; ++j) {
    shx::Superedge se;
    se.id = static_cast<std::int64_t>(j);
    se.weight = 0.25 + rng.next_double();
    const std::size_t size = 1 + rng.next_below(3);
    for (std::size_t k = 0; k < size; ++k)
      se.members.push_back(supervertices[rng.next_below(n)]);
    superedges.push_back(std::move(se));
  }
  return shx::SuperHyperGraph(std::move(names), 2, std::move(supervertices),
                              std::move(superedges));
}

// the worked example: V0 = {x1, x2, x3}, V = {{x1,x2}, {x3}, {x1}},
// E = {{{x1,x2},{x3}}, {{x1},{x3}}}
inline shx::SuperHyperGraph example_shg() {
  using shx::NestedElement;
  const auto x1 = NestedElement::leaf("x1");
  const auto x2 = NestedElement::leaf("x2");
  const auto x3 = NestedElement::leaf("x3");
  const auto sv0 = NestedElement::set({x1, x2});
  const auto sv1 = NestedElement::set({x3});
  const auto sv2 = NestedElement::set({x1});
  std::vector<shx::Superedge> superedges(2);
  superedges[0].members = {sv0, sv1};
  superedges[0].id = 0;
  superedges[1].members = {sv2, sv1};
  superedges[1].id = 1;
  return shx::SuperHyperGraph({"x1", "x2", "x3"}, 1, {sv0, sv1, sv2},
                              std::move(superedges));
}

}  // namespace testsupport

#endif  // SHX_TESTS_SUPPORT_HPP
