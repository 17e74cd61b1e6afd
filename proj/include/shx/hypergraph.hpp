#ifndef SHX_HYPERGRAPH_HPP
#define SHX_HYPERGRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace shx {

// Flat hypergraph on named vertices. Hyperedges hold sorted unique vertex
// indices; empty hyperedges are legal (zero-degree incidence column) and
// parallel edges are kept apart by id.
struct Hyperedge {
  std::vector<std::size_t> members;
  double weight = 1.0;
  std::int64_t id = 0;
};

class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::vector<std::string> vertices, std::vector<Hyperedge> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(std::size_t j) const { return edges_[j]; }
  const std::string& vertex_name(std::size_t i) const { return vertices_[i]; }

  // Index of a named vertex; fails with errc::domain when absent.
  std::size_t vertex_index(const std::string& name) const;

  bool is_uniform(std::size_t r) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Hyperedge> edges_;
};

}  // namespace shx

#endif  // SHX_HYPERGRAPH_HPP
