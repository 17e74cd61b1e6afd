#ifndef SHX_SUPERHYPERGRAPH_HPP
#define SHX_SUPERHYPERGRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "shx/hypergraph.hpp"
#include "shx/nested_element.hpp"

namespace shx {

// Superedge over nested elements. Structurally equal superedges stay
// distinct incidence columns: identity lives in the id, parallel edges are
// never merged.
struct Superedge {
  std::vector<NestedElement> members;
  double weight = 1.0;
  std::int64_t id = 0;
};

// An n-SuperHyperGraph: supervertices and superedges drawn from the n-th
// iterated power set of the base vertices. Lists preserve construction
// order; all types here are immutable after construction and safe to share
// across threads.
class SuperHyperGraph {
 public:
  SuperHyperGraph() = default;
  SuperHyperGraph(std::vector<std::string> base_vertices, int level,
                  std::vector<NestedElement> supervertices,
                  std::vector<Superedge> superedges);

  const std::vector<std::string>& base_vertices() const {
    return base_vertices_;
  }
  int level() const { return level_; }
  const std::vector<NestedElement>& supervertices() const {
    return supervertices_;
  }
  const std::vector<Superedge>& superedges() const { return superedges_; }

 private:
  std::vector<std::string> base_vertices_;
  int level_ = 0;
  std::vector<NestedElement> supervertices_;
  std::vector<Superedge> superedges_;
};

struct Violation {
  enum class Code {
    unknown_leaf,
    rank_exceeds_level,
    negative_weight,
    duplicate_edge_id,
    duplicate_base_vertex,
    empty_vertex_name,
  };
  Code code;
  std::string where;    // JSON-pointer style location in the document
  std::string message;  // human-readable one-liner
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// Lists every invariant violation; the report is empty iff the graph is
// valid. Never throws.
ValidationReport validate(const SuperHyperGraph& shg);

// Expanded hypergraph: vertex list is the base vertices in order, hyperedge
// j is the recursive leaf expansion of superedge j (same id and weight).
// Parallel identical expansions are not merged.
Hypergraph expand(const SuperHyperGraph& shg);

// A flat hypergraph viewed as a level-0 SuperHyperGraph (supervertices are
// the vertices themselves, superedges have leaf members).
SuperHyperGraph as_superhypergraph(const Hypergraph& h);

}  // namespace shx

#endif  // SHX_SUPERHYPERGRAPH_HPP
