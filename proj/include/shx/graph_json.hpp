#ifndef SHX_GRAPH_JSON_HPP
#define SHX_GRAPH_JSON_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shx/fuzzy_hypergraph.hpp"
#include "shx/matrix.hpp"
#include "shx/superhypergraph.hpp"
#include "shx/uncertain.hpp"

namespace shx {

// The canonical JSON graph format. Nested arrays mirror the iterated power
// set directly: a string is a leaf, an array is a set. save() emits
// canonical element ordering and 17-significant-digit reals, so a document
// round-trips bit-identically after one save.
struct AnnotationsBlock {
  MembershipKind kind = MembershipKind::fuzzy;
  std::map<std::string, Annotation> vertices;      // by vertex name
  std::map<std::int64_t, Annotation> edges;        // by superedge id
  // plithogenic extras
  std::size_t appurtenance_size = 1;
  std::size_t contradiction_size = 1;
  std::vector<std::string> attribute_values;
  std::vector<std::vector<std::vector<double>>> vertex_contradiction;
  std::vector<std::vector<std::vector<double>>> edge_contradiction;
  std::map<std::string, std::string> vertex_attr;  // vertex name -> value
};

struct FuzzyBlockEdge {
  std::map<std::string, double> membership;  // vertex name -> degree
  double weight = 1.0;
  std::int64_t id = 0;
};

struct GraphDocument {
  SuperHyperGraph graph;
  // optional per-superedge vertex-selection weights for weighted walks,
  // keyed by the member's canonical text
  std::vector<std::map<std::string, double>> selection_weights;
  std::optional<AnnotationsBlock> annotations;
  std::optional<std::vector<FuzzyBlockEdge>> fuzzy_edges;
  std::vector<std::string> warnings;  // unknown fields outside strict mode
};

// Parse errors carry line/column, invariant violations carry a JSON
// pointer. When report is non-null, invariant violations land there
// instead of throwing.
GraphDocument parse_graph(const std::string& text, bool strict,
                          ValidationReport* report = nullptr);
GraphDocument load_graph(const std::string& path, bool strict,
                         ValidationReport* report = nullptr);

std::string serialize_graph(const GraphDocument& doc);
void save_graph(const GraphDocument& doc, const std::string& path);

// level-0 document over the vertices of a flat hypergraph
GraphDocument document_of(const Hypergraph& h);

// Views over the document for the operation modules. Both fail with
// errc::domain when the required block is missing or ill-formed.
AnnotatedGraph annotated_graph_of(const GraphDocument& doc);
FuzzyHypergraph fuzzy_hypergraph_of(const GraphDocument& doc);

// headerless CSV, row per line, 17-significant-digit reals
DenseMatrix parse_matrix_csv(const std::string& text);
DenseMatrix load_matrix_csv(const std::string& path);
std::string matrix_to_csv(const DenseMatrix& m);
void save_matrix_csv(const DenseMatrix& m, const std::string& path);

std::string format_real(double x);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace shx

#endif  // SHX_GRAPH_JSON_HPP
