#ifndef SHX_UNCERTAIN_HPP
#define SHX_UNCERTAIN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shx/hypergraph.hpp"
#include "shx/matrix.hpp"

namespace shx {

enum class MembershipKind {
  fuzzy,             // single degree in [0, 1]
  intuitionistic,    // (mu, nu), mu + nu <= 1
  neutrosophic,      // (t, i, f), each in [0, 1], t + i + f <= 3
  quadripartitioned, // four components, sum <= 4
  pentapartitioned,  // five components, sum <= 5
  hesitant,          // finite subset of [0, 1]; stored, no forward pass
  plithogenic,       // appurtenance vector plus contradiction tables
};

// One membership annotation: the component vector of the kind above. For
// plithogenic graphs this is the degree-of-appurtenance vector (length s).
struct Annotation {
  std::vector<double> values;
};

// Shared plithogenic structure: an attribute value domain, the symmetric
// zero-diagonal contradiction tables (entries are length-t vectors), and
// each vertex's attribute value. The vertex table drives the aggregation
// coefficients; the edge table exists for the strict validator.
struct PlithogenicData {
  std::size_t appurtenance_size = 1;   // s
  std::size_t contradiction_size = 1;  // t
  std::vector<std::string> attribute_values;
  std::vector<std::vector<std::vector<double>>> vertex_contradiction;
  std::vector<std::vector<std::vector<double>>> edge_contradiction;
  std::vector<std::size_t> vertex_attr;  // per vertex, index into values
};

// A 2-uniform hypergraph with one membership kind attached to every vertex
// and edge.
class AnnotatedGraph {
 public:
  AnnotatedGraph() = default;
  AnnotatedGraph(Hypergraph graph, MembershipKind kind,
                 std::vector<Annotation> vertex_annotations,
                 std::vector<Annotation> edge_annotations,
                 std::optional<PlithogenicData> plithogenic = std::nullopt);

  const Hypergraph& graph() const { return graph_; }
  MembershipKind kind() const { return kind_; }
  const std::vector<Annotation>& vertex_annotations() const {
    return vertex_annotations_;
  }
  const std::vector<Annotation>& edge_annotations() const {
    return edge_annotations_;
  }
  const std::optional<PlithogenicData>& plithogenic() const {
    return plithogenic_;
  }

 private:
  Hypergraph graph_;
  MembershipKind kind_ = MembershipKind::fuzzy;
  std::vector<Annotation> vertex_annotations_;
  std::vector<Annotation> edge_annotations_;
  std::optional<PlithogenicData> plithogenic_;
};

struct AnnotationViolation {
  std::string where;
  std::string message;
};

struct AnnotationReport {
  std::vector<AnnotationViolation> violations;
  bool valid() const { return violations.empty(); }
};

// Range and sum bounds always; strict mode adds the edge-versus-endpoint
// inequalities exactly where they are defined (quadripartitioned,
// pentapartitioned, plithogenic). Fuzzy and neutrosophic edge-endpoint
// consistency is deliberately not enforced.
AnnotationReport validate_annotations(const AnnotatedGraph& g, bool strict);

// Scalar strength of an annotation: first component damped by the
// remaining ones, s(d) = d1 * prod_{j>=2} (1 - dj). Fuzzy memberships pass
// through unchanged and neutrosophic triplets give t(1-i)(1-f), which makes
// the reduction chain between the three networks exact. Swappable strategy
// point.
double membership_strength(const Annotation& a);

// The networks below share one layer: messages m_v = sum over incident
// edges of gamma_uv * H_u with gamma_uv = strength(u) * strength(e), then
// H_v <- act(sum_k r_k^ (H_v A_k + m_v B_k + b_k) + H_v), where the firing
// strengths r_k come from membership products over each rule's antecedent
// edges (empty antecedent = every edge) normalized to sum 1 (all-zero falls
// back to uniform). The readout is a row softmax.
struct UncertainRule {
  std::vector<std::size_t> antecedent_edges;
};

struct RuleSet {
  std::vector<UncertainRule> rules;  // K >= 1
};

struct AffineMap {
  DenseMatrix self_weight;   // d x d
  DenseMatrix msg_weight;    // d x d
  std::vector<double> bias;  // d
};

struct UncertainLayer {
  std::vector<AffineMap> rule_maps;  // one per rule
  Activation activation;
};

std::vector<double> firing_strengths(const AnnotatedGraph& g,
                                     const RuleSet& rules);

DenseMatrix fgnn_forward(const AnnotatedGraph& g, const DenseMatrix& x,
                         const RuleSet& rules,
                         const std::vector<UncertainLayer>& layers);
DenseMatrix ngnn_forward(const AnnotatedGraph& g, const DenseMatrix& x,
                         const RuleSet& rules,
                         const std::vector<UncertainLayer>& layers);
DenseMatrix pgnn_forward(const AnnotatedGraph& g, const DenseMatrix& x,
                         const RuleSet& rules,
                         const std::vector<UncertainLayer>& layers);

}  // namespace shx

#endif  // SHX_UNCERTAIN_HPP
