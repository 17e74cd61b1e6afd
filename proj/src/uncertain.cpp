#include "shx/uncertain.hpp"

#include <algorithm>
#include <cmath>

#include "shx/error.hpp"

namespace shx {

namespace {

std::size_t kind_arity(MembershipKind kind) {
  switch (kind) {
    case MembershipKind::fuzzy:
      return 1;
    case MembershipKind::intuitionistic:
      return 2;
    case MembershipKind::neutrosophic:
      return 3;
    case MembershipKind::quadripartitioned:
      return 4;
    case MembershipKind::pentapartitioned:
      return 5;
    case MembershipKind::hesitant:
    case MembershipKind::plithogenic:
      return 0;  // variable / s
  }
  return 0;
}

double sum_bound(MembershipKind kind) {
  switch (kind) {
    case MembershipKind::intuitionistic:
      return 1.0;
    case MembershipKind::neutrosophic:
      return 3.0;
    case MembershipKind::quadripartitioned:
      return 4.0;
    case MembershipKind::pentapartitioned:
      return 5.0;
    default:
      return -1.0;  // no sum constraint
  }
}

}  // namespace

AnnotatedGraph::AnnotatedGraph(Hypergraph graph, MembershipKind kind,
                               std::vector<Annotation> vertex_annotations,
                               std::vector<Annotation> edge_annotations,
                               std::optional<PlithogenicData> plithogenic)
    : graph_(std::move(graph)),
      kind_(kind),
      vertex_annotations_(std::move(vertex_annotations)),
      edge_annotations_(std::move(edge_annotations)),
      plithogenic_(std::move(plithogenic)) {
  if (!graph_.is_uniform(2))
    fail(errc::invalid_graph, "annotated graph must be 2-uniform");
  if (vertex_annotations_.size() != graph_.vertex_count())
    fail(errc::invalid_graph, "vertex annotation count mismatch");
  if (edge_annotations_.size() != graph_.edge_count())
    fail(errc::invalid_graph, "edge annotation count mismatch");
  if (kind_ == MembershipKind::plithogenic) {
    if (!plithogenic_)
      fail(errc::invalid_graph, "plithogenic annotations need shared data");
    if (plithogenic_->vertex_attr.size() != graph_.vertex_count())
      fail(errc::invalid_graph, "vertex attribute count mismatch");
  }
}

namespace {

void check_range(const Annotation& a, const std::string& where,
                 AnnotationReport& report) {
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!(a.values[i] >= 0.0 && a.values[i] <= 1.0))
      report.violations.push_back(
          {where + "/" + std::to_string(i), "membership outside [0, 1]"});
}

void check_table(const std::vector<std::vector<std::vector<double>>>& table,
                 std::size_t domain, std::size_t t, const std::string& where,
                 AnnotationReport& report) {
  if (table.size() != domain) {
    report.violations.push_back({where, "contradiction table size mismatch"});
    return;
  }
  for (std::size_t a = 0; a < domain; ++a) {
    if (table[a].size() != domain) {
      report.violations.push_back(
          {where + "/" + std::to_string(a), "contradiction row size mismatch"});
      return;
    }
    for (std::size_t b = 0; b < domain; ++b) {
      const auto& cell = table[a][b];
      const std::string cw =
          where + "/" + std::to_string(a) + "/" + std::to_string(b);
      if (cell.size() != t) {
        report.violations.push_back({cw, "contradiction entry arity mismatch"});
        continue;
      }
      for (double x : cell)
        if (!(x >= 0.0 && x <= 1.0))
          report.violations.push_back({cw, "contradiction outside [0, 1]"});
      if (a == b)
        for (double x : cell)
          if (x != 0.0)
            report.violations.push_back({cw, "contradiction diagonal not 0"});
      for (std::size_t c = 0; c < std::min(cell.size(), table[b][a].size());
           ++c)
        if (cell[c] != table[b][a][c])
          report.violations.push_back({cw, "contradiction table asymmetric"});
    }
  }
}

}  // namespace

AnnotationReport validate_annotations(const AnnotatedGraph& g, bool strict) {
  AnnotationReport report;
  const MembershipKind kind = g.kind();
  const std::size_t arity = kind_arity(kind);
  const double bound = sum_bound(kind);

  auto check_one = [&](const Annotation& a, const std::string& where) {
    if (arity > 0 && a.values.size() != arity) {
      report.violations.push_back(
          {where, "expected " + std::to_string(arity) + " components, got " +
                      std::to_string(a.values.size())});
      return;
    }
    check_range(a, where, report);
    if (bound > 0.0) {
      double s = 0.0;
      for (double v : a.values) s += v;
      if (s > bound + 1e-12)
        report.violations.push_back({where, "component sum exceeds bound"});
    }
  };

  for (std::size_t i = 0; i < g.vertex_annotations().size(); ++i)
    check_one(g.vertex_annotations()[i],
              "/annotations/vertices/" + g.graph().vertex_name(i));
  for (std::size_t j = 0; j < g.edge_annotations().size(); ++j)
    check_one(g.edge_annotations()[j],
              "/annotations/edges/" + std::to_string(g.graph().edge(j).id));

  if (kind == MembershipKind::plithogenic && g.plithogenic()) {
    const auto& pd = *g.plithogenic();
    const std::size_t domain = pd.attribute_values.size();
    check_table(pd.vertex_contradiction, domain, pd.contradiction_size,
                "/annotations/vertex_contradiction", report);
    check_table(pd.edge_contradiction, domain, pd.contradiction_size,
                "/annotations/edge_contradiction", report);
    for (std::size_t i = 0; i < pd.vertex_attr.size(); ++i)
      if (pd.vertex_attr[i] >= domain)
        report.violations.push_back(
            {"/annotations/vertices/" + g.graph().vertex_name(i),
             "attribute value out of range"});
    for (std::size_t i = 0; i < g.vertex_annotations().size(); ++i)
      if (g.vertex_annotations()[i].values.size() != pd.appurtenance_size)
        report.violations.push_back(
            {"/annotations/vertices/" + g.graph().vertex_name(i),
             "appurtenance vector length mismatch"});
    for (std::size_t j = 0; j < g.edge_annotations().size(); ++j)
      if (g.edge_annotations()[j].values.size() != pd.appurtenance_size)
        report.violations.push_back(
            {"/annotations/edges/" + std::to_string(g.graph().edge(j).id),
             "appurtenance vector length mismatch"});
  }

  if (!strict) return report;

  // edge-versus-endpoint inequalities, only where the definitions state them
  for (std::size_t j = 0; j < g.graph().edge_count(); ++j) {
    const auto& members = g.graph().edge(j).members;
    const auto& e = g.edge_annotations()[j].values;
    const auto& u = g.vertex_annotations()[members[0]].values;
    const auto& v = g.vertex_annotations()[members[1]].values;
    const std::string where =
        "/annotations/edges/" + std::to_string(g.graph().edge(j).id);
    if (e.size() != u.size() || e.size() != v.size()) continue;

    auto le_min = [&](std::size_t c) { return e[c] <= std::min(u[c], v[c]); };
    auto le_max = [&](std::size_t c) { return e[c] <= std::max(u[c], v[c]); };
    auto ge_max = [&](std::size_t c) { return e[c] >= std::max(u[c], v[c]); };

    switch (kind) {
      case MembershipKind::quadripartitioned:
        for (std::size_t c = 0; c < 2; ++c)
          if (!le_min(c))
            report.violations.push_back(
                {where, "component " + std::to_string(c + 1) +
                            " exceeds min of endpoints"});
        for (std::size_t c = 2; c < 4; ++c)
          if (!le_max(c))
            report.violations.push_back(
                {where, "component " + std::to_string(c + 1) +
                            " exceeds max of endpoints"});
        break;
      case MembershipKind::pentapartitioned:
        for (std::size_t c = 0; c < 2; ++c)
          if (!le_min(c))
            report.violations.push_back(
                {where, "component " + std::to_string(c + 1) +
                            " exceeds min of endpoints"});
        for (std::size_t c = 2; c < 5; ++c)
          if (!ge_max(c))
            report.violations.push_back(
                {where, "component " + std::to_string(c + 1) +
                            " below max of endpoints"});
        break;
      case MembershipKind::plithogenic:
        for (std::size_t c = 0; c < e.size(); ++c)
          if (!le_min(c))
            report.violations.push_back(
                {where, "appurtenance component " + std::to_string(c + 1) +
                            " exceeds min of endpoints"});
        break;
      default:
        break;
    }
  }

  if (kind == MembershipKind::plithogenic && g.plithogenic()) {
    const auto& pd = *g.plithogenic();
    const std::size_t domain = pd.attribute_values.size();
    for (std::size_t a = 0; a < domain; ++a)
      for (std::size_t b = 0; b < domain; ++b)
        for (std::size_t c = 0; c < pd.contradiction_size; ++c)
          if (pd.edge_contradiction.size() == domain &&
              pd.vertex_contradiction.size() == domain &&
              pd.edge_contradiction[a][b].size() == pd.contradiction_size &&
              pd.vertex_contradiction[a][b].size() == pd.contradiction_size &&
              pd.edge_contradiction[a][b][c] >
                  pd.vertex_contradiction[a][b][c])
            report.violations.push_back(
                {"/annotations/edge_contradiction/" + std::to_string(a) + "/" +
                     std::to_string(b),
                 "edge contradiction exceeds vertex contradiction"});
  }
  return report;
}

double membership_strength(const Annotation& a) {
  if (a.values.empty()) return 1.0;
  double s = a.values[0];
  for (std::size_t i = 1; i < a.values.size(); ++i) s *= 1.0 - a.values[i];
  return s;
}

namespace {

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Per-vertex and per-edge scalar strengths. Plithogenic edge strength folds
// in the contradiction between the endpoint attribute values.
struct Strengths {
  std::vector<double> vertex;
  std::vector<double> edge;
};

Strengths strengths_of(const AnnotatedGraph& g) {
  Strengths s;
  s.vertex.reserve(g.graph().vertex_count());
  for (const auto& a : g.vertex_annotations())
    s.vertex.push_back(membership_strength(a));
  s.edge.reserve(g.graph().edge_count());
  for (std::size_t j = 0; j < g.graph().edge_count(); ++j) {
    double strength = membership_strength(g.edge_annotations()[j]);
    if (g.kind() == MembershipKind::plithogenic) {
      const auto& pd = *g.plithogenic();
      const auto& members = g.graph().edge(j).members;
      const std::size_t a = pd.vertex_attr[members[0]];
      const std::size_t b = pd.vertex_attr[members[1]];
      strength *= 1.0 - mean(pd.vertex_contradiction[a][b]);
    }
    s.edge.push_back(strength);
  }
  return s;
}

void check_kind(const AnnotatedGraph& g, MembershipKind expected,
                const char* op) {
  if (g.kind() != expected)
    fail(errc::domain, std::string(op) + " requires a different membership kind");
}

DenseMatrix uncertain_forward(const AnnotatedGraph& g, const DenseMatrix& x,
                              const RuleSet& rules,
                              const std::vector<UncertainLayer>& layers) {
  const Hypergraph& h = g.graph();
  if (x.rows() != h.vertex_count())
    fail(errc::shape_mismatch, "feature row count does not match vertices");
  if (rules.rules.empty()) fail(errc::domain, "rule set must not be empty");
  const std::size_t d = x.cols();
  const std::size_t k = rules.rules.size();

  const Strengths s = strengths_of(g);
  std::vector<double> firing = firing_strengths(g, rules);

  DenseMatrix cur = x;
  for (const auto& layer : layers) {
    if (layer.rule_maps.size() != k)
      fail(errc::shape_mismatch, "layer must carry one map per rule");
    for (const auto& map : layer.rule_maps)
      if (map.self_weight.rows() != d || map.self_weight.cols() != d ||
          map.msg_weight.rows() != d || map.msg_weight.cols() != d ||
          map.bias.size() != d)
        fail(errc::shape_mismatch, "rule map dimension mismatch");

    // gamma-weighted neighbor aggregation over the edge list
    DenseMatrix msg(h.vertex_count(), d);
    for (std::size_t j = 0; j < h.edge_count(); ++j) {
      const auto& members = h.edge(j).members;
      const std::size_t u = members[0];
      const std::size_t v = members[1];
      const double gamma_uv = s.vertex[u] * s.edge[j];
      const double gamma_vu = s.vertex[v] * s.edge[j];
      for (std::size_t c = 0; c < d; ++c) {
        msg.at(v, c) += gamma_uv * cur.at(u, c);
        msg.at(u, c) += gamma_vu * cur.at(v, c);
      }
    }

    DenseMatrix pre = cur;  // residual term
    for (std::size_t r = 0; r < k; ++r) {
      const auto& map = layer.rule_maps[r];
      const DenseMatrix part_self = matmul(cur, map.self_weight);
      const DenseMatrix part_msg = matmul(msg, map.msg_weight);
      const double w = firing[r];
      for (std::size_t i = 0; i < pre.rows(); ++i)
        for (std::size_t c = 0; c < d; ++c)
          pre.at(i, c) +=
              w * (part_self.at(i, c) + part_msg.at(i, c) + map.bias[c]);
    }
    cur = apply_activation(pre, layer.activation);
  }
  return softmax_rows(cur);
}

}  // namespace

std::vector<double> firing_strengths(const AnnotatedGraph& g,
                                     const RuleSet& rules) {
  const Hypergraph& h = g.graph();
  const Strengths s = strengths_of(g);
  std::vector<double> firing;
  firing.reserve(rules.rules.size());
  for (const auto& rule : rules.rules) {
    double r = 1.0;
    auto edge_factor = [&](std::size_t j) {
      const auto& members = h.edge(j).members;
      return s.vertex[members[0]] * s.vertex[members[1]] * s.edge[j];
    };
    if (rule.antecedent_edges.empty()) {
      for (std::size_t j = 0; j < h.edge_count(); ++j) r *= edge_factor(j);
    } else {
      for (std::size_t j : rule.antecedent_edges) {
        if (j >= h.edge_count())
          fail(errc::domain, "rule antecedent edge out of range");
        r *= edge_factor(j);
      }
    }
    firing.push_back(r);
  }
  double total = 0.0;
  for (double r : firing) total += r;
  if (total == 0.0) {
    const double uniform = 1.0 / static_cast<double>(firing.size());
    for (double& r : firing) r = uniform;
  } else {
    for (double& r : firing) r /= total;
  }
  return firing;
}

DenseMatrix fgnn_forward(const AnnotatedGraph& g, const DenseMatrix& x,
                         const RuleSet& rules,
                         const std::vector<UncertainLayer>& layers) {
  check_kind(g, MembershipKind::fuzzy, "fgnn_forward");
  return uncertain_forward(g, x, rules, layers);
}

DenseMatrix ngnn_forward(const AnnotatedGraph& g, const DenseMatrix& x,
                         const RuleSet& rules,
                         const std::vector<UncertainLayer>& layers) {
  check_kind(g, MembershipKind::neutrosophic, "ngnn_forward");
  return uncertain_forward(g, x, rules, layers);
}

DenseMatrix pgnn_forward(const AnnotatedGraph& g, const DenseMatrix& x,
                         const RuleSet& rules,
                         const std::vector<UncertainLayer>& layers) {
  check_kind(g, MembershipKind::plithogenic, "pgnn_forward");
  return uncertain_forward(g, x, rules, layers);
}

}  // namespace shx
