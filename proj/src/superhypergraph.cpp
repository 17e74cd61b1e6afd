#include "shx/superhypergraph.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "shx/error.hpp"

namespace shx {

Hypergraph::Hypergraph(std::vector<std::string> vertices,
                       std::vector<Hyperedge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    std::sort(e.members.begin(), e.members.end());
    e.members.erase(std::unique(e.members.begin(), e.members.end()),
                    e.members.end());
    for (std::size_t m : e.members)
      if (m >= vertices_.size())
        fail(errc::invalid_graph, "hyperedge member out of range");
    if (e.weight < 0.0)
      fail(errc::invalid_graph, "hyperedge weight is negative");
  }
}

std::size_t Hypergraph::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return i;
  fail(errc::domain, "unknown vertex: " + name);
}

bool Hypergraph::is_uniform(std::size_t r) const {
  for (const auto& e : edges_)
    if (e.members.size() != r) return false;
  return true;
}

SuperHyperGraph::SuperHyperGraph(std::vector<std::string> base_vertices,
                                 int level,
                                 std::vector<NestedElement> supervertices,
                                 std::vector<Superedge> superedges)
    : base_vertices_(std::move(base_vertices)),
      level_(level),
      supervertices_(std::move(supervertices)),
      superedges_(std::move(superedges)) {}

namespace {

void check_leaves(const NestedElement& e,
                  const std::unordered_set<std::string>& known,
                  const std::string& where, ValidationReport& report) {
  if (e.is_leaf()) {
    if (!known.count(e.name()))
      report.violations.push_back({Violation::Code::unknown_leaf, where,
                                   "leaf \"" + e.name() +
                                       "\" is not a base vertex"});
    return;
  }
  for (std::size_t i = 0; i < e.children().size(); ++i)
    check_leaves(e.children()[i], known, where + "/" + std::to_string(i),
                 report);
}

}  // namespace

ValidationReport validate(const SuperHyperGraph& shg) {
  ValidationReport report;
  std::unordered_set<std::string> known;
  for (std::size_t i = 0; i < shg.base_vertices().size(); ++i) {
    const std::string& name = shg.base_vertices()[i];
    const std::string where = "/base_vertices/" + std::to_string(i);
    if (name.empty())
      report.violations.push_back(
          {Violation::Code::empty_vertex_name, where, "empty vertex name"});
    if (!known.insert(name).second)
      report.violations.push_back({Violation::Code::duplicate_base_vertex,
                                   where,
                                   "duplicate base vertex \"" + name + "\""});
  }
  for (std::size_t i = 0; i < shg.supervertices().size(); ++i) {
    const auto& sv = shg.supervertices()[i];
    const std::string where = "/supervertices/" + std::to_string(i);
    check_leaves(sv, known, where, report);
    if (sv.rank() > shg.level())
      report.violations.push_back(
          {Violation::Code::rank_exceeds_level, where,
           "element rank " + std::to_string(sv.rank()) + " exceeds level " +
               std::to_string(shg.level())});
  }
  std::unordered_set<std::int64_t> ids;
  for (std::size_t j = 0; j < shg.superedges().size(); ++j) {
    const auto& e = shg.superedges()[j];
    const std::string where = "/superedges/" + std::to_string(j);
    if (!ids.insert(e.id).second)
      report.violations.push_back({Violation::Code::duplicate_edge_id, where,
                                   "duplicate superedge id " +
                                       std::to_string(e.id)});
    if (e.weight < 0.0)
      report.violations.push_back(
          {Violation::Code::negative_weight, where + "/weight",
           "superedge weight is negative"});
    for (std::size_t m = 0; m < e.members.size(); ++m) {
      const std::string mwhere = where + "/members/" + std::to_string(m);
      check_leaves(e.members[m], known, mwhere, report);
      if (e.members[m].rank() > shg.level())
        report.violations.push_back(
            {Violation::Code::rank_exceeds_level, mwhere,
             "element rank " + std::to_string(e.members[m].rank()) +
                 " exceeds level " + std::to_string(shg.level())});
    }
  }
  return report;
}

Hypergraph expand(const SuperHyperGraph& shg) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < shg.base_vertices().size(); ++i)
    index.emplace(shg.base_vertices()[i], i);

  std::vector<Hyperedge> edges;
  edges.reserve(shg.superedges().size());
  for (const auto& se : shg.superedges()) {
    std::set<std::size_t> members;
    for (const auto& element : se.members)
      for (const auto& name : expand_element(element)) {
        auto it = index.find(name);
        if (it == index.end())
          fail(errc::invalid_graph, "leaf \"" + name + "\" is not a base vertex");
        members.insert(it->second);
      }
    edges.push_back(
        {{members.begin(), members.end()}, se.weight, se.id});
  }
  return Hypergraph(shg.base_vertices(), std::move(edges));
}

SuperHyperGraph as_superhypergraph(const Hypergraph& h) {
  std::vector<NestedElement> supervertices;
  supervertices.reserve(h.vertex_count());
  for (const auto& name : h.vertices())
    supervertices.push_back(NestedElement::leaf(name));
  std::vector<Superedge> superedges;
  superedges.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    Superedge se;
    se.weight = e.weight;
    se.id = e.id;
    for (std::size_t m : e.members)
      se.members.push_back(NestedElement::leaf(h.vertex_name(m)));
    superedges.push_back(std::move(se));
  }
  return SuperHyperGraph(h.vertices(), 0, std::move(supervertices),
                         std::move(superedges));
}

}  // namespace shx
