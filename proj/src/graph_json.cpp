#include "shx/graph_json.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "shx/error.hpp"

namespace shx {

using nlohmann::json;

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io, "cannot write " + path);
  out << content;
  if (!out) fail(errc::io, "write failed for " + path);
}

namespace {

[[noreturn]] void parse_fail(const std::string& where,
                             const std::string& message) {
  fail(errc::parse, where + ": " + message);
}

NestedElement parse_element(const json& j, const std::string& where) {
  if (j.is_string()) return NestedElement::leaf(j.get<std::string>());
  if (j.is_array()) {
    std::vector<NestedElement> children;
    children.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
      children.push_back(parse_element(j[i], where + "/" + std::to_string(i)));
    return NestedElement::set(std::move(children));
  }
  parse_fail(where, "element must be a string (leaf) or an array (set)");
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) parse_fail(where, "expected a number");
  return j.get<double>();
}

void note_unknown_keys(const json& obj, const std::string& where,
                       const std::vector<std::string>& known, bool strict,
                       std::vector<std::string>& warnings) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) != known.end())
      continue;
    const std::string note = "unknown field " + where + "/" + it.key();
    if (strict) parse_fail(where + "/" + it.key(), "unknown field");
    warnings.push_back(note);
  }
}

MembershipKind kind_of(const std::string& name, const std::string& where) {
  if (name == "fuzzy") return MembershipKind::fuzzy;
  if (name == "intuitionistic") return MembershipKind::intuitionistic;
  if (name == "neutrosophic") return MembershipKind::neutrosophic;
  if (name == "quadripartitioned") return MembershipKind::quadripartitioned;
  if (name == "pentapartitioned") return MembershipKind::pentapartitioned;
  if (name == "hesitant") return MembershipKind::hesitant;
  if (name == "plithogenic") return MembershipKind::plithogenic;
  parse_fail(where, "unknown membership kind: " + name);
}

const char* kind_name(MembershipKind kind) {
  switch (kind) {
    case MembershipKind::fuzzy:
      return "fuzzy";
    case MembershipKind::intuitionistic:
      return "intuitionistic";
    case MembershipKind::neutrosophic:
      return "neutrosophic";
    case MembershipKind::quadripartitioned:
      return "quadripartitioned";
    case MembershipKind::pentapartitioned:
      return "pentapartitioned";
    case MembershipKind::hesitant:
      return "hesitant";
    case MembershipKind::plithogenic:
      return "plithogenic";
  }
  return "fuzzy";
}

Annotation parse_annotation_value(const json& j, MembershipKind kind,
                                  const std::string& where) {
  Annotation a;
  if (kind == MembershipKind::fuzzy) {
    a.values.push_back(number_at(j, where));
    return a;
  }
  if (kind == MembershipKind::plithogenic) {
    const json& daf = j.is_object() && j.contains("daf") ? j["daf"] : j;
    if (!daf.is_array())
      parse_fail(where, "plithogenic annotation must carry a daf array");
    for (std::size_t i = 0; i < daf.size(); ++i)
      a.values.push_back(number_at(daf[i], where + "/" + std::to_string(i)));
    return a;
  }
  if (!j.is_array()) parse_fail(where, "expected an array of degrees");
  for (std::size_t i = 0; i < j.size(); ++i)
    a.values.push_back(number_at(j[i], where + "/" + std::to_string(i)));
  return a;
}

std::vector<std::vector<std::vector<double>>> parse_table(
    const json& j, const std::string& where) {
  std::vector<std::vector<std::vector<double>>> table;
  if (!j.is_array()) parse_fail(where, "expected a contradiction table");
  for (std::size_t a = 0; a < j.size(); ++a) {
    std::vector<std::vector<double>> row;
    if (!j[a].is_array())
      parse_fail(where + "/" + std::to_string(a), "expected a table row");
    for (std::size_t b = 0; b < j[a].size(); ++b) {
      std::vector<double> cell;
      const json& cj = j[a][b];
      const std::string cw =
          where + "/" + std::to_string(a) + "/" + std::to_string(b);
      if (cj.is_number()) {
        cell.push_back(cj.get<double>());
      } else if (cj.is_array()) {
        for (std::size_t t = 0; t < cj.size(); ++t)
          cell.push_back(number_at(cj[t], cw + "/" + std::to_string(t)));
      } else {
        parse_fail(cw, "expected a number or an array");
      }
      row.push_back(std::move(cell));
    }
    table.push_back(std::move(row));
  }
  return table;
}

AnnotationsBlock parse_annotations(const json& j, bool strict,
                                   std::vector<std::string>& warnings) {
  const std::string where = "/annotations";
  if (!j.is_object()) parse_fail(where, "expected an object");
  if (!j.contains("kind")) parse_fail(where, "missing kind");
  AnnotationsBlock block;
  block.kind = kind_of(j["kind"].get<std::string>(), where + "/kind");
  note_unknown_keys(j, where,
                    {"kind", "vertices", "edges", "s", "t", "attribute_values",
                     "vertex_contradiction", "edge_contradiction"},
                    strict, warnings);

  if (j.contains("vertices")) {
    for (auto it = j["vertices"].begin(); it != j["vertices"].end(); ++it) {
      const std::string vw = where + "/vertices/" + it.key();
      if (block.kind == MembershipKind::plithogenic && it.value().is_object() &&
          it.value().contains("value"))
        block.vertex_attr[it.key()] = it.value()["value"].get<std::string>();
      block.vertices[it.key()] =
          parse_annotation_value(it.value(), block.kind, vw);
    }
  }
  if (j.contains("edges")) {
    for (auto it = j["edges"].begin(); it != j["edges"].end(); ++it) {
      const std::string ew = where + "/edges/" + it.key();
      std::int64_t id = 0;
      try {
        id = std::stoll(it.key());
      } catch (...) {
        parse_fail(ew, "edge key must be a superedge id");
      }
      block.edges[id] = parse_annotation_value(it.value(), block.kind, ew);
    }
  }
  if (block.kind == MembershipKind::plithogenic) {
    block.appurtenance_size =
        j.contains("s") ? j["s"].get<std::size_t>() : 1;
    block.contradiction_size =
        j.contains("t") ? j["t"].get<std::size_t>() : 1;
    if (j.contains("attribute_values"))
      for (const auto& v : j["attribute_values"])
        block.attribute_values.push_back(v.get<std::string>());
    if (j.contains("vertex_contradiction"))
      block.vertex_contradiction =
          parse_table(j["vertex_contradiction"], where + "/vertex_contradiction");
    if (j.contains("edge_contradiction"))
      block.edge_contradiction =
          parse_table(j["edge_contradiction"], where + "/edge_contradiction");
  }
  return block;
}

}  // namespace

GraphDocument parse_graph(const std::string& text, bool strict,
                          ValidationReport* report) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& exc) {
    fail(errc::parse, exc.what());
  }
  if (!root.is_object()) fail(errc::parse, "document must be a JSON object");

  GraphDocument doc;
  note_unknown_keys(root, "",
                    {"format_version", "base_vertices", "level",
                     "supervertices", "superedges", "annotations",
                     "fuzzy_hypergraph"},
                    strict, doc.warnings);

  if (!root.contains("base_vertices"))
    fail(errc::parse, "/base_vertices: missing");
  std::vector<std::string> base_vertices;
  for (std::size_t i = 0; i < root["base_vertices"].size(); ++i) {
    const json& v = root["base_vertices"][i];
    if (!v.is_string())
      parse_fail("/base_vertices/" + std::to_string(i), "expected a string");
    base_vertices.push_back(v.get<std::string>());
  }

  if (!root.contains("level")) fail(errc::parse, "/level: missing");
  if (!root["level"].is_number_integer() || root["level"].get<int>() < 0)
    parse_fail("/level", "level must be a non-negative integer");
  const int level = root["level"].get<int>();

  std::vector<NestedElement> supervertices;
  if (root.contains("supervertices"))
    for (std::size_t i = 0; i < root["supervertices"].size(); ++i)
      supervertices.push_back(parse_element(
          root["supervertices"][i], "/supervertices/" + std::to_string(i)));

  std::vector<Superedge> superedges;
  if (root.contains("superedges")) {
    for (std::size_t i = 0; i < root["superedges"].size(); ++i) {
      const json& ej = root["superedges"][i];
      const std::string where = "/superedges/" + std::to_string(i);
      if (!ej.is_object()) parse_fail(where, "expected an object");
      note_unknown_keys(ej, where, {"id", "members", "weight",
                                    "selection_weights"},
                        strict, doc.warnings);
      Superedge se;
      se.id = ej.contains("id") ? ej["id"].get<std::int64_t>()
                                : static_cast<std::int64_t>(i);
      se.weight =
          ej.contains("weight") ? number_at(ej["weight"], where + "/weight")
                                : 1.0;
      if (ej.contains("members"))
        for (std::size_t m = 0; m < ej["members"].size(); ++m)
          se.members.push_back(parse_element(
              ej["members"][m], where + "/members/" + std::to_string(m)));
      std::map<std::string, double> sel;
      if (ej.contains("selection_weights"))
        for (auto it = ej["selection_weights"].begin();
             it != ej["selection_weights"].end(); ++it)
          sel[it.key()] = number_at(
              it.value(), where + "/selection_weights/" + it.key());
      doc.selection_weights.push_back(std::move(sel));
      superedges.push_back(std::move(se));
    }
  }

  doc.graph = SuperHyperGraph(std::move(base_vertices), level,
                              std::move(supervertices), std::move(superedges));

  if (root.contains("annotations"))
    doc.annotations =
        parse_annotations(root["annotations"], strict, doc.warnings);

  if (root.contains("fuzzy_hypergraph")) {
    const json& fj = root["fuzzy_hypergraph"];
    const std::string where = "/fuzzy_hypergraph";
    if (!fj.is_object() || !fj.contains("edges"))
      parse_fail(where, "expected {\"edges\": [...]}");
    note_unknown_keys(fj, where, {"edges"}, strict, doc.warnings);
    std::vector<FuzzyBlockEdge> edges;
    for (std::size_t i = 0; i < fj["edges"].size(); ++i) {
      const json& ej = fj["edges"][i];
      const std::string ew = where + "/edges/" + std::to_string(i);
      note_unknown_keys(ej, ew, {"id", "membership", "weight"}, strict,
                        doc.warnings);
      FuzzyBlockEdge edge;
      edge.id = ej.contains("id") ? ej["id"].get<std::int64_t>()
                                  : static_cast<std::int64_t>(i);
      edge.weight =
          ej.contains("weight") ? number_at(ej["weight"], ew + "/weight") : 1.0;
      if (ej.contains("membership"))
        for (auto it = ej["membership"].begin(); it != ej["membership"].end();
             ++it)
          edge.membership[it.key()] =
              number_at(it.value(), ew + "/membership/" + it.key());
      edges.push_back(std::move(edge));
    }
    doc.fuzzy_edges = std::move(edges);
  }

  const ValidationReport validation = validate(doc.graph);
  if (report != nullptr) {
    *report = validation;
  } else if (!validation.valid()) {
    const Violation& first = validation.violations.front();
    fail(errc::invalid_graph, first.where + ": " + first.message);
  }
  return doc;
}

GraphDocument load_graph(const std::string& path, bool strict,
                         ValidationReport* report) {
  return parse_graph(read_file(path), strict, report);
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_element(std::string& out, const NestedElement& e) {
  if (e.is_leaf()) {
    append_escaped(out, e.name());
    return;
  }
  out += '[';
  const NestedElement canon = canonicalize(e);
  for (std::size_t i = 0; i < canon.children().size(); ++i) {
    if (i > 0) out += ',';
    append_element(out, canon.children()[i]);
  }
  out += ']';
}

void append_annotation(std::string& out, const Annotation& a,
                       MembershipKind kind, const std::string* attr) {
  if (kind == MembershipKind::fuzzy) {
    out += format_real(a.values.empty() ? 0.0 : a.values[0]);
    return;
  }
  if (kind == MembershipKind::plithogenic) {
    out += "{\"daf\":[";
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      if (i > 0) out += ',';
      out += format_real(a.values[i]);
    }
    out += ']';
    if (attr != nullptr) {
      out += ",\"value\":";
      append_escaped(out, *attr);
    }
    out += '}';
    return;
  }
  out += '[';
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (i > 0) out += ',';
    out += format_real(a.values[i]);
  }
  out += ']';
}

void append_table(std::string& out,
                  const std::vector<std::vector<std::vector<double>>>& table) {
  out += '[';
  for (std::size_t a = 0; a < table.size(); ++a) {
    if (a > 0) out += ',';
    out += '[';
    for (std::size_t b = 0; b < table[a].size(); ++b) {
      if (b > 0) out += ',';
      out += '[';
      for (std::size_t t = 0; t < table[a][b].size(); ++t) {
        if (t > 0) out += ',';
        out += format_real(table[a][b][t]);
      }
      out += ']';
    }
    out += ']';
  }
  out += ']';
}

}  // namespace

std::string serialize_graph(const GraphDocument& doc) {
  const SuperHyperGraph& g = doc.graph;
  std::string out = "{\n  \"format_version\": 1,\n  \"base_vertices\": [";
  for (std::size_t i = 0; i < g.base_vertices().size(); ++i) {
    if (i > 0) out += ", ";
    append_escaped(out, g.base_vertices()[i]);
  }
  out += "],\n  \"level\": " + std::to_string(g.level()) +
         ",\n  \"supervertices\": [";
  for (std::size_t i = 0; i < g.supervertices().size(); ++i) {
    if (i > 0) out += ", ";
    append_element(out, g.supervertices()[i]);
  }
  out += "],\n  \"superedges\": [";
  for (std::size_t j = 0; j < g.superedges().size(); ++j) {
    const Superedge& se = g.superedges()[j];
    out += j > 0 ? ",\n    " : "\n    ";
    out += "{\"id\": " + std::to_string(se.id) + ", \"members\": [";
    // members form a set: canonical order, duplicates dropped
    std::vector<NestedElement> members;
    members.reserve(se.members.size());
    for (const auto& m : se.members) members.push_back(canonicalize(m));
    std::sort(members.begin(), members.end(),
              [](const NestedElement& a, const NestedElement& b) {
                return structurally_less(a, b);
              });
    members.erase(
        std::unique(members.begin(), members.end(),
                    [](const NestedElement& a, const NestedElement& b) {
                      return structurally_equal(a, b);
                    }),
        members.end());
    for (std::size_t m = 0; m < members.size(); ++m) {
      if (m > 0) out += ", ";
      append_element(out, members[m]);
    }
    out += "], \"weight\": " + format_real(se.weight);
    if (j < doc.selection_weights.size() && !doc.selection_weights[j].empty()) {
      out += ", \"selection_weights\": {";
      bool first = true;
      for (const auto& [name, w] : doc.selection_weights[j]) {
        if (!first) out += ", ";
        first = false;
        append_escaped(out, name);
        out += ": " + format_real(w);
      }
      out += '}';
    }
    out += '}';
  }
  out += g.superedges().empty() ? "]" : "\n  ]";

  if (doc.annotations) {
    const AnnotationsBlock& block = *doc.annotations;
    out += ",\n  \"annotations\": {\n    \"kind\": ";
    append_escaped(out, kind_name(block.kind));
    if (block.kind == MembershipKind::plithogenic) {
      out += ",\n    \"s\": " + std::to_string(block.appurtenance_size);
      out += ",\n    \"t\": " + std::to_string(block.contradiction_size);
      out += ",\n    \"attribute_values\": [";
      for (std::size_t i = 0; i < block.attribute_values.size(); ++i) {
        if (i > 0) out += ", ";
        append_escaped(out, block.attribute_values[i]);
      }
      out += "],\n    \"vertex_contradiction\": ";
      append_table(out, block.vertex_contradiction);
      out += ",\n    \"edge_contradiction\": ";
      append_table(out, block.edge_contradiction);
    }
    out += ",\n    \"vertices\": {";
    bool first = true;
    for (const auto& name : g.base_vertices()) {
      auto it = block.vertices.find(name);
      if (it == block.vertices.end()) continue;
      if (!first) out += ", ";
      first = false;
      append_escaped(out, name);
      out += ": ";
      auto attr_it = block.vertex_attr.find(name);
      append_annotation(out, it->second, block.kind,
                        attr_it == block.vertex_attr.end() ? nullptr
                                                           : &attr_it->second);
    }
    out += "},\n    \"edges\": {";
    first = true;
    for (const auto& se : g.superedges()) {
      auto it = block.edges.find(se.id);
      if (it == block.edges.end()) continue;
      if (!first) out += ", ";
      first = false;
      append_escaped(out, std::to_string(se.id));
      out += ": ";
      append_annotation(out, it->second, block.kind, nullptr);
    }
    out += "}\n  }";
  }

  if (doc.fuzzy_edges) {
    out += ",\n  \"fuzzy_hypergraph\": {\n    \"edges\": [";
    for (std::size_t i = 0; i < doc.fuzzy_edges->size(); ++i) {
      const FuzzyBlockEdge& e = (*doc.fuzzy_edges)[i];
      out += i > 0 ? ",\n      " : "\n      ";
      out += "{\"id\": " + std::to_string(e.id) + ", \"membership\": {";
      bool first = true;
      for (const auto& [name, mu] : e.membership) {
        if (!first) out += ", ";
        first = false;
        append_escaped(out, name);
        out += ": " + format_real(mu);
      }
      out += "}, \"weight\": " + format_real(e.weight) + '}';
    }
    out += doc.fuzzy_edges->empty() ? "]" : "\n    ]";
    out += "\n  }";
  }

  out += "\n}\n";
  return out;
}

void save_graph(const GraphDocument& doc, const std::string& path) {
  write_file(path, serialize_graph(doc));
}

GraphDocument document_of(const Hypergraph& h) {
  GraphDocument doc;
  doc.graph = as_superhypergraph(h);
  doc.selection_weights.assign(h.edge_count(), {});
  return doc;
}

AnnotatedGraph annotated_graph_of(const GraphDocument& doc) {
  if (!doc.annotations)
    fail(errc::domain, "document has no annotations block");
  const AnnotationsBlock& block = *doc.annotations;
  const Hypergraph h = expand(doc.graph);
  if (!h.is_uniform(2))
    fail(errc::domain, "annotated graph operations need 2-uniform edges");

  std::vector<Annotation> vertex_ann;
  for (const auto& name : h.vertices()) {
    auto it = block.vertices.find(name);
    if (it == block.vertices.end())
      fail(errc::domain, "missing annotation for vertex " + name);
    vertex_ann.push_back(it->second);
  }
  std::vector<Annotation> edge_ann;
  for (const auto& e : h.edges()) {
    auto it = block.edges.find(e.id);
    if (it == block.edges.end())
      fail(errc::domain,
           "missing annotation for edge id " + std::to_string(e.id));
    edge_ann.push_back(it->second);
  }

  std::optional<PlithogenicData> plith;
  if (block.kind == MembershipKind::plithogenic) {
    PlithogenicData pd;
    pd.appurtenance_size = block.appurtenance_size;
    pd.contradiction_size = block.contradiction_size;
    pd.attribute_values = block.attribute_values;
    pd.vertex_contradiction = block.vertex_contradiction;
    pd.edge_contradiction = block.edge_contradiction;
    for (const auto& name : h.vertices()) {
      auto it = block.vertex_attr.find(name);
      if (it == block.vertex_attr.end())
        fail(errc::domain, "missing attribute value for vertex " + name);
      const auto pos =
          std::find(pd.attribute_values.begin(), pd.attribute_values.end(),
                    it->second);
      if (pos == pd.attribute_values.end())
        fail(errc::domain, "unknown attribute value " + it->second);
      pd.vertex_attr.push_back(
          static_cast<std::size_t>(pos - pd.attribute_values.begin()));
    }
    plith = std::move(pd);
  }
  return AnnotatedGraph(h, block.kind, std::move(vertex_ann),
                        std::move(edge_ann), std::move(plith));
}

FuzzyHypergraph fuzzy_hypergraph_of(const GraphDocument& doc) {
  if (!doc.fuzzy_edges)
    fail(errc::domain, "document has no fuzzy_hypergraph block");
  const auto& names = doc.graph.base_vertices();
  std::vector<FuzzyEdge> edges;
  for (const auto& be : *doc.fuzzy_edges) {
    FuzzyEdge e;
    e.weight = be.weight;
    e.id = be.id;
    for (const auto& [name, mu] : be.membership) {
      const auto pos = std::find(names.begin(), names.end(), name);
      if (pos == names.end())
        fail(errc::domain, "fuzzy membership names unknown vertex " + name);
      e.membership.push_back(
          {static_cast<std::size_t>(pos - names.begin()), mu});
    }
    edges.push_back(std::move(e));
  }
  return FuzzyHypergraph(names, std::move(edges));
}

DenseMatrix parse_matrix_csv(const std::string& text) {
  std::vector<double> values;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t row_cols = 0;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(cell, &used));
        while (used < cell.size() &&
               std::isspace(static_cast<unsigned char>(cell[used])))
          ++used;
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (...) {
        fail(errc::parse, "bad CSV number: " + cell);
      }
      ++row_cols;
    }
    if (rows == 0) {
      cols = row_cols;
    } else if (row_cols != cols) {
      fail(errc::parse, "ragged CSV row " + std::to_string(rows + 1));
    }
    ++rows;
  }
  return DenseMatrix(rows, cols, std::move(values));
}

DenseMatrix load_matrix_csv(const std::string& path) {
  return parse_matrix_csv(read_file(path));
}

std::string matrix_to_csv(const DenseMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_real(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

void save_matrix_csv(const DenseMatrix& m, const std::string& path) {
  write_file(path, matrix_to_csv(m));
}

}  // namespace shx
