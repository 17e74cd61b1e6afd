#include "superhypergraph.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "shx/combinatorics.hpp"
#include "shx/decision_tree.hpp"
#include "shx/error.hpp"
#include "shx/fuzzy_hypergraph.hpp"
#include "shx/graph_json.hpp"
#include "shx/partition.hpp"
#include "shx/random_walk.hpp"
#include "shx/rng.hpp"
#include "shx/shgnn.hpp"
#include "shx/spectral.hpp"
#include "shx/uncertain.hpp"

struct shx_graph {
  shx::GraphDocument doc;
};

struct shx_matrix {
  shx::DenseMatrix m;
};

struct shx_tree {
  shx::DecisionTree t;
};

namespace {

thread_local std::string g_last_error;

using nlohmann::json;

shx_status status_of(shx::errc code) {
  switch (code) {
    case shx::errc::usage:
      return SHX_ERR_USAGE;
    case shx::errc::parse:
      return SHX_ERR_PARSE;
    case shx::errc::invalid_graph:
      return SHX_ERR_INVALID;
    case shx::errc::shape_mismatch:
      return SHX_ERR_SHAPE;
    case shx::errc::domain:
      return SHX_ERR_DOMAIN;
    case shx::errc::io:
      return SHX_ERR_IO;
    case shx::errc::limit:
      return SHX_ERR_LIMIT;
  }
  return SHX_ERR_DOMAIN;
}

template <typename Fn>
shx_status guarded(Fn&& fn) {
  try {
    fn();
    return SHX_OK;
  } catch (const shx::error& exc) {
    g_last_error = exc.what();
    return status_of(exc.code());
  } catch (const std::exception& exc) {
    g_last_error = exc.what();
    return SHX_ERR_DOMAIN;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

shx::Activation activation_of(const std::string& name, double slope) {
  shx::Activation act;
  act.slope = slope;
  if (name == "relu") {
    act.kind = shx::ActivationKind::relu;
  } else if (name == "leaky_relu") {
    act.kind = shx::ActivationKind::leaky_relu;
  } else if (name == "identity") {
    act.kind = shx::ActivationKind::identity;
  } else {
    shx::fail(shx::errc::usage, "unknown activation: " + name);
  }
  return act;
}

shx::DenseMatrix matrix_of_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    shx::fail(shx::errc::parse, what + " must be a 2D array");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  shx::DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols)
      shx::fail(shx::errc::parse, what + " rows are ragged");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = j[i][c].get<double>();
  }
  return m;
}

shx::DenseMatrix random_matrix(std::size_t rows, std::size_t cols,
                               shx::Rng& rng) {
  shx::DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = rng.next_signed();
  return m;
}

json parse_json(const char* text, const char* what) {
  try {
    return json::parse(text == nullptr ? "" : text);
  } catch (const json::parse_error& exc) {
    shx::fail(shx::errc::parse, std::string(what) + ": " + exc.what());
  }
}

shx::VertexSelection selection_of(const char* name) {
  const std::string s = name == nullptr ? "uniform" : name;
  if (s == "uniform") return shx::VertexSelection::uniform;
  if (s == "weighted") return shx::VertexSelection::weighted;
  shx::fail(shx::errc::usage, "unknown selection mode: " + s);
}

shx::DanglingPolicy dangling_of(const char* name) {
  const std::string s = name == nullptr ? "error" : name;
  if (s == "error") return shx::DanglingPolicy::error;
  if (s == "lazy") return shx::DanglingPolicy::lazy_self_loop;
  shx::fail(shx::errc::usage, "unknown dangling policy: " + s);
}

// kernel over the document, either on supervertices or on the expansion
shx::TransitionKernel kernel_of(const shx::GraphDocument& doc,
                                bool on_expanded, const char* selection,
                                const char* dangling) {
  const shx::VertexSelection sel = selection_of(selection);
  const shx::DanglingPolicy dang = dangling_of(dangling);
  if (on_expanded)
    return shx::transition_kernel(shx::expand(doc.graph), sel,
                                  doc.selection_weights, dang);
  return shx::transition_kernel(doc.graph, sel, doc.selection_weights, dang);
}

std::string partition_csv(const shx::Hypergraph& h,
                          const shx::Partition& p) {
  std::string out;
  for (std::size_t v = 0; v < h.vertex_count(); ++v)
    out += h.vertex_name(v) + "," + std::to_string(p.assignment[v]) + "\n";
  return out;
}

}  // namespace

extern "C" {

const char* shx_last_error(void) { return g_last_error.c_str(); }

void shx_string_free(char* s) { std::free(s); }

shx_status shx_graph_parse(const char* json_text, int strict,
                           shx_graph** out) {
  return guarded([&] {
    auto* g = new shx_graph{shx::parse_graph(
        json_text == nullptr ? "" : json_text, strict != 0)};
    *out = g;
  });
}

shx_status shx_graph_load(const char* path, int strict, shx_graph** out) {
  return guarded([&] {
    auto* g = new shx_graph{shx::load_graph(path, strict != 0)};
    *out = g;
  });
}

shx_status shx_graph_to_json(const shx_graph* g, char** out_json) {
  return guarded([&] { *out_json = dup_string(shx::serialize_graph(g->doc)); });
}

shx_status shx_graph_save(const shx_graph* g, const char* path) {
  return guarded([&] { shx::save_graph(g->doc, path); });
}

void shx_graph_free(shx_graph* g) { delete g; }

shx_status shx_graph_validate(const char* json_text, int strict,
                              char** out_report, int* out_violations) {
  return guarded([&] {
    shx::ValidationReport report;
    const shx::GraphDocument doc = shx::parse_graph(
        json_text == nullptr ? "" : json_text, strict != 0, &report);
    std::string text;
    for (const auto& violation : report.violations)
      text += violation.where + ": " + violation.message + "\n";
    for (const auto& warning : doc.warnings) text += "warning: " + warning + "\n";
    *out_report = dup_string(text);
    *out_violations = static_cast<int>(report.violations.size());
  });
}

shx_status shx_graph_expand(const shx_graph* g, shx_graph** out) {
  return guarded([&] {
    *out = new shx_graph{shx::document_of(shx::expand(g->doc.graph))};
  });
}

shx_status shx_matrix_create(size_t rows, size_t cols, const double* values,
                             shx_matrix** out) {
  return guarded([&] {
    std::vector<double> v;
    if (rows * cols > 0) {
      if (values == nullptr)
        shx::fail(shx::errc::usage, "matrix values must not be null");
      v.assign(values, values + rows * cols);
    }
    *out = new shx_matrix{shx::DenseMatrix(rows, cols, std::move(v))};
  });
}

shx_status shx_matrix_parse_csv(const char* text, shx_matrix** out) {
  return guarded([&] {
    *out = new shx_matrix{
        shx::parse_matrix_csv(text == nullptr ? "" : text)};
  });
}

shx_status shx_matrix_load_csv(const char* path, shx_matrix** out) {
  return guarded([&] { *out = new shx_matrix{shx::load_matrix_csv(path)}; });
}

shx_status shx_matrix_to_csv(const shx_matrix* m, char** out_text) {
  return guarded([&] { *out_text = dup_string(shx::matrix_to_csv(m->m)); });
}

size_t shx_matrix_rows(const shx_matrix* m) { return m->m.rows(); }
size_t shx_matrix_cols(const shx_matrix* m) { return m->m.cols(); }
const double* shx_matrix_data(const shx_matrix* m) { return m->m.data(); }
void shx_matrix_free(shx_matrix* m) { delete m; }

shx_status shx_laplacian(const shx_graph* g, shx_matrix** out) {
  return guarded([&] {
    *out = new shx_matrix{shx::normalized_laplacian(shx::expand(g->doc.graph))};
  });
}

shx_status shx_propagator(const shx_graph* g, shx_matrix** out) {
  return guarded([&] {
    *out =
        new shx_matrix{shx::normalized_propagator(shx::expand(g->doc.graph))};
  });
}

shx_status shx_convolve(const shx_graph* g, const shx_matrix* features,
                        const shx_matrix* theta, const char* activation,
                        double slope, shx_matrix** out) {
  return guarded([&] {
    shx::LayerParams params;
    params.theta = theta->m;
    params.activation = activation_of(activation ? activation : "relu", slope);
    *out = new shx_matrix{
        shx::shgnn_convolve(g->doc.graph, features->m, params)};
  });
}

shx_status shx_forward(const shx_graph* g, const shx_matrix* features,
                       const char* network_json, uint64_t seed, int has_seed,
                       shx_matrix** out) {
  return guarded([&] {
    const json cfg = parse_json(network_json, "network config");
    shx::NetworkConfig net;
    const std::string readout =
        cfg.contains("readout") ? cfg["readout"].get<std::string>() : "none";
    if (readout == "softmax") {
      net.readout = shx::Readout::softmax;
    } else if (readout == "none") {
      net.readout = shx::Readout::none;
    } else {
      shx::fail(shx::errc::usage, "unknown readout: " + readout);
    }

    if (cfg.contains("layers")) {
      for (const auto& lj : cfg["layers"]) {
        shx::LayerParams layer;
        layer.theta = matrix_of_json(lj.at("theta"), "layer theta");
        layer.activation = activation_of(
            lj.contains("activation") ? lj["activation"].get<std::string>()
                                      : "relu",
            lj.contains("slope") ? lj["slope"].get<double>() : 0.01);
        if (lj.contains("edge_weights"))
          for (const auto& w : lj["edge_weights"])
            layer.edge_weights.push_back(w.get<double>());
        net.layers.push_back(std::move(layer));
      }
    } else if (cfg.contains("dims")) {
      if (!has_seed)
        shx::fail(shx::errc::usage,
                  "generated parameters require an explicit seed");
      shx::Rng rng(seed);
      std::size_t prev = features->m.cols();
      const shx::Activation act = activation_of(
          cfg.contains("activation") ? cfg["activation"].get<std::string>()
                                     : "relu",
          cfg.contains("slope") ? cfg["slope"].get<double>() : 0.01);
      for (const auto& dj : cfg["dims"]) {
        const auto next = dj.get<std::size_t>();
        shx::LayerParams layer;
        layer.theta = random_matrix(prev, next, rng);
        layer.activation = act;
        net.layers.push_back(std::move(layer));
        prev = next;
      }
    } else {
      shx::fail(shx::errc::usage, "network config needs layers or dims");
    }
    *out = new shx_matrix{shx::forward(g->doc.graph, features->m, net)};
  });
}

namespace {

std::vector<double> attention_vector_of(const shx_matrix* attention) {
  const shx::DenseMatrix& a = attention->m;
  if (a.rows() != 1 && a.cols() != 1)
    shx::fail(shx::errc::shape_mismatch, "attention must be a vector");
  return a.values();
}

}  // namespace

shx_status shx_attention_coefficients(const shx_graph* g,
                                      const shx_matrix* features,
                                      const shx_matrix* theta,
                                      const shx_matrix* attention,
                                      double slope, char** out_coo) {
  return guarded([&] {
    const shx::SparseMatrix att = shx::attention_incidence(
        shx::expand(g->doc.graph), features->m, attention_vector_of(attention),
        theta->m, slope);
    std::string out;
    for (const auto& t : att.triplets())
      out += std::to_string(t.row) + "," + std::to_string(t.col) + "," +
             shx::format_real(t.value) + "\n";
    *out_coo = dup_string(out);
  });
}

shx_status shx_attention_convolve(const shx_graph* g,
                                  const shx_matrix* features,
                                  const shx_matrix* theta,
                                  const shx_matrix* attention, double slope,
                                  shx_matrix** out) {
  return guarded([&] {
    *out = new shx_matrix{shx::attention_convolve(
        shx::expand(g->doc.graph), features->m, attention_vector_of(attention),
        theta->m, slope)};
  });
}

shx_status shx_dshgnn(const shx_matrix* features, const char* config_json,
                      uint64_t seed, shx_matrix** out) {
  return guarded([&] {
    const json cfg = parse_json(config_json, "dshgnn config");
    if (!cfg.contains("layers"))
      shx::fail(shx::errc::usage, "dshgnn config needs layers");
    std::uint64_t stream = seed;
    std::vector<shx::DynamicLayer> layers;
    std::size_t prev = features->m.cols();
    for (const auto& lj : cfg["layers"]) {
      shx::DynamicLayer layer;
      layer.config.supervertex_count = lj.at("s").get<int>();
      layer.config.superedge_count = lj.at("t").get<int>();
      layer.config.kmeans_iters =
          lj.contains("kmeans_iters") ? lj["kmeans_iters"].get<int>() : 100;
      layer.config.seed = shx::splitmix64(stream);
      if (lj.contains("theta")) {
        layer.params.theta = matrix_of_json(lj["theta"], "layer theta");
      } else if (lj.contains("theta_cols")) {
        shx::Rng rng(shx::splitmix64(stream));
        layer.params.theta =
            random_matrix(prev, lj["theta_cols"].get<std::size_t>(), rng);
      } else {
        shx::fail(shx::errc::usage, "layer needs theta or theta_cols");
      }
      prev = layer.params.theta.cols();
      layer.params.activation = activation_of(
          lj.contains("activation") ? lj["activation"].get<std::string>()
                                    : "relu",
          lj.contains("slope") ? lj["slope"].get<double>() : 0.01);
      layers.push_back(std::move(layer));
    }
    *out = new shx_matrix{shx::dshgnn_forward(features->m, layers)};
  });
}

shx_status shx_uncertain_forward(const shx_graph* g,
                                 const shx_matrix* features, const char* kind,
                                 const char* config_json, uint64_t seed,
                                 int has_seed, shx_matrix** out) {
  return guarded([&] {
    const std::string kind_name = kind == nullptr ? "" : kind;
    const shx::AnnotatedGraph ag = shx::annotated_graph_of(g->doc);
    const json cfg = parse_json(config_json, "network config");

    shx::RuleSet rules;
    if (cfg.contains("rules")) {
      for (const auto& rj : cfg["rules"]) {
        shx::UncertainRule rule;
        if (rj.contains("edges"))
          for (const auto& e : rj["edges"])
            rule.antecedent_edges.push_back(e.get<std::size_t>());
        rules.rules.push_back(std::move(rule));
      }
    }

    const std::size_t d = features->m.cols();
    std::vector<shx::UncertainLayer> layers;
    if (cfg.contains("layers")) {
      if (rules.rules.empty()) rules.rules.push_back({});
      for (const auto& lj : cfg["layers"]) {
        shx::UncertainLayer layer;
        for (const auto& mj : lj.at("maps")) {
          shx::AffineMap map;
          map.self_weight = matrix_of_json(mj.at("self"), "self map");
          map.msg_weight = matrix_of_json(mj.at("msg"), "msg map");
          for (const auto& b : mj.at("bias"))
            map.bias.push_back(b.get<double>());
          layer.rule_maps.push_back(std::move(map));
        }
        layer.activation = activation_of(
            lj.contains("activation") ? lj["activation"].get<std::string>()
                                      : "relu",
            lj.contains("slope") ? lj["slope"].get<double>() : 0.01);
        layers.push_back(std::move(layer));
      }
    } else {
      const std::size_t rule_count =
          cfg.contains("rule_count") ? cfg["rule_count"].get<std::size_t>()
                                     : 1;
      const std::size_t layer_count =
          cfg.contains("layer_count") ? cfg["layer_count"].get<std::size_t>()
                                      : 1;
      if (!has_seed)
        shx::fail(shx::errc::usage,
                  "generated parameters require an explicit seed");
      if (rules.rules.empty())
        for (std::size_t k = 0; k < rule_count; ++k) rules.rules.push_back({});
      shx::Rng rng(seed);
      for (std::size_t l = 0; l < layer_count; ++l) {
        shx::UncertainLayer layer;
        for (std::size_t k = 0; k < rules.rules.size(); ++k) {
          shx::AffineMap map;
          map.self_weight = random_matrix(d, d, rng);
          map.msg_weight = random_matrix(d, d, rng);
          map.bias.resize(d);
          for (auto& b : map.bias) b = rng.next_signed();
          layer.rule_maps.push_back(std::move(map));
        }
        layer.activation = activation_of("relu", 0.01);
        layers.push_back(std::move(layer));
      }
    }

    shx::DenseMatrix result;
    if (kind_name == "fgnn") {
      result = shx::fgnn_forward(ag, features->m, rules, layers);
    } else if (kind_name == "ngnn") {
      result = shx::ngnn_forward(ag, features->m, rules, layers);
    } else if (kind_name == "pgnn") {
      result = shx::pgnn_forward(ag, features->m, rules, layers);
    } else {
      shx::fail(shx::errc::usage, "unknown network kind: " + kind_name);
    }
    *out = new shx_matrix{std::move(result)};
  });
}

shx_status shx_fhgnn(const shx_graph* g, const shx_matrix* features,
                     const shx_matrix* theta, const char* activation,
                     double slope, shx_matrix** out) {
  return guarded([&] {
    shx::LayerParams params;
    params.theta = theta->m;
    params.activation = activation_of(activation ? activation : "relu", slope);
    *out = new shx_matrix{shx::fhgnn_convolve(
        shx::fuzzy_hypergraph_of(g->doc), features->m, params)};
  });
}

shx_status shx_ccut(const shx_graph* g, double level, shx_graph** out) {
  return guarded([&] {
    *out = new shx_graph{shx::document_of(
        shx::c_cut(shx::fuzzy_hypergraph_of(g->doc), level))};
  });
}

shx_status shx_fuzzy_height(const shx_graph* g, double* out) {
  return guarded(
      [&] { *out = shx::height(shx::fuzzy_hypergraph_of(g->doc)); });
}

shx_status shx_walk(const shx_graph* g, const char* start, uint64_t steps,
                    uint64_t seed, int on_expanded, const char* selection,
                    const char* dangling, char** out_lines) {
  return guarded([&] {
    const shx::TransitionKernel kernel =
        kernel_of(g->doc, on_expanded != 0, selection, dangling);
    const std::string start_name = start == nullptr ? "" : start;
    std::size_t start_state = kernel.states.size();
    for (std::size_t i = 0; i < kernel.states.size(); ++i)
      if (kernel.states[i] == start_name) {
        start_state = i;
        break;
      }
    if (start_state == kernel.states.size())
      shx::fail(shx::errc::domain, "unknown start state: " + start_name);
    const auto path =
        shx::simulate(kernel, {start_state, static_cast<std::size_t>(steps),
                               seed});
    std::string out;
    for (std::size_t state : path) out += kernel.states[state] + "\n";
    *out_lines = dup_string(out);
  });
}

shx_status shx_stationary(const shx_graph* g, double tolerance,
                          int on_expanded, const char* selection,
                          const char* dangling, char** out_csv) {
  return guarded([&] {
    const shx::TransitionKernel kernel =
        kernel_of(g->doc, on_expanded != 0, selection, dangling);
    const auto pi = shx::stationary(kernel, tolerance);
    std::string out;
    for (std::size_t i = 0; i < pi.size(); ++i)
      out += kernel.states[i] + "," + shx::format_real(pi[i]) + "\n";
    *out_csv = dup_string(out);
  });
}

shx_status shx_partition(const shx_graph* g, int k, double imbalance,
                         uint64_t seed, const char* objective,
                         char** out_csv) {
  return guarded([&] {
    const std::string obj_name = objective == nullptr ? "cut" : objective;
    shx::PartitionObjective obj;
    if (obj_name == "cut") {
      obj = shx::PartitionObjective::cut;
    } else if (obj_name == "soed") {
      obj = shx::PartitionObjective::soed;
    } else {
      shx::fail(shx::errc::usage, "unknown objective: " + obj_name);
    }
    const shx::Hypergraph h = shx::expand(g->doc.graph);
    const shx::PartitionResult result =
        shx::multilevel_partition(h, k, imbalance, seed, obj);
    *out_csv = dup_string(partition_csv(h, result.partition));
  });
}

shx_status shx_cluster(const shx_graph* g, int k, uint64_t seed,
                       char** out_csv) {
  return guarded([&] {
    const shx::Hypergraph h = shx::expand(g->doc.graph);
    const shx::Partition p = shx::ncut_spectral(h, k, seed);
    *out_csv = dup_string(partition_csv(h, p));
  });
}

shx_status shx_centrality(const shx_graph* g, char** out_csv) {
  return guarded([&] {
    const auto centrality = shx::degree_centrality(g->doc.graph);
    std::string out;
    for (std::size_t v = 0; v < centrality.size(); ++v)
      out += g->doc.graph.base_vertices()[v] + "," +
             shx::format_real(centrality[v]) + "\n";
    *out_csv = dup_string(out);
  });
}

shx_status shx_ffree(const shx_graph* host, const shx_graph* pattern,
                     int* out_is_free) {
  return guarded([&] {
    const shx::Hypergraph h = shx::expand(host->doc.graph);
    const shx::UniformPattern p =
        shx::uniform_pattern_of(shx::expand(pattern->doc.graph));
    *out_is_free = shx::contains_pattern(h, p) ? 0 : 1;
  });
}

shx_status shx_turan(size_t vertex_count, size_t r, const shx_graph* pattern,
                     size_t* out_max_edges, char** out_witness_json) {
  return guarded([&] {
    const shx::UniformPattern p =
        shx::uniform_pattern_of(shx::expand(pattern->doc.graph));
    const shx::TuranResult result = shx::turan_number(vertex_count, r, p);
    *out_max_edges = result.max_edges;
    if (out_witness_json != nullptr)
      *out_witness_json =
          dup_string(shx::serialize_graph(shx::document_of(result.witness)));
  });
}

shx_status shx_turan_density(size_t r, const shx_graph* pattern, size_t n_min,
                             size_t n_max, char** out_csv) {
  return guarded([&] {
    const shx::UniformPattern p =
        shx::uniform_pattern_of(shx::expand(pattern->doc.graph));
    const auto points = shx::turan_density_estimate(r, p, n_min, n_max);
    std::string out;
    for (const auto& point : points)
      out += std::to_string(point.n) + "," + std::to_string(point.ex) + "," +
             shx::format_real(point.ratio) + "\n";
    *out_csv = dup_string(out);
  });
}

shx_status shx_bdtree_build(const char* table_json, const char* order_csv,
                            shx_tree** out) {
  return guarded([&] {
    json tj = parse_json(table_json, "truth table");
    if (tj.is_object() && tj.contains("values")) tj = tj["values"];
    if (!tj.is_array())
      shx::fail(shx::errc::parse, "truth table must be a JSON array");
    std::vector<int> table;
    for (const auto& v : tj) table.push_back(v.get<int>());

    std::vector<std::string> order;
    std::string cur;
    const std::string text = order_csv == nullptr ? "" : order_csv;
    for (char c : text) {
      if (c == ',') {
        order.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty() || !order.empty()) order.push_back(cur);
    for (const auto& name : order)
      if (name.empty())
        shx::fail(shx::errc::usage, "empty variable name in order");

    *out = new shx_tree{shx::build_decision_tree(table, std::move(order))};
  });
}

shx_status shx_bdtree_evaluate(const shx_tree* t, const char* bits,
                               int* out_value) {
  return guarded([&] {
    const std::string text = bits == nullptr ? "" : bits;
    std::vector<int> assignment;
    for (char c : text) {
      if (c != '0' && c != '1')
        shx::fail(shx::errc::usage, "assignment must be 0/1 characters");
      assignment.push_back(c - '0');
    }
    *out_value = shx::evaluate(t->t, assignment);
  });
}

namespace {

void append_tree_node(std::string& out, const shx::DecisionTree& tree,
                      std::size_t node) {
  const shx::DecisionNode& n = tree.nodes[node];
  if (n.is_leaf) {
    out += "{\"value\": " + std::to_string(n.value) + "}";
    return;
  }
  out += "{\"variable\": \"" + tree.order[n.variable] + "\", \"solid\": ";
  append_tree_node(out, tree, n.solid);
  out += ", \"dashed\": ";
  append_tree_node(out, tree, n.dashed);
  out += "}";
}

}  // namespace

shx_status shx_bdtree_to_json(const shx_tree* t, char** out_json) {
  return guarded([&] {
    std::string out = "{\n  \"order\": [";
    for (std::size_t i = 0; i < t->t.order.size(); ++i) {
      if (i > 0) out += ", ";
      out += "\"" + t->t.order[i] + "\"";
    }
    out += "],\n  \"root\": ";
    append_tree_node(out, t->t, t->t.root);
    out += "\n}\n";
    *out_json = dup_string(out);
  });
}

void shx_tree_free(shx_tree* t) { delete t; }

}  // extern "C"
