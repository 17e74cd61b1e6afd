// shx — command line front end over the shared C API (superhypergraph.h).
// Every subcommand is a pure function of its input files, flags and seed;
// seeded invocations are byte-reproducible. Exit codes: 0 success,
// 1 domain error, 2 usage error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "superhypergraph.h"

namespace {

struct GlobalFlags {
  std::uint64_t seed = 0;
  bool has_seed = false;
  bool strict = false;
  std::string out_path;
  double tolerance = 1e-10;
};

const char* status_name(shx_status status) {
  switch (status) {
    case SHX_OK:
      return "ok";
    case SHX_ERR_USAGE:
      return "usage";
    case SHX_ERR_PARSE:
      return "parse";
    case SHX_ERR_INVALID:
      return "invalid";
    case SHX_ERR_SHAPE:
      return "shape";
    case SHX_ERR_DOMAIN:
      return "domain";
    case SHX_ERR_IO:
      return "io";
    case SHX_ERR_LIMIT:
      return "limit";
  }
  return "unknown";
}

[[noreturn]] void die(shx_status status) {
  std::cerr << "shx-error: " << status_name(status) << ": " << shx_last_error()
            << "\n";
  std::exit(status == SHX_ERR_USAGE ? 2 : 1);
}

void check(shx_status status) {
  if (status != SHX_OK) die(status);
}

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << "shx-error: usage: " << message << "\n";
  std::exit(2);
}

void require_seed(const GlobalFlags& flags, const char* command) {
  if (!flags.has_seed)
    usage_error(std::string(command) + " is randomized and requires --seed");
}

void emit(const GlobalFlags& flags, const std::string& content) {
  if (flags.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(flags.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "shx-error: io: cannot write " << flags.out_path << "\n";
    std::exit(1);
  }
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "shx-error: io: cannot open " << path << "\n";
    std::exit(1);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GraphHandle {
  shx_graph* g = nullptr;
  ~GraphHandle() { shx_graph_free(g); }
};

struct MatrixHandle {
  shx_matrix* m = nullptr;
  ~MatrixHandle() { shx_matrix_free(m); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { shx_string_free(s); }
  std::string str() const { return s == nullptr ? "" : s; }
};

GraphHandle load_graph(const std::string& path, bool strict) {
  GraphHandle h;
  check(shx_graph_load(path.c_str(), strict ? 1 : 0, &h.g));
  return h;
}

MatrixHandle load_matrix(const std::string& path) {
  MatrixHandle h;
  check(shx_matrix_load_csv(path.c_str(), &h.m));
  return h;
}

std::string matrix_csv(const shx_matrix* m) {
  StringHandle text;
  check(shx_matrix_to_csv(m, &text.s));
  return text.str();
}

std::string graph_json(const shx_graph* g) {
  StringHandle text;
  check(shx_graph_to_json(g, &text.s));
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SuperHyperGraph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "64-bit seed for randomized commands")
      ->each([&](const std::string&) { flags.has_seed = true; });
  app.add_flag("--strict", flags.strict, "reject unknown fields and enforce strict checks");
  app.add_option("--out", flags.out_path, "write output to a file instead of stdout");
  app.add_option("--tolerance", flags.tolerance, "numeric tolerance where applicable");

  // validate
  std::string graph_path;
  auto* cmd_validate = app.add_subcommand("validate", "check a graph document");
  cmd_validate->add_option("graph", graph_path)->required();

  // expand
  auto* cmd_expand = app.add_subcommand("expand", "expanded hypergraph as JSON");
  cmd_expand->add_option("graph", graph_path)->required();

  // laplacian
  bool want_propagator = false;
  auto* cmd_laplacian =
      app.add_subcommand("laplacian", "normalized Laplacian of the expansion");
  cmd_laplacian->add_option("graph", graph_path)->required();
  cmd_laplacian->add_flag("--propagator", want_propagator,
                          "emit I - Laplacian instead");

  // convolve
  std::string features_path, theta_path, activation = "relu";
  double slope = 0.01;
  std::size_t theta_cols = 0;
  auto* cmd_convolve = app.add_subcommand("convolve", "single SHGNN layer");
  cmd_convolve->add_option("graph", graph_path)->required();
  cmd_convolve->add_option("--features", features_path)->required();
  cmd_convolve->add_option("--theta", theta_path);
  cmd_convolve->add_option("--theta-cols", theta_cols,
                           "generate theta with this many columns (seeded)");
  cmd_convolve->add_option("--activation", activation);
  cmd_convolve->add_option("--slope", slope);

  // forward
  std::string net_path, dims_text, readout = "softmax";
  auto* cmd_forward = app.add_subcommand("forward", "multi-layer network");
  cmd_forward->add_option("graph", graph_path)->required();
  cmd_forward->add_option("--features", features_path)->required();
  cmd_forward->add_option("--net", net_path, "network JSON file");
  cmd_forward->add_option("--dims", dims_text,
                          "comma-separated output widths (seeded)");
  cmd_forward->add_option("--activation", activation);
  cmd_forward->add_option("--readout", readout, "softmax or none");

  // attention
  std::string attention_path;
  bool coefficients_only = false;
  auto* cmd_attention = app.add_subcommand("attention", "hypergraph attention");
  cmd_attention->add_option("graph", graph_path)->required();
  cmd_attention->add_option("--features", features_path)->required();
  cmd_attention->add_option("--theta", theta_path)->required();
  cmd_attention->add_option("--a", attention_path, "attention vector CSV")
      ->required();
  cmd_attention->add_option("--slope", slope);
  cmd_attention->add_flag("--coefficients", coefficients_only,
                          "emit vertex,edge,alpha triplets instead");

  // dshgnn
  std::string config_path;
  auto* cmd_dshgnn =
      app.add_subcommand("dshgnn", "dynamic superhypergraph network");
  cmd_dshgnn->add_option("--features", features_path)->required();
  cmd_dshgnn->add_option("--config", config_path)->required();

  // fgnn / ngnn / pgnn
  std::size_t rule_count = 1, layer_count = 1;
  auto add_uncertain = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("graph", graph_path)->required();
    cmd->add_option("--features", features_path)->required();
    cmd->add_option("--config", config_path, "explicit rules/layers JSON");
    cmd->add_option("--rule-count", rule_count);
    cmd->add_option("--layer-count", layer_count);
    return cmd;
  };
  auto* cmd_fgnn = add_uncertain("fgnn", "fuzzy graph network forward pass");
  auto* cmd_ngnn =
      add_uncertain("ngnn", "neutrosophic graph network forward pass");
  auto* cmd_pgnn =
      add_uncertain("pgnn", "plithogenic graph network forward pass");

  // fhgnn
  auto* cmd_fhgnn =
      app.add_subcommand("fhgnn", "fuzzy hypergraph network layer");
  cmd_fhgnn->add_option("graph", graph_path)->required();
  cmd_fhgnn->add_option("--features", features_path)->required();
  cmd_fhgnn->add_option("--theta", theta_path)->required();
  cmd_fhgnn->add_option("--activation", activation);
  cmd_fhgnn->add_option("--slope", slope);

  // ccut
  double cut_level = 0.5;
  auto* cmd_ccut = app.add_subcommand("ccut", "crisp c-level hypergraph");
  cmd_ccut->add_option("graph", graph_path)->required();
  cmd_ccut->add_option("--level", cut_level)->required();

  // walk
  std::string start_state, selection = "uniform", dangling = "error";
  std::uint64_t steps = 0;
  bool on_expanded = false;
  auto* cmd_walk = app.add_subcommand("walk", "simulate a random walk");
  cmd_walk->add_option("graph", graph_path)->required();
  cmd_walk->add_option("--start", start_state)->required();
  cmd_walk->add_option("--steps", steps)->required();
  cmd_walk->add_flag("--on-expanded", on_expanded,
                     "walk on base vertices of the expansion");
  cmd_walk->add_option("--selection", selection, "uniform or weighted");
  cmd_walk->add_option("--dangling", dangling, "error or lazy");

  // stationary
  auto* cmd_stationary =
      app.add_subcommand("stationary", "stationary distribution");
  cmd_stationary->add_option("graph", graph_path)->required();
  cmd_stationary->add_flag("--on-expanded", on_expanded);
  cmd_stationary->add_option("--selection", selection);
  cmd_stationary->add_option("--dangling", dangling);

  // partition
  int part_count = 2;
  double imbalance = 1.0;
  std::string objective = "cut";
  auto* cmd_partition =
      app.add_subcommand("partition", "multilevel k-way partitioning");
  cmd_partition->add_option("graph", graph_path)->required();
  cmd_partition->add_option("-k,--parts", part_count)->required();
  cmd_partition->add_option("-c,--imbalance", imbalance);
  cmd_partition->add_option("--objective", objective, "cut or soed");

  // cluster
  auto* cmd_cluster = app.add_subcommand("cluster", "NCut spectral clustering");
  cmd_cluster->add_option("graph", graph_path)->required();
  cmd_cluster->add_option("-k,--parts", part_count)->required();

  // centrality
  auto* cmd_centrality =
      app.add_subcommand("centrality", "degree centrality of base vertices");
  cmd_centrality->add_option("graph", graph_path)->required();

  // turan
  std::string pattern_path;
  std::size_t turan_n = 0, turan_r = 2, density_min = 0, density_max = 0;
  auto* cmd_turan = app.add_subcommand("turan", "exact Turan numbers");
  cmd_turan->add_option("--vertices,-n", turan_n);
  cmd_turan->add_option("--arity,-r", turan_r);
  cmd_turan->add_option("--pattern", pattern_path)->required();
  cmd_turan->add_option("--density-min", density_min);
  cmd_turan->add_option("--density-max", density_max);

  // ffree
  std::string host_path;
  auto* cmd_ffree = app.add_subcommand("ffree", "pattern-freeness test");
  cmd_ffree->add_option("--graph", host_path)->required();
  cmd_ffree->add_option("--pattern", pattern_path)->required();

  // bdtree
  std::string table_path, order_text, eval_bits;
  auto* cmd_bdtree =
      app.add_subcommand("bdtree", "binary decision tree from a truth table");
  cmd_bdtree->add_option("--table", table_path)->required();
  cmd_bdtree->add_option("--order", order_text)->required();
  cmd_bdtree->add_option("--eval", eval_bits,
                         "evaluate this 0/1 assignment instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cmd_validate->parsed()) {
    const std::string text = read_text_file(graph_path);
    StringHandle report;
    int violations = 0;
    check(shx_graph_validate(text.c_str(), flags.strict ? 1 : 0, &report.s,
                             &violations));
    emit(flags, violations == 0 ? "valid\n" : report.str());
    return violations == 0 ? 0 : 1;
  }

  if (cmd_expand->parsed()) {
    GraphHandle g = load_graph(graph_path, flags.strict);
    GraphHandle expanded;
    check(shx_graph_expand(g.g, &expanded.g));
    emit(flags, graph_json(expanded.g));
    return 0;
  }

  if (cmd_laplacian->parsed()) {
    GraphHandle g = load_graph(graph_path, flags.strict);
    MatrixHandle m;
    check(want_propagator ? shx_propagator(g.g, &m.m)
                          : shx_laplacian(g.g, &m.m));
    emit(flags, matrix_csv(m.m));
    return 0;
  }

  if (cmd_convolve->parsed()) {
    GraphHandle g = load_graph(graph_path, flags.strict);
    MatrixHandle x = load_matrix(features_path);
    MatrixHandle y;
    if (!theta_path.empty()) {
      MatrixHandle theta = load_matrix(theta_path);
      check(shx_convolve(g.g, x.m, theta.m, activation.c_str(), slope, &y.m));
    } else if (theta_cols > 0) {
      require_seed(flags, "convolve --theta-cols");
      const std::string net = "{\"dims\": [" + std::to_string(theta_cols) +
                              "], \"activation\": \"" + activation +
                              "\", \"slope\": " + std::to_string(slope) +
                              ", \"readout\": \"none\"}";
      check(shx_forward(g.g, x.m, net.c_str(), flags.seed, 1, &y.m));
    } else {
      usage_error("convolve needs --theta or --theta-cols");
    }
    emit(flags, matrix_csv(y.m));
    return 0;
  }

  if (cmd_forward->parsed()) {
    GraphHandle g = load_graph(graph_path, flags.strict);
    MatrixHandle x = load_matrix(features_path);
    std::string net;
    if (!net_path.empty()) {
      net = read_text_file(net_path);
    } else if (!dims_text.empty()) {
      require_seed(flags, "forward --dims");
      net = "{\"dims\": [" + dims_text + "], \"activation\": \"" + activation +
            "\", \"readout\": \"" + readout + "\"}";
    } else {
      usage_error("forward needs --net or --dims");
    }
    MatrixHandle y;
    check(shx_forward(g.g, x.m, net.c_str(), flags.seed,
                      flags.has_seed ? 1 : 0, &y.m));
    emit(flags, matrix_csv(y.m));
    return 0;
  }

  if (cmd_attention->parsed()) {
    GraphHandle g = load_graph(graph_path, flags.strict);
    MatrixHandle x = load_matrix(features_path);
    MatrixHandle theta = load_matrix(theta_path);
    MatrixHandle a = load_matrix(attention_path);
    if (coefficients_only) {
      StringHandle coo;
      check(shx_attention_coefficients(g.g, x.m, theta.m, a.m, slope, &coo.s));
      emit(flags, coo.str());
    } else {
      MatrixHandle y;
      check(shx_attention_convolve(g.g, x.m, theta.m, a.m, slope, &y.m));
      emit(flags, matrix_csv(y.m));
    }
    return 0;
  }

  if (cmd_dshgnn->parsed()) {
    require_seed(flags, "dshgnn");
    MatrixHandle x = load_matrix(features_path);
    const std::string config = read_text_file(config_path);
    MatrixHandle y;
    check(shx_dshgnn(x.m, config.c_str(), flags.seed, &y.m));
    emit(flags, matrix_csv(y.m));
    return 0;
  }

  for (const auto& [cmd, kind] :
       {std::pair{cmd_fgnn, "fgnn"}, std::pair{cmd_ngnn, "ngnn"},
        std::pair{cmd_pgnn, "pgnn"}}) {
    if (!cmd->parsed()) continue;
    GraphHandle g = load_graph(graph_path, flags.strict);
    MatrixHandle x = load_matrix(features_path);
    std::string config;
    if (!config_path.empty()) {
      config = read_text_file(config_path);
    } else {
      require_seed(flags, kind);
      config = "{\"rule_count\": " + std::to_string(rule_count) +
               ", \"layer_count\": " + std::to_string(layer_count) + "}";
    }
    MatrixHandle y;
    check(shx_uncertain_forward(g.g, x.m, kind, config.c_str(), flags.seed,
                                flags.has_seed ? 1 : 0, &y.m));
    emit(flags, matrix_csv(y.m));
    return 0;
  }

  if (cmd_fhgnn->parsed()) {
    GraphHandle g = load_graph(graph_path, flags.strict);
    MatrixHandle x = load_matrix(features_path);
    MatrixHandle theta = load_matrix(theta_path);
    MatrixHandle y;
    check(shx_fhgnn(g.g, x.m, theta.m, activation.c_str(), slope, &y.m));
    emit(flags, matrix_csv(y.m));
    return 0;
  }

  if (cmd_ccut->parsed()) {
    GraphHandle g = load_graph(graph_path, flags.strict);
    GraphHandle cut;
    check(shx_ccut(g.g, cut_level, &cut.g));
    emit(flags, graph_json(cut.g));
    return 0;
  }

  if (cmd_walk->parsed()) {
    require_seed(flags, "walk");
    GraphHandle g = load_graph(graph_path, flags.strict);
    StringHandle lines;
    check(shx_walk(g.g, start_state.c_str(), steps, flags.seed,
                   on_expanded ? 1 : 0, selection.c_str(), dangling.c_str(),
                   &lines.s));
    emit(flags, lines.str());
    return 0;
  }

  if (cmd_stationary->parsed()) {
    GraphHandle g = load_graph(graph_path, flags.strict);
    StringHandle csv;
    check(shx_stationary(g.g, flags.tolerance, on_expanded ? 1 : 0,
                         selection.c_str(), dangling.c_str(), &csv.s));
    emit(flags, csv.str());
    return 0;
  }

  if (cmd_partition->parsed()) {
    require_seed(flags, "partition");
    GraphHandle g = load_graph(graph_path, flags.strict);
    StringHandle csv;
    check(shx_partition(g.g, part_count, imbalance, flags.seed,
                        objective.c_str(), &csv.s));
    emit(flags, csv.str());
    return 0;
  }

  if (cmd_cluster->parsed()) {
    require_seed(flags, "cluster");
    GraphHandle g = load_graph(graph_path, flags.strict);
    StringHandle csv;
    check(shx_cluster(g.g, part_count, flags.seed, &csv.s));
    emit(flags, csv.str());
    return 0;
  }

  if (cmd_centrality->parsed()) {
    GraphHandle g = load_graph(graph_path, flags.strict);
    StringHandle csv;
    check(shx_centrality(g.g, &csv.s));
    emit(flags, csv.str());
    return 0;
  }

  if (cmd_turan->parsed()) {
    GraphHandle pattern = load_graph(pattern_path, flags.strict);
    if (density_max > 0) {
      StringHandle csv;
      check(shx_turan_density(turan_r, pattern.g, density_min, density_max,
                              &csv.s));
      emit(flags, csv.str());
      return 0;
    }
    if (turan_n == 0) usage_error("turan needs --vertices or a density range");
    size_t max_edges = 0;
    StringHandle witness;
    check(shx_turan(turan_n, turan_r, pattern.g, &max_edges, &witness.s));
    if (!flags.out_path.empty()) {
      emit(flags, witness.str());
      std::cout << max_edges << "\n";
    } else {
      std::cout << max_edges << "\n";
    }
    return 0;
  }

  if (cmd_ffree->parsed()) {
    GraphHandle host = load_graph(host_path, flags.strict);
    GraphHandle pattern = load_graph(pattern_path, flags.strict);
    int is_free = 0;
    check(shx_ffree(host.g, pattern.g, &is_free));
    emit(flags, is_free ? "true\n" : "false\n");
    return 0;
  }

  if (cmd_bdtree->parsed()) {
    const std::string table = read_text_file(table_path);
    shx_tree* tree = nullptr;
    check(shx_bdtree_build(table.c_str(), order_text.c_str(), &tree));
    std::unique_ptr<shx_tree, decltype(&shx_tree_free)> guard(tree,
                                                              &shx_tree_free);
    if (!eval_bits.empty()) {
      int value = 0;
      check(shx_bdtree_evaluate(tree, eval_bits.c_str(), &value));
      emit(flags, std::to_string(value) + "\n");
    } else {
      StringHandle text;
      check(shx_bdtree_to_json(tree, &text.s));
      emit(flags, text.str());
    }
    return 0;
  }

  usage_error("no subcommand given");
}
