#include <chrono>
#include <cmath>

#include "doctest.h"
#include "shx/fuzzy_hypergraph.hpp"
#include "shx/spectral.hpp"
#include "shx/uncertain.hpp"
#include "support.hpp"

using namespace shx;

namespace {

Hypergraph path3() {
  return Hypergraph({"a", "b", "c"}, {{{0, 1}, 1.0, 0}, {{1, 2}, 1.0, 1}});
}

AnnotatedGraph fuzzy_graph(const Hypergraph& h,
                           const std::vector<double>& vertex_mu,
                           const std::vector<double>& edge_mu) {
  std::vector<Annotation> va, ea;
  for (double m : vertex_mu) va.push_back({{m}});
  for (double m : edge_mu) ea.push_back({{m}});
  return AnnotatedGraph(h, MembershipKind::fuzzy, va, ea);
}

AnnotatedGraph neutrosophic_graph(
    const Hypergraph& h, const std::vector<std::vector<double>>& vertex_t,
    const std::vector<std::vector<double>>& edge_t) {
  std::vector<Annotation> va, ea;
  for (const auto& t : vertex_t) va.push_back({t});
  for (const auto& t : edge_t) ea.push_back({t});
  return AnnotatedGraph(h, MembershipKind::neutrosophic, va, ea);
}

RuleSet all_edge_rule() { return {{UncertainRule{}}}; }

UncertainLayer random_layer(Rng& rng, std::size_t d, std::size_t rules,
                            Activation act) {
  UncertainLayer layer;
  for (std::size_t k = 0; k < rules; ++k) {
    AffineMap map;
    map.self_weight = testsupport::random_dense(rng, d, d);
    map.msg_weight = testsupport::random_dense(rng, d, d);
    for (std::size_t c = 0; c < d; ++c) map.bias.push_back(rng.next_signed());
    layer.rule_maps.push_back(std::move(map));
  }
  layer.activation = act;
  return layer;
}

// full scalar recomputation of the unified forward pass
DenseMatrix oracle_uncertain(const Hypergraph& h,
                             const std::vector<double>& sv,
                             const std::vector<double>& se,
                             const RuleSet& rules,
                             const std::vector<UncertainLayer>& layers,
                             const DenseMatrix& x) {
  std::vector<double> firing;
  for (const auto& rule : rules.rules) {
    double r = 1.0;
    std::vector<std::size_t> edges = rule.antecedent_edges;
    if (edges.empty())
      for (std::size_t j = 0; j < h.edge_count(); ++j) edges.push_back(j);
    for (std::size_t j : edges)
      r *= sv[h.edge(j).members[0]] * sv[h.edge(j).members[1]] * se[j];
    firing.push_back(r);
  }
  double total = 0.0;
  for (double r : firing) total += r;
  for (double& r : firing)
    r = total == 0.0 ? 1.0 / static_cast<double>(firing.size()) : r / total;

  DenseMatrix cur = x;
  const std::size_t d = x.cols();
  for (const auto& layer : layers) {
    DenseMatrix msg(h.vertex_count(), d);
    for (std::size_t j = 0; j < h.edge_count(); ++j) {
      const std::size_t u = h.edge(j).members[0];
      const std::size_t v = h.edge(j).members[1];
      for (std::size_t c = 0; c < d; ++c) {
        msg.at(v, c) += sv[u] * se[j] * cur.at(u, c);
        msg.at(u, c) += sv[v] * se[j] * cur.at(v, c);
      }
    }
    DenseMatrix pre = cur;
    for (std::size_t k = 0; k < rules.rules.size(); ++k) {
      const AffineMap& map = layer.rule_maps[k];
      for (std::size_t i = 0; i < h.vertex_count(); ++i)
        for (std::size_t c = 0; c < d; ++c) {
          double acc = map.bias[c];
          for (std::size_t t = 0; t < d; ++t)
            acc += cur.at(i, t) * map.self_weight.at(t, c) +
                   msg.at(i, t) * map.msg_weight.at(t, c);
          pre.at(i, c) += firing[k] * acc;
        }
    }
    cur = apply_activation(pre, layer.activation);
  }
  return softmax_rows(cur);
}

}  // namespace

TEST_CASE("validator accepts the worked fuzzy and neutrosophic values") {
  // social network: sigma = (.9, .7, .5, .3), mu = (.8, .6, .4, .2)
  const Hypergraph g({"Alice", "Bob", "Carol", "Dave"},
                     {{{0, 1}, 1.0, 0},
                      {{1, 2}, 1.0, 1},
                      {{2, 3}, 1.0, 2},
                      {{0, 3}, 1.0, 3}});
  const AnnotatedGraph fg =
      fuzzy_graph(g, {0.9, 0.7, 0.5, 0.3}, {0.8, 0.6, 0.4, 0.2});
  CHECK(validate_annotations(fg, false).valid());
  // the paper's own example breaks mu <= min(sigma); strict must not flag it
  CHECK(validate_annotations(fg, true).valid());

  // disease network triplets
  const AnnotatedGraph ng = neutrosophic_graph(
      g,
      {{0.9, 0.1, 0.0}, {0.5, 0.4, 0.1}, {0.2, 0.3, 0.5}, {0.0, 0.1, 0.9}},
      {{0.8, 0.1, 0.1}, {0.4, 0.4, 0.2}, {0.1, 0.2, 0.7}, {0.2, 0.3, 0.5}});
  CHECK(validate_annotations(ng, false).valid());
  CHECK(validate_annotations(ng, true).valid());
}

TEST_CASE("validator range and sum violations") {
  const Hypergraph g({"a", "b"}, {{{0, 1}, 1.0, 0}});

  AnnotatedGraph out_of_range = fuzzy_graph(g, {1.2, 0.5}, {0.5});
  CHECK(!validate_annotations(out_of_range, false).valid());

  // quadripartitioned boundary: sum exactly 4 is valid
  std::vector<Annotation> va{{{1.0, 1.0, 1.0, 1.0}}, {{0.2, 0.2, 0.2, 0.2}}};
  std::vector<Annotation> ea{{{0.1, 0.1, 0.1, 0.1}}};
  const AnnotatedGraph qng(g, MembershipKind::quadripartitioned, va, ea);
  CHECK(validate_annotations(qng, false).valid());

  // intuitionistic sum bound
  std::vector<Annotation> iva{{{0.7, 0.5}}, {{0.2, 0.2}}};
  std::vector<Annotation> iea{{{0.1, 0.1}}};
  const AnnotatedGraph ifg(g, MembershipKind::intuitionistic, iva, iea);
  CHECK(!validate_annotations(ifg, false).valid());
}

TEST_CASE("strict pentapartitioned edge constraints") {
  const Hypergraph g({"u", "v"}, {{{0, 1}, 1.0, 0}});
  // sigma3(e) = 0.1 below max(0.5, 0.2) violates the >= rule
  std::vector<Annotation> va{{{0.4, 0.3, 0.5, 0.6, 0.7}},
                             {{0.5, 0.2, 0.2, 0.5, 0.6}}};
  std::vector<Annotation> ea{{{0.3, 0.2, 0.1, 0.7, 0.8}}};
  const AnnotatedGraph pg(g, MembershipKind::pentapartitioned, va, ea);
  CHECK(validate_annotations(pg, false).valid());
  const auto strict = validate_annotations(pg, true);
  REQUIRE(!strict.valid());
  CHECK(strict.violations.size() == 1);
  CHECK(strict.violations[0].message.find("component 3") != std::string::npos);

  // satisfying annotation passes strict
  std::vector<Annotation> good_ea{{{0.3, 0.2, 0.5, 0.7, 0.8}}};
  const AnnotatedGraph ok(g, MembershipKind::pentapartitioned, va, good_ea);
  CHECK(validate_annotations(ok, true).valid());
}

TEST_CASE("strict quadripartitioned uses <= max for components 3 and 4") {
  const Hypergraph g({"u", "v"}, {{{0, 1}, 1.0, 0}});
  std::vector<Annotation> va{{{0.6, 0.5, 0.5, 0.4}}, {{0.5, 0.6, 0.3, 0.2}}};
  std::vector<Annotation> ea{{{0.5, 0.5, 0.4, 0.3}}};
  CHECK(validate_annotations(
            AnnotatedGraph(g, MembershipKind::quadripartitioned, va, ea), true)
            .valid());
  std::vector<Annotation> bad{{{0.5, 0.5, 0.6, 0.3}}};
  CHECK(!validate_annotations(
             AnnotatedGraph(g, MembershipKind::quadripartitioned, va, bad),
             true)
             .valid());
}

TEST_CASE("membership strength combiner") {
  CHECK(membership_strength({{0.7}}) == doctest::Approx(0.7));
  CHECK(membership_strength({{0.7, 0.0, 0.0}}) == doctest::Approx(0.7));
  CHECK(membership_strength({{1.0, 0.0, 0.0}}) == doctest::Approx(1.0));
  CHECK(membership_strength({{0.8, 0.5, 0.25}}) ==
        doctest::Approx(0.8 * 0.5 * 0.75));
}

TEST_CASE("firing strengths normalize and fall back to uniform") {
  const Hypergraph g = path3();
  const AnnotatedGraph fg = fuzzy_graph(g, {1.0, 1.0, 1.0}, {0.5, 0.25});
  // single rule: normalized weight is 1 regardless of memberships
  const auto single = firing_strengths(fg, all_edge_rule());
  REQUIRE(single.size() == 1);
  CHECK(single[0] == doctest::Approx(1.0));

  // two rules over different edges
  RuleSet rules;
  rules.rules.push_back({{0}});
  rules.rules.push_back({{1}});
  const auto two = firing_strengths(fg, rules);
  CHECK(two[0] == doctest::Approx(0.5 / 0.75));
  CHECK(two[1] == doctest::Approx(0.25 / 0.75));

  // all-zero memberships: uniform fallback
  const AnnotatedGraph zero = fuzzy_graph(g, {0.0, 0.0, 0.0}, {0.0, 0.0});
  const auto fallback = firing_strengths(zero, rules);
  CHECK(fallback[0] == doctest::Approx(0.5));
  CHECK(fallback[1] == doctest::Approx(0.5));
}

TEST_CASE("fgnn matches the scalar oracle") {
  Rng rng(71);
  const Hypergraph g = path3();
  const std::vector<double> vmu{0.9, 0.7, 0.5};
  const std::vector<double> emu{0.8, 0.6};
  const AnnotatedGraph fg = fuzzy_graph(g, vmu, emu);
  RuleSet rules;
  rules.rules.push_back({{0}});
  rules.rules.push_back({});
  for (int trial = 0; trial < 5; ++trial) {
    const DenseMatrix x = testsupport::random_dense(rng, 3, 2);
    std::vector<UncertainLayer> layers{
        random_layer(rng, 2, 2, {ActivationKind::relu, 0.01}),
        random_layer(rng, 2, 2, {ActivationKind::identity, 0.01})};
    const DenseMatrix got = fgnn_forward(fg, x, rules, layers);
    std::vector<double> sv = vmu, se = emu;
    const DenseMatrix want = oracle_uncertain(g, sv, se, rules, layers, x);
    CHECK(testsupport::max_abs_diff(got, want) < 1e-12);
  }
}

TEST_CASE("ngnn reduces exactly to fgnn when i = f = 0") {
  Rng rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    const Hypergraph g = path3();
    std::vector<double> vmu, emu;
    std::vector<std::vector<double>> vt, et;
    for (int i = 0; i < 3; ++i) {
      const double mu = rng.next_double();
      vmu.push_back(mu);
      vt.push_back({mu, 0.0, 0.0});
    }
    for (int j = 0; j < 2; ++j) {
      const double mu = rng.next_double();
      emu.push_back(mu);
      et.push_back({mu, 0.0, 0.0});
    }
    const DenseMatrix x = testsupport::random_dense(rng, 3, 2);
    RuleSet rules = all_edge_rule();
    std::vector<UncertainLayer> layers{
        random_layer(rng, 2, 1, {ActivationKind::relu, 0.01})};
    const DenseMatrix fuzzy =
        fgnn_forward(fuzzy_graph(g, vmu, emu), x, rules, layers);
    const DenseMatrix neutro =
        ngnn_forward(neutrosophic_graph(g, vt, et), x, rules, layers);
    CHECK(testsupport::max_abs_diff(fuzzy, neutro) == 0.0);
  }
}

TEST_CASE("ngnn disease network matches the scalar oracle") {
  Rng rng(79);
  const Hypergraph g({"p1", "p2", "p3", "p4"},
                     {{{0, 1}, 1.0, 0},
                      {{1, 2}, 1.0, 1},
                      {{2, 3}, 1.0, 2},
                      {{0, 3}, 1.0, 3}});
  const std::vector<std::vector<double>> vt{
      {0.9, 0.1, 0.0}, {0.5, 0.4, 0.1}, {0.2, 0.3, 0.5}, {0.0, 0.1, 0.9}};
  const std::vector<std::vector<double>> et{
      {0.8, 0.1, 0.1}, {0.4, 0.4, 0.2}, {0.1, 0.2, 0.7}, {0.2, 0.3, 0.5}};
  const AnnotatedGraph ng = neutrosophic_graph(g, vt, et);
  const DenseMatrix x = testsupport::random_dense(rng, 4, 3);
  RuleSet rules = all_edge_rule();
  std::vector<UncertainLayer> layers{
      random_layer(rng, 3, 1, {ActivationKind::relu, 0.01}),
      random_layer(rng, 3, 1, {ActivationKind::relu, 0.01})};
  const DenseMatrix got = ngnn_forward(ng, x, rules, layers);

  auto comb = [](const std::vector<double>& t) {
    return t[0] * (1.0 - t[1]) * (1.0 - t[2]);
  };
  std::vector<double> sv, se;
  for (const auto& t : vt) sv.push_back(comb(t));
  for (const auto& t : et) se.push_back(comb(t));
  const DenseMatrix want = oracle_uncertain(g, sv, se, rules, layers, x);
  CHECK(testsupport::max_abs_diff(got, want) < 1e-12);
}

namespace {

AnnotatedGraph plithogenic_graph(
    const Hypergraph& g, const std::vector<std::vector<double>>& vertex_daf,
    const std::vector<std::vector<double>>& edge_daf, double contradiction) {
  std::vector<Annotation> va, ea;
  for (const auto& d : vertex_daf) va.push_back({d});
  for (const auto& d : edge_daf) ea.push_back({d});
  PlithogenicData pd;
  pd.appurtenance_size = vertex_daf[0].size();
  pd.contradiction_size = 1;
  pd.attribute_values = {"low", "high"};
  pd.vertex_contradiction = {{{0.0}, {contradiction}}, {{contradiction}, {0.0}}};
  pd.edge_contradiction = {{{0.0}, {contradiction}}, {{contradiction}, {0.0}}};
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    pd.vertex_attr.push_back(i % 2);
  return AnnotatedGraph(g, MembershipKind::plithogenic, va, ea, pd);
}

}  // namespace

TEST_CASE("pgnn isolated vertex sees an empty neighbor sum") {
  Rng rng(83);
  // one vertex, no edges (2-uniformity holds vacuously)
  const Hypergraph g({"solo"}, {});
  std::vector<Annotation> va{{{0.8, 0.1, 0.1}}};
  PlithogenicData pd;
  pd.appurtenance_size = 3;
  pd.contradiction_size = 1;
  pd.attribute_values = {"only"};
  pd.vertex_contradiction = {{{0.0}}};
  pd.edge_contradiction = {{{0.0}}};
  pd.vertex_attr = {0};
  const AnnotatedGraph ag(g, MembershipKind::plithogenic, va, {}, pd);

  const DenseMatrix x = testsupport::random_dense(rng, 1, 2);
  RuleSet rules = all_edge_rule();
  std::vector<UncertainLayer> layers{
      random_layer(rng, 2, 1, {ActivationKind::relu, 0.01})};
  const DenseMatrix got = pgnn_forward(ag, x, rules, layers);

  // softmax(relu(f(x, 0) + x)) by hand
  const AffineMap& map = layers[0].rule_maps[0];
  DenseMatrix pre(1, 2);
  for (std::size_t c = 0; c < 2; ++c) {
    double acc = map.bias[c];
    for (std::size_t t = 0; t < 2; ++t)
      acc += x.at(0, t) * map.self_weight.at(t, c);
    pre.at(0, c) = x.at(0, c) + acc;
  }
  const DenseMatrix want = softmax_rows(relu(pre));
  CHECK(testsupport::max_abs_diff(got, want) < 1e-13);
}

TEST_CASE("pgnn with zero contradiction equals ngnn on the same graph") {
  Rng rng(89);
  for (int trial = 0; trial < 10; ++trial) {
    const Hypergraph g = path3();
    std::vector<std::vector<double>> vd, ed;
    for (int i = 0; i < 3; ++i)
      vd.push_back({rng.next_double(), rng.next_double() * 0.5,
                    rng.next_double() * 0.5});
    for (int j = 0; j < 2; ++j)
      ed.push_back({rng.next_double(), rng.next_double() * 0.5,
                    rng.next_double() * 0.5});
    const DenseMatrix x = testsupport::random_dense(rng, 3, 2);
    RuleSet rules = all_edge_rule();
    std::vector<UncertainLayer> layers{
        random_layer(rng, 2, 1, {ActivationKind::leaky_relu, 0.05})};

    const DenseMatrix plith = pgnn_forward(
        plithogenic_graph(g, vd, ed, 0.0), x, rules, layers);
    const DenseMatrix neutro =
        ngnn_forward(neutrosophic_graph(g, vd, ed), x, rules, layers);
    CHECK(testsupport::max_abs_diff(plith, neutro) == 0.0);
  }
}

TEST_CASE("pgnn triangle matches the step-by-step scalar oracle") {
  Rng rng(97);
  const Hypergraph g({"a", "b", "c"},
                     {{{0, 1}, 1.0, 0}, {{1, 2}, 1.0, 1}, {{0, 2}, 1.0, 2}});
  std::vector<std::vector<double>> vd, ed;
  for (int i = 0; i < 3; ++i)
    vd.push_back({rng.next_double(), rng.next_double()});
  for (int j = 0; j < 3; ++j)
    ed.push_back({rng.next_double(), rng.next_double()});
  const double contradiction = 0.4;
  const AnnotatedGraph ag = plithogenic_graph(g, vd, ed, contradiction);

  const DenseMatrix x = testsupport::random_dense(rng, 3, 2);
  RuleSet rules = all_edge_rule();
  std::vector<UncertainLayer> layers{
      random_layer(rng, 2, 1, {ActivationKind::relu, 0.01}),
      random_layer(rng, 2, 1, {ActivationKind::relu, 0.01})};
  const DenseMatrix got = pgnn_forward(ag, x, rules, layers);

  auto npc = [](const std::vector<double>& d) {
    double s = d[0];
    for (std::size_t i = 1; i < d.size(); ++i) s *= 1.0 - d[i];
    return s;
  };
  std::vector<double> sv, se;
  for (const auto& d : vd) sv.push_back(npc(d));
  // attributes alternate low/high: edges (0,1) and (1,2) cross, (0,2)?
  // vertex_attr = {0, 1, 0}: edge (0,1) crosses, (1,2) crosses, (0,2) same
  se.push_back(npc(ed[0]) * (1.0 - contradiction));
  se.push_back(npc(ed[1]) * (1.0 - contradiction));
  se.push_back(npc(ed[2]) * (1.0 - 0.0));
  const DenseMatrix want = oracle_uncertain(g, sv, se, rules, layers, x);
  CHECK(testsupport::max_abs_diff(got, want) < 1e-12);
}

TEST_CASE("plithogenic validator checks tables and strict inequalities") {
  const Hypergraph g({"u", "v"}, {{{0, 1}, 1.0, 0}});
  std::vector<Annotation> va{{{0.8, 0.6}}, {{0.7, 0.5}}};
  std::vector<Annotation> ea{{{0.6, 0.4}}};
  PlithogenicData pd;
  pd.appurtenance_size = 2;
  pd.contradiction_size = 1;
  pd.attribute_values = {"x", "y"};
  pd.vertex_contradiction = {{{0.0}, {0.5}}, {{0.5}, {0.0}}};
  pd.edge_contradiction = {{{0.0}, {0.4}}, {{0.4}, {0.0}}};
  pd.vertex_attr = {0, 1};
  const AnnotatedGraph good(g, MembershipKind::plithogenic, va, ea, pd);
  CHECK(validate_annotations(good, false).valid());
  CHECK(validate_annotations(good, true).valid());

  // edge appurtenance above an endpoint fails strict
  std::vector<Annotation> bad_ea{{{0.9, 0.4}}};
  const AnnotatedGraph bad(g, MembershipKind::plithogenic, va, bad_ea, pd);
  CHECK(validate_annotations(bad, false).valid());
  CHECK(!validate_annotations(bad, true).valid());

  // asymmetric table is flagged unconditionally
  PlithogenicData asym = pd;
  asym.vertex_contradiction[0][1][0] = 0.3;
  const AnnotatedGraph broken(g, MembershipKind::plithogenic, va, ea, asym);
  CHECK(!validate_annotations(broken, false).valid());

  // nonzero diagonal is flagged
  PlithogenicData diag = pd;
  diag.edge_contradiction[0][0][0] = 0.2;
  const AnnotatedGraph broken2(g, MembershipKind::plithogenic, va, ea, diag);
  CHECK(!validate_annotations(broken2, false).valid());

  // edge contradiction above vertex contradiction fails strict only
  PlithogenicData above = pd;
  above.edge_contradiction[0][1][0] = 0.6;
  above.edge_contradiction[1][0][0] = 0.6;
  const AnnotatedGraph crossed(g, MembershipKind::plithogenic, va, ea, above);
  CHECK(validate_annotations(crossed, false).valid());
  CHECK(!validate_annotations(crossed, true).valid());
}

TEST_CASE("pgnn runtime grows roughly linearly in layers and size") {
  // coarse timing check on path graphs: 4x the work should stay well under
  // a quadratic blow-up
  Rng rng(211);
  auto build = [&](std::size_t n) {
    std::vector<std::string> names;
    std::vector<Hyperedge> edges;
    std::vector<Annotation> va, ea;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("p" + std::to_string(i));
      va.push_back({{rng.next_double(), rng.next_double() * 0.3}});
    }
    for (std::size_t v = 0; v + 1 < n; ++v) {
      edges.push_back({{v, v + 1}, 1.0, static_cast<std::int64_t>(v)});
      ea.push_back({{rng.next_double(), rng.next_double() * 0.3}});
    }
    PlithogenicData pd;
    pd.appurtenance_size = 2;
    pd.contradiction_size = 1;
    pd.attribute_values = {"a"};
    pd.vertex_contradiction = {{{0.0}}};
    pd.edge_contradiction = {{{0.0}}};
    pd.vertex_attr.assign(n, 0);
    return AnnotatedGraph(Hypergraph(names, edges),
                          MembershipKind::plithogenic, va, ea, pd);
  };
  RuleSet rules{{UncertainRule{}}};
  auto layer = random_layer(rng, 4, 1, {ActivationKind::relu, 0.01});
  auto time_run = [&](const AnnotatedGraph& g, std::size_t layers_count) {
    const DenseMatrix x =
        testsupport::random_dense(rng, g.graph().vertex_count(), 4);
    std::vector<UncertainLayer> layers(layers_count, layer);
    const auto t0 = std::chrono::steady_clock::now();
    for (int rep = 0; rep < 5; ++rep) pgnn_forward(g, x, rules, layers);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
  };
  const AnnotatedGraph small = build(500);
  const AnnotatedGraph large = build(1000);
  const double t_small = time_run(small, 1);
  const double t_large = time_run(large, 2);  // 4x the work
  CHECK(t_large <= 10.0 * std::max(t_small, 1e-4));
}

TEST_CASE("hesitant annotations validate ranges only") {
  const Hypergraph g({"u", "v"}, {{{0, 1}, 1.0, 0}});
  std::vector<Annotation> va{{{0.2, 0.5, 0.9}}, {{0.3}}};
  std::vector<Annotation> ea{{{0.4, 0.6}}};
  const AnnotatedGraph ag(g, MembershipKind::hesitant, va, ea);
  CHECK(validate_annotations(ag, false).valid());
  std::vector<Annotation> bad{{{0.2, 1.5}}, {{0.3}}};
  CHECK(!validate_annotations(
             AnnotatedGraph(g, MembershipKind::hesitant, bad, ea), false)
             .valid());
}

// ---- fuzzy hypergraphs -------------------------------------------------

TEST_CASE("height and c-cut") {
  FuzzyHypergraph fh({"a", "b"},
                     {{{{0, 0.9}, {1, 0.4}}, 1.0, 0}});
  CHECK(height(fh) == doctest::Approx(0.9));

  const Hypergraph cut = c_cut(fh, 0.5);
  REQUIRE(cut.edge_count() == 1);
  CHECK(cut.vertices() == std::vector<std::string>{"a"});
  CHECK(cut.edge(0).members == std::vector<std::size_t>{0});

  // binary memberships: any level keeps the crisp structure
  FuzzyHypergraph crisp({"a", "b", "c"},
                        {{{{0, 1.0}, {1, 1.0}}, 1.0, 0},
                         {{{2, 1.0}}, 1.0, 1}});
  for (double c : {0.1, 0.5, 1.0}) {
    const Hypergraph hc = c_cut(crisp, c);
    CHECK(hc.vertex_count() == 3);
    CHECK(hc.edge_count() == 2);
  }

  // height of maxima 0.7 and 0.9
  FuzzyHypergraph two({"a", "b"},
                      {{{{0, 0.7}}, 1.0, 0}, {{{1, 0.9}}, 1.0, 1}});
  CHECK(height(two) == doctest::Approx(0.9));

  CHECK_THROWS(c_cut(fh, 0.0));
  CHECK_THROWS(c_cut(fh, 1.5));
}

TEST_CASE("c-cut is monotone in the level") {
  Rng rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<FuzzyEdge> edges;
    for (int j = 0; j < 4; ++j) {
      FuzzyEdge e;
      e.id = j;
      for (std::size_t v = 0; v < 5; ++v)
        if (rng.next_double() < 0.7) e.membership.push_back({v, rng.next_double()});
      edges.push_back(e);
    }
    const FuzzyHypergraph fh({"a", "b", "c", "d", "e"}, edges);
    const double c1 = 0.3, c2 = 0.7;
    const Hypergraph h1 = c_cut(fh, c1);
    const Hypergraph h2 = c_cut(fh, c2);
    // every c2 edge's member set is contained in the matching c1 edge
    for (const auto& e2 : h2.edges()) {
      bool found = false;
      for (const auto& e1 : h1.edges()) {
        if (e1.id != e2.id) continue;
        found = true;
        for (std::size_t m : e2.members) {
          const std::string& name = h2.vertex_name(m);
          bool member_of_e1 = false;
          for (std::size_t m1 : e1.members)
            member_of_e1 = member_of_e1 || h1.vertex_name(m1) == name;
          CHECK(member_of_e1);
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("fuzzy incidence reduces to crisp and degrees are weighted sums") {
  // single edge, mu = (1, 0.5), w = 1: d = (1, 0.5), delta = 1.5
  FuzzyHypergraph fh({"a", "b"}, {{{{0, 1.0}, {1, 0.5}}, 1.0, 0}});
  auto [dv, de] = fuzzy_degrees(fh);
  CHECK(dv.diag() == std::vector<double>{1.0, 0.5});
  CHECK(de.diag() == std::vector<double>{1.5});

  const DenseMatrix lap = fuzzy_laplacian(fh);
  // dense oracle over the fuzzy incidence
  std::vector<std::vector<double>> hf{{1.0}, {0.5}};
  const DenseMatrix want_prop = testsupport::oracle_propagator(hf, {1.0});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(lap.at(i, j) ==
            doctest::Approx((i == j ? 1.0 : 0.0) - want_prop.at(i, j))
                .epsilon(1e-13));

  // binary memberships equal the crisp pipeline exactly
  Rng rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    const Hypergraph h = testsupport::random_hypergraph(rng, 6, 4, 3, false);
    std::vector<FuzzyEdge> fedges;
    for (const auto& e : h.edges()) {
      FuzzyEdge fe;
      fe.weight = e.weight;
      fe.id = e.id;
      for (std::size_t v : e.members) fe.membership.push_back({v, 1.0});
      fedges.push_back(fe);
    }
    const FuzzyHypergraph binary(h.vertices(), fedges);
    CHECK(testsupport::max_abs_diff(fuzzy_laplacian(binary),
                                    normalized_laplacian(h)) == 0.0);

    const DenseMatrix x = testsupport::random_dense(rng, 6, 3);
    LayerParams p;
    p.theta = testsupport::random_dense(rng, 3, 2);
    p.activation = {ActivationKind::relu, 0.01};
    CHECK(testsupport::max_abs_diff(
              fhgnn_convolve(binary, x, p),
              hgnn_convolve(h, x, p)) == 0.0);
  }
}

TEST_CASE("covering flag") {
  FuzzyHypergraph covering({"a", "b"}, {{{{0, 0.5}, {1, 0.2}}, 1.0, 0}});
  CHECK(covering.is_covering());
  FuzzyHypergraph partial({"a", "b"}, {{{{0, 0.5}}, 1.0, 0}});
  CHECK(!partial.is_covering());
}
