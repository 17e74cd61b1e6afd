#include <set>

#include "doctest.h"
#include "shx/nested_element.hpp"
#include "shx/superhypergraph.hpp"
#include "support.hpp"

using namespace shx;

TEST_CASE("canonicalize leaves and flat sets") {
  const auto leaf = NestedElement::leaf("x1");
  CHECK(structurally_equal(canonicalize(leaf), leaf));

  // {x2, x1, x1} -> {x1, x2}
  const auto messy = NestedElement::set({NestedElement::leaf("x2"),
                                         NestedElement::leaf("x1"),
                                         NestedElement::leaf("x1")});
  const auto canon = canonicalize(messy);
  REQUIRE(canon.children().size() == 2);
  CHECK(canon.children()[0].name() == "x1");
  CHECK(canon.children()[1].name() == "x2");
}

TEST_CASE("canonicalize sorts nested sets with the shorter prefix first") {
  // {{x2, x1}, {x1}} -> {{x1}, {x1, x2}}
  const auto inner_a = NestedElement::set({NestedElement::leaf("x2"),
                                           NestedElement::leaf("x1")});
  const auto inner_b = NestedElement::set({NestedElement::leaf("x1")});
  const auto canon = canonicalize(NestedElement::set({inner_a, inner_b}));
  REQUIRE(canon.children().size() == 2);
  CHECK(canon.children()[0].children().size() == 1);
  CHECK(canon.children()[1].children().size() == 2);
  CHECK(canon.to_text() == "((x1),(x1,x2))");
}

TEST_CASE("canonicalize is idempotent and preserves rank") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto shg = testsupport::random_nested_shg(rng, 5, 4);
    for (const auto& sv : shg.supervertices()) {
      const auto once = canonicalize(sv);
      const auto twice = canonicalize(once);
      CHECK(structurally_equal(once, twice));
      CHECK(once.rank() == sv.rank());
    }
  }
}

TEST_CASE("canonical structural equality is an equivalence relation") {
  Rng rng(19);
  std::vector<NestedElement> pool;
  for (int i = 0; i < 12; ++i) {
    const auto shg = testsupport::random_nested_shg(rng, 4, 2);
    pool.push_back(canonicalize(shg.supervertices()[rng.next_below(4)]));
  }
  for (const auto& a : pool) CHECK(structurally_equal(a, a));
  for (const auto& a : pool)
    for (const auto& b : pool) {
      CHECK(structurally_equal(a, b) == structurally_equal(b, a));
      // trichotomy with the structural order
      const int relations = (structurally_less(a, b) ? 1 : 0) +
                            (structurally_less(b, a) ? 1 : 0) +
                            (structurally_equal(a, b) ? 1 : 0);
      CHECK(relations == 1);
    }
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& c : pool)
        if (structurally_equal(a, b) && structurally_equal(b, c))
          CHECK(structurally_equal(a, c));
}

TEST_CASE("ranks") {
  CHECK(NestedElement::leaf("a").rank() == 0);
  CHECK(NestedElement::set({}).rank() == 1);
  CHECK(NestedElement::set({NestedElement::leaf("a")}).rank() == 1);
  CHECK(NestedElement::set({NestedElement::set({NestedElement::leaf("a")})})
            .rank() == 2);
}

TEST_CASE("expand_element base cases") {
  CHECK(expand_element(NestedElement::leaf("x1")) ==
        std::vector<std::string>{"x1"});
  CHECK(expand_element(NestedElement::set({})).empty());

  // {{x1, x2}, {x3}} -> {x1, x2, x3}
  const auto element = NestedElement::set(
      {NestedElement::set({NestedElement::leaf("x1"),
                           NestedElement::leaf("x2")}),
       NestedElement::set({NestedElement::leaf("x3")})});
  CHECK(expand_element(element) ==
        std::vector<std::string>{"x1", "x2", "x3"});

  // level-2 edge {{{x1},{x2}},{{x3}}}
  const auto deep = NestedElement::set(
      {NestedElement::set(
           {NestedElement::set({NestedElement::leaf("x1")}),
            NestedElement::set({NestedElement::leaf("x2")})}),
       NestedElement::set({NestedElement::set({NestedElement::leaf("x3")})})});
  CHECK(expand_element(deep) == std::vector<std::string>{"x1", "x2", "x3"});
}

TEST_CASE("expanding the worked example") {
  const auto shg = testsupport::example_shg();
  const Hypergraph h = expand(shg);
  CHECK(h.vertices() == std::vector<std::string>{"x1", "x2", "x3"});
  REQUIRE(h.edge_count() == 2);
  CHECK(h.edge(0).members == std::vector<std::size_t>{0, 1, 2});
  CHECK(h.edge(1).members == std::vector<std::size_t>{0, 2});
  CHECK(h.edge(0).id == 0);
  CHECK(h.edge(1).id == 1);
}

TEST_CASE("expansion keeps parallel superedges distinct") {
  auto shg = testsupport::example_shg();
  std::vector<Superedge> edges = shg.superedges();
  edges.push_back(edges[0]);
  edges.back().id = 2;
  const SuperHyperGraph doubled(shg.base_vertices(), shg.level(),
                                shg.supervertices(), std::move(edges));
  const Hypergraph h = expand(doubled);
  CHECK(h.edge_count() == 3);
  CHECK(h.edge(2).members == h.edge(0).members);
}

TEST_CASE("expansion of a leaf-only graph reproduces the hypergraph") {
  Rng rng(11);
  const Hypergraph h = testsupport::random_hypergraph(rng, 6, 5, 4);
  const Hypergraph round = expand(as_superhypergraph(h));
  CHECK(round.vertices() == h.vertices());
  REQUIRE(round.edge_count() == h.edge_count());
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    CHECK(round.edge(j).members == h.edge(j).members);
    CHECK(round.edge(j).weight == h.edge(j).weight);
  }
}

TEST_CASE("expand_element of a superedge equals the union over members") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto shg = testsupport::random_nested_shg(rng, 6, 4);
    for (const auto& se : shg.superedges()) {
      std::set<std::string> unioned;
      for (const auto& member : se.members)
        for (const auto& name : expand_element(member)) unioned.insert(name);
      const auto whole =
          expand_element(NestedElement::set(se.members));
      CHECK(std::vector<std::string>(unioned.begin(), unioned.end()) == whole);
    }
  }
}

TEST_CASE("validate flags rank, leaf and weight violations") {
  const auto shg = testsupport::example_shg();
  CHECK(validate(shg).valid());

  // rank-2 element in a level-1 graph
  const auto nested = NestedElement::set(
      {NestedElement::set({NestedElement::leaf("x1")})});
  SuperHyperGraph bad_rank({"x1"}, 1, {nested}, {});
  const auto rank_report = validate(bad_rank);
  REQUIRE(rank_report.violations.size() == 1);
  CHECK(rank_report.violations[0].code == Violation::Code::rank_exceeds_level);
  CHECK(rank_report.violations[0].where == "/supervertices/0");

  // unknown leaf inside a superedge member
  Superedge stray;
  stray.members = {NestedElement::set({NestedElement::leaf("x1")}),
                   NestedElement::set({NestedElement::leaf("x9")})};
  SuperHyperGraph bad_leaf({"x1"}, 1, {}, {stray});
  const auto leaf_report = validate(bad_leaf);
  REQUIRE(leaf_report.violations.size() == 1);
  CHECK(leaf_report.violations[0].where == "/superedges/0/members/1/0");

  // negative weight
  Superedge heavy;
  heavy.members = {NestedElement::leaf("x1")};
  heavy.weight = -1.0;
  SuperHyperGraph bad_weight({"x1"}, 1, {}, {heavy});
  const auto weight_report = validate(bad_weight);
  REQUIRE(weight_report.violations.size() == 1);
  CHECK(weight_report.violations[0].code == Violation::Code::negative_weight);
}

TEST_CASE("hyperedge count is preserved by expansion") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto shg = testsupport::random_nested_shg(rng, 5, 7);
    CHECK(expand(shg).edge_count() == shg.superedges().size());
  }
}
