#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "shx/partition.hpp"
#include "support.hpp"

using namespace shx;

namespace {

// every balanced assignment, brute force
double exhaustive_cut_optimum(const Hypergraph& h, int k, double c,
                              PartitionObjective obj) {
  const std::size_t n = h.vertex_count();
  const auto lower = static_cast<long long>(
      std::ceil(static_cast<double>(n) / (static_cast<double>(k) * c)));
  const auto upper = static_cast<long long>(
      std::floor(c * static_cast<double>(n) / static_cast<double>(k)));
  double best = HUGE_VAL;
  std::vector<int> assign(n, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= k;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    std::vector<long long> sizes(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      assign[i] = static_cast<int>(rest % k);
      sizes[assign[i]]++;
      rest /= k;
    }
    bool ok = true;
    for (long long s : sizes) ok = ok && s >= lower && s <= upper;
    if (!ok) continue;
    const Partition p{assign, k, c};
    const double value =
        obj == PartitionObjective::cut ? cut_objective(h, p)
                                       : soed_objective(h, p);
    best = std::min(best, value);
  }
  return best;
}

}  // namespace

TEST_CASE("objective values") {
  const Hypergraph h({"a", "b", "c", "d"},
                     {{{0, 1}, 1.0, 0}, {{0, 1, 2}, 1.0, 1}, {{}, 1.0, 2}});
  // everything in one part: all objectives zero
  Partition single{{0, 0, 0, 0}, 1, 1.0};
  CHECK(cut_objective(h, single) == 0.0);
  CHECK(soed_objective(h, single) == 0.0);

  // split {a,b} | {c,d}: edge 0 inside, edge 1 spans 2, empty edge ignored
  Partition split{{0, 0, 1, 1}, 2, 1.0};
  CHECK(cut_objective(h, split) == 1.0);
  CHECK(soed_objective(h, split) == 2.0);

  // weighted variant needs 2-uniform edges
  const Hypergraph pairs({"a", "b", "c"},
                         {{{0, 1}, 2.0, 0}, {{1, 2}, 3.0, 1}});
  Partition wsplit{{0, 1, 1}, 2, 1.0};
  CHECK(weighted_cut(pairs, wsplit) == 2.0);
  CHECK_THROWS(weighted_cut(h, split));
}

TEST_CASE("clustering example reproduces inter-cluster weight 4") {
  // V = {A..E}, w(AB)=1 w(AC)=2 w(BC)=2 w(BD)=1 w(CE)=3,
  // C1 = {A,B,C}, C2 = {D,E}
  const Hypergraph g({"A", "B", "C", "D", "E"},
                     {{{0, 1}, 1.0, 0},
                      {{0, 2}, 2.0, 1},
                      {{1, 2}, 2.0, 2},
                      {{1, 3}, 1.0, 3},
                      {{2, 4}, 3.0, 4}});
  const Partition p{{0, 0, 0, 1, 1}, 2, 1.0};
  CHECK(weighted_cut(g, p) == 4.0);
}

TEST_CASE("coarsening merges the heavy pair and conserves weight") {
  const Hypergraph h({"a", "b", "c", "d"},
                     {{{0, 1}, 10.0, 0}, {{2, 3}, 8.0, 1}, {{1, 2}, 0.5, 2}});
  const CoarseLevel level = coarsen(h);
  CHECK(level.coarse.vertex_count() == 2);
  // vertex weight conserved
  int total = 0;
  for (int w : level.coarse_vertex_weight) total += w;
  CHECK(total == 4);
  // heavy pairs collapsed together
  CHECK(level.fine_to_coarse[0] == level.fine_to_coarse[1]);
  CHECK(level.fine_to_coarse[2] == level.fine_to_coarse[3]);
  // edge weight conserved per image
  double coarse_weight = 0.0;
  for (const auto& e : level.coarse.edges()) coarse_weight += e.weight;
  CHECK(coarse_weight == doctest::Approx(18.5));

  // edgeless graphs cannot shrink
  const Hypergraph lonely({"a", "b", "c"}, {});
  const CoarseLevel unchanged = coarsen(lonely);
  CHECK(unchanged.coarse.vertex_count() == 3);
}

TEST_CASE("two disjoint triangles split with zero cut") {
  const Hypergraph h({"a", "b", "c", "d", "e", "f"},
                     {{{0, 1}, 1.0, 0},
                      {{1, 2}, 1.0, 1},
                      {{0, 2}, 1.0, 2},
                      {{3, 4}, 1.0, 3},
                      {{4, 5}, 1.0, 4},
                      {{3, 5}, 1.0, 5}});
  const PartitionResult result =
      multilevel_partition(h, 2, 1.0, 11, PartitionObjective::cut);
  CHECK(result.objective == 0.0);
  CHECK(result.partition.assignment[0] == result.partition.assignment[1]);
  CHECK(result.partition.assignment[0] == result.partition.assignment[2]);
  CHECK(result.partition.assignment[3] == result.partition.assignment[4]);
  CHECK(result.partition.assignment[0] != result.partition.assignment[3]);
}

TEST_CASE("worked example with k = 3 and c = 1 forces singletons") {
  const Hypergraph h({"x1", "x2", "x3"},
                     {{{0, 1, 2}, 1.0, 0}, {{0, 2}, 1.0, 1}});
  const PartitionResult result =
      multilevel_partition(h, 3, 1.0, 5, PartitionObjective::cut);
  std::set<int> parts(result.partition.assignment.begin(),
                      result.partition.assignment.end());
  CHECK(parts.size() == 3);
  CHECK(result.objective == 3.0);  // w1 * 2 + w2 * 1
}

TEST_CASE("multilevel matches the exhaustive optimum on most seeds") {
  Rng rng(131);
  int optimal = 0;
  const int trials = 50;
  for (int trial = 0; trial < trials; ++trial) {
    const Hypergraph h = testsupport::random_hypergraph(rng, 8, 5, 4);
    const double best = exhaustive_cut_optimum(h, 2, 1.2,
                                               PartitionObjective::cut);
    const PartitionResult result = multilevel_partition(
        h, 2, 1.2, 1000 + static_cast<std::uint64_t>(trial),
        PartitionObjective::cut);
    CHECK(result.objective >= best - 1e-12);  // never below the true optimum
    if (result.objective <= best + 1e-12) ++optimal;

    // balance bound
    std::vector<int> sizes(2, 0);
    for (int a : result.partition.assignment) sizes[a]++;
    for (int s : sizes) {
      CHECK(s >= 4);  // ceil(8 / 2.4)
      CHECK(s <= 4);  // floor(1.2 * 8 / 2)
    }

    // refinement monotone per pass
    for (std::size_t i = 1; i < result.pass_objectives.size(); ++i)
      CHECK(result.pass_objectives[i] <= result.pass_objectives[i - 1] + 1e-12);

    // independent per-edge span recount of the reported objective
    double recount = 0.0;
    for (const auto& e : h.edges()) {
      std::set<int> parts_touched;
      for (std::size_t v : e.members)
        parts_touched.insert(result.partition.assignment[v]);
      if (parts_touched.size() > 1)
        recount += e.weight * static_cast<double>(parts_touched.size() - 1);
    }
    CHECK(result.objective == doctest::Approx(recount));
  }
  CHECK(optimal >= 40);  // >= 80% of instances
}

TEST_CASE("soed objective runs through the same machinery") {
  Rng rng(137);
  for (int trial = 0; trial < 10; ++trial) {
    const Hypergraph h = testsupport::random_hypergraph(rng, 8, 5, 4);
    const double best =
        exhaustive_cut_optimum(h, 2, 1.2, PartitionObjective::soed);
    const PartitionResult result = multilevel_partition(
        h, 2, 1.2, 99 + static_cast<std::uint64_t>(trial),
        PartitionObjective::soed);
    CHECK(result.objective >= best - 1e-12);
    CHECK(result.objective ==
          doctest::Approx(soed_objective(h, result.partition)));
  }
}

TEST_CASE("infeasible and degenerate partition requests") {
  const Hypergraph h({"a", "b", "c"}, {{{0, 1}, 1.0, 0}});
  CHECK_THROWS(multilevel_partition(h, 4, 1.0, 1, PartitionObjective::cut));
  CHECK_THROWS(multilevel_partition(h, 2, 1.0, 1, PartitionObjective::cut));
  CHECK_THROWS(multilevel_partition(h, 2, 0.5, 1, PartitionObjective::cut));
  // k = 2, c = 1.5: bounds [1, 2] work for 3 vertices
  const PartitionResult ok =
      multilevel_partition(h, 2, 1.5, 1, PartitionObjective::cut);
  CHECK(ok.partition.k == 2);
}

TEST_CASE("larger instance stays balanced and monotone") {
  Rng rng(139);
  const Hypergraph h = testsupport::random_hypergraph(rng, 60, 45, 5, false);
  const PartitionResult result =
      multilevel_partition(h, 4, 1.1, 7, PartitionObjective::cut);
  std::vector<int> sizes(4, 0);
  for (int a : result.partition.assignment) sizes[a]++;
  for (int s : sizes) {
    CHECK(s >= std::ceil(60.0 / (4 * 1.1)));
    CHECK(s <= std::floor(1.1 * 60.0 / 4));
  }
  for (std::size_t i = 1; i < result.pass_objectives.size(); ++i)
    CHECK(result.pass_objectives[i] <= result.pass_objectives[i - 1] + 1e-12);
}

TEST_CASE("singleton superhypergraph partitioning equals the flat one") {
  Rng rng(149);
  for (int trial = 0; trial < 10; ++trial) {
    const Hypergraph h = testsupport::random_hypergraph(rng, 9, 6, 4);
    const SuperHyperGraph shg = testsupport::singleton_shg(h);
    const PartitionResult flat =
        multilevel_partition(h, 3, 1.5, 42, PartitionObjective::cut);
    const PartitionResult super =
        multilevel_partition(shg, 3, 1.5, 42, PartitionObjective::cut);
    CHECK(flat.partition.assignment == super.partition.assignment);
    CHECK(flat.objective == super.objective);
  }
}

TEST_CASE("spectral clustering separates components exactly") {
  const Hypergraph h({"a", "b", "c", "d"},
                     {{{0, 1}, 1.0, 0}, {{2, 3}, 1.0, 1}});
  const Partition p = ncut_spectral(h, 2, 3);
  CHECK(p.assignment[0] == p.assignment[1]);
  CHECK(p.assignment[2] == p.assignment[3]);
  CHECK(p.assignment[0] != p.assignment[2]);

  // complete triangle with one cluster
  const Hypergraph tri({"a", "b", "c"},
                       {{{0, 1}, 1.0, 0}, {{1, 2}, 1.0, 1}, {{0, 2}, 1.0, 2}});
  const Partition single = ncut_spectral(tri, 1, 3);
  CHECK(single.assignment == std::vector<int>{0, 0, 0});
}

TEST_CASE("spectral clustering cuts the barbell bridge") {
  const Hypergraph barbell({"a", "b", "c", "d", "e", "f"},
                           {{{0, 1}, 1.0, 0},
                            {{1, 2}, 1.0, 1},
                            {{0, 2}, 1.0, 2},
                            {{3, 4}, 1.0, 3},
                            {{4, 5}, 1.0, 4},
                            {{3, 5}, 1.0, 5},
                            {{2, 3}, 1.0, 6}});
  const Partition p = ncut_spectral(barbell, 2, 17);
  CHECK(p.assignment[0] == p.assignment[1]);
  CHECK(p.assignment[1] == p.assignment[2]);
  CHECK(p.assignment[3] == p.assignment[4]);
  CHECK(p.assignment[4] == p.assignment[5]);
  CHECK(p.assignment[0] != p.assignment[3]);

  // the returned clustering attains the exhaustive NCut minimum here
  double best = HUGE_VAL;
  for (int code = 1; code < 63; ++code) {
    std::vector<int> assign(6);
    for (int i = 0; i < 6; ++i) assign[i] = (code >> i) & 1;
    best = std::min(best, ncut_value(barbell, {assign, 2, 1.0}));
  }
  CHECK(ncut_value(barbell, p) == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("ncut of spectral clustering is near the exhaustive optimum") {
  Rng rng(151);
  int close = 0;
  const int trials = 20;
  for (int trial = 0; trial < trials; ++trial) {
    // connected random instances on 8 vertices
    const Hypergraph h = testsupport::random_connected_hypergraph(rng, 8, 4, 3);
    const Partition p = ncut_spectral(h, 2, 500 + trial);
    double best = HUGE_VAL;
    for (int code = 1; code < 255; ++code) {
      std::vector<int> assign(8);
      for (int i = 0; i < 8; ++i) assign[i] = (code >> i) & 1;
      bool both = false, any0 = false, any1 = false;
      for (int a : assign) {
        any0 = any0 || a == 0;
        any1 = any1 || a == 1;
      }
      both = any0 && any1;
      if (!both) continue;
      best = std::min(best, ncut_value(h, {assign, 2, 1.0}));
    }
    if (ncut_value(h, p) <= 1.1 * best + 1e-12) ++close;
  }
  CHECK(close >= 16);  // >= 80%
}

TEST_CASE("degree centrality on the worked example") {
  const SuperHyperGraph shg = testsupport::example_shg();
  const auto c = degree_centrality(shg);
  CHECK(c == std::vector<double>{2.0, 1.0, 2.0});

  // doubling weights doubles centrality; isolated vertices score zero
  std::vector<Superedge> heavier = shg.superedges();
  for (auto& e : heavier) e.weight *= 2.0;
  const SuperHyperGraph doubled(shg.base_vertices(), shg.level(),
                                shg.supervertices(), heavier);
  const auto c2 = degree_centrality(doubled);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(c2[i] == 2.0 * c[i]);

  const SuperHyperGraph lonely({"a"}, 0, {NestedElement::leaf("a")}, {});
  CHECK(degree_centrality(lonely) == std::vector<double>{0.0});
}
