#include "shx/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "shx/error.hpp"
#include "shx/kmeans.hpp"
#include "shx/rng.hpp"
#include "shx/spectral.hpp"

namespace shx {

namespace {

std::size_t spanned_parts(const Hyperedge& e, const std::vector<int>& assign,
                          int k) {
  std::vector<bool> seen(k, false);
  std::size_t count = 0;
  for (std::size_t v : e.members) {
    if (!seen[assign[v]]) {
      seen[assign[v]] = true;
      ++count;
    }
  }
  return count;
}

void check_cover(const Hypergraph& h, const Partition& p) {
  if (p.assignment.size() != h.vertex_count())
    fail(errc::domain, "partition does not cover every vertex");
  for (int a : p.assignment)
    if (a < 0 || a >= p.k) fail(errc::domain, "part index out of range");
}

}  // namespace

double cut_objective(const Hypergraph& h, const Partition& p) {
  check_cover(h, p);
  double total = 0.0;
  for (const auto& e : h.edges()) {
    const std::size_t spanned = spanned_parts(e, p.assignment, p.k);
    if (spanned > 1) total += e.weight * static_cast<double>(spanned - 1);
  }
  return total;
}

double soed_objective(const Hypergraph& h, const Partition& p) {
  check_cover(h, p);
  double total = 0.0;
  for (const auto& e : h.edges()) {
    const std::size_t spanned = spanned_parts(e, p.assignment, p.k);
    if (spanned > 1) total += e.weight * static_cast<double>(spanned);
  }
  return total;
}

double weighted_cut(const Hypergraph& h, const Partition& p) {
  check_cover(h, p);
  double total = 0.0;
  for (const auto& e : h.edges()) {
    if (e.members.size() != 2)
      fail(errc::domain, "weighted cut requires a 2-uniform hypergraph");
    if (p.assignment[e.members[0]] != p.assignment[e.members[1]])
      total += e.weight;
  }
  return total;
}

double ncut_value(const Hypergraph& h, const Partition& p) {
  check_cover(h, p);
  auto [dv, de] = degrees(h);
  double total = 0.0;
  for (int part = 0; part < p.k; ++part) {
    double vol = 0.0;
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
      if (p.assignment[v] == part) vol += dv.at(v);
    double cut = 0.0;
    for (const auto& e : h.edges()) {
      if (e.members.empty()) continue;
      std::size_t inside = 0;
      for (std::size_t v : e.members)
        if (p.assignment[v] == part) ++inside;
      const std::size_t outside = e.members.size() - inside;
      cut += e.weight * static_cast<double>(inside) *
             static_cast<double>(outside) /
             static_cast<double>(e.members.size());
    }
    if (vol > 0.0) total += cut / vol;
  }
  return total;
}

namespace {

struct WeightedLevel {
  Hypergraph hg;
  std::vector<int> vweight;
  std::vector<std::size_t> fine_to_coarse;  // from the previous level
};

// heavy-edge matching on star weights w(e) / (|e| - 1), ties to the lowest
// index
WeightedLevel coarsen_weighted(const Hypergraph& h,
                               const std::vector<int>& vweight) {
  const std::size_t n = h.vertex_count();
  std::map<std::pair<std::size_t, std::size_t>, double> pair_weight;
  for (const auto& e : h.edges()) {
    if (e.members.size() < 2) continue;
    const double star =
        e.weight / static_cast<double>(e.members.size() - 1);
    for (std::size_t a = 0; a < e.members.size(); ++a)
      for (std::size_t b = a + 1; b < e.members.size(); ++b)
        pair_weight[{e.members[a], e.members[b]}] += star;
  }

  std::vector<std::vector<std::pair<std::size_t, double>>> nbrs(n);
  for (const auto& [pr, w] : pair_weight) {
    nbrs[pr.first].push_back({pr.second, w});
    nbrs[pr.second].push_back({pr.first, w});
  }

  std::vector<std::size_t> match(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (match[v] != n) continue;
    std::size_t best = n;
    double best_w = 0.0;
    for (const auto& [u, w] : nbrs[v]) {
      if (match[u] != n || u == v) continue;
      if (w > best_w || (w == best_w && best != n && u < best)) {
        best_w = w;
        best = u;
      }
    }
    if (best != n) {
      match[v] = best;
      match[best] = v;
    }
  }

  std::vector<std::size_t> fine_to_coarse(n, n);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (fine_to_coarse[v] != n) continue;
    fine_to_coarse[v] = next;
    if (match[v] != n) fine_to_coarse[match[v]] = next;
    ++next;
  }

  std::vector<std::string> coarse_names(next);
  std::vector<int> coarse_weight(next, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t cv = fine_to_coarse[v];
    if (coarse_names[cv].empty())
      coarse_names[cv] = "c" + std::to_string(cv);
    coarse_weight[cv] += vweight[v];
  }

  // images with identical member sets merge, weights summed
  std::map<std::vector<std::size_t>, double> merged;
  for (const auto& e : h.edges()) {
    std::vector<std::size_t> image;
    image.reserve(e.members.size());
    for (std::size_t v : e.members) image.push_back(fine_to_coarse[v]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    merged[image] += e.weight;
  }
  std::vector<Hyperedge> coarse_edges;
  std::int64_t id = 0;
  for (const auto& [members, w] : merged)
    coarse_edges.push_back({members, w, id++});

  return {Hypergraph(std::move(coarse_names), std::move(coarse_edges)),
          std::move(coarse_weight), std::move(fine_to_coarse)};
}

struct Bounds {
  long long lower;
  long long upper;
};

Bounds balance_bounds(std::size_t n, int k, double c) {
  const double nn = static_cast<double>(n);
  const auto lower =
      static_cast<long long>(std::ceil(nn / (static_cast<double>(k) * c)));
  const auto upper =
      static_cast<long long>(std::floor(c * nn / static_cast<double>(k)));
  return {lower, upper};
}

double objective_of(const Hypergraph& h, const std::vector<int>& assign,
                    int k, PartitionObjective obj) {
  Partition p{assign, k, 1.0};
  return obj == PartitionObjective::cut ? cut_objective(h, p)
                                        : soed_objective(h, p);
}

// refinement state: per-edge part occupancy counts
struct Occupancy {
  std::vector<std::vector<int>> counts;  // edge -> part -> members

  Occupancy(const Hypergraph& h, const std::vector<int>& assign, int k) {
    counts.assign(h.edge_count(), std::vector<int>(k, 0));
    for (std::size_t j = 0; j < h.edge_count(); ++j)
      for (std::size_t v : h.edge(j).members) counts[j][assign[v]]++;
  }

  std::size_t spanned(std::size_t j) const {
    std::size_t s = 0;
    for (int c : counts[j])
      if (c > 0) ++s;
    return s;
  }
};

double move_delta(const Hypergraph& h,
                  const std::vector<std::vector<std::size_t>>& incident,
                  Occupancy& occ, std::size_t v, int from, int to,
                  PartitionObjective obj) {
  double delta = 0.0;
  for (std::size_t j : incident[v]) {
    const auto& cnt = occ.counts[j];
    const std::size_t before = occ.spanned(j);
    std::size_t after = before;
    if (cnt[from] == 1) --after;
    if (cnt[to] == 0) ++after;
    const double w = h.edge(j).weight;
    if (obj == PartitionObjective::cut) {
      const double b = before > 1 ? w * static_cast<double>(before - 1) : 0.0;
      const double a = after > 1 ? w * static_cast<double>(after - 1) : 0.0;
      delta += a - b;
    } else {
      const double b = before > 1 ? w * static_cast<double>(before) : 0.0;
      const double a = after > 1 ? w * static_cast<double>(after) : 0.0;
      delta += a - b;
    }
  }
  return delta;
}

void apply_move(const std::vector<std::vector<std::size_t>>& incident,
                Occupancy& occ, std::vector<int>& assign, std::size_t v,
                int to) {
  const int from = assign[v];
  for (std::size_t j : incident[v]) {
    occ.counts[j][from]--;
    occ.counts[j][to]++;
  }
  assign[v] = to;
}

// total distance from the balance window
long long imbalance_excess(const std::vector<long long>& part_weight,
                           const Bounds& b) {
  long long excess = 0;
  for (long long w : part_weight) {
    if (w > b.upper) excess += w - b.upper;
    if (w < b.lower) excess += b.lower - w;
  }
  return excess;
}

// moves that strictly shrink the balance violation, cheapest objective
// damage first; stops when balanced or stuck
void rebalance(const Hypergraph& h,
               const std::vector<std::vector<std::size_t>>& incident,
               Occupancy& occ, std::vector<int>& assign,
               const std::vector<int>& vweight,
               std::vector<long long>& part_weight, const Bounds& b, int k,
               PartitionObjective obj) {
  while (true) {
    const long long current = imbalance_excess(part_weight, b);
    if (current == 0) return;
    bool found = false;
    double best_delta = std::numeric_limits<double>::infinity();
    std::size_t best_v = 0;
    int best_to = 0;
    long long best_excess = current;
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
      const int from = assign[v];
      for (int to = 0; to < k; ++to) {
        if (to == from) continue;
        part_weight[from] -= vweight[v];
        part_weight[to] += vweight[v];
        const long long next = imbalance_excess(part_weight, b);
        part_weight[from] += vweight[v];
        part_weight[to] -= vweight[v];
        if (next >= current) continue;
        const double delta = move_delta(h, incident, occ, v, from, to, obj);
        if (next < best_excess ||
            (next == best_excess && delta < best_delta)) {
          best_excess = next;
          best_delta = delta;
          best_v = v;
          best_to = to;
          found = true;
        }
      }
    }
    if (!found) return;
    part_weight[assign[best_v]] -= vweight[best_v];
    part_weight[best_to] += vweight[best_v];
    apply_move(incident, occ, assign, best_v, best_to);
  }
}

// one FM pass: locked single-vertex moves by gain, rollback to the best
// prefix whose balance is no worse than the pass start. The window is
// relaxed by twice the heaviest vertex during the pass so paired moves
// (swaps) are reachable under tight bounds. Returns the objective after
// the pass.
double fm_pass(const Hypergraph& h,
               const std::vector<std::vector<std::size_t>>& incident,
               std::vector<int>& assign, const std::vector<int>& vweight,
               std::vector<long long>& part_weight, const Bounds& b, int k,
               PartitionObjective obj, double start_objective) {
  Occupancy occ(h, assign, k);
  std::vector<bool> locked(h.vertex_count(), false);
  struct Move {
    std::size_t v;
    int from;
    int to;
  };
  std::vector<Move> moves;
  double current = start_objective;
  double best = start_objective;
  std::size_t best_prefix = 0;
  const long long start_excess = imbalance_excess(part_weight, b);
  long long heaviest = 0;
  for (int w : vweight) heaviest = std::max<long long>(heaviest, w);
  const long long allowed_excess = std::max(start_excess, 2 * heaviest);

  while (true) {
    bool found = false;
    double best_gain = -std::numeric_limits<double>::infinity();
    long long best_excess = 0;
    std::size_t best_v = 0;
    int best_to = 0;
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
      if (locked[v]) continue;
      const int from = assign[v];
      for (int to = 0; to < k; ++to) {
        if (to == from) continue;
        part_weight[from] -= vweight[v];
        part_weight[to] += vweight[v];
        const long long next = imbalance_excess(part_weight, b);
        part_weight[from] += vweight[v];
        part_weight[to] -= vweight[v];
        if (next > allowed_excess) continue;
        const double gain = -move_delta(h, incident, occ, v, from, to, obj);
        if (!found || gain > best_gain + 1e-12 ||
            (gain > best_gain - 1e-12 && next < best_excess)) {
          best_gain = gain;
          best_excess = next;
          best_v = v;
          best_to = to;
          found = true;
        }
      }
    }
    if (!found) break;
    const int from = assign[best_v];
    part_weight[from] -= vweight[best_v];
    part_weight[best_to] += vweight[best_v];
    apply_move(incident, occ, assign, best_v, best_to);
    moves.push_back({best_v, from, best_to});
    locked[best_v] = true;
    current -= best_gain;
    if (imbalance_excess(part_weight, b) <= start_excess &&
        current < best - 1e-12) {
      best = current;
      best_prefix = moves.size();
    }
  }

  // rollback past the best balance-respecting prefix
  for (std::size_t i = moves.size(); i > best_prefix; --i) {
    const Move& m = moves[i - 1];
    part_weight[m.to] -= vweight[m.v];
    part_weight[m.from] += vweight[m.v];
    apply_move(incident, occ, assign, m.v, m.from);
  }
  return best;
}

std::vector<int> initial_partition(const Hypergraph& h,
                                   const std::vector<int>& vweight, int k,
                                   const Bounds& b, std::uint64_t seed) {
  const std::size_t n = h.vertex_count();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i)
    std::swap(order[i - 1], order[rng.next_below(i)]);

  std::vector<int> assign(n, -1);
  std::vector<long long> part_weight(k, 0);
  for (int p = 0; p < k && static_cast<std::size_t>(p) < n; ++p) {
    assign[order[p]] = p;
    part_weight[p] += vweight[order[p]];
  }

  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t j = 0; j < h.edge_count(); ++j)
    for (std::size_t v : h.edge(j).members) incident[v].push_back(j);

  for (std::size_t idx = k; idx < n; ++idx) {
    const std::size_t v = order[idx];
    double best_affinity = -1.0;
    int best_part = -1;
    for (int p = 0; p < k; ++p) {
      if (part_weight[p] + vweight[v] > b.upper) continue;
      double affinity = 0.0;
      for (std::size_t j : incident[v]) {
        bool touches = false;
        for (std::size_t u : h.edge(j).members)
          if (assign[u] == p) {
            touches = true;
            break;
          }
        if (touches) affinity += h.edge(j).weight;
      }
      if (affinity > best_affinity) {
        best_affinity = affinity;
        best_part = p;
      }
    }
    if (best_part < 0) {
      long long lightest = std::numeric_limits<long long>::max();
      for (int p = 0; p < k; ++p)
        if (part_weight[p] < lightest) {
          lightest = part_weight[p];
          best_part = p;
        }
    }
    assign[v] = best_part;
    part_weight[best_part] += vweight[v];
  }
  return assign;
}

}  // namespace

CoarseLevel coarsen(const Hypergraph& h) {
  if (h.vertex_count() < 2) fail(errc::domain, "nothing to coarsen");
  const std::vector<int> unit(h.vertex_count(), 1);
  WeightedLevel level = coarsen_weighted(h, unit);
  const auto floor_size = static_cast<std::size_t>(
      std::ceil(0.6 * static_cast<double>(h.vertex_count())));
  if (level.hg.vertex_count() > floor_size) {
    // coarsening floor: return unchanged
    std::vector<std::size_t> identity(h.vertex_count());
    std::iota(identity.begin(), identity.end(), 0);
    return {h, std::move(identity), unit};
  }
  return {std::move(level.hg), std::move(level.fine_to_coarse),
          std::move(level.vweight)};
}

PartitionResult multilevel_partition(const Hypergraph& h, int k, double c,
                                     std::uint64_t seed,
                                     PartitionObjective objective) {
  const std::size_t n = h.vertex_count();
  if (k < 1) fail(errc::domain, "part count must be positive");
  if (static_cast<std::size_t>(k) > n)
    fail(errc::domain, "part count exceeds vertex count");
  if (c < 1.0) fail(errc::domain, "imbalance factor must be >= 1");
  const Bounds bounds = balance_bounds(n, k, c);
  if (static_cast<long long>(k) * bounds.lower > static_cast<long long>(n) ||
      static_cast<long long>(k) * bounds.upper < static_cast<long long>(n))
    fail(errc::domain, "infeasible balance constraint");

  // coarsening chain down to max(2k, 20) vertices
  std::vector<WeightedLevel> levels;
  levels.push_back({h, std::vector<int>(n, 1), {}});
  const std::size_t coarsest_target =
      std::max<std::size_t>(2 * static_cast<std::size_t>(k), 20);
  while (levels.back().hg.vertex_count() > coarsest_target) {
    WeightedLevel next =
        coarsen_weighted(levels.back().hg, levels.back().vweight);
    if (next.hg.vertex_count() >= levels.back().hg.vertex_count()) break;
    levels.push_back(std::move(next));
  }

  PartitionResult result;
  const WeightedLevel& coarsest = levels.back();
  std::vector<int> assign =
      initial_partition(coarsest.hg, coarsest.vweight, k, bounds, seed);

  for (std::size_t li = levels.size(); li > 0; --li) {
    const WeightedLevel& level = levels[li - 1];
    const Hypergraph& hg = level.hg;
    std::vector<std::vector<std::size_t>> incident(hg.vertex_count());
    for (std::size_t j = 0; j < hg.edge_count(); ++j)
      for (std::size_t v : hg.edge(j).members) incident[v].push_back(j);
    std::vector<long long> part_weight(k, 0);
    for (std::size_t v = 0; v < hg.vertex_count(); ++v)
      part_weight[assign[v]] += level.vweight[v];

    {
      Occupancy occ(hg, assign, k);
      rebalance(hg, incident, occ, assign, level.vweight, part_weight, bounds,
                k, objective);
    }

    double current = objective_of(hg, assign, k, objective);
    result.pass_objectives.push_back(current);
    while (true) {
      const double after = fm_pass(hg, incident, assign, level.vweight,
                                   part_weight, bounds, k, objective, current);
      result.pass_objectives.push_back(after);
      if (after >= current - 1e-12) break;
      current = after;
    }

    if (li > 1) {
      // project to the next finer level
      const std::vector<std::size_t>& map = level.fine_to_coarse;
      const Hypergraph& finer = levels[li - 2].hg;
      std::vector<int> fine_assign(finer.vertex_count());
      for (std::size_t v = 0; v < finer.vertex_count(); ++v)
        fine_assign[v] = assign[map[v]];
      assign = std::move(fine_assign);
    }
  }

  // the returned partition satisfies the bounds or the run aborts
  std::vector<long long> final_weight(k, 0);
  for (std::size_t v = 0; v < n; ++v) final_weight[assign[v]] += 1;
  for (int p = 0; p < k; ++p)
    if (final_weight[p] < bounds.lower || final_weight[p] > bounds.upper)
      fail(errc::domain, "balance constraint unsatisfied after refinement");
  for (int p = 0; p < k; ++p)
    if (final_weight[p] == 0) fail(errc::domain, "empty part in result");

  result.partition = {std::move(assign), k, c};
  result.objective = objective_of(h, result.partition.assignment, k, objective);
  return result;
}

PartitionResult multilevel_partition(const SuperHyperGraph& shg, int k,
                                     double c, std::uint64_t seed,
                                     PartitionObjective objective) {
  return multilevel_partition(expand(shg), k, c, seed, objective);
}

Partition ncut_spectral(const Hypergraph& h, int k, std::uint64_t seed) {
  const std::size_t n = h.vertex_count();
  constexpr std::size_t kEigenCap = 512;
  if (n > kEigenCap)
    fail(errc::limit, "spectral clustering cap exceeded");
  if (k < 1 || static_cast<std::size_t>(k) > n)
    fail(errc::domain, "cluster count out of range");

  const EigenDecomposition eig = symmetric_eigen(normalized_laplacian(h));
  DenseMatrix embed(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (int c = 0; c < k; ++c) embed.at(i, c) = eig.vectors.at(i, c);
  // unit-normalize rows so components separate cleanly
  for (std::size_t i = 0; i < n; ++i) {
    double norm = 0.0;
    for (int c = 0; c < k; ++c) norm += embed.at(i, c) * embed.at(i, c);
    norm = std::sqrt(norm);
    if (norm > 0.0)
      for (int c = 0; c < k; ++c) embed.at(i, c) /= norm;
  }

  // several k-means restarts from one seeded stream; keep the clustering
  // with the lowest NCut value
  Rng rng(seed);
  Partition best;
  double best_value = std::numeric_limits<double>::infinity();
  for (int restart = 0; restart < 8; ++restart) {
    const KMeansResult km = kmeans(embed, k, 100, rng);
    Partition candidate{km.assignment, k, 1.0};
    const double value = ncut_value(h, candidate);
    if (value < best_value) {
      best_value = value;
      best = std::move(candidate);
    }
  }
  return best;
}

std::vector<double> degree_centrality(const SuperHyperGraph& shg) {
  auto [dv, de] = degrees(expand(shg));
  return dv.diag();
}

}  // namespace shx
