#include "shx/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "shx/error.hpp"

namespace shx {

UniformPattern uniform_pattern_of(const Hypergraph& h) {
  UniformPattern p;
  p.vertex_count = h.vertex_count();
  if (h.edge_count() == 0) fail(errc::domain, "pattern must have an edge");
  p.r = h.edge(0).members.size();
  for (const auto& e : h.edges()) {
    if (e.members.size() != p.r)
      fail(errc::domain, "pattern is not uniform");
    p.edges.push_back(e.members);
  }
  if (p.r == 0) fail(errc::domain, "pattern edges must be non-empty");
  return p;
}

namespace {

struct HostView {
  std::size_t n;
  std::set<std::vector<std::size_t>> edge_set;
  std::vector<std::size_t> degree;
};

HostView host_view(const Hypergraph& host, std::size_t r) {
  HostView view;
  view.n = host.vertex_count();
  view.degree.assign(view.n, 0);
  for (const auto& e : host.edges()) {
    if (e.members.size() != r)
      fail(errc::domain, "host is not uniform of the pattern arity");
    view.edge_set.insert(e.members);
    for (std::size_t v : e.members) view.degree[v]++;
  }
  return view;
}

struct Matcher {
  const UniformPattern& pattern;
  const HostView& host;
  std::vector<std::size_t> pattern_degree;
  std::vector<std::size_t> order;            // pattern vertices by degree
  std::vector<std::size_t> image;            // pattern -> host (or npos)
  std::vector<bool> used;                    // host vertex already taken

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit Matcher(const UniformPattern& p, const HostView& h)
      : pattern(p), host(h) {
    pattern_degree.assign(p.vertex_count, 0);
    for (const auto& e : p.edges)
      for (std::size_t v : e) pattern_degree[v]++;
    order.resize(p.vertex_count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (pattern_degree[a] != pattern_degree[b])
        return pattern_degree[a] > pattern_degree[b];
      return a < b;
    });
    image.assign(p.vertex_count, npos);
    used.assign(h.n, false);
  }

  bool edges_consistent() const {
    for (const auto& e : pattern.edges) {
      std::vector<std::size_t> mapped;
      bool complete = true;
      for (std::size_t v : e) {
        if (image[v] == npos) {
          complete = false;
          break;
        }
        mapped.push_back(image[v]);
      }
      if (!complete) continue;
      std::sort(mapped.begin(), mapped.end());
      if (!host.edge_set.count(mapped)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const std::size_t pv = order[depth];
    for (std::size_t hv = 0; hv < host.n; ++hv) {
      if (used[hv]) continue;
      if (host.degree[hv] < pattern_degree[pv]) continue;
      image[pv] = hv;
      used[hv] = true;
      if (edges_consistent() && extend(depth + 1)) return true;
      used[hv] = false;
      image[pv] = npos;
    }
    return false;
  }
};

}  // namespace

bool contains_pattern(const Hypergraph& host, const UniformPattern& pattern) {
  if (pattern.edges.empty()) fail(errc::domain, "pattern must have an edge");
  if (pattern.vertex_count > host.vertex_count()) return false;
  const HostView view = host_view(host, pattern.r);
  if (view.edge_set.size() < pattern.edges.size()) return false;
  Matcher matcher(pattern, view);
  return matcher.extend(0);
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t result = 1;
  for (std::size_t i = 0; i < k; ++i)
    result = result * (n - i) / (i + 1);
  return result;
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t n,
                                                  std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(r);
  std::iota(cur.begin(), cur.end(), 0);
  if (r > n) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Hypergraph graph_of(std::size_t n,
                    const std::vector<std::vector<std::size_t>>& edges) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("u" + std::to_string(i + 1));
  std::vector<Hyperedge> hes;
  std::int64_t id = 0;
  for (const auto& e : edges) hes.push_back({e, 1.0, id++});
  return Hypergraph(std::move(names), std::move(hes));
}

struct TuranSearch {
  std::size_t n;
  const UniformPattern& pattern;
  const std::vector<std::vector<std::size_t>>& slots;
  std::vector<std::vector<std::size_t>> current;
  std::vector<std::vector<std::size_t>> best;

  // a new copy of the pattern must use the edge just added
  bool creates_copy(const std::vector<std::size_t>& added) {
    Hypergraph host = graph_of(n, current);
    if (!contains_pattern(host, pattern)) return false;
    // containment holds; since the prefix was pattern-free the added edge
    // is responsible
    (void)added;
    return true;
  }

  void dfs(std::size_t slot) {
    if (current.size() + (slots.size() - slot) <= best.size()) return;
    if (slot == slots.size()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    // include first so large sets are found early
    current.push_back(slots[slot]);
    if (!creates_copy(slots[slot])) dfs(slot + 1);
    current.pop_back();
    dfs(slot + 1);
  }
};

void check_guard(std::size_t vertex_count, std::size_t r) {
  if (vertex_count > kTuranMaxVertices)
    fail(errc::limit, "vertex count exceeds exhaustive guard (" +
                          std::to_string(kTuranMaxVertices) + ")");
  if (r > kTuranMaxArity)
    fail(errc::limit, "edge arity exceeds exhaustive guard (" +
                          std::to_string(kTuranMaxArity) + ")");
  if (binomial(vertex_count, r) > kTuranMaxEdgeSlots)
    fail(errc::limit, "edge slot count exceeds exhaustive guard (" +
                          std::to_string(kTuranMaxEdgeSlots) + ")");
}

}  // namespace

TuranResult turan_number(std::size_t vertex_count, std::size_t r,
                         const UniformPattern& pattern) {
  check_guard(vertex_count, r);
  if (pattern.r != r) fail(errc::domain, "pattern arity mismatch");
  if (pattern.edges.empty()) fail(errc::domain, "pattern must have an edge");

  const auto slots = all_subsets(vertex_count, r);
  TuranSearch search{vertex_count, pattern, slots, {}, {}};
  search.dfs(0);
  return {search.best.size(), graph_of(vertex_count, search.best)};
}

std::vector<DensityPoint> turan_density_estimate(std::size_t r,
                                                 const UniformPattern& pattern,
                                                 std::size_t n_min,
                                                 std::size_t n_max) {
  if (n_min > n_max) fail(errc::domain, "empty density range");
  std::vector<DensityPoint> out;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const TuranResult res = turan_number(n, r, pattern);
    const std::size_t total = binomial(n, r);
    out.push_back({n, res.max_edges,
                   total == 0 ? 0.0
                              : static_cast<double>(res.max_edges) /
                                    static_cast<double>(total)});
  }
  return out;
}

}  // namespace shx
