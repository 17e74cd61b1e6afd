#include "shx/random_walk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "shx/error.hpp"
#include "shx/rng.hpp"

namespace shx {

namespace {

// shared construction over an abstract membership structure: edge j lists
// the state indices it contains
TransitionKernel build_kernel(std::vector<std::string> states,
                              const std::vector<std::vector<std::size_t>>& edges,
                              const std::vector<double>& weights,
                              VertexSelection sel,
                              const SelectionWeights& gamma,
                              DanglingPolicy dangling) {
  const std::size_t n = states.size();
  const std::size_t m = edges.size();

  // resolve named gamma entries onto the member lists; missing entries are 1
  std::vector<std::vector<double>> member_gamma(m);
  if (sel == VertexSelection::weighted) {
    for (std::size_t j = 0; j < m; ++j) {
      member_gamma[j].assign(edges[j].size(), 1.0);
      if (j >= gamma.size()) continue;
      for (const auto& [name, g] : gamma[j]) {
        if (!(g > 0.0))
          fail(errc::domain, "selection weight must be positive");
        bool matched = false;
        for (std::size_t k = 0; k < edges[j].size(); ++k)
          if (states[edges[j][k]] == name) {
            member_gamma[j][k] = g;
            matched = true;
          }
        if (!matched)
          fail(errc::domain,
               "selection weight names a state outside edge " +
                   std::to_string(j) + ": " + name);
      }
    }
  }

  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t v : edges[j]) incident[v].push_back(j);

  DenseMatrix p(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    double total_weight = 0.0;
    for (std::size_t j : incident[v]) total_weight += weights[j];
    if (incident[v].empty() || total_weight <= 0.0) {
      if (dangling == DanglingPolicy::error)
        fail(errc::domain, "dangling state: " + states[v]);
      p.at(v, v) = 1.0;
      continue;
    }
    for (std::size_t j : incident[v]) {
      if (weights[j] <= 0.0) continue;
      const double edge_prob = weights[j] / total_weight;
      const auto& members = edges[j];
      if (sel == VertexSelection::uniform) {
        const double vp = 1.0 / static_cast<double>(members.size());
        for (std::size_t u : members) p.at(v, u) += edge_prob * vp;
      } else {
        double gsum = 0.0;
        for (double g : member_gamma[j]) gsum += g;
        for (std::size_t k = 0; k < members.size(); ++k)
          p.at(v, members[k]) += edge_prob * (member_gamma[j][k] / gsum);
      }
    }
  }
  return {std::move(states), std::move(p)};
}

}  // namespace

TransitionKernel transition_kernel(const Hypergraph& h, VertexSelection sel,
                                   const SelectionWeights& gamma,
                                   DanglingPolicy dangling) {
  std::vector<std::vector<std::size_t>> edges;
  edges.reserve(h.edge_count());
  std::vector<double> weights;
  for (const auto& e : h.edges()) {
    edges.push_back(e.members);
    weights.push_back(e.weight);
  }
  return build_kernel(h.vertices(), edges, weights, sel, gamma, dangling);
}

TransitionKernel transition_kernel(const SuperHyperGraph& shg,
                                   VertexSelection sel,
                                   const SelectionWeights& gamma,
                                   DanglingPolicy dangling) {
  std::vector<NestedElement> canon;
  std::vector<std::string> states;
  canon.reserve(shg.supervertices().size());
  for (const auto& sv : shg.supervertices()) {
    canon.push_back(canonicalize(sv));
    states.push_back(canon.back().to_text());
  }
  for (std::size_t i = 0; i < canon.size(); ++i)
    for (std::size_t j = i + 1; j < canon.size(); ++j)
      if (structurally_equal(canon[i], canon[j]))
        fail(errc::domain, "duplicate supervertex: " + states[i]);

  auto state_of = [&](const NestedElement& e) -> std::size_t {
    const NestedElement c = canonicalize(e);
    for (std::size_t i = 0; i < canon.size(); ++i)
      if (structurally_equal(canon[i], c)) return i;
    fail(errc::domain, "superedge member is not a supervertex: " + c.to_text());
  };

  std::vector<std::vector<std::size_t>> edges;
  std::vector<double> weights;
  for (const auto& se : shg.superedges()) {
    std::vector<std::size_t> members;
    members.reserve(se.members.size());
    for (const auto& m : se.members) members.push_back(state_of(m));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    edges.push_back(std::move(members));
    weights.push_back(se.weight);
  }
  return build_kernel(std::move(states), edges, weights, sel, gamma, dangling);
}

std::vector<std::size_t> simulate(const TransitionKernel& kernel,
                                  const WalkConfig& cfg) {
  const std::size_t n = kernel.states.size();
  if (cfg.start_state >= n) fail(errc::domain, "start state out of range");
  Rng rng(cfg.seed);
  std::vector<std::size_t> path;
  path.reserve(cfg.steps + 1);
  std::size_t cur = cfg.start_state;
  path.push_back(cur);
  for (std::size_t step = 0; step < cfg.steps; ++step) {
    const double r = rng.next_double();
    double cum = 0.0;
    std::size_t next = n - 1;
    for (std::size_t u = 0; u < n; ++u) {
      cum += kernel.matrix.at(cur, u);
      if (cum > r) {
        next = u;
        break;
      }
    }
    cur = next;
    path.push_back(cur);
  }
  return path;
}

namespace {

// Tarjan strong components of the positive-entry digraph, iterative.
std::size_t strong_component_count(const DenseMatrix& p) {
  const std::size_t n = p.rows();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  int next_index = 0;
  std::size_t components = 0;

  struct Frame {
    std::size_t v;
    std::size_t next_child;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      bool descended = false;
      std::size_t u = f.next_child;
      for (; u < n; ++u) {
        if (p.at(f.v, u) <= 0.0) continue;
        if (index[u] == -1) {
          f.next_child = u + 1;
          index[u] = low[u] = next_index++;
          stack.push_back(u);
          on_stack[u] = true;
          call.push_back({u, 0});
          descended = true;
          break;
        }
        if (on_stack[u]) low[f.v] = std::min(low[f.v], index[u]);
      }
      if (descended) continue;
      const std::size_t v = f.v;  // scan exhausted, retire the frame
      if (low[v] == index[v]) {
        ++components;
        while (true) {
          const std::size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          if (w == v) break;
        }
      }
      call.pop_back();
      if (!call.empty())
        low[call.back().v] = std::min(low[call.back().v], low[v]);
    }
  }
  return components;
}

// Period of an irreducible chain: gcd over positive transitions (u, v) of
// depth(u) + 1 - depth(v) on a BFS tree from state 0.
std::size_t chain_period(const DenseMatrix& p) {
  const std::size_t n = p.rows();
  std::vector<long long> depth(n, -1);
  std::vector<std::size_t> queue{0};
  depth[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t v = queue[head];
    for (std::size_t u = 0; u < n; ++u) {
      if (p.at(v, u) <= 0.0 || depth[u] != -1) continue;
      depth[u] = depth[v] + 1;
      queue.push_back(u);
    }
  }
  long long g = 0;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u)
      if (p.at(v, u) > 0.0)
        g = std::gcd(g, std::llabs(depth[v] + 1 - depth[u]));
  return g == 0 ? 1 : static_cast<std::size_t>(g);
}

}  // namespace

std::vector<double> stationary(const TransitionKernel& kernel, double tol,
                               std::size_t max_iters) {
  const std::size_t n = kernel.states.size();
  if (n == 0) fail(errc::domain, "empty kernel");
  if (strong_component_count(kernel.matrix) != 1)
    fail(errc::domain, "chain is reducible");
  if (chain_period(kernel.matrix) != 1)
    fail(errc::domain, "chain is periodic");

  std::vector<double> pi(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n, 0.0);
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u = 0; u < n; ++u)
        next[u] += pi[v] * kernel.matrix.at(v, u);
    double norm = 0.0;
    for (double x : next) norm += x;
    for (double& x : next) x /= norm;
    double residual = 0.0;
    for (std::size_t u = 0; u < n; ++u) residual += std::abs(next[u] - pi[u]);
    pi.swap(next);
    if (residual <= tol) {
      // report the residual of the returned iterate itself
      std::fill(next.begin(), next.end(), 0.0);
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u = 0; u < n; ++u)
          next[u] += pi[v] * kernel.matrix.at(v, u);
      double check = 0.0;
      for (std::size_t u = 0; u < n; ++u) check += std::abs(next[u] - pi[u]);
      if (check <= tol) return pi;
    }
  }
  fail(errc::domain, "power iteration did not converge");
}

}  // namespace shx
