#include "shx/decision_tree.hpp"

#include "shx/error.hpp"

namespace shx {

namespace {

std::size_t build_range(DecisionTree& tree, const std::vector<int>& table,
                        std::size_t depth, std::size_t lo, std::size_t hi) {
  if (depth == tree.order.size()) {
    DecisionNode leaf;
    leaf.is_leaf = true;
    leaf.value = table[lo];
    tree.nodes.push_back(leaf);
    return tree.nodes.size() - 1;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const std::size_t dashed = build_range(tree, table, depth + 1, lo, mid);
  const std::size_t solid = build_range(tree, table, depth + 1, mid, hi);
  DecisionNode node;
  node.variable = depth;
  node.solid = solid;
  node.dashed = dashed;
  tree.nodes.push_back(node);
  return tree.nodes.size() - 1;
}

}  // namespace

DecisionTree build_decision_tree(const std::vector<int>& truth_table,
                                 std::vector<std::string> order) {
  if (order.empty()) fail(errc::domain, "variable order must not be empty");
  if (order.size() > kMaxDecisionVariables)
    fail(errc::limit, "too many decision variables");
  const std::size_t expected = std::size_t{1} << order.size();
  if (truth_table.size() != expected)
    fail(errc::domain, "truth table length must be 2^|order|");

  DecisionTree tree;
  tree.order = std::move(order);
  tree.nodes.reserve(2 * expected);
  tree.root = build_range(tree, truth_table, 0, 0, expected);
  return tree;
}

int evaluate(const DecisionTree& tree, const std::vector<int>& assignment) {
  if (assignment.size() != tree.order.size())
    fail(errc::domain, "assignment length mismatch");
  std::size_t cur = tree.root;
  while (!tree.nodes[cur].is_leaf) {
    const DecisionNode& node = tree.nodes[cur];
    const int bit = assignment[node.variable];
    if (bit != 0 && bit != 1) fail(errc::domain, "assignment bits must be 0/1");
    cur = bit == 1 ? node.solid : node.dashed;
  }
  return tree.nodes[cur].value;
}

}  // namespace shx
