#ifndef SHX_DECISION_TREE_HPP
#define SHX_DECISION_TREE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace shx {

// Complete binary decision tree over an ordered variable list: every
// internal node tests one variable with a solid (=1) and dashed (=0) child,
// leaves carry the function value. No merging or reduction; leaf count is
// exactly 2^|order|.
struct DecisionNode {
  bool is_leaf = false;
  std::size_t variable = 0;  // internal nodes: index into order
  std::size_t solid = 0;     // child for assignment 1
  std::size_t dashed = 0;    // child for assignment 0
  int value = 0;             // leaves only
};

struct DecisionTree {
  std::vector<std::string> order;
  std::vector<DecisionNode> nodes;
  std::size_t root = 0;
};

inline constexpr std::size_t kMaxDecisionVariables = 20;

// truth_table[i] is the output for the assignment whose bits follow the
// variable order with the first variable as the most significant bit, so
// AND over (x1, x2) is (0, 0, 0, 1).
DecisionTree build_decision_tree(const std::vector<int>& truth_table,
                                 std::vector<std::string> order);

// assignment[i] in {0, 1} for order[i]
int evaluate(const DecisionTree& tree, const std::vector<int>& assignment);

}  // namespace shx

#endif  // SHX_DECISION_TREE_HPP
