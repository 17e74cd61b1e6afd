#ifndef SHX_NESTED_ELEMENT_HPP
#define SHX_NESTED_ELEMENT_HPP

#include <string>
#include <vector>

namespace shx {

// An element of the n-th iterated power set over named base vertices:
// either a leaf (a base vertex name, rank 0) or a finite set of nested
// elements (rank = 1 + max child rank; the empty set has rank 1).
//
// Canonical form sorts set children by the structural order below and
// removes structural duplicates, recursively. Structural order:
//   - leaves before sets;
//   - leaf vs leaf: byte order of names;
//   - set vs set: lexicographic over (canonical) children, shorter prefix
//     first, so {x1} sorts before {x1, x2}.
class NestedElement {
 public:
  static NestedElement leaf(std::string name);
  static NestedElement set(std::vector<NestedElement> children);

  bool is_leaf() const { return is_leaf_; }
  const std::string& name() const { return name_; }
  const std::vector<NestedElement>& children() const { return children_; }
  int rank() const { return rank_; }

  // Deterministic text form: leaves print their name, sets print
  // "(child,child,...)" over canonical children. Used for state naming
  // and debug output.
  std::string to_text() const;

  friend bool structurally_less(const NestedElement& a, const NestedElement& b);
  friend bool structurally_equal(const NestedElement& a, const NestedElement& b);

 private:
  NestedElement() = default;

  bool is_leaf_ = false;
  std::string name_;
  std::vector<NestedElement> children_;
  int rank_ = 0;
};

bool structurally_less(const NestedElement& a, const NestedElement& b);
bool structurally_equal(const NestedElement& a, const NestedElement& b);

// Idempotent; structurally equal inputs map to identical outputs; rank is
// preserved (duplicates never carry the maximum alone).
NestedElement canonicalize(const NestedElement& e);

// Recursive expansion to the set of reachable leaf names, sorted by byte
// order. expand(leaf v) = {v}; the empty set expands to the empty set.
std::vector<std::string> expand_element(const NestedElement& e);

}  // namespace shx

#endif  // SHX_NESTED_ELEMENT_HPP
