#include "shx/nested_element.hpp"

#include <algorithm>
#include <set>

namespace shx {

NestedElement NestedElement::leaf(std::string name) {
  NestedElement e;
  e.is_leaf_ = true;
  e.name_ = std::move(name);
  e.rank_ = 0;
  return e;
}

NestedElement NestedElement::set(std::vector<NestedElement> children) {
  NestedElement e;
  e.is_leaf_ = false;
  e.children_ = std::move(children);
  int max_child = -1;
  for (const auto& c : e.children_) max_child = std::max(max_child, c.rank());
  e.rank_ = 1 + std::max(max_child, 0);
  if (e.children_.empty()) e.rank_ = 1;
  return e;
}

std::string NestedElement::to_text() const {
  if (is_leaf_) return name_;
  const NestedElement canon = canonicalize(*this);
  std::string out = "(";
  for (std::size_t i = 0; i < canon.children_.size(); ++i) {
    if (i > 0) out += ",";
    out += canon.children_[i].to_text();
  }
  out += ")";
  return out;
}

bool structurally_less(const NestedElement& a, const NestedElement& b) {
  if (a.is_leaf_ != b.is_leaf_) return a.is_leaf_;  // leaves sort first
  if (a.is_leaf_) return a.name_ < b.name_;
  const std::size_t n = std::min(a.children_.size(), b.children_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (structurally_less(a.children_[i], b.children_[i])) return true;
    if (structurally_less(b.children_[i], a.children_[i])) return false;
  }
  return a.children_.size() < b.children_.size();
}

bool structurally_equal(const NestedElement& a, const NestedElement& b) {
  if (a.is_leaf_ != b.is_leaf_) return false;
  if (a.is_leaf_) return a.name_ == b.name_;
  if (a.children_.size() != b.children_.size()) return false;
  for (std::size_t i = 0; i < a.children_.size(); ++i)
    if (!structurally_equal(a.children_[i], b.children_[i])) return false;
  return true;
}

NestedElement canonicalize(const NestedElement& e) {
  if (e.is_leaf()) return e;
  std::vector<NestedElement> children;
  children.reserve(e.children().size());
  for (const auto& c : e.children()) children.push_back(canonicalize(c));
  std::sort(children.begin(), children.end(),
            [](const NestedElement& a, const NestedElement& b) {
              return structurally_less(a, b);
            });
  children.erase(std::unique(children.begin(), children.end(),
                             [](const NestedElement& a, const NestedElement& b) {
                               return structurally_equal(a, b);
                             }),
                 children.end());
  return NestedElement::set(std::move(children));
}

namespace {

void collect_leaves(const NestedElement& e, std::set<std::string>& out) {
  if (e.is_leaf()) {
    out.insert(e.name());
    return;
  }
  for (const auto& c : e.children()) collect_leaves(c, out);
}

}  // namespace

std::vector<std::string> expand_element(const NestedElement& e) {
  std::set<std::string> names;
  collect_leaves(e, names);
  return {names.begin(), names.end()};
}

}  // namespace shx
