#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace serre::dsl {

/// Ordered key/value tree. A node is either a leaf holding a string or a
/// branch holding keyed children in insertion order.
class ReportNode {
 public:
  ReportNode() = default;
  explicit ReportNode(std::string value) : leaf_(true), value_(std::move(value)) {}

  bool is_leaf() const { return leaf_; }
  const std::string& value() const { return value_; }
  const std::vector<std::pair<std::string, ReportNode>>& entries() const { return children_; }
  bool empty() const { return !leaf_ && children_.empty(); }

  /// Appends a leaf; keys may not contain '.', ':' or whitespace.
  ReportNode& set(const std::string& key, std::string value);
  ReportNode& set(const std::string& key, bool value) { return set(key, std::string(value ? "true" : "false")); }
  ReportNode& set(const std::string& key, int value) { return set(key, std::to_string(value)); }
  ReportNode& set(const std::string& key, std::size_t value) { return set(key, std::to_string(value)); }
  ReportNode& set(const std::string& key, const char* value) { return set(key, std::string(value)); }
  /// Branch child under `key`, created on first use.
  ReportNode& child(const std::string& key);
  /// Branch child keyed by the next list index (1-based).
  ReportNode& append_child();
  /// Leaf keyed by the next list index (1-based).
  void append(std::string value);

  const ReportNode* find(const std::string& dotted) const;

  bool operator==(const ReportNode&) const = default;

 private:
  bool leaf_ = false;
  std::string value_;
  std::vector<std::pair<std::string, ReportNode>> children_;
};

/// "format: 1" header followed by one "dotted.path: value" line per leaf.
std::string to_machine(const ReportNode& root);
/// Inverse of to_machine; throws std::runtime_error on malformed input.
ReportNode parse_machine(std::string_view text);

/// Indented human-readable dump.
std::string to_text(const ReportNode& node, int indent = 0);

}  // namespace serre::dsl
