#include "serre/dsl/report.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace serre::dsl {

namespace {

void check_key(const std::string& key) {
  if (key.empty()) throw std::invalid_argument("empty report key");
  for (char c : key) {
    if (c == '.' || c == ':' || std::isspace(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bad report key '" + key + "'");
    }
  }
}

std::string escape(const std::string& v) {
  std::string out;
  for (char c : v) {
    if (c == '\\') out += "\\\\";
    else if (c == '\n') out += "\\n";
    else out += c;
  }
  return out;
}

std::string unescape(std::string_view v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != '\\') {
      out += v[i];
      continue;
    }
    if (i + 1 == v.size()) throw std::runtime_error("dangling escape in report value");
    char n = v[++i];
    if (n == 'n') out += '\n';
    else if (n == '\\') out += '\\';
    else throw std::runtime_error("unknown escape in report value");
  }
  return out;
}

void flatten(const ReportNode& node, const std::string& prefix, std::string& out) {
  for (const auto& [key, child] : node.entries()) {
    std::string path = prefix.empty() ? key : prefix + "." + key;
    if (child.is_leaf()) {
      out += path + ": " + escape(child.value()) + "\n";
    } else {
      flatten(child, path, out);
    }
  }
}

}  // namespace

ReportNode& ReportNode::set(const std::string& key, std::string value) {
  check_key(key);
  if (leaf_) throw std::logic_error("cannot add children to a leaf");
  for (auto& [k, v] : children_) {
    if (k == key) {
      v = ReportNode(std::move(value));
      return *this;
    }
  }
  children_.emplace_back(key, ReportNode(std::move(value)));
  return *this;
}

ReportNode& ReportNode::child(const std::string& key) {
  check_key(key);
  if (leaf_) throw std::logic_error("cannot add children to a leaf");
  for (auto& [k, v] : children_) {
    if (k == key) {
      if (v.is_leaf()) throw std::logic_error("report key '" + key + "' is a leaf");
      return v;
    }
  }
  children_.emplace_back(key, ReportNode());
  return children_.back().second;
}

ReportNode& ReportNode::append_child() { return child(std::to_string(children_.size() + 1)); }

void ReportNode::append(std::string value) { set(std::to_string(children_.size() + 1), std::move(value)); }

const ReportNode* ReportNode::find(const std::string& dotted) const {
  const ReportNode* cur = this;
  std::size_t start = 0;
  while (cur) {
    std::size_t dot = dotted.find('.', start);
    std::string key = dotted.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    const ReportNode* next = nullptr;
    for (const auto& [k, v] : cur->children_) {
      if (k == key) next = &v;
    }
    cur = next;
    if (dot == std::string::npos) return cur;
    start = dot + 1;
  }
  return nullptr;
}

std::string to_machine(const ReportNode& root) {
  std::string out = "format: 1\n";
  flatten(root, "", out);
  return out;
}

ReportNode parse_machine(std::string_view text) {
  ReportNode root;
  bool header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    std::size_t colon = line.find(": ");
    if (colon == std::string_view::npos) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": missing ': ' separator");
    }
    std::string path(line.substr(0, colon));
    std::string value = unescape(line.substr(colon + 2));
    if (!header) {
      if (path != "format" || value != "1") throw std::runtime_error("missing 'format: 1' header");
      header = true;
      continue;
    }
    ReportNode* cur = &root;
    std::size_t start = 0;
    while (true) {
      std::size_t dot = path.find('.', start);
      if (dot == std::string::npos) {
        cur->set(path.substr(start), value);
        break;
      }
      cur = &cur->child(path.substr(start, dot - start));
      start = dot + 1;
    }
  }
  if (!header) throw std::runtime_error("missing 'format: 1' header");
  return root;
}

std::string to_text(const ReportNode& node, int indent) {
  std::string out;
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, child] : node.entries()) {
    if (child.is_leaf()) {
      out += pad + key + ": " + child.value() + "\n";
    } else {
      out += pad + key + ":\n" + to_text(child, indent + 2);
    }
  }
  return out;
}

}  // namespace serre::dsl
