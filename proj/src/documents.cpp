#include "craigtab/documents.hpp"

#include <cctype>
#include <sstream>

#include "craigtab/errors.hpp"
#include "craigtab/parse.hpp"
#include "craigtab/print.hpp"

namespace craigtab {

namespace {

void write_node(const TableauNode& n, std::size_t depth, std::string& out) {
  out.append(2 * (depth - 1), ' ');
  out += to_string(*n.literal);
  if (n.side) {
    out += " [";
    out += side_char(*n.side);
    out += ']';
  }
  if (n.target_depth) out += " {->" + std::to_string(*n.target_depth) + "}";
  out += '\n';
  for (const TableauNode& c : n.children) write_node(c, depth + 1, out);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool skippable(std::string_view line) {
  std::string_view t = trim(line);
  return t.empty() || t.front() == '%';
}

}  // namespace

std::string write_tableau(const Tableau& t) {
  std::string out = "tableau\n";
  for (const TableauNode& c : t.root.children) write_node(c, 1, out);
  return out;
}

bool looks_like_tableau(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    return trim(line) == "tableau";
  }
  return false;
}

Tableau read_tableau(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  Tableau t;
  // Stack of the most recent node at each depth; index 0 is the root.
  std::vector<TableauNode*> stack{&t.root};
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    if (!header) {
      if (trim(line) != "tableau") throw ParseError("expected 'tableau' header", lineno, 1);
      header = true;
      continue;
    }
    std::size_t indent = 0;
    while (indent < line.size() && line[indent] == ' ') ++indent;
    if (indent % 2 != 0) throw ParseError("indentation must be a multiple of two", lineno, 1);
    std::size_t depth = indent / 2 + 1;
    if (depth > stack.size()) throw ParseError("node indented too deeply", lineno, indent + 1);

    std::string_view body = trim(std::string_view(line).substr(indent));
    TableauNode node;
    if (!body.empty() && body.back() == '}') {
      std::size_t open = body.rfind("{->");
      if (open == std::string_view::npos) {
        throw ParseError("malformed target annotation", lineno, indent + 1);
      }
      std::string digits(body.substr(open + 3, body.size() - open - 4));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("malformed target depth", lineno, indent + open + 1);
      }
      node.target_depth = std::stoul(digits);
      body = trim(body.substr(0, open));
    }
    if (body.size() >= 3 && body.back() == ']' && body[body.size() - 3] == '[') {
      char s = body[body.size() - 2];
      if (s != 'F' && s != 'G') throw ParseError("side must be F or G", lineno, indent + 1);
      node.side = s == 'F' ? Side::F : Side::G;
      body = trim(body.substr(0, body.size() - 3));
    }
    try {
      node.literal = parse_literal(body);
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad literal: ") + e.what(), lineno, indent + 1);
    }
    stack.resize(depth);
    TableauNode* parent = stack.back();
    parent->children.push_back(std::move(node));
    stack.push_back(&parent->children.back());
  }
  if (!header) throw ParseError("empty tableau document", lineno, 1);
  return t;
}

}  // namespace craigtab
