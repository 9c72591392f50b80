#include "nsp/tree.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nsp {

int edgeCount(const TreeNode& t) {
  int n = 0;
  for (const auto& c : t.children) n += 1 + edgeCount(c);
  return n;
}

int nodeCount(const TreeNode& t) { return edgeCount(t) + 1; }

int rootLabel(const BetaTree& b) { return b.root.label; }

int flCount(const DecoTree& t) {
  int n = 0;
  for (int v : leafLabels(t.root))
    if (v == -1) ++n;
  return n;
}

std::vector<int> leafLabels(const TreeNode& t) {
  std::vector<int> out;
  auto rec = [&](auto&& self, const TreeNode& n) -> void {
    if (n.isLeaf()) {
      out.push_back(n.label);
      return;
    }
    for (const auto& c : n.children) self(self, c);
  };
  rec(rec, t);
  return out;
}

namespace {

// Preorder index of each node, used to name offenders in violation messages.
void validateBetaRec(const TreeNode& n, bool isRoot, int& idx, std::vector<std::string>& out) {
  int me = idx++;
  if (n.isLeaf()) {
    if (n.label != 1)
      out.push_back("beta: leaf label != 1 at node " + std::to_string(me));
    return;
  }
  int sum = 0;
  for (const auto& c : n.children) sum += c.label;
  if (isRoot) {
    if (n.label != sum)
      out.push_back("beta: root label != sum of children at node " + std::to_string(me));
  } else if (n.label < 1 || n.label > sum) {
    out.push_back("beta: internal label outside [1, children sum] at node " + std::to_string(me));
  }
  for (const auto& c : n.children) validateBetaRec(c, false, idx, out);
}

struct DecoCheck {
  std::vector<std::string> out;

  // Returns the multiset of descendant leaf labels (as a min is enough, the
  // minimum label of a descendant leaf).
  int minLeaf(const TreeNode& n) {
    if (n.isLeaf()) return n.label;
    int m = minLeaf(n.children.front());
    for (size_t i = 1; i < n.children.size(); ++i)
      m = std::min(m, minLeaf(n.children[i]));
    return m;
  }

  void rec(const TreeNode& n, int depth, int& idx) {
    int me = idx++;
    if (n.isLeaf()) {
      if (n.label < -1)
        out.push_back("deco: leaf label below -1 at node " + std::to_string(me));
      return;
    }
    if (depth > 0 && minLeaf(n) > depth - 2)
      out.push_back("deco condition 2 at node " + std::to_string(me));
    for (const auto& sub : n.children) {
      // Condition 3 for direct sub-tree `sub` of n (depth of n is `depth`):
      // once a leaf labeled < depth appears, no later leaf may equal depth.
      bool seenBelow = false;
      for (int v : leafLabels(sub)) {
        if (v == depth && seenBelow) {
          out.push_back("deco condition 3 at node " + std::to_string(me));
          break;
        }
        if (v < depth) seenBelow = true;
      }
    }
    for (const auto& c : n.children) {
      if (c.isLeaf() && c.label >= depth)
        out.push_back("deco condition 1 at node " + std::to_string(idx));
      rec(c, depth + 1, idx);
    }
  }
};

}  // namespace

std::vector<std::string> validateBeta(const BetaTree& b) {
  std::vector<std::string> out;
  if (b.root.isLeaf()) {
    out.push_back("beta: tree has no edge");
    return out;
  }
  int idx = 0;
  validateBetaRec(b.root, true, idx, out);
  return out;
}

std::vector<std::string> validateDeco(const DecoTree& t) {
  if (t.root.isLeaf()) return {"deco: tree has no edge"};
  DecoCheck ck;
  int idx = 0;
  ck.rec(t.root, 0, idx);
  return ck.out;
}

namespace {

void printBetaRec(const TreeNode& n, std::string& out) {
  if (n.isLeaf()) {
    out += "1";
    return;
  }
  out += "(" + std::to_string(n.label);
  for (const auto& c : n.children) {
    out += " ";
    printBetaRec(c, out);
  }
  out += ")";
}

void printDecoRec(const TreeNode& n, std::string& out) {
  if (n.isLeaf()) {
    out += std::to_string(n.label);
    return;
  }
  out += "(*";
  for (const auto& c : n.children) {
    out += " ";
    printDecoRec(c, out);
  }
  out += ")";
}

struct Parser {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what);
  }

  void skipWs() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  char peek() {
    skipWs();
    if (pos >= s.size()) fail("unexpected end of input");
    return s[pos];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  int parseInt() {
    skipWs();
    size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (s[start] == '-' && pos == start + 1)) {
      pos = start;
      fail("expected integer");
    }
    return std::stoi(s.substr(start, pos - start));
  }

  TreeNode parseBetaNode() {
    if (peek() == '(') {
      ++pos;
      TreeNode n;
      n.label = parseInt();
      while (peek() != ')') n.children.push_back(parseBetaNode());
      ++pos;
      if (n.children.empty()) fail("internal node needs at least one child");
      return n;
    }
    int v = parseInt();
    if (v != 1) fail("leaf must be 1");
    return TreeNode{1, {}};
  }

  TreeNode parseDecoNode() {
    if (peek() == '(') {
      ++pos;
      if (peek() != '*') fail("expected '*'");
      ++pos;
      TreeNode n;
      while (peek() != ')') n.children.push_back(parseDecoNode());
      ++pos;
      if (n.children.empty()) fail("internal node needs at least one child");
      return n;
    }
    int v = parseInt();
    return TreeNode{v, {}};
  }

  void end() {
    skipWs();
    if (pos != s.size()) fail("trailing input");
  }
};

}  // namespace

std::string printBeta(const BetaTree& b) {
  std::string out;
  printBetaRec(b.root, out);
  return out;
}

std::string printDeco(const DecoTree& t) {
  std::string out;
  printDecoRec(t.root, out);
  return out;
}

BetaTree parseBeta(const std::string& text) {
  Parser p{text};
  BetaTree b{p.parseBetaNode()};
  p.end();
  return b;
}

DecoTree parseDeco(const std::string& text) {
  Parser p{text};
  DecoTree t{p.parseDecoNode()};
  p.end();
  return t;
}

}  // namespace nsp
