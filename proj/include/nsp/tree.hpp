#pragma once

#include <string>
#include <vector>

namespace nsp {

// Plane tree node. For labeled-everywhere trees the label is meaningful on
// all nodes; for leaf-labeled trees internal labels are kept at 0.
struct TreeNode {
  int label = 0;
  std::vector<TreeNode> children;

  bool isLeaf() const { return children.empty(); }
  bool operator==(const TreeNode&) const = default;
};

// Rooted plane tree, every node labeled with a positive integer. Leaves carry
// 1, the root carries the sum of its children's labels, and any other
// internal node carries a label between 1 and that sum.
struct BetaTree {
  TreeNode root;
  bool operator==(const BetaTree&) const = default;
};

// Rooted plane tree with integer labels >= -1 on leaves only. A leaf labeled
// -1 is a free leaf. Validity conditions (root has depth 0):
//   1. each leaf label < depth of its parent;
//   2. each internal node of depth p > 0 has a descendant leaf labeled <= p-2;
//   3. inside one direct sub-tree of a node of depth p, leaves preceding a
//      leaf labeled p carry labels >= p.
struct DecoTree {
  TreeNode root;
  bool operator==(const DecoTree&) const = default;
};

int edgeCount(const TreeNode& t);
int nodeCount(const TreeNode& t);

int rootLabel(const BetaTree& b);
// Number of free leaves.
int flCount(const DecoTree& t);
// Leaf labels in prefix traversal order.
std::vector<int> leafLabels(const TreeNode& t);

std::vector<std::string> validateBeta(const BetaTree& b);
std::vector<std::string> validateDeco(const DecoTree& t);

// Grammar: tree  := "(" INT child+ ")" | "1"     (leaf)
std::string printBeta(const BetaTree& b);
// Grammar: tree  := "(" "*" child+ ")" | INT     (leaf, INT >= -1)
std::string printDeco(const DecoTree& t);

// Both parsers throw std::runtime_error naming the position on bad syntax.
// They check the grammar only; semantic checks live in validate*.
BetaTree parseBeta(const std::string& text);
DecoTree parseDeco(const std::string& text);

}  // namespace nsp
