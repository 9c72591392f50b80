#include "nsp/bijections.hpp"

#include <stdexcept>

namespace nsp {

Obj transport(const Obj& x, Cls to, Scheme scheme) {
  if (clsOf(x) == to) return x;
  DecompStep s = decompose(x, scheme);
  if (s.kind == DecompStep::Base) return baseObject(to);
  DecompStep t{s.kind, s.i, {}};
  for (const auto& p : s.parts) t.parts.push_back(transport(p, to, scheme));
  return compose(t, to, scheme);
}

DecoTree mapToDeco(const RootedMap& m) {
  auto errs = validateMap(m);
  if (!errs.empty()) throw std::invalid_argument("mapToDeco: " + errs.front());
  auto vid = vertexIds(m);
  std::vector<int> depth(vertexCount(m), -2);  // -2 marks unvisited
  std::vector<char> used(m.E, 0);
  depth[vid[m.root]] = -1;
  depth[vid[alphaDart(m.root)]] = 0;
  used[m.root / 2] = 1;
  // Explore the vertex entered through dart `a`, scanning its other darts
  // against sigma; the first dart scanned at the start vertex is then the
  // outer-face edge next to the root. A dart to an unvisited vertex opens a
  // subtree; any other dart whose edge is still unused closes a leaf labeled
  // by the target depth. Children are recorded right to left: the scan runs
  // counterclockwise while the tree is written with its leftmost child the
  // last edge met, which is what makes the label conditions come out.
  auto explore = [&](auto&& self, int a, int d) -> TreeNode {
    TreeNode node;
    for (int x = sigmaInv(m, a); x != a; x = sigmaInv(m, x)) {
      if (used[x / 2]) continue;
      used[x / 2] = 1;
      int w = vid[alphaDart(x)];
      if (depth[w] == -2) {
        depth[w] = d + 1;
        node.children.insert(node.children.begin(), self(self, alphaDart(x), d + 1));
      } else {
        node.children.insert(node.children.begin(), TreeNode{depth[w], {}});
      }
    }
    return node;
  };
  return DecoTree{explore(explore, alphaDart(m.root), 0)};
}

RootedMap decoToMap(const DecoTree& t) {
  return std::get<RootedMap>(transport(Obj{t}, Cls::Map));
}

namespace {

// Depth-first scan; returns the traversal indices of the subtree's leaves.
std::vector<int> certWalk(const TreeNode& node, int depth, int& nodeIdx, int& leafIdx,
                          const std::vector<int>& leafLabel, CertificateTable& table) {
  int self = nodeIdx++;
  table.certOf.push_back(-1);
  if (node.isLeaf()) {
    table.countC.push_back(0);
    return {leafIdx++};
  }
  std::vector<int> leaves;
  for (const auto& ch : node.children)
    for (int l : certWalk(ch, depth + 1, nodeIdx, leafIdx, leafLabel, table))
      leaves.push_back(l);
  if (depth > 0) {
    for (int l : leaves) {
      if (leafLabel[l] <= depth - 2) {
        table.certOf[self] = l;
        ++table.countC[l];
        break;
      }
    }
    if (table.certOf[self] == -1)
      throw std::invalid_argument("certificates: node without witness leaf");
  }
  return leaves;
}

}  // namespace

CertificateTable certificates(const DecoTree& t) {
  CertificateTable table;
  int nodeIdx = 0, leafIdx = 0;
  certWalk(t.root, 0, nodeIdx, leafIdx, leafLabels(t.root), table);
  return table;
}

namespace {

// Internal node at depth p gets the number of descendant leaves labeled at
// most p-2; leaves get 1; the root label is fixed up by the caller.
TreeNode varphiNode(const TreeNode& node, int depth) {
  if (node.isLeaf()) return TreeNode{1, {}};
  TreeNode out;
  for (int l : leafLabels(node))
    if (l <= depth - 2) ++out.label;
  for (const auto& ch : node.children) out.children.push_back(varphiNode(ch, depth + 1));
  return out;
}

}  // namespace

BetaTree decoToBetaDirect(const DecoTree& t) {
  TreeNode root = varphiNode(t.root, 0);
  root.label = flCount(t);
  return BetaTree{root};
}

namespace {

void buildPaths(const TreeNode& node, const std::vector<int>& countC, int& leaf,
                std::string& p, std::string& q) {
  for (const auto& ch : node.children) {
    p += 'u';
    q += 'u';
    if (ch.isLeaf()) {
      p.append(countC[leaf] + 1, 'd');
      ++leaf;
    } else {
      buildPaths(ch, countC, leaf, p, q);
    }
    q += 'd';
  }
}

}  // namespace

SyncInterval decoToInterval(const DecoTree& t) {
  CertificateTable c = certificates(t);
  std::string p, q;
  int leaf = 0;
  buildPaths(t.root, c.countC, leaf, p, q);
  return SyncInterval{DyckWord(p), DyckWord(q)};
}

DecoTree intervalToDeco(const SyncInterval& i) {
  return std::get<DecoTree>(transport(Obj{i}, Cls::Deco));
}

}  // namespace nsp
