#include "nsp/involutions.hpp"

#include "nsp/decomp.hpp"

namespace nsp {

int rpathLen(const TreeNode& t) {
  int n = 0;
  for (const TreeNode* p = &t; !p->isLeaf(); p = &p->children.back()) ++n;
  return n;
}

namespace {

TreeNode* rightmostLeafParent(TreeNode& t) {
  TreeNode* p = &t;
  while (!p->children.back().isLeaf()) p = &p->children.back();
  return p;
}

// Add delta to every leaf label except the rightmost leaf of the whole tree;
// rightmost=true marks the node whose last child chain ends there.
void bumpLeaves(TreeNode& t, int delta, bool rightmost) {
  for (size_t k = 0; k < t.children.size(); ++k) {
    TreeNode& ch = t.children[k];
    bool last = rightmost && k + 1 == t.children.size();
    if (ch.isLeaf()) {
      if (!last) ch.label += delta;
    } else {
      bumpLeaves(ch, delta, last);
    }
  }
}

}  // namespace

BetaTree hBeta(const BetaTree& b) {
  DecompStep s = decompose(Obj{b});
  switch (s.kind) {
    case DecompStep::Base:
      return b;
    case DecompStep::Wrap: {
      // Add 1 to the first i nodes on the rightmost path of h(inner), then
      // hang a fresh leaf as rightmost child of the i-th one.
      BetaTree r = hBeta(std::get<BetaTree>(s.parts[0]));
      TreeNode* p = &r.root;
      for (int k = 1;; ++k) {
        p->label += 1;
        if (k == s.i) break;
        p = &p->children.back();
      }
      p->children.push_back(TreeNode{1, {}});
      return r;
    }
    case DecompStep::Graft: {
      // The rightmost leaf of h(inner) becomes internal with one leaf child.
      BetaTree r = hBeta(std::get<BetaTree>(s.parts[0]));
      rightmostLeafParent(r.root)->children.back().children.push_back(TreeNode{1, {}});
      return r;
    }
    case DecompStep::Join: {
      // Replace the rightmost leaf of h(tail) by the root of h(wrap(head, i))
      // relabeled 1.
      Obj wrapped = compose(DecompStep{DecompStep::Wrap, s.i, {s.parts[0]}}, Cls::Beta);
      BetaTree b1 = hBeta(std::get<BetaTree>(wrapped));
      b1.root.label = 1;
      BetaTree b2 = hBeta(std::get<BetaTree>(s.parts[1]));
      rightmostLeafParent(b2.root)->children.back() = b1.root;
      return b2;
    }
  }
  return b;
}

DecoTree hDeco(const DecoTree& t) {
  DecompStep s = decompose(Obj{t});
  switch (s.kind) {
    case DecompStep::Base:
      return t;
    case DecompStep::Wrap: {
      // Hang a free leaf as rightmost child of the i-th node on the rightmost
      // path of h(inner), counting the root as the first.
      DecoTree r = hDeco(std::get<DecoTree>(s.parts[0]));
      TreeNode* p = &r.root;
      for (int k = 1; k < s.i; ++k) p = &p->children.back();
      p->children.push_back(TreeNode{-1, {}});
      return r;
    }
    case DecompStep::Graft: {
      // The rightmost leaf of h(inner) becomes internal with one free leaf.
      DecoTree r = hDeco(std::get<DecoTree>(s.parts[0]));
      rightmostLeafParent(r.root)->children.back() = TreeNode{0, {TreeNode{-1, {}}}};
      return r;
    }
    case DecompStep::Join: {
      // Shift all leaves of h(wrap(head, i)) but its rightmost by the length
      // of the rightmost path of h(tail), then plant it at the rightmost leaf
      // of h(tail).
      Obj wrapped = compose(DecompStep{DecompStep::Wrap, s.i, {s.parts[0]}}, Cls::Deco);
      DecoTree t1 = hDeco(std::get<DecoTree>(wrapped));
      DecoTree t2 = hDeco(std::get<DecoTree>(s.parts[1]));
      bumpLeaves(t1.root, rpathLen(t2.root), true);
      t1.root.label = 0;
      rightmostLeafParent(t2.root)->children.back() = t1.root;
      return t2;
    }
  }
  return t;
}

}  // namespace nsp
