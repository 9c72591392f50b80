#include "nsp/stats.hpp"

#include <cstddef>

#include "nsp/involutions.hpp"

namespace nsp {

namespace {

void countNodes(const TreeNode& t, int& leaf, int& inner) {
  if (t.isLeaf()) {
    ++leaf;
    return;
  }
  ++inner;
  for (const auto& ch : t.children) countNodes(ch, leaf, inner);
}

// Single-child nodes heading the tree, root included, as long as the chain
// stays internal: the longest path whose non-final nodes all have one child.
int stemStat(const TreeNode& root) {
  int n = 0;
  for (const TreeNode* p = &root; p->children.size() == 1 && !p->children[0].isLeaf();
       p = &p->children[0])
    ++n;
  return n;
}

int gammaStat(BetaTree b) {
  // Ancestor chains (root first) per leaf, traversal order.
  std::vector<std::vector<TreeNode*>> paths;
  std::vector<TreeNode*> anc;
  auto walk = [&](auto&& self, TreeNode& node) -> void {
    if (node.isLeaf()) {
      paths.push_back(anc);
      return;
    }
    anc.push_back(&node);
    for (auto& ch : node.children) self(self, ch);
    anc.pop_back();
  };
  walk(walk, b.root);
  int count = 0;
  for (auto it = paths.rbegin(); it != paths.rend(); ++it) {
    bool ok = true;
    for (TreeNode* u : *it)
      if (u->label < 2) {
        ok = false;
        break;
      }
    if (!ok) break;
    for (TreeNode* u : *it) --u->label;
    ++count;
  }
  return count;
}

// Internal nodes on the rightmost path (root excluded) with exactly one
// certificate candidate, a descendant leaf labeled at most depth - 2. These
// are exactly the label-1 internal nodes of the relabeled tree's rightmost
// path, which accounts for all of rsub except the rightmost leaf.
int dsubStat(const DecoTree& t) {
  int dsub = 0, depth = 0;
  for (const TreeNode* p = &t.root; !p->isLeaf();) {
    p = &p->children.back();
    ++depth;
    if (p->isLeaf()) break;
    int cand = 0;
    for (int l : leafLabels(*p))
      if (l <= depth - 2) ++cand;
    if (cand == 1) ++dsub;
  }
  return dsub;
}

int rflStat(DecoTree t) {
  int count = 0;
  while (true) {
    // Rightmost free leaf, as a child-index path from the root.
    std::vector<int> best, cur;
    auto walk = [&](auto&& self, const TreeNode& node) -> void {
      for (int k = 0; k < static_cast<int>(node.children.size()); ++k) {
        cur.push_back(k);
        const TreeNode& ch = node.children[k];
        if (ch.isLeaf()) {
          if (ch.label == -1) best = cur;
        } else {
          self(self, ch);
        }
        cur.pop_back();
      }
    };
    walk(walk, t.root);
    if (best.empty()) break;
    TreeNode* p = &t.root;
    for (std::size_t j = 0; j + 1 < best.size(); ++j) p = &p->children[best[j]];
    // Removal must not turn the parent into a leaf.
    if (p->children.size() == 1) break;
    DecoTree cand = t;
    TreeNode* q = &cand.root;
    for (std::size_t j = 0; j + 1 < best.size(); ++j) q = &q->children[best[j]];
    q->children.erase(q->children.begin() + best.back());
    if (!validateDeco(cand).empty()) break;
    t = std::move(cand);
    ++count;
  }
  return count;
}

// Biconnected components of the whole multigraph of a map; every loop is a
// block of its own.
int blockCount(const RootedMap& m) {
  auto vid = vertexIds(m);
  int nv = vertexCount(m);
  std::vector<std::vector<std::pair<int, int>>> adj(nv);
  int blocks = 0;
  std::vector<char> isLoop(m.E, 0);
  for (int k = 0; k < m.E; ++k) {
    int a = vid[2 * k], b = vid[2 * k + 1];
    if (a == b) {
      ++blocks;
      isLoop[k] = 1;
      continue;
    }
    adj[a].push_back({b, k});
    adj[b].push_back({a, k});
  }
  std::vector<int> disc(nv, -1), low(nv, 0), assigned(m.E, 0);
  std::vector<int> stack;
  int timer = 0;
  auto dfs = [&](auto&& self, int v, int pe) -> void {
    disc[v] = low[v] = timer++;
    for (auto [w, eid] : adj[v]) {
      if (eid == pe) continue;
      if (assigned[eid]) continue;
      if (disc[w] == -1) {
        stack.push_back(eid);
        self(self, w, eid);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          ++blocks;
          while (true) {
            int e = stack.back();
            stack.pop_back();
            assigned[e] = 1;
            if (e == eid) break;
          }
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(eid);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < nv; ++v)
    if (disc[v] == -1) dfs(dfs, v, -1);
  return blocks;
}

}  // namespace

BetaStats statsBeta(const BetaTree& b) {
  BetaStats s;
  s.root = b.root.label;
  s.rpath = rpathLen(b.root);
  countNodes(b.root, s.leaf, s.inner);
  s.sub = static_cast<int>(b.root.children.size());
  s.stem = stemStat(b.root);
  for (const TreeNode* p = &b.root;;) {
    p = &p->children.back();
    if (p->label == 1) ++s.rsub;
    if (p->isLeaf()) break;
  }
  s.gamma = gammaStat(b);
  return s;
}

DecoStats statsDeco(const DecoTree& t) {
  DecoStats s;
  s.fl = flCount(t);
  countNodes(t.root, s.leaf, s.inner);
  s.sub = static_cast<int>(t.root.children.size());
  s.rpath = rpathLen(t.root);
  s.stem = stemStat(t.root);
  s.dsub = dsubStat(t);
  s.rfl = rflStat(t);
  return s;
}

MapStats statsMap(const RootedMap& m) {
  MapStats s;
  s.deg = degStat(m);
  s.fdeg = fdegStat(m);
  s.face = faceCount(m);
  s.vertex = vertexCount(m);
  s.scomp = seriesBlocks(m).nBlocks;
  // Parallel components: blocks of the map with the root edge contracted,
  // the series picture with deletion replaced by contraction.
  s.pcomp = blockCount(withEdgeContracted(m, m.root, sigmaInv(m, alphaDart(m.root))));
  // Root contractions, re-rooting at the next outer edge in clockwise order.
  for (RootedMap x = m;;) {
    RootedMap y = withEdgeContracted(x, x.root, sigmaInv(x, alphaDart(x.root)));
    if (!isNsp(y)) break;
    ++s.ejoin;
    x = std::move(y);
  }
  // Root-vertex deletions, starting before the root and turning against the
  // exploration order, i.e. along sigma.
  for (RootedMap x = m;;) {
    RootedMap y = withEdgeDeleted(x, x.sigma[x.root], x.root);
    if (!isNsp(y)) break;
    ++s.ecut;
    x = std::move(y);
  }
  return s;
}

IntervalStats statsInterval(const SyncInterval& iv) {
  const std::string& p = iv.lower.steps;
  const std::string& q = iv.upper.steps;
  IntervalStats s;
  s.cont = dyckContacts(iv.lower);
  s.contStar = dyckContacts(iv.upper);
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    if (p[j] == 'u' && p[j + 1] == 'd') ++s.peak;
    if (p[j] == 'u' && p[j + 1] == 'u') ++s.dblu;
  }
  for (std::size_t j = q.size(); j > 0 && q[j - 1] == 'd'; --j) ++s.desc;
  int n2 = static_cast<int>(q.size());
  for (int k = 0; 2 * k + 2 <= n2; ++k) {
    if (k > 0 && (q[k - 1] != 'u' || q[n2 - k] != 'd')) break;
    if (isDyck(q.substr(k, n2 - 2 * k))) s.level = k;
  }
  int t = 0, len = static_cast<int>(p.size());
  while (len >= 2 && p[len - 2] == 'u' && p[len - 1] == 'd') {
    len -= 2;
    ++t;
  }
  s.teeth = len == 0 ? t - 1 : t;
  return s;
}

namespace {

std::string jsonOf(std::initializer_list<std::pair<const char*, int>> fields) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : fields) {
    if (!first) out += ",";
    first = false;
    out += "\"";
    out += k;
    out += "\":" + std::to_string(v);
  }
  return out + "}";
}

}  // namespace

std::string statsToJson(const BetaStats& s) {
  return jsonOf({{"root", s.root},
                 {"rpath", s.rpath},
                 {"leaf", s.leaf},
                 {"int", s.inner},
                 {"sub", s.sub},
                 {"stem", s.stem},
                 {"rsub", s.rsub},
                 {"gamma", s.gamma}});
}

std::string statsToJson(const DecoStats& s) {
  return jsonOf({{"fl", s.fl},
                 {"leaf", s.leaf},
                 {"int", s.inner},
                 {"sub", s.sub},
                 {"rpath", s.rpath},
                 {"stem", s.stem},
                 {"dsub", s.dsub},
                 {"rfl", s.rfl}});
}

std::string statsToJson(const MapStats& s) {
  return jsonOf({{"deg", s.deg},
                 {"fdeg", s.fdeg},
                 {"face", s.face},
                 {"vertex", s.vertex},
                 {"pcomp", s.pcomp},
                 {"scomp", s.scomp},
                 {"ejoin", s.ejoin},
                 {"ecut", s.ecut}});
}

std::string statsToJson(const IntervalStats& s) {
  return jsonOf({{"cont", s.cont},
                 {"contStar", s.contStar},
                 {"peak", s.peak},
                 {"dblu", s.dblu},
                 {"desc", s.desc},
                 {"level", s.level},
                 {"teeth", s.teeth}});
}

std::string statsJson(const Obj& x) {
  if (const auto* b = std::get_if<BetaTree>(&x)) return statsToJson(statsBeta(*b));
  if (const auto* t = std::get_if<DecoTree>(&x)) return statsToJson(statsDeco(*t));
  if (const auto* m = std::get_if<RootedMap>(&x)) return statsToJson(statsMap(*m));
  return statsToJson(statsInterval(std::get<SyncInterval>(x)));
}

}  // namespace nsp
