#include "nsp/decomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsp {

Cls clsOf(const Obj& x) {
  switch (x.index()) {
    case 0: return Cls::Beta;
    case 1: return Cls::Deco;
    case 2: return Cls::Map;
    default: return Cls::Interval;
  }
}

std::string clsName(Cls c) {
  switch (c) {
    case Cls::Beta: return "beta";
    case Cls::Deco: return "deco";
    case Cls::Map: return "map";
    default: return "interval";
  }
}

Cls clsFromName(const std::string& name) {
  if (name == "beta") return Cls::Beta;
  if (name == "deco") return Cls::Deco;
  if (name == "map") return Cls::Map;
  if (name == "interval") return Cls::Interval;
  throw std::runtime_error("unknown class: " + name);
}

std::string typeName(TypeTag t) {
  switch (t) {
    case TypeTag::I: return "I";
    case TypeTag::II: return "II";
    case TypeTag::III: return "III";
    default: return "IV";
  }
}

int objSize(const Obj& x) {
  if (const auto* b = std::get_if<BetaTree>(&x)) return edgeCount(b->root);
  if (const auto* t = std::get_if<DecoTree>(&x)) return edgeCount(t->root);
  if (const auto* m = std::get_if<RootedMap>(&x)) return m->E - 1;
  return std::get<SyncInterval>(x).size();
}

int sizeStat(const Obj& x, Scheme scheme) {
  if (const auto* b = std::get_if<BetaTree>(&x)) return rootLabel(*b);
  if (const auto* t = std::get_if<DecoTree>(&x)) return flCount(*t);
  if (const auto* m = std::get_if<RootedMap>(&x))
    return scheme == Scheme::Series ? fdegStat(*m) : degStat(*m);
  return contStat(std::get<SyncInterval>(x));
}

std::vector<std::string> validateObj(const Obj& x) {
  if (const auto* b = std::get_if<BetaTree>(&x)) return validateBeta(*b);
  if (const auto* t = std::get_if<DecoTree>(&x)) return validateDeco(*t);
  if (const auto* m = std::get_if<RootedMap>(&x)) return validateMap(*m);
  return validateInterval(std::get<SyncInterval>(x));
}

std::string encodeObj(const Obj& x) {
  if (const auto* b = std::get_if<BetaTree>(&x)) return printBeta(*b);
  if (const auto* t = std::get_if<DecoTree>(&x)) return printDeco(*t);
  if (const auto* m = std::get_if<RootedMap>(&x)) return encodeMap(*m);
  return printInterval(std::get<SyncInterval>(x));
}

Obj decodeObj(Cls c, const std::string& text) {
  switch (c) {
    case Cls::Beta: return parseBeta(text);
    case Cls::Deco: return parseDeco(text);
    case Cls::Map: return decodeMap(text);
    default: return parseInterval(text);
  }
}

Obj baseObject(Cls c) {
  switch (c) {
    case Cls::Beta: return parseBeta("(1 1)");
    case Cls::Deco: return parseDeco("(* -1)");
    case Cls::Map: return RootedMap{2, {2, 3, 0, 1}, 0};
    default: return SyncInterval{DyckWord("ud"), DyckWord("ud")};
  }
}

// ---------------------------------------------------------------------------
// Labeled trees.

namespace {

int childrenSum(const TreeNode& n) {
  int s = 0;
  for (const auto& c : n.children) s += c.label;
  return s;
}

TypeTag classifyTree(const TreeNode& root) {
  bool single = root.children.size() == 1;
  bool leftLeaf = root.children.front().isLeaf();
  if (single) return leftLeaf ? TypeTag::I : TypeTag::II;
  return leftLeaf ? TypeTag::III : TypeTag::IV;
}

BetaTree deltaB(const BetaTree& b, int i) {
  TreeNode child = b.root;
  child.label = i;
  return BetaTree{TreeNode{i, {std::move(child)}}};
}

BetaTree piB(const BetaTree& b) {
  TreeNode r = b.root.children.front();
  r.label = childrenSum(r);
  return BetaTree{std::move(r)};
}

BetaTree oplusB(const BetaTree& b1, int i, const BetaTree& b2) {
  TreeNode head = b1.root;
  head.label = i;
  TreeNode root{i + b2.root.label, {std::move(head)}};
  for (const auto& c : b2.root.children) root.children.push_back(c);
  return BetaTree{std::move(root)};
}

// Adds or removes +1 on every leaf; free leaves are exempt per the rules of
// the decorated-tree wrap.
void shiftLeaves(TreeNode& n, int delta, int& sparedFromRight, bool fromRight) {
  // fromRight: the last `sparedFromRight` free leaves keep their -1.
  if (n.isLeaf()) {
    if (delta > 0) {
      if (n.label == -1 && sparedFromRight > 0)
        --sparedFromRight;
      else
        n.label += delta;
    } else {
      if (n.label != -1) n.label += delta;
    }
    return;
  }
  if (fromRight) {
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
      shiftLeaves(*it, delta, sparedFromRight, fromRight);
  } else {
    for (auto& c : n.children) shiftLeaves(c, delta, sparedFromRight, fromRight);
  }
}

DecoTree deltaT(const DecoTree& t, int i) {
  TreeNode child = t.root;
  int spare = i;
  shiftLeaves(child, +1, spare, true);
  return DecoTree{TreeNode{0, {std::move(child)}}};
}

DecoTree piT(const DecoTree& t) {
  TreeNode r = t.root.children.front();
  int spare = 0;
  shiftLeaves(r, -1, spare, false);
  return DecoTree{std::move(r)};
}

DecoTree oplusT(const DecoTree& t1, int i, const DecoTree& t2) {
  DecoTree wrapped = deltaT(t1, i);
  TreeNode root{0, {wrapped.root.children.front()}};
  for (const auto& c : t2.root.children) root.children.push_back(c);
  return DecoTree{std::move(root)};
}

DecompStep decomposeBeta(const BetaTree& b) {
  switch (classifyTree(b.root)) {
    case TypeTag::I: return DecompStep{DecompStep::Base, 0, {}};
    case TypeTag::II: return DecompStep{DecompStep::Wrap, b.root.label, {piB(b)}};
    case TypeTag::III: {
      BetaTree inner = b;
      inner.root.children.erase(inner.root.children.begin());
      inner.root.label -= 1;
      return DecompStep{DecompStep::Graft, 0, {std::move(inner)}};
    }
    default: {
      const TreeNode& c = b.root.children.front();
      BetaTree head{c};
      head.root.label = childrenSum(c);
      BetaTree tail = b;
      tail.root.children.erase(tail.root.children.begin());
      tail.root.label -= c.label;
      return DecompStep{DecompStep::Join, c.label, {std::move(head), std::move(tail)}};
    }
  }
}

DecompStep decomposeDeco(const DecoTree& t) {
  switch (classifyTree(t.root)) {
    case TypeTag::I: return DecompStep{DecompStep::Base, 0, {}};
    case TypeTag::II: return DecompStep{DecompStep::Wrap, flCount(t), {piT(t)}};
    case TypeTag::III: {
      DecoTree inner = t;
      inner.root.children.erase(inner.root.children.begin());
      return DecompStep{DecompStep::Graft, 0, {std::move(inner)}};
    }
    default: {
      DecoTree headWrapped{TreeNode{0, {t.root.children.front()}}};
      DecoTree head = piT(headWrapped);
      DecoTree tail = t;
      tail.root.children.erase(tail.root.children.begin());
      int i = flCount(t) - flCount(tail);
      return DecompStep{DecompStep::Join, i, {std::move(head), std::move(tail)}};
    }
  }
}

// ---------------------------------------------------------------------------
// Synchronized intervals.

// Index just after the first return to height 0.
int firstReturnEnd(const std::string& s) {
  int h = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    h += (s[i] == 'u') ? 1 : -1;
    if (h == 0) return static_cast<int>(i) + 1;
  }
  throw std::logic_error("firstReturnEnd: not a Dyck word");
}

// Removes the initial u and its matching d (the first return).
std::string stripFirstArch(const std::string& s) {
  int e = firstReturnEnd(s);
  return s.substr(1, e - 2) + s.substr(e);
}

struct IntervalSplit {
  std::string r, p2, q1, q2;  // P = r p2 with r = u P1l d P1r, Q = u q1 d q2
};

IntervalSplit splitInterval(const SyncInterval& iv) {
  const std::string& q = iv.upper.steps;
  int e = firstReturnEnd(q);
  IntervalSplit s;
  s.q1 = q.substr(1, e - 2);
  s.q2 = q.substr(e);
  const std::string& p = iv.lower.steps;
  s.p2 = p.substr(p.size() - s.q2.size());
  s.r = p.substr(0, p.size() - s.q2.size());
  return s;
}

TypeTag classifyInterval(const SyncInterval& iv) {
  IntervalSplit s = splitInterval(iv);
  if (s.r == "ud") return s.p2.empty() ? TypeTag::I : TypeTag::III;
  return s.p2.empty() ? TypeTag::II : TypeTag::IV;
}

SyncInterval deltaI(const SyncInterval& iv, int i) {
  int k = contStat(iv);
  if (i < 1 || i > k) throw std::invalid_argument("interval wrap: i out of range");
  // Split P at its (k-i+1)-th non-initial contact from the left.
  const std::string& p = iv.lower.steps;
  int target = k - i + 1, h = 0, seen = 0;
  size_t cut = 0;
  for (size_t j = 0; j < p.size(); ++j) {
    h += (p[j] == 'u') ? 1 : -1;
    if (h == 0 && ++seen == target) {
      cut = j + 1;
      break;
    }
  }
  std::string pl = p.substr(0, cut), pr = p.substr(cut);
  return SyncInterval{DyckWord("u" + pl + "d" + pr), DyckWord("u" + iv.upper.steps + "d")};
}

DecompStep decomposeInterval(const SyncInterval& iv) {
  IntervalSplit s = splitInterval(iv);
  if (s.r == "ud") {
    if (s.p2.empty()) return DecompStep{DecompStep::Base, 0, {}};
    return DecompStep{DecompStep::Graft, 0,
                      {SyncInterval{DyckWord(s.p2), DyckWord(s.q2)}}};
  }
  SyncInterval head{DyckWord(stripFirstArch(s.r)), DyckWord(s.q1)};
  if (s.p2.empty())
    return DecompStep{DecompStep::Wrap, contStat(iv), {std::move(head)}};
  SyncInterval tail{DyckWord(s.p2), DyckWord(s.q2)};
  int i = contStat(iv) - contStat(tail);
  return DecompStep{DecompStep::Join, i, {std::move(head), std::move(tail)}};
}

// ---------------------------------------------------------------------------
// Maps, parallel scheme.

RootedMap piM(const RootedMap& m) {
  // The inverse of the root-vertex split: the split keeps the old root right
  // before the new edge's partner at the old vertex, so that dart becomes the
  // root again once the edge is contracted.
  return withEdgeContracted(m, m.root, sigmaInv(m, alphaDart(m.root)));
}

RootedMap deltaM(const RootedMap& m, int i) {
  int k = degStat(m);
  if (i < 1 || i > k) throw std::invalid_argument("map wrap: i out of range");
  int n = 2 * m.E;
  std::vector<int> sigma = m.sigma;
  sigma.resize(n + 2, -1);
  int nr = n, nrp = n + 1;
  std::vector<int> rot = vertexOrbit(m, m.root);  // [r, c1 .. ck]
  int sz = static_cast<int>(rot.size());
  // Split along the outer face: the new root vertex takes the first i darts
  // after the root, so the outer face of the result is the outer face of m
  // plus the new edge.
  sigma[nr] = rot[1];
  sigma[rot[i]] = nr;
  // Old vertex keeps [r, nrp, c_{i+1} .. ck].
  sigma[rot[0]] = nrp;
  sigma[nrp] = (i < sz - 1) ? rot[i + 1] : rot[0];
  RootedMap out;
  out.E = m.E + 1;
  out.sigma = std::move(sigma);
  out.root = nr;
  return out;
}

// Duplicates the root edge; the new copy bounds the core face.
RootedMap graftM(const RootedMap& m) {
  int n = 2 * m.E;
  std::vector<int> sigma = m.sigma;
  sigma.resize(n + 2, -1);
  int nu = n, nv = n + 1;  // nu at the root's head vertex, nv at the root vertex
  int r = m.root, rp = alphaDart(r);
  sigma[nu] = sigma[rp];
  sigma[rp] = nu;
  int p = sigmaInv(m, r);
  sigma[p] = nv;
  sigma[nv] = r;
  RootedMap out;
  out.E = m.E + 1;
  out.sigma = std::move(sigma);
  out.root = r;
  return out;
}

// Keeps only the edges flagged in keep (indexed by edge id); rotations are
// restricted, other darts die.
RootedMap subMap(const RootedMap& m, const std::vector<char>& keep, int rootDart) {
  int n = 2 * m.E;
  std::vector<int> sigma(n, -1);
  for (int d = 0; d < n; ++d) {
    if (!keep[d / 2]) continue;
    int x = m.sigma[d];
    while (!keep[x / 2]) x = m.sigma[x];
    sigma[d] = x;
  }
  // compact() lives in map.cpp; rebuild here via the public surgery entry
  // points is not possible, so inline the renumbering.
  std::vector<int> newId(n, -1);
  int next = 0;
  for (int k = 0; k < m.E; ++k) {
    if (!keep[k]) continue;
    newId[2 * k] = next;
    newId[2 * k + 1] = next + 1;
    next += 2;
  }
  RootedMap out;
  out.E = next / 2;
  out.sigma.assign(next, 0);
  for (int d = 0; d < n; ++d)
    if (sigma[d] != -1) out.sigma[newId[d]] = newId[sigma[d]];
  out.root = newId[rootDart];
  return out;
}

struct DartSets {
  std::vector<char> inner;  // per edge id: belongs to the innermost component
};

// Components of M with the root edge removed, glued only through the two
// root-edge endpoints: edges sharing any other vertex are joined.
std::vector<int> parallelComponents(const RootedMap& m) {
  auto vid = vertexIds(m);
  int v = vid[m.root], u = vid[alphaDart(m.root)];
  std::vector<int> parent(m.E);
  for (int k = 0; k < m.E; ++k) parent[k] = k;
  auto find = [&](auto&& self, int a) -> int {
    return parent[a] == a ? a : parent[a] = self(self, parent[a]);
  };
  int nv = vertexCount(m);
  std::vector<int> firstEdge(nv, -1);
  for (int k = 0; k < m.E; ++k) {
    if (k == m.root / 2) continue;
    for (int d : {2 * k, 2 * k + 1}) {
      int w = vid[d];
      if (w == v || w == u) continue;
      if (firstEdge[w] == -1)
        firstEdge[w] = k;
      else
        parent[find(find, k)] = find(find, firstEdge[w]);
    }
  }
  std::vector<int> comp(m.E, -1);
  for (int k = 0; k < m.E; ++k)
    if (k != m.root / 2) comp[k] = find(find, k);
  return comp;
}

// Edge flags of the innermost component (the one on the core face).
std::vector<char> innerComponentEdges(const RootedMap& m) {
  auto comp = parallelComponents(m);
  auto core = faceOrbit(m, alphaDart(m.root));
  int innerId = -1;
  for (int d : core) {
    if (d / 2 == m.root / 2) continue;
    innerId = comp[d / 2];
    break;
  }
  std::vector<char> flag(m.E, 0);
  for (int k = 0; k < m.E; ++k)
    if (comp[k] == innerId) flag[k] = 1;
  return flag;
}

TypeTag classifyMapParallel(const RootedMap& m) {
  if (m.E == 2) return TypeTag::I;
  if (faceOrbit(m, alphaDart(m.root)).size() == 2) return TypeTag::III;
  return isNsp(piM(m)) ? TypeTag::II : TypeTag::IV;
}

DecompStep decomposeMapParallel(const RootedMap& m) {
  switch (classifyMapParallel(m)) {
    case TypeTag::I: return DecompStep{DecompStep::Base, 0, {}};
    case TypeTag::II: return DecompStep{DecompStep::Wrap, degStat(m), {piM(m)}};
    case TypeTag::III: {
      auto core = faceOrbit(m, alphaDart(m.root));
      int e1 = (core[0] / 2 == m.root / 2) ? core[1] : core[0];
      return DecompStep{DecompStep::Graft, 0, {withEdgeDeleted(m, e1, m.root)}};
    }
    default: {
      auto inner = innerComponentEdges(m);
      std::vector<char> headKeep = inner, tailKeep(m.E, 1);
      headKeep[m.root / 2] = 1;
      for (int k = 0; k < m.E; ++k)
        if (inner[k]) tailKeep[k] = 0;
      RootedMap head = piM(subMap(m, headKeep, m.root));
      RootedMap tail = subMap(m, tailKeep, m.root);
      int i = degStat(m) - degStat(tail);
      return DecompStep{DecompStep::Join, i, {std::move(head), std::move(tail)}};
    }
  }
}

RootedMap oplusM(const RootedMap& m1, int i, const RootedMap& m2) {
  RootedMap d = deltaM(m1, i);
  int off = 2 * m2.E, n = off + 2 * d.E;
  std::vector<int> sigma(n, -1);
  for (int x = 0; x < 2 * m2.E; ++x) sigma[x] = m2.sigma[x];
  for (int x = 0; x < 2 * d.E; ++x) sigma[off + x] = off + d.sigma[x];
  int r2 = m2.root, r2p = alphaDart(r2);
  // Darts of d's root vertex (minus the root) go before r2 at the root vertex
  // of m2; darts of the other endpoint (minus the partner) go after r2p.
  std::vector<int> dseq = vertexOrbit(d, d.root);
  dseq.erase(dseq.begin());
  std::vector<int> eseq = vertexOrbit(d, alphaDart(d.root));
  eseq.erase(eseq.begin());
  int p = sigmaInv(m2, r2);
  sigma[p] = off + dseq.front();
  sigma[off + dseq.back()] = r2;
  sigma[r2p] = off + eseq.front();
  sigma[off + eseq.back()] = m2.sigma[r2p];
  // Kill d's root edge.
  sigma[off + d.root] = -1;
  sigma[off + alphaDart(d.root)] = -1;
  // Inline compact.
  std::vector<int> newId(n, -1);
  int next = 0;
  for (int k = 0; k < n / 2; ++k) {
    if (sigma[2 * k] == -1) continue;
    newId[2 * k] = next;
    newId[2 * k + 1] = next + 1;
    next += 2;
  }
  RootedMap out;
  out.E = next / 2;
  out.sigma.assign(next, 0);
  for (int x = 0; x < n; ++x)
    if (sigma[x] != -1) out.sigma[newId[x]] = newId[sigma[x]];
  out.root = newId[r2];
  return out;
}

// ---------------------------------------------------------------------------
// Maps, series scheme.

RootedMap piS(const RootedMap& m) {
  // Inverse of the series split: the old root is the outer-face edge right
  // after the deleted one.
  return withEdgeDeleted(m, m.root, faceNext(m, alphaDart(m.root)));
}

RootedMap deltaS(const RootedMap& m, int i) {
  int k = fdegStat(m);
  if (i < 1 || i > k) throw std::invalid_argument("map series wrap: i out of range");
  // Outer-face darts against the root: s_j = faceNextInv^j(root). The new
  // root edge runs from the vertex of s_{i+1} (new root dart right after it)
  // to the root head u (partner right after s_1), so the new outer face is
  // adjacent to u_1 .. u_i and the old root follows the new one on it.
  int s1 = faceNextInv(m, m.root);
  int si1 = s1;
  for (int j = 1; j <= i; ++j) si1 = faceNextInv(m, si1);
  int n = 2 * m.E;
  std::vector<int> sigma = m.sigma;
  sigma.resize(n + 2, -1);
  int nr = n, nrp = n + 1;
  sigma[nr] = sigma[si1];
  sigma[si1] = nr;
  sigma[nrp] = sigma[s1];
  sigma[s1] = nrp;
  RootedMap out;
  out.E = m.E + 1;
  out.sigma = std::move(sigma);
  out.root = nr;
  return out;
}

// Subdivides the root edge: the new midpoint vertex carries the root dart
// and one end of the fresh edge, whose other end replaces the root in the
// old root vertex rotation. Contracting the fresh edge undoes this exactly.
RootedMap graftS(const RootedMap& m) {
  int n = 2 * m.E;
  std::vector<int> sigma = m.sigma;
  sigma.resize(n + 2, -1);
  int r = m.root, nu = n, nv = n + 1;
  int p = sigmaInv(m, r);
  sigma[p] = nv;
  sigma[nv] = sigma[r];
  sigma[r] = nu;
  sigma[nu] = r;
  RootedMap out;
  out.E = m.E + 1;
  out.sigma = std::move(sigma);
  out.root = r;
  return out;
}

}  // namespace

SeriesBlocks seriesBlocks(const RootedMap& m) {
  auto vid = vertexIds(m);
  int nv = vertexCount(m);
  std::vector<std::vector<std::pair<int, int>>> adj(nv);
  int rootEdge = m.root / 2;
  for (int k = 0; k < m.E; ++k) {
    if (k == rootEdge) continue;
    int a = vid[2 * k], b = vid[2 * k + 1];
    adj[a].push_back({b, k});
    adj[b].push_back({a, k});
  }
  SeriesBlocks out;
  out.edgeBlock.assign(m.E, -1);
  std::vector<int> disc(nv, -1), low(nv, 0);
  std::vector<int> stack;
  int timer = 0;
  auto dfs = [&](auto&& self, int v, int pe) -> void {
    disc[v] = low[v] = timer++;
    for (auto [w, eid] : adj[v]) {
      if (eid == pe) continue;
      if (out.edgeBlock[eid] >= 0) continue;
      if (disc[w] == -1) {
        stack.push_back(eid);
        self(self, w, eid);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          int blk = out.nBlocks++;
          while (true) {
            int e = stack.back();
            stack.pop_back();
            out.edgeBlock[e] = blk;
            if (e == eid) break;
          }
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(eid);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  int v0 = vid[m.root];
  dfs(dfs, v0, -1);
  return out;
}

namespace {

TypeTag classifyMapSeries(const RootedMap& m) {
  if (m.E == 2) return TypeTag::I;
  if (vertexOrbit(m, m.root).size() == 2) return TypeTag::III;
  return isNsp(piS(m)) ? TypeTag::II : TypeTag::IV;
}

DecompStep decomposeMapSeries(const RootedMap& m) {
  switch (classifyMapSeries(m)) {
    case TypeTag::I: return DecompStep{DecompStep::Base, 0, {}};
    case TypeTag::II: return DecompStep{DecompStep::Wrap, fdegStat(m), {piS(m)}};
    case TypeTag::III: {
      int e1 = vertexOrbit(m, m.root)[1];
      return DecompStep{DecompStep::Graft, 0, {withEdgeContracted(m, e1, m.root)}};
    }
    default: {
      auto blocks = seriesBlocks(m);
      auto vid = vertexIds(m);
      int v = vid[m.root];
      // Head: the block of the root vertex in the map minus the root edge.
      int firstBlk = blocks.edgeBlock[sigmaInv(m, m.root) / 2];
      std::vector<char> headKeep(m.E, 0);
      for (int k = 0; k < m.E; ++k)
        if (blocks.edgeBlock[k] == firstBlk) headKeep[k] = 1;
      // Cut vertex: the head vertex where the tail hangs. The root vertex
      // only meets the tail through the root edge, so it never qualifies.
      int w1 = -1;
      for (int k = 0; k < m.E; ++k) {
        if (!headKeep[k]) continue;
        for (int d : {2 * k, 2 * k + 1})
          if (vid[d] != v) {
            int w = vid[d];
            for (int x : vertexOrbit(m, d))
              if (x / 2 != m.root / 2 && !headKeep[x / 2]) w1 = w;
          }
      }
      if (w1 == -1) throw std::logic_error("series join: cut vertex not found");
      // At the cut vertex head darts and tail darts each form one contiguous
      // run. The head's root partner is the first head dart after the tail
      // run; the tail's rotation there is restored by replacing the head run
      // with the root dart.
      int w1dart = -1;
      for (int d = 0; d < 2 * m.E; ++d)
        if (vid[d] == w1) {
          w1dart = d;
          break;
        }
      std::vector<int> rot = vertexOrbit(m, w1dart);
      int sz = static_cast<int>(rot.size());
      int succ = -1, pred = -1;
      for (int j = 0; j < sz; ++j) {
        bool cur = headKeep[rot[j] / 2];
        bool nxt = headKeep[rot[(j + 1) % sz] / 2];
        if (cur && !nxt) succ = rot[(j + 1) % sz];
        if (!cur && nxt) pred = rot[j];
      }
      if (succ == -1 || pred == -1)
        throw std::logic_error("series join: block darts not contiguous");
      RootedMap head = subMap(m, headKeep, alphaDart(m.sigma[pred]));
      std::vector<int> sigma = m.sigma;
      sigma[pred] = m.root;
      sigma[m.root] = succ;
      for (int k = 0; k < m.E; ++k)
        if (headKeep[k]) sigma[2 * k] = sigma[2 * k + 1] = -1;
      // Inline compact.
      int n = 2 * m.E;
      std::vector<int> newId(n, -1);
      int next = 0;
      for (int k = 0; k < m.E; ++k) {
        if (sigma[2 * k] == -1) continue;
        newId[2 * k] = next;
        newId[2 * k + 1] = next + 1;
        next += 2;
      }
      RootedMap tail;
      tail.E = next / 2;
      tail.sigma.assign(next, 0);
      for (int x = 0; x < n; ++x)
        if (sigma[x] != -1) tail.sigma[newId[x]] = newId[sigma[x]];
      tail.root = newId[m.root];
      int i = fdegStat(m) - fdegStat(tail);
      return DecompStep{DecompStep::Join, i, {std::move(head), std::move(tail)}};
    }
  }
}

RootedMap oplusS(const RootedMap& m1, int i, const RootedMap& m2) {
  int k = fdegStat(m1);
  if (i < 1 || i > k) throw std::invalid_argument("map series join: i out of range");
  // Outer-face darts of the head against its root: s_j = faceNextInv^j(r1).
  // The tail's root vertex splits: its root dart alone moves next to s_{i+1},
  // while the rest of its rotation splices into the head's root vertex
  // between s_1 and the root partner. No new edge is created; the head's old
  // root edge becomes the new root edge.
  int s1 = faceNextInv(m1, m1.root);
  int si = m1.root;
  for (int j = 0; j < i; ++j) si = faceNextInv(m1, si);
  int si1 = faceNextInv(m1, si);
  int off = 2 * m2.E, n = off + 2 * m1.E;
  std::vector<int> sigma(n, 0);
  for (int x = 0; x < 2 * m2.E; ++x) sigma[x] = m2.sigma[x];
  for (int x = 0; x < 2 * m1.E; ++x) sigma[off + x] = off + m1.sigma[x];
  int r2 = m2.root;
  int tq = sigmaInv(m2, r2);
  sigma[off + s1] = m2.sigma[r2];
  sigma[tq] = off + alphaDart(m1.root);
  sigma[r2] = off + alphaDart(si);
  sigma[off + si1] = r2;
  RootedMap out;
  out.E = m1.E + m2.E;
  out.sigma = std::move(sigma);
  out.root = r2;
  return out;
}

// ---------------------------------------------------------------------------
// Dispatch.

Obj composeMap(const DecompStep& st, Scheme scheme) {
  bool par = scheme == Scheme::Parallel;
  switch (st.kind) {
    case DecompStep::Base: return baseObject(Cls::Map);
    case DecompStep::Wrap: {
      const auto& inner = std::get<RootedMap>(st.parts.at(0));
      return par ? deltaM(inner, st.i) : deltaS(inner, st.i);
    }
    case DecompStep::Graft: {
      const auto& inner = std::get<RootedMap>(st.parts.at(0));
      return par ? graftM(inner) : graftS(inner);
    }
    default: {
      const auto& head = std::get<RootedMap>(st.parts.at(0));
      const auto& tail = std::get<RootedMap>(st.parts.at(1));
      return par ? oplusM(head, st.i, tail) : oplusS(head, st.i, tail);
    }
  }
}

}  // namespace

TypeTag classify(const Obj& x, Scheme scheme) {
  if (const auto* b = std::get_if<BetaTree>(&x)) return classifyTree(b->root);
  if (const auto* t = std::get_if<DecoTree>(&x)) return classifyTree(t->root);
  if (const auto* m = std::get_if<RootedMap>(&x))
    return scheme == Scheme::Series ? classifyMapSeries(*m) : classifyMapParallel(*m);
  return classifyInterval(std::get<SyncInterval>(x));
}

DecompStep decompose(const Obj& x, Scheme scheme) {
  if (const auto* b = std::get_if<BetaTree>(&x)) return decomposeBeta(*b);
  if (const auto* t = std::get_if<DecoTree>(&x)) return decomposeDeco(*t);
  if (const auto* m = std::get_if<RootedMap>(&x))
    return scheme == Scheme::Series ? decomposeMapSeries(*m) : decomposeMapParallel(*m);
  return decomposeInterval(std::get<SyncInterval>(x));
}

Obj compose(const DecompStep& st, Cls c, Scheme scheme) {
  switch (c) {
    case Cls::Beta: {
      switch (st.kind) {
        case DecompStep::Base: return baseObject(c);
        case DecompStep::Wrap: return deltaB(std::get<BetaTree>(st.parts.at(0)), st.i);
        case DecompStep::Graft: {
          BetaTree b = std::get<BetaTree>(st.parts.at(0));
          b.root.children.insert(b.root.children.begin(), TreeNode{1, {}});
          b.root.label += 1;
          return b;
        }
        default:
          return oplusB(std::get<BetaTree>(st.parts.at(0)), st.i,
                        std::get<BetaTree>(st.parts.at(1)));
      }
    }
    case Cls::Deco: {
      switch (st.kind) {
        case DecompStep::Base: return baseObject(c);
        case DecompStep::Wrap: return deltaT(std::get<DecoTree>(st.parts.at(0)), st.i);
        case DecompStep::Graft: {
          DecoTree t = std::get<DecoTree>(st.parts.at(0));
          t.root.children.insert(t.root.children.begin(), TreeNode{-1, {}});
          return t;
        }
        default:
          return oplusT(std::get<DecoTree>(st.parts.at(0)), st.i,
                        std::get<DecoTree>(st.parts.at(1)));
      }
    }
    case Cls::Map: return composeMap(st, scheme);
    default: {
      switch (st.kind) {
        case DecompStep::Base: return baseObject(c);
        case DecompStep::Wrap: return deltaI(std::get<SyncInterval>(st.parts.at(0)), st.i);
        case DecompStep::Graft: {
          const auto& iv = std::get<SyncInterval>(st.parts.at(0));
          return SyncInterval{DyckWord("ud" + iv.lower.steps), DyckWord("ud" + iv.upper.steps)};
        }
        default: {
          const auto& h = std::get<SyncInterval>(st.parts.at(0));
          const auto& t = std::get<SyncInterval>(st.parts.at(1));
          SyncInterval d = deltaI(h, st.i);
          return SyncInterval{DyckWord(d.lower.steps + t.lower.steps),
                              DyckWord(d.upper.steps + t.upper.steps)};
        }
      }
    }
  }
}

std::string stepToJson(const DecompStep& s) {
  auto quote = [](const std::string& v) {
    std::string out = "\"";
    for (char c : v) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  switch (s.kind) {
    case DecompStep::Base: return "{\"kind\":\"base\"}";
    case DecompStep::Wrap:
      return "{\"kind\":\"wrap\",\"i\":" + std::to_string(s.i) +
             ",\"inner\":" + quote(encodeObj(s.parts.at(0))) + "}";
    case DecompStep::Graft:
      return "{\"kind\":\"graft\",\"inner\":" + quote(encodeObj(s.parts.at(0))) + "}";
    default:
      return "{\"kind\":\"join\",\"i\":" + std::to_string(s.i) +
             ",\"head\":" + quote(encodeObj(s.parts.at(0))) +
             ",\"tail\":" + quote(encodeObj(s.parts.at(1))) + "}";
  }
}

}  // namespace nsp
