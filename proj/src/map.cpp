#include "nsp/map.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace nsp {

int faceNext(const RootedMap& m, int d) { return alphaDart(m.sigma[d]); }

int sigmaInv(const RootedMap& m, int d) {
  for (int x = 0; x < 2 * m.E; ++x)
    if (m.sigma[x] == d) return x;
  throw std::logic_error("sigmaInv: not a permutation");
}

int faceNextInv(const RootedMap& m, int d) { return sigmaInv(m, alphaDart(d)); }

std::vector<int> vertexIds(const RootedMap& m) {
  std::vector<int> id(2 * m.E, -1);
  int next = 0;
  for (int d = 0; d < 2 * m.E; ++d) {
    if (id[d] != -1) continue;
    for (int x = d; id[x] == -1; x = m.sigma[x]) id[x] = next;
    ++next;
  }
  return id;
}

namespace {

int orbitCount(int n, const std::vector<int>& next) {
  std::vector<char> seen(n, 0);
  int cnt = 0;
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    ++cnt;
    for (int x = d; !seen[x]; x = next[x]) seen[x] = 1;
  }
  return cnt;
}

}  // namespace

int vertexCount(const RootedMap& m) { return orbitCount(2 * m.E, m.sigma); }

int faceCount(const RootedMap& m) {
  std::vector<int> fn(2 * m.E);
  for (int d = 0; d < 2 * m.E; ++d) fn[d] = faceNext(m, d);
  return orbitCount(2 * m.E, fn);
}

std::vector<int> faceOrbit(const RootedMap& m, int dart) {
  std::vector<int> out{dart};
  for (int x = faceNext(m, dart); x != dart; x = faceNext(m, x)) out.push_back(x);
  return out;
}

std::vector<int> vertexOrbit(const RootedMap& m, int dart) {
  std::vector<int> out{dart};
  for (int x = m.sigma[dart]; x != dart; x = m.sigma[x]) out.push_back(x);
  return out;
}

int degStat(const RootedMap& m) {
  return static_cast<int>(vertexOrbit(m, m.root).size()) - 1;
}

int fdegStat(const RootedMap& m) {
  return static_cast<int>(faceOrbit(m, m.root).size()) - 1;
}

namespace {

// Cut-vertex test on the underlying multigraph via lowpoint DFS over edge
// ids (parallel edges count as distinct).
bool hasCutVertex(int nVertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<std::pair<int, int>>> adj(nVertices);  // (other, edgeId)
  for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
    adj[edges[k].first].push_back({edges[k].second, k});
    adj[edges[k].second].push_back({edges[k].first, k});
  }
  std::vector<int> disc(nVertices, -1), low(nVertices, 0);
  int timer = 0;
  bool cut = false;
  auto dfs = [&](auto&& self, int v, int parentEdge) -> void {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (auto [w, eid] : adj[v]) {
      if (eid == parentEdge) continue;
      if (disc[w] == -1) {
        ++children;
        self(self, w, eid);
        low[v] = std::min(low[v], low[w]);
        if (parentEdge != -1 && low[w] >= disc[v]) cut = true;
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parentEdge == -1 && children > 1) cut = true;
  };
  if (nVertices > 0) dfs(dfs, 0, -1);
  return cut;
}

}  // namespace

std::vector<std::string> validateMap(const RootedMap& m) {
  std::vector<std::string> out;
  int n = 2 * m.E;
  if (m.E < 2) out.push_back("map: fewer than 2 edges");
  if (static_cast<int>(m.sigma.size()) != n) {
    out.push_back("map: sigma size != 2E");
    return out;
  }
  if (m.root < 0 || m.root >= n) {
    out.push_back("map: root dart out of range");
    return out;
  }
  std::vector<char> hit(n, 0);
  for (int d = 0; d < n; ++d) {
    if (m.sigma[d] < 0 || m.sigma[d] >= n || hit[m.sigma[d]]) {
      out.push_back("map: sigma is not a permutation");
      return out;
    }
    hit[m.sigma[d]] = 1;
  }
  // Connectivity under <sigma, alpha>.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    for (int x : {m.sigma[d], alphaDart(d)}) {
      if (!seen[x]) {
        seen[x] = 1;
        stack.push_back(x);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    out.push_back("map: not connected");
    return out;
  }
  int V = vertexCount(m), F = faceCount(m);
  if (V - m.E + F != 2) out.push_back("map: genus is not 0");
  auto vid = vertexIds(m);
  std::vector<std::pair<int, int>> edges;
  bool loop = false;
  for (int k = 0; k < m.E; ++k) {
    if (vid[2 * k] == vid[2 * k + 1]) loop = true;
    edges.push_back({vid[2 * k], vid[2 * k + 1]});
  }
  if (loop) out.push_back("map: loop edge");
  if (!loop && hasCutVertex(V, edges))
    out.push_back("map: cut vertex / not non-separable");
  return out;
}

bool isNsp(const RootedMap& m) { return validateMap(m).empty(); }

RootedMap canonicalForm(const RootedMap& m) {
  int n = 2 * m.E;
  std::vector<int> newId(n, -1), byNew(n, -1);
  int next = 0;
  auto assign = [&](int d) {
    if (newId[d] != -1) return;
    newId[d] = next;
    byNew[next] = d;
    newId[alphaDart(d)] = next + 1;
    byNew[next + 1] = alphaDart(d);
    next += 2;
  };
  assign(m.root);
  for (int i = 0; i < n && i < next; ++i) assign(m.sigma[byNew[i]]);
  if (next != n) throw std::invalid_argument("canonicalForm: map not connected");
  RootedMap out;
  out.E = m.E;
  out.root = 0;
  out.sigma.assign(n, 0);
  for (int d = 0; d < n; ++d) out.sigma[newId[d]] = newId[m.sigma[d]];
  return out;
}

std::string encodeMap(const RootedMap& m) {
  std::string s = "{\"E\":" + std::to_string(m.E) + ",\"sigma\":[";
  for (size_t i = 0; i < m.sigma.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m.sigma[i]);
  }
  s += "],\"root\":" + std::to_string(m.root) + "}";
  return s;
}

RootedMap decodeMap(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("map decode: ") + e.what());
  }
  if (!j.is_object() || !j.contains("E") || !j.contains("sigma") || !j.contains("root"))
    throw std::runtime_error("map decode: need object with E, sigma, root");
  if (!j["E"].is_number_integer() || !j["root"].is_number_integer() || !j["sigma"].is_array())
    throw std::runtime_error("map decode: bad field types");
  RootedMap m;
  m.E = j["E"].get<int>();
  m.root = j["root"].get<int>();
  for (const auto& v : j["sigma"]) {
    if (!v.is_number_integer()) throw std::runtime_error("map decode: sigma entries must be ints");
    m.sigma.push_back(v.get<int>());
  }
  if (m.E < 0 || static_cast<int>(m.sigma.size()) != 2 * m.E)
    throw std::runtime_error("map decode: sigma length must be 2E");
  return m;
}

namespace {

// Compacts a rotation table with dead darts (sigma[d] == -1 marks dead);
// surviving pairs are renumbered in increasing order. `track` darts are
// rewritten to the new labels.
RootedMap compact(const std::vector<int>& sigma, int root) {
  int n = static_cast<int>(sigma.size());
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
  for (int d = 0; d < n; ++d)
    if (sigma[d] != -1) out.sigma[newId[d]] = newId[sigma[d]];
  if (root < 0 || newId[root] == -1) throw std::invalid_argument("compact: bad root");
  out.root = newId[root];
  return out;
}

// Removes dart d from its rotation (predecessor skips to sigma[d]).
void unlink(std::vector<int>& sigma, int d) {
  if (sigma[d] == d) {
    sigma[d] = -1;
    return;
  }
  int p = d;
  while (sigma[p] != d) p = sigma[p];
  sigma[p] = sigma[d];
  sigma[d] = -1;
}

}  // namespace

RootedMap withEdgeDeleted(const RootedMap& m, int dart, int newRoot) {
  int a = dart & ~1, b = a + 1;
  if (newRoot == a || newRoot == b)
    throw std::invalid_argument("withEdgeDeleted: new root on the removed edge");
  std::vector<int> sigma = m.sigma;
  unlink(sigma, a);
  unlink(sigma, b);
  return compact(sigma, newRoot);
}

RootedMap withEdgeContracted(const RootedMap& m, int dart, int newRoot) {
  int a = dart & ~1, b = a + 1;
  if (newRoot == a || newRoot == b)
    throw std::invalid_argument("withEdgeContracted: new root on the removed edge");
  std::vector<int> sigma = m.sigma;
  int sa = sigma[a], sb = sigma[b];
  if (sa == a && sb == b)
    throw std::invalid_argument("withEdgeContracted: isolated edge");
  if (sa == a) {
    // Endpoint of a has degree 1: just drop b from its rotation.
    unlink(sigma, b);
    sigma[a] = -1;
  } else if (sb == b) {
    unlink(sigma, a);
    sigma[b] = -1;
  } else {
    // Splice the two rotations: pred(a) -> sigma(b), pred(b) -> sigma(a).
    int pa = a, pb = b;
    while (sigma[pa] != a) pa = sigma[pa];
    while (sigma[pb] != b) pb = sigma[pb];
    sigma[pa] = sb;
    sigma[pb] = sa;
    sigma[a] = sigma[b] = -1;
  }
  return compact(sigma, newRoot);
}

RootedMap dualMap(const RootedMap& m) {
  RootedMap out;
  out.E = m.E;
  out.sigma.assign(2 * m.E, 0);
  // The dual rotation is the inverse face permutation (the geometric dual
  // flips orientation), and the dual root is the next dart along the root
  // face. This puts the dual root vertex on the outer face (deg(dual) =
  // fdeg) and makes dual an involution up to canonical form.
  for (int d = 0; d < 2 * m.E; ++d) out.sigma[faceNext(m, d)] = d;
  out.root = faceNext(m, m.root);
  return out;
}

RootedMap nextRoot(const RootedMap& m) {
  RootedMap out = m;
  out.root = faceNextInv(m, m.root);
  return out;
}

}  // namespace nsp
