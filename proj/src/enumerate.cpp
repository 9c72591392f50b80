#include "nsp/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "nsp/involutions.hpp"

namespace nsp {

namespace {

std::string sortKey(const Obj& o) { return encodeObj(o); }

}  // namespace

const std::vector<Obj>& generate(Cls c, int n, Scheme scheme) {
  if (n < 1) throw std::invalid_argument("generate: size must be positive");
  static std::map<std::tuple<int, int, int>, std::vector<Obj>> memo;
  auto key = std::make_tuple(static_cast<int>(c), n, static_cast<int>(scheme));
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<Obj> out;
  if (n == 1) {
    out.push_back(baseObject(c));
  } else {
    std::map<std::string, Obj> seen;
    auto add = [&](Obj o) {
      if (const auto* m = std::get_if<RootedMap>(&o)) o = Obj{canonicalForm(*m)};
      std::string k = sortKey(o);
      seen.emplace(std::move(k), std::move(o));
    };
    for (const auto& x : generate(c, n - 1, scheme)) {
      for (int i = 1; i <= sizeStat(x, scheme); ++i)
        add(compose(DecompStep{DecompStep::Wrap, i, {x}}, c, scheme));
      add(compose(DecompStep{DecompStep::Graft, 0, {x}}, c, scheme));
    }
    for (int n1 = 1; n1 <= n - 2; ++n1)
      for (const auto& h : generate(c, n1, scheme))
        for (const auto& t : generate(c, n - 1 - n1, scheme))
          for (int i = 1; i <= sizeStat(h, scheme); ++i)
            add(compose(DecompStep{DecompStep::Join, i, {h, t}}, c, scheme));
    for (auto& [k, o] : seen) out.push_back(std::move(o));
  }
  return memo.emplace(key, std::move(out)).first->second;
}

int bruteForceCeiling(Cls c) { return c == Cls::Map ? 5 : 7; }

namespace {

// Plane tree shapes with the given edge count, children left to right.
const std::vector<TreeNode>& shapes(int edges) {
  static std::map<int, std::vector<TreeNode>> memo;
  auto it = memo.find(edges);
  if (it != memo.end()) return it->second;
  std::vector<TreeNode> out;
  if (edges == 0) {
    out.push_back(TreeNode{0, {}});
  } else {
    // First subtree takes k edges plus its stem; the rest keeps the root.
    for (int k = 0; k <= edges - 1; ++k)
      for (const TreeNode& first : shapes(k))
        for (const TreeNode& rest : shapes(edges - 1 - k)) {
          TreeNode t = rest;
          t.children.insert(t.children.begin(), first);
          out.push_back(std::move(t));
        }
  }
  return memo.emplace(edges, std::move(out)).first->second;
}

// All label assignments over one shape, leaves 1, internal nodes bounded by
// the sum of their children; validation filters the rest.
void betaFill(TreeNode& node, bool isRoot, const std::function<void()>& emit) {
  std::function<void(std::size_t)> fillChildren = [&](std::size_t k) {
    if (k == node.children.size()) {
      int sum = 0;
      for (const auto& ch : node.children) sum += ch.label;
      if (isRoot) {
        node.label = sum;
        emit();
        return;
      }
      for (int l = 1; l <= sum; ++l) {
        node.label = l;
        emit();
      }
      return;
    }
    TreeNode& ch = node.children[k];
    if (ch.isLeaf()) {
      ch.label = 1;
      fillChildren(k + 1);
    } else {
      betaFill(ch, false, [&] { fillChildren(k + 1); });
    }
  };
  fillChildren(0);
}

// Leaf labels from -1 to the parent depth minus 1; validation filters.
void decoFill(TreeNode& node, int depth, const std::function<void()>& emit) {
  std::function<void(std::size_t)> fillChildren = [&](std::size_t k) {
    if (k == node.children.size()) {
      emit();
      return;
    }
    TreeNode& ch = node.children[k];
    if (ch.isLeaf()) {
      for (int l = -1; l <= depth - 1; ++l) {
        ch.label = l;
        fillChildren(k + 1);
      }
    } else {
      decoFill(ch, depth + 1, [&] { fillChildren(k + 1); });
    }
  };
  fillChildren(0);
}

std::vector<Obj> bruteTrees(Cls c, int n) {
  std::vector<Obj> out;
  for (const TreeNode& shape : shapes(n)) {
    TreeNode t = shape;
    if (t.isLeaf()) continue;
    if (c == Cls::Beta) {
      betaFill(t, true, [&] {
        BetaTree b{t};
        if (validateBeta(b).empty()) out.push_back(Obj{b});
      });
    } else {
      decoFill(t, 0, [&] {
        DecoTree d{t};
        if (validateDeco(d).empty()) out.push_back(Obj{d});
      });
    }
  }
  return out;
}

std::vector<Obj> bruteIntervals(int n) {
  std::vector<Obj> out;
  for (const DyckWord& p : allDyckWords(n))
    for (const DyckWord& q : allDyckWords(n)) {
      SyncInterval iv{p, q};
      if (validateInterval(iv).empty()) out.push_back(Obj{iv});
    }
  return out;
}

// All rotation systems over 2E darts with root dart 0, built cycle by cycle
// (leader = smallest unplaced dart). Pruned: no fixed points, no cycle with
// both darts of an edge, at most E cycles, and fresh edges always enter
// through their smallest even dart so that edge relabelings are not explored
// twice. Every rooted map still appears; canonicalForm deduplicates.
std::vector<Obj> bruteMaps(int E) {
  int n2 = 2 * E;
  std::vector<int> sigma(n2, -1);
  std::vector<char> placed(n2, 0);
  std::vector<int> cycleOf(n2, -1);
  std::set<std::string> seen;
  std::vector<Obj> out;
  int cycles = 0;
  auto candidates = [&](std::vector<int>& cand) {
    cand.clear();
    int fresh = -1;
    for (int d = 0; d < n2; ++d) {
      if (placed[d]) continue;
      if (placed[alphaDart(d)]) {
        cand.push_back(d);
      } else if (fresh == -1 && d % 2 == 0) {
        fresh = d;
      }
    }
    if (fresh != -1) cand.push_back(fresh);
  };
  std::function<void()> nextCycle = [&] {
    int leader = -1;
    for (int d = 0; d < n2; ++d)
      if (!placed[d]) {
        // A fresh leader must be the even dart of its edge.
        leader = placed[alphaDart(d)] || d % 2 == 0 ? d : -1;
        break;
      }
    if (leader == -1) {
      bool full = true;
      for (int d = 0; d < n2; ++d)
        if (!placed[d]) full = false;
      if (!full) return;
      RootedMap m{E, sigma, 0};
      if (!isNsp(m)) return;
      RootedMap c = canonicalForm(m);
      if (seen.insert(encodeMap(c)).second) out.push_back(Obj{std::move(c)});
      return;
    }
    if (cycles == E) return;  // genus 0 allows at most E vertices
    int id = cycles++;
    placed[leader] = 1;
    cycleOf[leader] = id;
    std::function<void(int, int)> extend = [&](int cur, int len) {
      if (len >= 2) {
        sigma[cur] = leader;
        nextCycle();
        sigma[cur] = -1;
      }
      std::vector<int> cand;
      candidates(cand);
      for (int d : cand) {
        if (cycleOf[alphaDart(d)] == id) continue;
        sigma[cur] = d;
        placed[d] = 1;
        cycleOf[d] = id;
        extend(d, len + 1);
        cycleOf[d] = -1;
        placed[d] = 0;
        sigma[cur] = -1;
      }
    };
    extend(leader, 1);
    cycleOf[leader] = -1;
    placed[leader] = 0;
    --cycles;
  };
  nextCycle();
  return out;
}

}  // namespace

std::vector<Obj> bruteForce(Cls c, int n) {
  if (n < 1 || n > bruteForceCeiling(c))
    throw std::invalid_argument("bruteForce: size beyond oracle ceiling");
  std::vector<Obj> out;
  switch (c) {
    case Cls::Beta:
    case Cls::Deco:
      out = bruteTrees(c, n);
      break;
    case Cls::Interval:
      out = bruteIntervals(n);
      break;
    case Cls::Map:
      out = bruteMaps(n + 1);
      break;
  }
  std::sort(out.begin(), out.end(),
            [](const Obj& a, const Obj& b) { return sortKey(a) < sortKey(b); });
  return out;
}

CountTable countReport(int maxN) {
  if (maxN < 1 || maxN > 7) throw std::invalid_argument("countReport: maxN out of range");
  CountTable t;
  for (int n = 1; n <= maxN; ++n) {
    CountRow row;
    row.n = n;
    row.beta = static_cast<long long>(generate(Cls::Beta, n).size());
    row.deco = static_cast<long long>(generate(Cls::Deco, n).size());
    row.map = static_cast<long long>(generate(Cls::Map, n).size());
    row.interval = static_cast<long long>(generate(Cls::Interval, n).size());
    for (const auto& o : generate(Cls::Beta, n)) {
      const auto& b = std::get<BetaTree>(o);
      if (hBeta(b) == b) ++row.fixH;
    }
    for (const auto& o : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(o);
      if (canonicalForm(dualMap(m)) == canonicalForm(m)) ++row.selfDual;
    }
    for (const auto& o : generate(Cls::Interval, n)) {
      const auto& iv = std::get<SyncInterval>(o);
      if (mirInterval(iv) == iv) ++row.fixMir;
    }
    if (!(row.beta == row.deco && row.deco == row.map && row.map == row.interval))
      t.failures.push_back("n=" + std::to_string(n) + ": class cardinalities differ");
    if (!(row.fixH == row.selfDual && row.selfDual == row.fixMir))
      t.failures.push_back("n=" + std::to_string(n) + ": fixed-point counts differ");
    t.rows.push_back(row);
  }
  return t;
}

std::string countTableTsv(const CountTable& t) {
  std::string out = "n\tbeta\tdeco\tmap\tinterval\tfixH\tselfDual\tfixMir\n";
  for (const auto& r : t.rows) {
    out += std::to_string(r.n) + "\t" + std::to_string(r.beta) + "\t" + std::to_string(r.deco) +
           "\t" + std::to_string(r.map) + "\t" + std::to_string(r.interval) + "\t" +
           std::to_string(r.fixH) + "\t" + std::to_string(r.selfDual) + "\t" +
           std::to_string(r.fixMir) + "\n";
  }
  for (const auto& f : t.failures) out += "FAIL\t" + f + "\n";
  return out;
}

std::string countTableJson(const CountTable& t) {
  std::string out = "{\"rows\":[";
  bool first = true;
  for (const auto& r : t.rows) {
    if (!first) out += ",";
    first = false;
    out += "{\"n\":" + std::to_string(r.n) + ",\"beta\":" + std::to_string(r.beta) +
           ",\"deco\":" + std::to_string(r.deco) + ",\"map\":" + std::to_string(r.map) +
           ",\"interval\":" + std::to_string(r.interval) + ",\"fixH\":" + std::to_string(r.fixH) +
           ",\"selfDual\":" + std::to_string(r.selfDual) +
           ",\"fixMir\":" + std::to_string(r.fixMir) + "}";
  }
  out += "],\"failures\":[";
  first = true;
  for (const auto& f : t.failures) {
    if (!first) out += ",";
    first = false;
    out += "\"" + f + "\"";
  }
  return out + "]}";
}

}  // namespace nsp
