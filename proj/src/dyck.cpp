#include "nsp/dyck.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace nsp {

bool isDyckFactor(const std::string& s) {
  int h = 0;
  for (char c : s) {
    if (c == 'u')
      ++h;
    else if (c == 'd')
      --h;
    else
      return false;
    if (h < 0) return false;
  }
  return h == 0;
}

bool isDyck(const std::string& s) { return !s.empty() && isDyckFactor(s); }

std::vector<std::string> validateDyck(const DyckWord& d) {
  std::vector<std::string> out;
  if (d.steps.empty()) out.push_back("dyck: empty word");
  int h = 0;
  for (size_t i = 0; i < d.steps.size(); ++i) {
    char c = d.steps[i];
    if (c != 'u' && c != 'd') {
      out.push_back("dyck: bad letter at position " + std::to_string(i));
      return out;
    }
    h += (c == 'u') ? 1 : -1;
    if (h < 0) {
      out.push_back("dyck: prefix drops below axis at position " + std::to_string(i));
      return out;
    }
  }
  if (h != 0) out.push_back("dyck: unbalanced word");
  return out;
}

std::string dyckType(const DyckWord& d) {
  // One letter per up step except the last: E if the next step is also up.
  std::string w;
  const std::string& s = d.steps;
  int ups = 0, n = d.size();
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'u') continue;
    if (++ups == n) break;
    w.push_back(s[i + 1] == 'u' ? 'E' : 'N');
  }
  return w;
}

std::vector<DyckWord> tamariCoversDown(const DyckWord& d) {
  std::vector<DyckWord> out;
  const std::string& s = d.steps;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'd') continue;
    // Move the d left across any non-empty Dyck factor ending just before
    // it; the rewritten word sits below the original.
    for (size_t j = 0; j < i; ++j) {
      if (!isDyckFactor(s.substr(j, i - j))) continue;
      std::string t = s.substr(0, j) + "d" + s.substr(j, i - j) + s.substr(i + 1);
      out.emplace_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::vector<DyckWord>& allDyckWords(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<DyckWord>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<DyckWord> words;
  std::string cur;
  // Generate in lexicographic order ('d' < 'u').
  auto rec = [&](auto&& self, int open, int placedU) -> void {
    if (static_cast<int>(cur.size()) == 2 * n) {
      words.emplace_back(cur);
      return;
    }
    if (open > 0) {
      cur.push_back('d');
      self(self, open - 1, placedU);
      cur.pop_back();
    }
    if (placedU < n) {
      cur.push_back('u');
      self(self, open + 1, placedU + 1);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(rec, 0, 0);
  return cache.emplace(n, std::move(words)).first->second;
}

namespace {

// Reachability closure of the downward covering, one table per size.
struct TamariTable {
  std::map<std::string, int> index;
  std::vector<std::vector<char>> below;  // below[i][j]: word j <= word i
};

const TamariTable& tamariTable(int n) {
  static std::mutex mu;
  static std::map<int, TamariTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  TamariTable t;
  const auto& words = allDyckWords(n);
  const int m = static_cast<int>(words.size());
  for (int i = 0; i < m; ++i) t.index[words[i].steps] = i;
  t.below.assign(m, std::vector<char>(m, 0));
  // Process so that all covers of a word are merged after their own closure
  // is ready: iterate until fixpoint (sizes are tiny).
  std::vector<std::vector<int>> cov(m);
  for (int i = 0; i < m; ++i) {
    for (const auto& c : tamariCoversDown(words[i])) cov[i].push_back(t.index.at(c.steps));
    t.below[i][i] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < m; ++i)
      for (int j : cov[i])
        for (int k = 0; k < m; ++k)
          if (t.below[j][k] && !t.below[i][k]) {
            t.below[i][k] = 1;
            changed = true;
          }
  }
  return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

bool tamariLeq(const DyckWord& a, const DyckWord& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tamariLeq: size mismatch");
  if (a == b) return true;
  const auto& t = tamariTable(a.size());
  auto ia = t.index.find(a.steps), ib = t.index.find(b.steps);
  if (ia == t.index.end() || ib == t.index.end())
    throw std::invalid_argument("tamariLeq: not a Dyck word");
  return t.below[ib->second][ia->second] != 0;
}

bool tamariLeqNaive(const DyckWord& a, const DyckWord& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tamariLeqNaive: size mismatch");
  std::vector<DyckWord> frontier{b};
  std::vector<DyckWord> seen{b};
  while (!frontier.empty()) {
    DyckWord cur = frontier.back();
    frontier.pop_back();
    if (cur == a) return true;
    for (auto& nxt : tamariCoversDown(cur)) {
      if (std::find(seen.begin(), seen.end(), nxt) == seen.end()) {
        seen.push_back(nxt);
        frontier.push_back(nxt);
      }
    }
  }
  return false;
}

int dyckContacts(const DyckWord& d) {
  int h = 0, c = 0;
  for (char ch : d.steps) {
    h += (ch == 'u') ? 1 : -1;
    if (h == 0) ++c;
  }
  return c;
}

DyckWord mirDyck(const DyckWord& d) {
  const std::string& s = d.steps;
  if (s.empty()) return d;
  // Split at the last non-initial contact strictly before the end: D = D1 u D2 d.
  int h = 0;
  size_t split = 0;
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    h += (s[i] == 'u') ? 1 : -1;
    if (h == 0) split = i + 1;
  }
  DyckWord d1(s.substr(0, split));
  DyckWord d2(s.substr(split + 1, s.size() - split - 2));
  DyckWord m2 = mirDyck(d2), m1 = mirDyck(d1);
  return DyckWord(m2.steps + "u" + m1.steps + "d");
}

}  // namespace nsp
