#include "nsp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "nsp/bijections.hpp"
#include "nsp/enumerate.hpp"
#include "nsp/involutions.hpp"
#include "nsp/stats.hpp"

namespace nsp {

bool VerifyReport::ok() const {
  for (const auto& l : laws)
    if (!l.pass) return false;
  return true;
}

namespace {

constexpr Cls kClasses[] = {Cls::Beta, Cls::Deco, Cls::Map, Cls::Interval};

int capFor(Cls c, int maxSize) { return std::min(maxSize, c == Cls::Map ? 6 : 7); }

std::string witness(int n, const Obj& x, const std::string& detail = "") {
  std::string out = "n=" + std::to_string(n) + " " + clsName(clsOf(x)) + " " + encodeObj(x);
  if (!detail.empty()) out += " (" + detail + ")";
  return out;
}

bool objEq(const Obj& a, const Obj& b) {
  if (const auto* m = std::get_if<RootedMap>(&a))
    return canonicalForm(*m) == canonicalForm(std::get<RootedMap>(b));
  return a == b;
}

// Law bodies scan sizes ascending and objects in enumeration order, so the
// recorded counterexample is always the smallest one.
struct Law {
  std::string suite;
  std::string name;
  std::string note;
  std::function<std::string(int maxSize, unsigned seed)> run;  // first witness or ""
};

TreeNode shapeOf(const TreeNode& t) {
  TreeNode s;
  for (const auto& ch : t.children) s.children.push_back(shapeOf(ch));
  return s;
}

std::string lawCodecRoundtrip(int N, unsigned) {
  for (Cls c : kClasses)
    for (int n = 1; n <= capFor(c, N); ++n)
      for (const Obj& x : generate(c, n)) {
        Obj y = decodeObj(c, encodeObj(x));
        if (!(y == x)) return witness(n, x, "decode(encode) differs");
      }
  return "";
}

std::string lawEuler(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Map, N); ++n)
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      if (vertexCount(m) - m.E + faceCount(m) != 2) return witness(n, x, "V - E + F != 2");
    }
  return "";
}

std::string lawTamariAgree(int N, unsigned) {
  for (int n = 1; n <= std::min(N, 6); ++n)
    for (const DyckWord& a : allDyckWords(n))
      for (const DyckWord& b : allDyckWords(n))
        if (tamariLeq(a, b) != tamariLeqNaive(a, b))
          return "n=" + std::to_string(n) + " P=" + a.steps + " Q=" + b.steps;
  return "";
}

std::string lawTypeSync(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Interval, N); ++n)
    for (const Obj& x : generate(Cls::Interval, n)) {
      const auto& iv = std::get<SyncInterval>(x);
      if (dyckType(iv.lower) != dyckType(iv.upper)) return witness(n, x, "type words differ");
    }
  return "";
}

std::string lawCanonicalStable(int N, unsigned seed) {
  std::mt19937 rng(seed);
  for (int n = 1; n <= std::min(N, 5); ++n) {
    const auto& layer = generate(Cls::Map, n);
    for (int trial = 0; trial < 100; ++trial) {
      const auto& m = std::get<RootedMap>(layer[rng() % layer.size()]);
      if (canonicalForm(m) != m) return witness(n, Obj{m}, "not idempotent");
      // Random dart relabeling respecting the edge pairing.
      std::vector<int> edgePerm(m.E);
      for (int k = 0; k < m.E; ++k) edgePerm[k] = k;
      std::shuffle(edgePerm.begin(), edgePerm.end(), rng);
      std::vector<int> pi(2 * m.E);
      for (int k = 0; k < m.E; ++k) {
        int flip = rng() % 2;
        pi[2 * k] = 2 * edgePerm[k] + flip;
        pi[2 * k + 1] = 2 * edgePerm[k] + (1 - flip);
      }
      RootedMap r{m.E, std::vector<int>(2 * m.E), pi[m.root]};
      for (int d = 0; d < 2 * m.E; ++d) r.sigma[pi[d]] = pi[m.sigma[d]];
      if (canonicalForm(r) != m) return witness(n, Obj{m}, "relabeling changed canonical form");
    }
  }
  return "";
}

std::vector<Scheme> schemesOf(Cls c) {
  if (c == Cls::Map) return {Scheme::Parallel, Scheme::Series};
  return {Scheme::Parallel};
}

std::string lawComposeDecompose(int N, unsigned) {
  for (Cls c : kClasses)
    for (Scheme s : schemesOf(c))
      for (int n = 1; n <= capFor(c, N); ++n)
        for (const Obj& x : generate(c, n)) {
          Obj y = compose(decompose(x, s), c, s);
          if (!objEq(x, y)) return witness(n, x, "compose(decompose) differs");
        }
  return "";
}

bool stepEq(const DecompStep& a, const DecompStep& b) {
  if (a.kind != b.kind || a.i != b.i || a.parts.size() != b.parts.size()) return false;
  for (std::size_t j = 0; j < a.parts.size(); ++j)
    if (!objEq(a.parts[j], b.parts[j])) return false;
  return true;
}

// Runs over every constructible step whose result stays within the size cap;
// checks decompose(compose(step)) = step and that the result validates.
std::string forEachStep(int N, const std::function<std::string(Cls, Scheme, const DecompStep&)>& f) {
  for (Cls c : kClasses)
    for (Scheme s : schemesOf(c)) {
      int cap = capFor(c, N);
      for (int n = 2; n <= cap; ++n) {
        for (const Obj& x : generate(c, n - 1)) {
          for (int i = 1; i <= sizeStat(x, s); ++i)
            if (auto w = f(c, s, DecompStep{DecompStep::Wrap, i, {x}}); !w.empty()) return w;
          if (auto w = f(c, s, DecompStep{DecompStep::Graft, 0, {x}}); !w.empty()) return w;
        }
        for (int n1 = 1; n1 <= n - 2; ++n1)
          for (const Obj& h : generate(c, n1))
            for (const Obj& t : generate(c, n - 1 - n1))
              for (int i = 1; i <= sizeStat(h, s); ++i)
                if (auto w = f(c, s, DecompStep{DecompStep::Join, i, {h, t}}); !w.empty()) return w;
      }
    }
  return "";
}

std::string lawDecomposeCompose(int N, unsigned) {
  return forEachStep(N, [](Cls c, Scheme s, const DecompStep& step) -> std::string {
    Obj x = compose(step, c, s);
    if (!stepEq(decompose(x, s), step)) return witness(objSize(x), x, "decompose(compose) differs");
    return "";
  });
}

std::string lawComposeValid(int N, unsigned) {
  return forEachStep(std::min(N, 6), [](Cls c, Scheme s, const DecompStep& step) -> std::string {
    Obj x = compose(step, c, s);
    auto errs = validateObj(x);
    if (!errs.empty()) return witness(objSize(x), x, errs.front());
    return "";
  });
}

std::string lawSizeStat(int N, unsigned) {
  for (Cls c : kClasses)
    for (Scheme s : schemesOf(c))
      for (int n = 1; n <= capFor(c, N); ++n)
        for (const Obj& x : generate(c, n)) {
          DecompStep step = decompose(x, s);
          int stat = sizeStat(x, s);
          switch (step.kind) {
            case DecompStep::Base:
              break;
            case DecompStep::Wrap:
              if (stat != step.i) return witness(n, x, "wrap: sizeStat != i");
              break;
            case DecompStep::Graft:
              if (stat != sizeStat(step.parts[0], s) + 1)
                return witness(n, x, "graft: sizeStat != inner + 1");
              break;
            case DecompStep::Join:
              if (stat != step.i + sizeStat(step.parts[1], s))
                return witness(n, x, "join: sizeStat != i + tail");
              break;
          }
        }
  return "";
}

std::string lawTCanonical(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Map, N); ++n)
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      DecoTree t = mapToDeco(m);
      if (!(Obj{t} == transport(x, Cls::Deco))) return witness(n, x, "T != transport");
      if (!(transport(x, Cls::Beta) == transport(Obj{t}, Cls::Beta)))
        return witness(n, x, "phi_M != phi_T o T");
    }
  return "";
}

std::string lawICanonical(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Deco, N); ++n)
    for (const Obj& x : generate(Cls::Deco, n)) {
      const auto& t = std::get<DecoTree>(x);
      SyncInterval iv = decoToInterval(t);
      if (!(Obj{iv} == transport(x, Cls::Interval))) return witness(n, x, "I != transport");
      if (!(transport(x, Cls::Beta) == transport(Obj{iv}, Cls::Beta)))
        return witness(n, x, "transport disagrees through I");
    }
  return "";
}

std::string lawVarphiCanonical(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Deco, N); ++n)
    for (const Obj& x : generate(Cls::Deco, n)) {
      const auto& t = std::get<DecoTree>(x);
      BetaTree b = decoToBetaDirect(t);
      if (!(Obj{b} == transport(x, Cls::Beta))) return witness(n, x, "varphi_T != transport");
      if (shapeOf(b.root) != shapeOf(t.root)) return witness(n, x, "shape changed");
    }
  return "";
}

std::string lawFreeLeafContact(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Deco, N); ++n)
    for (const Obj& x : generate(Cls::Deco, n)) {
      const auto& t = std::get<DecoTree>(x);
      if (flCount(t) != contStat(decoToInterval(t))) return witness(n, x, "fl != cont");
    }
  return "";
}

std::string lawDegFl(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Map, N); ++n)
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      if (degStat(m) != flCount(mapToDeco(m))) return witness(n, x, "deg != fl");
    }
  return "";
}

std::string lawTransportBijective(int N, unsigned) {
  for (int n = 1; n <= std::min(N, 6); ++n)
    for (Cls src : kClasses)
      for (Cls dst : kClasses) {
        if (src == dst) continue;
        std::set<std::string> image;
        for (const Obj& x : generate(src, n)) {
          Obj y = transport(x, dst);
          if (const auto* m = std::get_if<RootedMap>(&y)) y = Obj{canonicalForm(*m)};
          image.insert(encodeObj(y));
        }
        std::set<std::string> want;
        for (const Obj& y : generate(dst, n)) want.insert(encodeObj(y));
        if (image != want)
          return "n=" + std::to_string(n) + " " + clsName(src) + "->" + clsName(dst) +
                 " image is not the full class";
      }
  return "";
}

std::string lawDualInvolution(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Map, N); ++n)
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      if (canonicalForm(dualMap(dualMap(m))) != m) return witness(n, x, "dual^2 != id");
    }
  return "";
}

std::string lawHInvolution(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Beta, N); ++n)
    for (const Obj& x : generate(Cls::Beta, n)) {
      const auto& b = std::get<BetaTree>(x);
      if (!(hBeta(hBeta(b)) == b)) return witness(n, x, "h^2 != id");
      if (rootLabel(b) != rpathLen(hBeta(b).root)) return witness(n, x, "root != rpath(h)");
    }
  return "";
}

std::string lawHTInvolution(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Deco, N); ++n)
    for (const Obj& x : generate(Cls::Deco, n)) {
      const auto& t = std::get<DecoTree>(x);
      if (!(hDeco(hDeco(t)) == t)) return witness(n, x, "hT^2 != id");
    }
  return "";
}

std::string lawMirInvolution(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Interval, N); ++n)
    for (const Obj& x : generate(Cls::Interval, n)) {
      const auto& iv = std::get<SyncInterval>(x);
      if (!(mirInterval(mirInterval(iv)) == iv)) return witness(n, x, "mir^2 != id");
    }
  return "";
}

std::string lawDualHT(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Map, N); ++n)
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      if (!(mapToDeco(dualMap(m)) == hDeco(mapToDeco(m))))
        return witness(n, x, "T o dual != hT o T");
    }
  return "";
}

std::string lawHTH(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Deco, N); ++n)
    for (const Obj& x : generate(Cls::Deco, n)) {
      const auto& t = std::get<DecoTree>(x);
      if (!(decoToBetaDirect(hDeco(t)) == hBeta(decoToBetaDirect(t))))
        return witness(n, x, "varphi_T o hT != h o varphi_T");
    }
  return "";
}

std::string lawMirHT(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Deco, N); ++n)
    for (const Obj& x : generate(Cls::Deco, n)) {
      const auto& t = std::get<DecoTree>(x);
      if (!(mirInterval(decoToInterval(t)) == decoToInterval(hDeco(t))))
        return witness(n, x, "mir o I != I o hT");
    }
  return "";
}

std::string lawMirTrailing(int N, unsigned) {
  for (int n = 1; n <= std::min(N, 7); ++n)
    for (const DyckWord& p : allDyckWords(n)) {
      const std::string& q = mirDyck(p).steps;
      int run = 0;
      for (auto it = q.rbegin(); it != q.rend() && *it == 'd'; ++it) ++run;
      if (run != dyckContacts(p)) return "P=" + p.steps + " mir=" + q;
    }
  return "";
}

std::string lawSeriesParallel(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Map, N); ++n)
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      Obj lhs = transport(x, Cls::Beta, Scheme::Series);
      Obj rhs = transport(Obj{dualMap(nextRoot(m))}, Cls::Beta, Scheme::Parallel);
      if (!(lhs == rhs)) return witness(n, x, "series transport != parallel o dual o NR");
    }
  return "";
}

std::string lawMirOrderReversing(int N, unsigned) {
  for (int n = 1; n <= std::min(N, 5); ++n)
    for (const DyckWord& a : allDyckWords(n))
      for (const DyckWord& b : allDyckWords(n))
        if (tamariLeq(a, b) != tamariLeq(mirDyck(b), mirDyck(a)))
          return "n=" + std::to_string(n) + " P=" + a.steps + " Q=" + b.steps;
  return "";
}

std::string lawFixedPoints(int N, unsigned) {
  CountTable t = countReport(std::min(N, 6));
  if (!t.failures.empty()) return t.failures.front();
  if (t.rows[0].fixH != 1) return "n=1 expected a single self-fixed object per involution";
  if (t.rows.size() > 1 && t.rows[1].fixH != 0) return "n=2 expected no fixed points";
  return "";
}

std::string lawStatPhiT(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Deco, N); ++n)
    for (const Obj& x : generate(Cls::Deco, n)) {
      DecoStats st = statsDeco(std::get<DecoTree>(x));
      BetaStats sb = statsBeta(decoToBetaDirect(std::get<DecoTree>(x)));
      if (st.fl != sb.root) return witness(n, x, "fl != root");
      if (1 + st.dsub != sb.rsub) return witness(n, x, "1 + dsub != rsub");
      if (st.rfl != sb.gamma) return witness(n, x, "rfl != gamma");
    }
  return "";
}

std::string lawStatT(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Map, N); ++n)
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      DecoTree t = mapToDeco(m);
      MapStats sm = statsMap(m);
      DecoStats st = statsDeco(t);
      IntervalStats si = statsInterval(decoToInterval(t));
      if (sm.deg != st.fl || st.fl != si.cont) return witness(n, x, "deg/fl/cont");
      if (sm.face != 1 + st.leaf || sm.face != 1 + si.peak) return witness(n, x, "face/1+leaf/1+peak");
      if (sm.pcomp != st.sub || st.sub != si.contStar) return witness(n, x, "pcomp/sub/contStar");
      if (sm.fdeg != st.rpath || st.rpath != si.desc) return witness(n, x, "fdeg/rpath/desc");
      if (sm.ejoin != st.stem || st.stem != si.level) return witness(n, x, "ejoin/stem/level");
      if (sm.ecut != st.rfl || st.rfl != si.teeth) return witness(n, x, "ecut/rfl/teeth");
    }
  return "";
}

std::string lawStatVertex(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Map, N); ++n)
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      DecoTree t = mapToDeco(m);
      IntervalStats si = statsInterval(decoToInterval(t));
      int inner = statsDeco(t).inner;
      if (vertexCount(m) != 1 + inner || vertexCount(m) != 2 + si.dblu)
        return witness(n, x, "vertex/1+int/2+dblu");
    }
  return "";
}

std::string lawStatDsub(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Map, N); ++n)
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      if (statsDeco(mapToDeco(dualMap(m))).dsub + 1 != statsMap(m).pcomp)
        return witness(n, x, "dsub(T(dual)) + 1 != pcomp");
    }
  return "";
}

std::string lawStatDual(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Map, N); ++n)
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      MapStats a = statsMap(m), b = statsMap(dualMap(m));
      if (a.deg != b.fdeg || a.fdeg != b.deg) return witness(n, x, "(deg, fdeg)");
      if (a.face != b.vertex || a.vertex != b.face) return witness(n, x, "(face, vertex)");
      if (a.ejoin != b.ecut || a.ecut != b.ejoin) return witness(n, x, "(ejoin, ecut)");
    }
  return "";
}

std::string lawHExchange(int N, unsigned) {
  for (int n = 1; n <= capFor(Cls::Beta, N); ++n)
    for (const Obj& x : generate(Cls::Beta, n)) {
      BetaStats a = statsBeta(std::get<BetaTree>(x));
      BetaStats b = statsBeta(hBeta(std::get<BetaTree>(x)));
      if (a.leaf != b.inner || a.inner != b.leaf) return witness(n, x, "(leaf, int)");
      if (a.root != b.rpath || a.rpath != b.root) return witness(n, x, "(root, rpath)");
      if (a.gamma != b.stem || a.stem != b.gamma) return witness(n, x, "(gamma, stem)");
      if (a.sub != b.rsub || a.rsub != b.sub) return witness(n, x, "(sub, rsub)");
    }
  return "";
}

std::string lawOracle(int N, unsigned) {
  for (Cls c : kClasses)
    for (int n = 1; n <= std::min(N, bruteForceCeiling(c)); ++n) {
      const auto& gen = generate(c, n);
      auto bf = bruteForce(c, n);
      bool eq = gen.size() == bf.size();
      for (std::size_t j = 0; eq && j < bf.size(); ++j) eq = encodeObj(bf[j]) == encodeObj(gen[j]);
      if (!eq)
        return clsName(c) + " n=" + std::to_string(n) + ": generator " +
               std::to_string(gen.size()) + " objects, oracle " + std::to_string(bf.size());
    }
  return "";
}

std::string lawGenerateValid(int N, unsigned) {
  for (Cls c : kClasses)
    for (int n = 1; n <= capFor(c, N); ++n) {
      std::set<std::string> seen;
      for (const Obj& x : generate(c, n)) {
        auto errs = validateObj(x);
        if (!errs.empty()) return witness(n, x, errs.front());
        if (const auto* m = std::get_if<RootedMap>(&x))
          if (canonicalForm(*m) != *m) return witness(n, x, "not canonical");
        if (!seen.insert(encodeObj(x)).second) return witness(n, x, "duplicate");
      }
    }
  return "";
}

const std::vector<Law>& allLaws() {
  static const std::vector<Law> laws = {
      {"codecs", "codec-roundtrip", "", lawCodecRoundtrip},
      {"codecs", "euler-formula", "", lawEuler},
      {"codecs", "tamari-closure-agree", "", lawTamariAgree},
      {"codecs", "interval-type-sync", "", lawTypeSync},
      {"codecs", "canonical-form-stable", "", lawCanonicalStable},
      {"decomp", "compose-of-decompose", "", lawComposeDecompose},
      {"decomp", "decompose-of-compose", "", lawDecomposeCompose},
      {"decomp", "compose-validates", "", lawComposeValid},
      {"decomp", "size-statistic-laws", "", lawSizeStat},
      {"diagram", "exploration-canonical", "", lawTCanonical},
      {"diagram", "interval-canonical", "", lawICanonical},
      {"diagram", "relabeling-canonical", "", lawVarphiCanonical},
      {"diagram", "free-leaf-contact", "", lawFreeLeafContact},
      {"diagram", "deg-fl-transfer", "", lawDegFl},
      {"diagram", "transport-bijective", "", lawTransportBijective},
      {"involutions", "dual-involution", "", lawDualInvolution},
      {"involutions", "h-involution", "", lawHInvolution},
      {"involutions", "hT-involution", "", lawHTInvolution},
      {"involutions", "mir-involution", "", lawMirInvolution},
      {"involutions", "dual-conjugate-hT", "", lawDualHT},
      {"involutions", "hT-conjugate-h", "", lawHTH},
      {"involutions", "mir-conjugate-hT", "", lawMirHT},
      {"involutions", "mir-trailing-descent", "", lawMirTrailing},
      {"involutions", "series-to-parallel", "", lawSeriesParallel},
      {"involutions", "mir-order-reversing", "", lawMirOrderReversing},
      {"fixed-points", "fixed-point-counts", "", lawFixedPoints},
      {"stats-transfer", "relabeling-stat-transfer", "", lawStatPhiT},
      {"stats-transfer", "exploration-stat-transfer", "", lawStatT},
      {"stats-transfer", "vertex-column-corrected",
       "the vertex column holds as vertex = 1 + int = 2 + dblu, one more than the stated "
       "1 + dblu; witness map {\"E\":3,\"sigma\":[5,3,4,1,2,0],\"root\":4} with tree "
       "(* (* -1)) and interval [uudd,uudd]: vertex 3, int 2, dblu 1",
       lawStatVertex},
      {"stats-transfer", "dsub-pcomp-transfer", "", lawStatDsub},
      {"stats-transfer", "dual-stat-exchange", "", lawStatDual},
      {"stats-transfer", "h-stat-exchange", "", lawHExchange},
      {"oracle", "generator-matches-oracle", "", lawOracle},
      {"oracle", "generator-valid-unique", "", lawGenerateValid},
  };
  return laws;
}

// Populates every lazily built shared table (generator layers, Dyck word
// lists, Tamari closure, oracle shape memo) before workers fan out; after
// this, concurrent law bodies only read.
void prewarm(int maxSize) {
  for (Cls c : kClasses) {
    for (Scheme s : schemesOf(c))
      for (int n = 1; n <= capFor(c, maxSize); ++n) generate(c, n, s);
    for (int n = 1; n <= std::min(maxSize, bruteForceCeiling(c)); ++n) bruteForce(c, n);
  }
  for (int n = 1; n <= std::min(maxSize, 7); ++n) {
    const auto& words = allDyckWords(n);
    if (n <= 6) tamariLeq(words.front(), words.front());
  }
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = {
      "codecs",       "decomp",         "diagram", "involutions",
      "fixed-points", "stats-transfer", "oracle",  "all"};
  return names;
}

VerifyReport runSuite(const std::string& suite, int maxSize, int jobs, unsigned seed) {
  if (std::find(suiteNames().begin(), suiteNames().end(), suite) == suiteNames().end())
    throw std::invalid_argument("unknown suite: " + suite);
  auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.suite = suite;
  rep.maxSize = maxSize;
  std::vector<const Law*> todo;
  for (const Law& l : allLaws())
    if (suite == "all" || suite == l.suite) todo.push_back(&l);
  rep.laws.resize(todo.size());
  prewarm(maxSize);
  auto runOne = [&](std::size_t k) {
    const Law& l = *todo[k];
    LawResult r;
    r.name = l.suite == suite ? l.name : l.suite + "/" + l.name;
    r.note = l.note;
    r.counterexample = l.run(maxSize, seed);
    r.pass = r.counterexample.empty();
    rep.laws[k] = std::move(r);
  };
  int workers = std::max(1, std::min<int>(jobs, static_cast<int>(todo.size())));
  if (workers == 1) {
    for (std::size_t k = 0; k < todo.size(); ++k) runOne(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < todo.size(); k = next++) runOne(k);
      });
    for (auto& th : pool) th.join();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string reportText(const VerifyReport& r) {
  std::string out = "suite " + r.suite + " (max size " + std::to_string(r.maxSize) + ")\n";
  for (const auto& l : r.laws) {
    out += std::string(l.pass ? "  pass  " : "  FAIL  ") + l.name;
    if (!l.counterexample.empty()) out += "\n        counterexample: " + l.counterexample;
    if (!l.note.empty()) out += "\n        note: " + l.note;
    out += "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", r.seconds);
  out += std::string(r.ok() ? "OK" : "FAILED") + " (" + std::to_string(r.laws.size()) +
         " laws, " + buf + "s)\n";
  return out;
}

namespace {

std::string jsonEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string reportJson(const VerifyReport& r) {
  std::string out = "{\"suite\":\"" + jsonEscape(r.suite) +
                    "\",\"maxSize\":" + std::to_string(r.maxSize) + ",\"laws\":[";
  bool first = true;
  for (const auto& l : r.laws) {
    if (!first) out += ",";
    first = false;
    out += "{\"name\":\"" + jsonEscape(l.name) + "\",\"pass\":" + (l.pass ? "true" : "false");
    if (!l.counterexample.empty()) out += ",\"counterexample\":\"" + jsonEscape(l.counterexample) + "\"";
    if (!l.note.empty()) out += ",\"note\":\"" + jsonEscape(l.note) + "\"";
    out += "}";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
  out += std::string("],\"seconds\":") + buf + ",\"ok\":" + (r.ok() ? "true" : "false") + "}";
  return out;
}

}  // namespace nsp
