#pragma once

#include "nsp/decomp.hpp"

namespace nsp {

// Certificate bookkeeping of a decorated tree: each non-root internal node of
// depth p is certified by its first descendant leaf (in traversal order) with
// label <= p-2; countC[l] counts the nodes certified by leaf number l.
struct CertificateTable {
  std::vector<int> certOf;  // per node in prefix order; leaf index or -1
  std::vector<int> countC;  // per leaf in traversal order
};

// Canonical transport along the shared recursion: decompose in the source
// class, transport the parts, compose in the target class. The scheme applies
// to whichever side is a map.
Obj transport(const Obj& x, Cls to, Scheme scheme = Scheme::Parallel);

// Bijection T: depth-first exploration of the map with the root edge removed.
DecoTree mapToDeco(const RootedMap& m);
// Inverse of T, realized by canonical transport.
RootedMap decoToMap(const DecoTree& t);

CertificateTable certificates(const DecoTree& t);

// varphi_T: relabels T in place; equal to transport(t, beta).
BetaTree decoToBetaDirect(const DecoTree& t);

// Bijection I: upper path from the contour, lower path from the certificates.
SyncInterval decoToInterval(const DecoTree& t);
// Inverse of I, realized by canonical transport.
DecoTree intervalToDeco(const SyncInterval& i);

}  // namespace nsp
