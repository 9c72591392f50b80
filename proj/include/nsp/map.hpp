#pragma once

#include <string>
#include <vector>

namespace nsp {

// Rooted planar map as a rotation system. Darts are 0..2E-1; the two darts
// of edge k are 2k and 2k+1, so the edge involution is alpha(d) = d ^ 1.
// sigma[d] is the next dart in CLOCKWISE order around the vertex of d.
// The face on the left of d is its orbit under faceNext(d) = alpha(sigma(d)),
// and the outer face is the orbit of the root dart.
struct RootedMap {
  int E = 0;
  std::vector<int> sigma;
  int root = 0;

  bool operator==(const RootedMap&) const = default;
};

inline int alphaDart(int d) { return d ^ 1; }
int faceNext(const RootedMap& m, int d);
// Next dart of the same face against the faceNext direction, i.e. the next
// edge side in clockwise order when walking along the face boundary.
int faceNextInv(const RootedMap& m, int d);
int sigmaInv(const RootedMap& m, int d);

// vertexId[d] = index of the sigma-orbit of d, numbered by smallest dart.
std::vector<int> vertexIds(const RootedMap& m);
int vertexCount(const RootedMap& m);
int faceCount(const RootedMap& m);
// Darts of the orbit of `dart` under faceNext, in orbit order.
std::vector<int> faceOrbit(const RootedMap& m, int dart);
std::vector<int> vertexOrbit(const RootedMap& m, int dart);

// deg = degree of the root vertex minus 1; fdeg = degree of the outer face
// minus 1.
int degStat(const RootedMap& m);
int fdegStat(const RootedMap& m);

// Full validity: sigma a permutation, root in range, connected, genus 0,
// loopless, no cut vertex, E >= 2.
std::vector<std::string> validateMap(const RootedMap& m);
bool isNsp(const RootedMap& m);

// Deterministic relabeling by BFS from the root over (sigma, alpha); two
// rooted maps are isomorphic iff their canonical forms are identical.
RootedMap canonicalForm(const RootedMap& m);

std::string encodeMap(const RootedMap& m);
// Parses {"E": int, "sigma": [...], "root": int}; throws std::runtime_error
// on malformed input. Structural checks only; semantics live in validateMap.
RootedMap decodeMap(const std::string& text);

// Edge surgery. Both take any dart of the affected edge, remove the pair,
// and compact the remaining darts (pairs keep their relative order).
// newRoot is a surviving dart of m and is translated to the compacted labels.
RootedMap withEdgeDeleted(const RootedMap& m, int dart, int newRoot);
// Contraction requires a non-loop edge; the two endpoint rotations are
// spliced at the removed darts.
RootedMap withEdgeContracted(const RootedMap& m, int dart, int newRoot);

// dual: same darts, sigma* = faceNext, root* chosen so dual is an involution
// and deg(dual(M)) = fdeg(M).
RootedMap dualMap(const RootedMap& m);
// Re-roots to the next edge of the outer face in clockwise order.
RootedMap nextRoot(const RootedMap& m);

}  // namespace nsp
