#pragma once

#include "nsp/tree.hpp"

namespace nsp {

// Number of edges on the path from the root to the rightmost leaf.
int rpathLen(const TreeNode& t);

// Involution on labeled trees; swaps (root, rpath), (leaf, int),
// (sub, rsub), (gamma, stem). Conjugate to map duality.
BetaTree hBeta(const BetaTree& b);

// Involution on decorated trees, conjugate to hBeta under the relabeling
// bijection and to map duality under the exploration bijection.
DecoTree hDeco(const DecoTree& t);

}  // namespace nsp
