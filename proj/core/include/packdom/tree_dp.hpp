#pragma once

#include "packdom/exact.hpp"
#include "packdom/graph.hpp"

namespace packdom {

/// Exact gamma_d^p of a tree with a witness, in O(n * (d+1)^2 * max(d+1,p)^2).
///
/// The tree is rooted at vertex 0. Each subtree is summarised by the distance
/// from its root to the nearest chosen vertex inside it (capped at
/// max(d+1, p), beyond which every value behaves the same) and the depth of
/// the deepest vertex not yet dominated from inside. Children are folded into
/// the parent one at a time; witnesses are rebuilt from stored back-pointers.
/// Throws InputError for non-trees.
SolveOutcome gamma_tree(const Graph& tree, Params params);

/// gamma_d^0 of a tree.
SolveOutcome min_distance_dominating_tree(const Graph& tree, int d);

}  // namespace packdom
