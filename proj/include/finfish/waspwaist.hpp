#pragma once

#include <vector>

#include "finfish/decomp.hpp"
#include "finfish/fish.hpp"

// Wasp-waist constructions.  Lining walks the fin of the second fish and
// seals its first edges: an LL edge receives a fresh cell glued on top, an LR
// edge merely becomes the exposed slot.  The first lined edge is the head's
// LL, so the first fresh cell carries the new head.  C1 lines the whole fin
// and hangs the first fish off the last exposed slot; C2 stops i edges short
// of the tail.  Degenerate C1 cases: a lone fresh head cell when both parts
// are empty, lining without a hanging part, hanging below a fresh head cell
// when the lined part is empty.

namespace finfish {

// Lining in progress: the grown complex (fresh cells appended after the old
// ones, the first fresh cell is the head), the exposed LR-kind slot left by
// the last processed edge, and the fresh cells in creation order.
struct LiningState {
    FightingFish fish;
    BoundaryEdge exposed;
    std::vector<cell_id> lining;
};

LiningState line_fin(const FightingFish& p2, int count);

FightingFish c1_bullet(const FightingFish& p1, const FightingFish& p2);
FightingFish c2_bullet(const FightingFish& p1, const FightingFish& p2, int i);

struct WaspWaist {
    DecompKind kind;
    FightingFish p1, p2;
};

// Recovers the unique (kind, p1, p2) whose construction rebuilds f, up to
// relabeling.  The empty fish has no decomposition.
WaspWaist waspwaist_decompose(const FightingFish& f);

// Folds a decomposition tree into a fish and back.  The empty tree maps to
// the empty fish.
FightingFish fish_of_tree(const DecompTree& t);
DecompTree tree_of_fish(const FightingFish& f);

}  // namespace finfish
