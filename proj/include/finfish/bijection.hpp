#pragma once

#include "finfish/fish.hpp"
#include "finfish/perm.hpp"

// The recursive bijection between two-stack-sortable permutations and
// fighting fish.  Both sides split along the same decomposition tree, so the
// map folds the tree with the fish constructions and back.  It carries
// (len, asc, des, slmax, sldes) to (size-1, lsize-1, rsize-1, fin-1,
// tails-1).

namespace finfish {

struct TransferReport {
    StatVector perm;
    FishStats fish;
    bool size_ok = false;   // size = len + 1
    bool lsize_ok = false;  // lsize = asc + 1
    bool rsize_ok = false;  // rsize = des + 1
    bool fin_ok = false;    // fin = slmax + 1
    bool tails_ok = false;  // tails = sldes + 1

    bool pass() const { return size_ok && lsize_ok && rsize_ok && fin_ok && tails_ok; }
};

FightingFish phi(const Perm& p);
Perm phi_inverse(const FightingFish& f);

// Evaluates both stat vectors independently and compares the five transfers.
TransferReport check_transfer(const Perm& p);

}  // namespace finfish
