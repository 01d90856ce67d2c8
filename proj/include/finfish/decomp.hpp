#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finfish/perm.hpp"

// The recursive decomposition of 2SSPs and its inverse constructions.
//
// Writing p = pl . n . pr around the maximum, the decomposition is
// D(p) = (standardize(pl), standardize(pr)), and every 2SSP arises in exactly
// one way as
//
//   C1(p1, p2)    = p1 . (k+l+1) . p2^{+k}
//   C2(p1, p2, i) = p1^{+(0,k,a_i)} . (k+l+1) . p2^{+(k-1,a_i+1,k)}
//
// with k = len(p1), l = len(p2), a_i the i-th left-to-right maximum of S(p2),
// and 1 <= i <= slmax(p2).  C1 admits empty arguments; C2 does not.  The
// choice between the cases is read off p itself: C2 holds exactly when one
// element of pl exceeds min(pr), and two or more such elements are impossible
// in a 2SSP (they would force a 231 pattern in S(p)).

namespace finfish {

enum class CKind { C1, C2 };

struct DecompKind {
    CKind tag = CKind::C1;
    int i = 0;  // 1-based construction index; meaningful iff tag == C2

    friend bool operator==(const DecompKind&, const DecompKind&) = default;
};

// Recursion certificate shared by permutations and fish.  Nodes live in an
// arena; child -1 denotes the empty tree, as does root -1 for the whole tree.
struct DecompTree {
    struct Node {
        DecompKind kind;
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes;
    int root = -1;

    bool empty() const { return root < 0; }
};

// (standardize(pl), standardize(pr)).  Verifies p is a 2SSP.
std::pair<Perm, Perm> decompose(const Perm& p);

// Which construction produced p, and with which index.  Does not re-verify
// two-stack sortability; instead the structurally impossible configurations
// (two large left elements, or a right witness that is not a left-to-right
// maximum of S(p2)) surface as inconsistency errors.
DecompKind classify(const Perm& p);

Perm construct_c1(const Perm& p1, const Perm& p2);
Perm construct_c2(const Perm& p1, const Perm& p2, int i);

// Full recursion certificate; perm_of_tree . tree_of_perm = id.
DecompTree tree_of_perm(const Perm& p);
Perm perm_of_tree(const DecompTree& t);

// Text form: `E`, `(C1 l r)`, `(C2:i l r)`.
std::string tree_to_string(const DecompTree& t);
DecompTree tree_from_string(const std::string& text);

}  // namespace finfish
