#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Sequences of distinct integers, the stack-sorting operator S, pattern
// tests, and permutation statistics.
//
// S is defined by S(eps) = eps and S(A) = S(A_L) . S(A_R) . (n), where n is
// the largest entry of A and A = A_L . (n) . A_R.  A permutation p of 1..n is
// two-stack sortable (2SSP) when S(S(p)) is the identity.  By convention the
// empty permutation is *not* a 2SSP, although it appears as a decomposition
// atom; hence is_two_stack_sortable(eps) is an error rather than false.

namespace finfish {

using value_t = std::int64_t;
using Seq = std::vector<value_t>;  // pairwise distinct entries
using Perm = Seq;                  // exactly {1, ..., n}

struct StatVector {
    int len = 0;
    int lmax = 0;   // left-to-right maxima of p
    int rmax = 0;   // right-to-left maxima of p
    int asc = 0;    // positions i with p(i) < p(i+1)
    int des = 0;
    int slmax = 0;  // left-to-right maxima of S(p)
    int sldes = 0;  // values a preceding a-1 in S(p)

    friend bool operator==(const StatVector&, const StatVector&) = default;
};

// Throws invalid_input on duplicate entries.
void require_distinct(const Seq& a);
// Throws invalid_input unless p is a permutation of {1..len(p)}.
void require_perm(const Perm& p);

// The recursion on A_L/A_R, run with an explicit work stack: monotone inputs
// recurse to depth len(a), so machine recursion is avoided.
Seq stack_sort(const Seq& a);

// One pass over a lazy stack kept increasing from top to bottom: before
// pushing an entry, pop everything smaller, then flush.  Independent oracle
// for stack_sort; the two must agree on every input.
Seq stack_sort_lazy(const Seq& a);

// Order-isomorphic relabeling to {1..len(a)}.
Perm standardize(const Seq& a);

// Every entry shifted by k.
Seq shift_uniform(const Seq& s, value_t k);

// Entries strictly below m shifted by k1, the rest by k2.  Requires k1 < k2.
Seq shift_split(const Seq& s, value_t k1, value_t m, value_t k2);

// True iff no i < j < k has a(k) < a(i) < a(j).  For permutations this is
// equivalent to stack_sort(a) being increasing.
bool avoids_231(const Seq& a);

// S(S(p)) == id.  p must be nonempty.
bool is_two_stack_sortable(const Perm& p);

// All seven statistics; eps gives the all-zero vector.
StatVector stats(const Perm& p);

// Values of the left-to-right maxima, in order of appearance.
std::vector<value_t> left_to_right_maxima(const Seq& a);

// Text format: comma-separated integers, "2,4,3,1"; empty string is eps.
Seq parse_seq(const std::string& text);
std::string seq_to_string(const Seq& a);
std::string stats_to_string(const StatVector& s);

}  // namespace finfish
