#pragma once

#include <stdexcept>

// Error taxonomy. Everything thrown by the library derives from error, so the
// CLI can map failures to exit codes in one place: malformed input and
// exceeded limits are usage problems, the rest are domain failures.

namespace finfish {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed arguments: duplicate entries, bad shift offsets, out-of-range
// construction indices, unparseable text or JSON.
struct invalid_input : error {
    using error::error;
};

// Structurally well-formed input outside an operation's domain, e.g. a
// permutation that is not two-stack sortable.
struct domain_error : error {
    using error::error;
};

// Mid-computation evidence that a precondition was violated, e.g. two
// left-part elements exceeding the right-part minimum during classification.
struct inconsistency_error : error {
    using error::error;
};

// Decomposition tree shape violations: C2 with an empty child, index out of
// range of the right child's slmax.
struct invalid_tree : error {
    using error::error;
};

// Growth-rule preconditions not met: target slot glued, missing common parent.
struct invalid_growth : error {
    using error::error;
};

// Cell complex violations: broken involution, disconnected, no unique head,
// inconsistent embedding, boundary pivot stuck.
struct invalid_complex : error {
    using error::error;
};

// A complex that passes the basic checks but cannot be built by the growth
// rules, or whose boundary has no tail ahead of an upper slot.
struct invalid_fish : error {
    using error::error;
};

// Deliberate desk-scale limits exceeded: enumeration size, cell count,
// series order.
struct resource_error : error {
    using error::error;
};

// The code caught itself producing nonsense: overflow, non-convergence,
// inexact division.
struct internal_error : error {
    using error::error;
};

}  // namespace finfish
