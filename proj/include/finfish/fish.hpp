#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

// Fighting fish as combinatorial cell complexes.  A cell is a unit diamond
// with four edge slots; gluings always pair UR with LL or LR with UL, so a
// slot's partner slot is determined by its own kind and only the partner cell
// is stored.  Geometry (cells may overlap in the plane) is derived, never
// primary.  The empty fish eps• has no cells and head = kFree.

namespace finfish {

using cell_id = std::int32_t;
inline constexpr cell_id kFree = -1;

// Counter-clockwise boundary order is LL -> LR -> UR -> UL.
enum class SlotKind : int { LL = 0, LR = 1, UR = 2, UL = 3 };

inline int slot_index(SlotKind s) { return static_cast<int>(s); }
inline SlotKind next_ccw(SlotKind s) { return static_cast<SlotKind>((slot_index(s) + 1) & 3); }
// UR<->LL and LR<->UL.
inline SlotKind mate(SlotKind s) { return static_cast<SlotKind>(slot_index(s) ^ 2); }
inline bool is_lower(SlotKind s) { return s == SlotKind::LL || s == SlotKind::LR; }

std::string slot_name(SlotKind s);
SlotKind slot_from_name(const std::string& name);

struct Cell {
    // Partner cell per slot, indexed by SlotKind; the partner's slot is mate().
    std::array<cell_id, 4> glue{kFree, kFree, kFree, kFree};

    friend bool operator==(const Cell&, const Cell&) = default;
};

struct FightingFish {
    std::vector<Cell> cells;
    cell_id head = kFree;

    bool empty() const { return cells.empty(); }
    int cell_count() const { return static_cast<int>(cells.size()); }
    cell_id partner(cell_id c, SlotKind s) const {
        return cells[static_cast<std::size_t>(c)].glue[static_cast<std::size_t>(slot_index(s))];
    }
    bool free_slot(cell_id c, SlotKind s) const { return partner(c, s) == kFree; }

    friend bool operator==(const FightingFish&, const FightingFish&) = default;
};

struct FishStats {
    int size = 0;   // free lower slots
    int lsize = 0;  // free LL slots
    int rsize = 0;  // free LR slots
    int fin = 0;
    int tails = 0;

    friend bool operator==(const FishStats&, const FishStats&) = default;
};

struct BoundaryEdge {
    cell_id cell = kFree;
    SlotKind slot = SlotKind::LL;

    friend bool operator==(const BoundaryEdge&, const BoundaryEdge&) = default;
};

enum class GrowthRule { A, B, C };

struct ValidationReport {
    bool ok = true;
    std::string invariant;  // first violated one: involution, connectivity, head, constructibility
    std::string detail;
};

FightingFish head_only();

// Grows by one cell.  Rule A glues the new cell's LL to target's UR; rule B
// its UL to target's LR; rule C its UL to target's LR and its LL to
// target2's UR, target and target2 hanging off a common parent.
FightingFish add_cell(const FightingFish& f, GrowthRule rule, cell_id target,
                      cell_id target2 = kFree);

// Full cycle of free slots from the head's LL, pivot order LL->LR->UR->UL.
std::vector<BoundaryEdge> boundary(const FightingFish& f);

// Boundary prefix through the first tail's LR; all edges are lower slots.
std::vector<BoundaryEdge> fin(const FightingFish& f);

FishStats fish_stats(const FightingFish& f);
std::string fish_stats_to_string(const FishStats& s);

// Involution, connectivity, unique head, then existence of a growth order
// (backtracking reverse peel, memoized on the cell bitmask; at most 64 cells).
ValidationReport validate(const FightingFish& f);
void require_valid(const FightingFish& f);

// Left-vertex coordinates per cell, head at (0,0); path-independence checked.
std::vector<std::pair<int, int>> embed(const FightingFish& f);

// Breadth-first renumbering from the head, neighbors in slot order; two fish
// are isomorphic iff their canonical forms are equal.
FightingFish canonical(const FightingFish& f);
bool isomorphic(const FightingFish& a, const FightingFish& b);
std::string fish_key(const FightingFish& f);

}  // namespace finfish
