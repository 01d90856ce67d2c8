#include "finfish/fish.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <unordered_map>

#include "finfish/errors.hpp"

namespace finfish {

namespace {

std::size_t idx(cell_id c) { return static_cast<std::size_t>(c); }
std::size_t idx(SlotKind s) { return static_cast<std::size_t>(slot_index(s)); }

constexpr std::array<SlotKind, 4> kSlots{SlotKind::LL, SlotKind::LR, SlotKind::UR, SlotKind::UL};

void glue(FightingFish& f, cell_id c, SlotKind s, cell_id d) {
    f.cells[idx(c)].glue[idx(s)] = d;
    f.cells[idx(d)].glue[idx(mate(s))] = c;
}

bool valid_id(const FightingFish& f, cell_id c) { return c >= 0 && c < f.cell_count(); }

}  // namespace

std::string slot_name(SlotKind s) {
    switch (s) {
        case SlotKind::LL: return "LL";
        case SlotKind::LR: return "LR";
        case SlotKind::UR: return "UR";
        case SlotKind::UL: return "UL";
    }
    throw internal_error("bad slot kind");
}

SlotKind slot_from_name(const std::string& name) {
    if (name == "LL") return SlotKind::LL;
    if (name == "LR") return SlotKind::LR;
    if (name == "UR") return SlotKind::UR;
    if (name == "UL") return SlotKind::UL;
    throw invalid_input("unknown slot name \"" + name + "\"");
}

FightingFish head_only() {
    FightingFish f;
    f.cells.emplace_back();
    f.head = 0;
    return f;
}

FightingFish add_cell(const FightingFish& f, GrowthRule rule, cell_id target, cell_id target2) {
    if (f.empty()) throw invalid_growth("cannot grow the empty fish");
    if (!valid_id(f, target)) throw invalid_input("target cell out of range");
    FightingFish g = f;
    cell_id n = g.cell_count();
    g.cells.emplace_back();
    switch (rule) {
        case GrowthRule::A:
            if (target2 != kFree) throw invalid_growth("rule A takes a single target");
            if (!f.free_slot(target, SlotKind::UR)) throw invalid_growth("target UR is glued");
            glue(g, n, SlotKind::LL, target);
            break;
        case GrowthRule::B:
            if (target2 != kFree) throw invalid_growth("rule B takes a single target");
            if (!f.free_slot(target, SlotKind::LR)) throw invalid_growth("target LR is glued");
            glue(g, n, SlotKind::UL, target);
            break;
        case GrowthRule::C: {
            if (!valid_id(f, target2)) throw invalid_input("second target cell out of range");
            if (target == target2) throw invalid_growth("rule C needs two distinct targets");
            if (!f.free_slot(target, SlotKind::LR)) throw invalid_growth("upper target LR is glued");
            if (!f.free_slot(target2, SlotKind::UR)) throw invalid_growth("lower target UR is glued");
            cell_id a = f.partner(target, SlotKind::LL);
            cell_id a2 = f.partner(target2, SlotKind::UL);
            if (a == kFree || a != a2)
                throw invalid_growth("rule C targets do not hang off a common cell");
            glue(g, n, SlotKind::UL, target);
            glue(g, n, SlotKind::LL, target2);
            break;
        }
    }
    return g;
}

namespace {

// Successor of the free slot (c,s) on the boundary: pivot through gluings
// until the next free slot.  Jump count is capped by the slot total.
BoundaryEdge boundary_successor(const FightingFish& f, BoundaryEdge e) {
    cell_id c = e.cell;
    SlotKind t = next_ccw(e.slot);
    int guard = 4 * f.cell_count() + 1;
    while (f.partner(c, t) != kFree) {
        if (--guard < 0) throw invalid_complex("boundary pivot does not reach a free slot");
        cell_id d = f.partner(c, t);
        t = next_ccw(mate(t));
        c = d;
    }
    return {c, t};
}

void require_walkable(const FightingFish& f) {
    if (f.empty()) throw invalid_input("the empty fish has no boundary");
    if (!valid_id(f, f.head)) throw invalid_complex("head id out of range");
    if (!f.free_slot(f.head, SlotKind::LL) || !f.free_slot(f.head, SlotKind::UL))
        throw invalid_complex("head does not have both left slots free");
}

}  // namespace

std::vector<BoundaryEdge> boundary(const FightingFish& f) {
    require_walkable(f);
    const BoundaryEdge start{f.head, SlotKind::LL};
    std::vector<BoundaryEdge> out;
    BoundaryEdge cur = start;
    do {
        if (out.size() > 4 * f.cells.size()) throw invalid_complex("boundary walk does not close");
        out.push_back(cur);
        cur = boundary_successor(f, cur);
    } while (!(cur == start));
    return out;
}

std::vector<BoundaryEdge> fin(const FightingFish& f) {
    require_walkable(f);
    const BoundaryEdge start{f.head, SlotKind::LL};
    std::vector<BoundaryEdge> out;
    BoundaryEdge cur = start;
    for (;;) {
        if (!is_lower(cur.slot)) throw invalid_fish("fin reaches an upper slot before a tail");
        out.push_back(cur);
        if (cur.slot == SlotKind::LR && f.free_slot(cur.cell, SlotKind::UR)) return out;
        cur = boundary_successor(f, cur);
        if (cur == start) throw invalid_fish("fin walk wrapped around without finding a tail");
    }
}

FishStats fish_stats(const FightingFish& f) {
    if (f.empty()) return {1, 1, 1, 1, 1};
    FishStats v;
    for (cell_id c = 0; c < f.cell_count(); ++c) {
        if (f.free_slot(c, SlotKind::LL)) ++v.lsize;
        if (f.free_slot(c, SlotKind::LR)) ++v.rsize;
        if (f.free_slot(c, SlotKind::UR) && f.free_slot(c, SlotKind::LR)) ++v.tails;
    }
    v.size = v.lsize + v.rsize;
    v.fin = static_cast<int>(fin(f).size());
    return v;
}

std::string fish_stats_to_string(const FishStats& s) {
    std::ostringstream os;
    os << "size=" << s.size << " lsize=" << s.lsize << " rsize=" << s.rsize
       << " fin=" << s.fin << " tails=" << s.tails;
    return os.str();
}

namespace {

// Reverse peel: true iff mask can be reduced to the single head cell by
// repeatedly removing a cell whose in-mask gluing pattern is the birth
// pattern of rule A ({LL}), B ({UL}) or C ({UL,LL} hanging off a common
// cell).  Failures are memoized.
bool peelable(const FightingFish& f, std::uint64_t mask,
              std::unordered_map<std::uint64_t, char>& dead) {
    if (__builtin_popcountll(mask) == 1) return true;
    if (auto it = dead.find(mask); it != dead.end()) return false;
    auto in_mask = [&](cell_id d) { return d != kFree && (mask >> d) & 1; };
    for (cell_id c = 0; c < f.cell_count(); ++c) {
        if (!((mask >> c) & 1)) continue;
        bool ll = in_mask(f.partner(c, SlotKind::LL));
        bool lr = in_mask(f.partner(c, SlotKind::LR));
        bool ur = in_mask(f.partner(c, SlotKind::UR));
        bool ul = in_mask(f.partner(c, SlotKind::UL));
        if (lr || ur) continue;
        bool ok = false;
        if (ll && !ul) {
            ok = true;  // rule A birth
        } else if (ul && !ll) {
            ok = true;  // rule B birth
        } else if (ul && ll) {
            // rule C birth: c.UL = b.LR, c.LL = d.UR with b.LL = a.UR, d.UL = a.LR
            cell_id b = f.partner(c, SlotKind::UL);
            cell_id d = f.partner(c, SlotKind::LL);
            cell_id a = f.partner(b, SlotKind::LL);
            ok = b != d && a != kFree && in_mask(a) && f.partner(d, SlotKind::UL) == a;
        }
        if (ok && peelable(f, mask & ~(std::uint64_t{1} << c), dead)) return true;
    }
    dead.emplace(mask, 1);
    return false;
}

}  // namespace

ValidationReport validate(const FightingFish& f) {
    if (f.empty()) {
        if (f.head != kFree) return {false, "head", "empty fish with a head id"};
        return {};
    }
    for (cell_id c = 0; c < f.cell_count(); ++c)
        for (SlotKind s : kSlots) {
            cell_id d = f.partner(c, s);
            if (d == kFree) continue;
            if (!valid_id(f, d))
                return {false, "involution",
                        "cell " + std::to_string(c) + " " + slot_name(s) + " points out of range"};
            if (d == c)
                return {false, "involution", "cell " + std::to_string(c) + " glued to itself"};
            if (f.partner(d, mate(s)) != c)
                return {false, "involution",
                        "gluing at cell " + std::to_string(c) + " " + slot_name(s) +
                            " is not mutual"};
        }
    std::vector<char> seen(f.cells.size(), 0);
    std::vector<cell_id> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        cell_id c = queue.back();
        queue.pop_back();
        for (SlotKind s : kSlots) {
            cell_id d = f.partner(c, s);
            if (d != kFree && !seen[idx(d)]) {
                seen[idx(d)] = 1;
                queue.push_back(d);
            }
        }
    }
    if (std::count(seen.begin(), seen.end(), 1) != f.cell_count())
        return {false, "connectivity", "cell adjacency graph is disconnected"};
    cell_id the_head = kFree;
    for (cell_id c = 0; c < f.cell_count(); ++c)
        if (f.free_slot(c, SlotKind::UL) && f.free_slot(c, SlotKind::LL)) {
            if (the_head != kFree)
                return {false, "head",
                        "cells " + std::to_string(the_head) + " and " + std::to_string(c) +
                            " both have their left slots free"};
            the_head = c;
        }
    if (the_head == kFree) return {false, "head", "no cell has both left slots free"};
    if (the_head != f.head)
        return {false, "head",
                "stored head " + std::to_string(f.head) + " is not the left-free cell " +
                    std::to_string(the_head)};
    if (f.cell_count() > 64) throw resource_error("validate supports at most 64 cells");
    std::unordered_map<std::uint64_t, char> dead;
    std::uint64_t all = f.cell_count() == 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << f.cell_count()) - 1;
    if (!peelable(f, all, dead))
        return {false, "constructibility", "no reverse growth order exists"};
    return {};
}

void require_valid(const FightingFish& f) {
    ValidationReport r = validate(f);
    if (r.ok) return;
    std::string msg = r.invariant + ": " + r.detail;
    if (r.invariant == "constructibility") throw invalid_fish(msg);
    throw invalid_complex(msg);
}

std::vector<std::pair<int, int>> embed(const FightingFish& f) {
    std::vector<std::pair<int, int>> pos(f.cells.size(), {0, 0});
    if (f.empty()) return pos;
    if (!valid_id(f, f.head)) throw invalid_complex("head id out of range");
    // Left-vertex offsets toward a slot's partner.
    auto offset = [](SlotKind s) -> std::pair<int, int> {
        switch (s) {
            case SlotKind::UR: return {1, 1};
            case SlotKind::LL: return {-1, -1};
            case SlotKind::LR: return {1, -1};
            case SlotKind::UL: return {-1, 1};
        }
        throw internal_error("bad slot kind");
    };
    std::vector<char> seen(f.cells.size(), 0);
    std::vector<cell_id> queue{f.head};
    seen[idx(f.head)] = 1;
    while (!queue.empty()) {
        cell_id c = queue.back();
        queue.pop_back();
        for (SlotKind s : kSlots) {
            cell_id d = f.partner(c, s);
            if (d == kFree) continue;
            auto [dx, dy] = offset(s);
            std::pair<int, int> p{pos[idx(c)].first + dx, pos[idx(c)].second + dy};
            if (!seen[idx(d)]) {
                seen[idx(d)] = 1;
                pos[idx(d)] = p;
                queue.push_back(d);
            } else if (pos[idx(d)] != p) {
                throw invalid_complex("embedding is not path independent");
            }
        }
    }
    if (std::count(seen.begin(), seen.end(), 1) != f.cell_count())
        throw invalid_complex("cell adjacency graph is disconnected");
    return pos;
}

FightingFish canonical(const FightingFish& f) {
    if (f.empty()) return {};
    if (!valid_id(f, f.head)) throw invalid_complex("head id out of range");
    std::vector<cell_id> order(f.cells.size(), kFree);  // old id -> new id
    std::vector<cell_id> bfs{f.head};
    order[idx(f.head)] = 0;
    for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
        cell_id c = bfs[qi];
        for (SlotKind s : kSlots) {
            cell_id d = f.partner(c, s);
            if (d != kFree && order[idx(d)] == kFree) {
                order[idx(d)] = static_cast<cell_id>(bfs.size());
                bfs.push_back(d);
            }
        }
    }
    if (static_cast<int>(bfs.size()) != f.cell_count())
        throw invalid_complex("cell adjacency graph is disconnected");
    FightingFish g;
    g.cells.resize(f.cells.size());
    g.head = 0;
    for (cell_id c = 0; c < f.cell_count(); ++c)
        for (SlotKind s : kSlots) {
            cell_id d = f.partner(c, s);
            g.cells[idx(order[idx(c)])].glue[idx(s)] = d == kFree ? kFree : order[idx(d)];
        }
    return g;
}

bool isomorphic(const FightingFish& a, const FightingFish& b) {
    if (a.cell_count() != b.cell_count()) return false;
    return canonical(a) == canonical(b);
}

std::string fish_key(const FightingFish& f) {
    FightingFish c = canonical(f);
    std::ostringstream os;
    os << c.cell_count();
    for (const Cell& cell : c.cells)
        for (cell_id d : cell.glue) os << ',' << d;
    return os.str();
}

}  // namespace finfish
