#include "finfish/waspwaist.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "finfish/errors.hpp"

namespace finfish {

namespace {

constexpr std::array<SlotKind, 4> kSlots{SlotKind::LL, SlotKind::LR, SlotKind::UR, SlotKind::UL};

std::size_t idx(cell_id c) { return static_cast<std::size_t>(c); }
std::size_t idx(SlotKind s) { return static_cast<std::size_t>(slot_index(s)); }

void glue(FightingFish& f, cell_id c, SlotKind s, cell_id d) {
    f.cells[idx(c)].glue[idx(s)] = d;
    f.cells[idx(d)].glue[idx(mate(s))] = c;
}

// Copies src's cells onto the end of dst and returns src's head under the new
// numbering.
cell_id append_shifted(FightingFish& dst, const FightingFish& src) {
    cell_id base = dst.cell_count();
    for (const Cell& cell : src.cells) {
        Cell shifted = cell;
        for (cell_id& d : shifted.glue)
            if (d != kFree) d += base;
        dst.cells.push_back(shifted);
    }
    return base + src.head;
}

}  // namespace

LiningState line_fin(const FightingFish& p2, int count) {
    if (p2.empty()) throw invalid_input("line_fin needs a nonempty fish");
    std::vector<BoundaryEdge> edges = fin(p2);
    if (count < 1 || count > static_cast<int>(edges.size()))
        throw invalid_input("line_fin count " + std::to_string(count) + " outside 1.." +
                            std::to_string(edges.size()));
    LiningState st;
    st.fish = p2;
    st.exposed = {kFree, SlotKind::LR};
    for (int t = 0; t < count; ++t) {
        BoundaryEdge e = edges[static_cast<std::size_t>(t)];
        if (e.slot == SlotKind::LL) {
            cell_id n = st.fish.cell_count();
            st.fish.cells.emplace_back();
            glue(st.fish, n, SlotKind::UR, e.cell);
            if (st.exposed.cell != kFree) glue(st.fish, n, SlotKind::UL, st.exposed.cell);
            st.lining.push_back(n);
            st.exposed = {n, SlotKind::LR};
        } else {
            st.exposed = e;
        }
    }
    st.fish.head = st.lining.front();
    return st;
}

FightingFish c1_bullet(const FightingFish& p1, const FightingFish& p2) {
    require_valid(p1);
    require_valid(p2);
    if (p1.empty() && p2.empty()) return head_only();
    if (p2.empty()) {
        FightingFish f = p1;
        cell_id n = f.cell_count();
        f.cells.emplace_back();
        glue(f, n, SlotKind::LR, p1.head);
        f.head = n;
        return f;
    }
    LiningState st = line_fin(p2, static_cast<int>(fin(p2).size()));
    if (p1.empty()) return st.fish;
    cell_id hooked = append_shifted(st.fish, p1);
    glue(st.fish, hooked, SlotKind::UL, st.exposed.cell);
    return st.fish;
}

FightingFish c2_bullet(const FightingFish& p1, const FightingFish& p2, int i) {
    if (p1.empty() || p2.empty()) throw invalid_input("c2 needs two nonempty fish");
    require_valid(p1);
    require_valid(p2);
    int flen = static_cast<int>(fin(p2).size());
    if (i < 1 || i > flen - 1)
        throw invalid_input("c2 index " + std::to_string(i) + " outside 1.." +
                            std::to_string(flen - 1));
    LiningState st = line_fin(p2, flen - i);
    cell_id hooked = append_shifted(st.fish, p1);
    glue(st.fish, hooked, SlotKind::UL, st.exposed.cell);
    return st.fish;
}

namespace {

// Induced subcomplex on the marked cells, densely renumbered; remap gives the
// new id per old cell or kFree.
FightingFish induced(const FightingFish& f, const std::vector<char>& keep, cell_id head_old,
                     std::vector<cell_id>& remap) {
    remap.assign(f.cells.size(), kFree);
    FightingFish g;
    for (cell_id c = 0; c < f.cell_count(); ++c)
        if (keep[idx(c)]) {
            remap[idx(c)] = g.cell_count();
            g.cells.emplace_back();
        }
    for (cell_id c = 0; c < f.cell_count(); ++c) {
        if (!keep[idx(c)]) continue;
        for (SlotKind s : kSlots) {
            cell_id d = f.partner(c, s);
            g.cells[idx(remap[idx(c)])].glue[idx(s)] =
                (d != kFree && keep[idx(d)]) ? remap[idx(d)] : kFree;
        }
    }
    g.head = remap[idx(head_old)];
    return g;
}

// Cells reachable from start when the gluing at (cut, cut_slot) is ignored.
std::vector<char> reach_without(const FightingFish& f, cell_id start, cell_id cut,
                                SlotKind cut_slot) {
    cell_id other = f.partner(cut, cut_slot);
    std::vector<char> seen(f.cells.size(), 0);
    std::vector<cell_id> queue{start};
    seen[idx(start)] = 1;
    while (!queue.empty()) {
        cell_id c = queue.back();
        queue.pop_back();
        for (SlotKind s : kSlots) {
            cell_id d = f.partner(c, s);
            if (d == kFree) continue;
            if ((c == cut && s == cut_slot) || (c == other && s == mate(cut_slot))) continue;
            if (!seen[idx(d)]) {
                seen[idx(d)] = 1;
                queue.push_back(d);
            }
        }
    }
    return seen;
}

// Walks the chain of lining cells of f.  L holds the chain so far (front is
// f's head), exposed the LR slot left by the last reconstructed event.  At a
// glued exposed slot the partner is forced: cutting that gluing separates the
// hooked part exactly when the partner heads it.  At a free exposed slot the
// construction either stopped with nothing hooked or moved on through a fin
// edge of the hidden second part, so every cell whose UL hangs on an LR slot
// outside the chain is a candidate.  A candidate answer is accepted only if
// its construction rebuilds f up to relabeling.
struct WaspWaistSearch {
    const FightingFish& f;
    std::vector<cell_id> chain;
    std::vector<char> in_chain;

    explicit WaspWaistSearch(const FightingFish& fish) : f(fish) {
        in_chain.assign(f.cells.size(), 0);
        chain.push_back(f.head);
        in_chain[idx(f.head)] = 1;
    }

    std::optional<WaspWaist> run() { return search({f.head, SlotKind::LR}); }

    std::optional<WaspWaist> search(BoundaryEdge exposed) {
        cell_id hooked = f.partner(exposed.cell, exposed.slot);
        if (hooked != kFree) return consider(hooked, exposed);
        if (auto w = terminal()) return w;
        for (cell_id x = 0; x < f.cell_count(); ++x) {
            if (in_chain[idx(x)]) continue;
            cell_id anchor = f.partner(x, SlotKind::UL);
            if (anchor == kFree || in_chain[idx(anchor)]) continue;
            if (auto w = consider(x, {anchor, SlotKind::LR})) return w;
        }
        return std::nullopt;
    }

    // x's UL hangs on the LR slot `at`: either x heads the hooked first part
    // or x is the next lining cell.
    std::optional<WaspWaist> consider(cell_id x, BoundaryEdge at) {
        if (in_chain[idx(x)]) return std::nullopt;
        std::vector<char> part = reach_without(f, x, x, SlotKind::UL);
        if (!part[idx(at.cell)]) return junction(x, at, part);
        if (f.partner(x, SlotKind::UR) == kFree) return std::nullopt;
        chain.push_back(x);
        in_chain[idx(x)] = 1;
        auto w = search({x, SlotKind::LR});
        in_chain[idx(x)] = 0;
        chain.pop_back();
        return w;
    }

    // Nothing hooked: f would be the fully lined second part alone.
    std::optional<WaspWaist> terminal() {
        std::vector<char> keep(f.cells.size(), 0);
        int count = 0;
        for (cell_id c = 0; c < f.cell_count(); ++c)
            if (!in_chain[idx(c)]) {
                keep[idx(c)] = 1;
                ++count;
            }
        if (count == 0) return std::nullopt;
        cell_id p2_head = f.partner(f.head, SlotKind::UR);
        if (p2_head == kFree || !keep[idx(p2_head)]) return std::nullopt;
        std::vector<cell_id> remap;
        FightingFish p2 = induced(f, keep, p2_head, remap);
        if (!validate(p2).ok) return std::nullopt;
        if (!isomorphic(c1_bullet({}, p2), f)) return std::nullopt;
        return WaspWaist{{CKind::C1, 0}, {}, p2};
    }

    std::optional<WaspWaist> junction(cell_id x, BoundaryEdge at, const std::vector<char>& part) {
        std::vector<char> keep2(f.cells.size(), 0);
        int count2 = 0;
        for (cell_id c = 0; c < f.cell_count(); ++c) {
            if (part[idx(c)] && in_chain[idx(c)]) return std::nullopt;
            if (!part[idx(c)] && !in_chain[idx(c)]) {
                keep2[idx(c)] = 1;
                ++count2;
            }
        }
        if (count2 == 0) return std::nullopt;
        cell_id p2_head = f.partner(f.head, SlotKind::UR);
        if (p2_head == kFree || !keep2[idx(p2_head)]) return std::nullopt;

        std::vector<cell_id> remap1;
        FightingFish p1 = induced(f, part, x, remap1);
        if (!validate(p1).ok) return std::nullopt;
        std::vector<cell_id> remap2;
        FightingFish p2 = induced(f, keep2, p2_head, remap2);
        if (!validate(p2).ok) return std::nullopt;

        // The hook sits at the last reconstructed fin edge of the second
        // part: at itself when `at` survives in p2, otherwise the LL edge
        // that spawned the lining cell `at` belongs to.
        BoundaryEdge last;
        if (keep2[idx(at.cell)]) {
            last = {remap2[idx(at.cell)], SlotKind::LR};
        } else if (in_chain[idx(at.cell)]) {
            cell_id spawn = f.partner(at.cell, SlotKind::UR);
            if (spawn == kFree || !keep2[idx(spawn)]) return std::nullopt;
            last = {remap2[idx(spawn)], SlotKind::LL};
        } else {
            return std::nullopt;
        }
        std::vector<BoundaryEdge> edges = fin(p2);
        auto it = std::find(edges.begin(), edges.end(), last);
        if (it == edges.end()) return std::nullopt;
        int j = static_cast<int>(it - edges.begin()) + 1;
        int flen = static_cast<int>(edges.size());

        WaspWaist w;
        w.p1 = p1;
        w.p2 = p2;
        if (j == flen) {
            w.kind = {CKind::C1, 0};
            if (!isomorphic(c1_bullet(p1, p2), f)) return std::nullopt;
        } else {
            w.kind = {CKind::C2, flen - j};
            if (!isomorphic(c2_bullet(p1, p2, w.kind.i), f)) return std::nullopt;
        }
        return w;
    }
};

}  // namespace

WaspWaist waspwaist_decompose(const FightingFish& f) {
    if (f.empty()) throw domain_error("the empty fish has no decomposition");
    require_valid(f);
    if (f.cell_count() == 1) return {{CKind::C1, 0}, {}, {}};

    if (f.free_slot(f.head, SlotKind::UR)) {
        // No cell ever lined the head's UR, so nothing was lined at all: the
        // head is the fresh cell of a construction with an empty second part.
        cell_id old_head = f.partner(f.head, SlotKind::LR);
        if (old_head == kFree) throw internal_error("valid fish with an isolated head");
        std::vector<char> keep(f.cells.size(), 1);
        keep[idx(f.head)] = 0;
        std::vector<cell_id> remap;
        FightingFish p1 = induced(f, keep, old_head, remap);
        if (!validate(p1).ok || !isomorphic(c1_bullet(p1, {}), f))
            throw internal_error("wasp-waist search failed on a valid fish");
        return {{CKind::C1, 0}, p1, {}};
    }

    WaspWaistSearch search(f);
    if (auto w = search.run()) return *w;
    throw internal_error("wasp-waist search failed on a valid fish");
}

namespace {

FightingFish eval_fish(const DecompTree& t, int node, std::vector<char>& seen) {
    if (node < 0) return {};
    if (node >= static_cast<int>(t.nodes.size()))
        throw invalid_tree("node index " + std::to_string(node) + " out of range");
    if (seen[static_cast<std::size_t>(node)])
        throw invalid_tree("node " + std::to_string(node) + " reached twice");
    seen[static_cast<std::size_t>(node)] = 1;
    const auto& nd = t.nodes[static_cast<std::size_t>(node)];
    FightingFish f1 = eval_fish(t, nd.left, seen);
    FightingFish f2 = eval_fish(t, nd.right, seen);
    if (nd.kind.tag == CKind::C1) return c1_bullet(f1, f2);
    if (f1.empty() || f2.empty()) throw invalid_tree("C2 node with an empty child");
    int bound = static_cast<int>(fin(f2).size()) - 1;
    if (nd.kind.i < 1 || nd.kind.i > bound)
        throw invalid_tree("C2 index " + std::to_string(nd.kind.i) + " outside 1.." +
                           std::to_string(bound));
    return c2_bullet(f1, f2, nd.kind.i);
}

int build_fish_tree(const FightingFish& f, DecompTree& t) {
    if (f.empty()) return -1;
    WaspWaist w = waspwaist_decompose(f);
    int l = build_fish_tree(w.p1, t);
    int r = build_fish_tree(w.p2, t);
    t.nodes.push_back({w.kind, l, r});
    return static_cast<int>(t.nodes.size()) - 1;
}

}  // namespace

FightingFish fish_of_tree(const DecompTree& t) {
    if (t.root >= 0 && t.root >= static_cast<int>(t.nodes.size()))
        throw invalid_tree("root index out of range");
    std::vector<char> seen(t.nodes.size(), 0);
    return eval_fish(t, t.root, seen);
}

DecompTree tree_of_fish(const FightingFish& f) {
    DecompTree t;
    t.root = build_fish_tree(f, t);
    return t;
}

}  // namespace finfish
