#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "doctest.h"
#include "finfish/decomp.hpp"
#include "finfish/errors.hpp"
#include "finfish/fish.hpp"
#include "finfish/perm.hpp"
#include "finfish/waspwaist.hpp"

using namespace finfish;

namespace {

FightingFish a_fish() { return add_cell(head_only(), GrowthRule::A, 0); }
FightingFish b_fish() { return add_cell(head_only(), GrowthRule::B, 0); }

FightingFish staircase() {
    FightingFish f = head_only();
    f = add_cell(f, GrowthRule::A, 0);
    f = add_cell(f, GrowthRule::A, 1);
    f = add_cell(f, GrowthRule::B, 1);
    return f;
}

std::vector<Perm> all_2ssp(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), value_t{1});
    std::vector<Perm> out;
    do {
        if (is_two_stack_sortable(p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

FightingFish rebuild(const WaspWaist& w) {
    if (w.kind.tag == CKind::C1) return c1_bullet(w.p1, w.p2);
    return c2_bullet(w.p1, w.p2, w.kind.i);
}

}  // namespace

TEST_CASE("line_fin on pinned examples") {
    LiningState one = line_fin(head_only(), 1);
    CHECK(one.fish.cell_count() == 2);
    CHECK(one.fish.head == 1);
    CHECK(one.fish.partner(1, SlotKind::UR) == 0);
    CHECK(one.lining == std::vector<cell_id>{1});
    CHECK(one.exposed == BoundaryEdge{1, SlotKind::LR});

    // The second fin edge is the head's LR and only moves the exposed slot.
    LiningState two = line_fin(head_only(), 2);
    CHECK(two.fish.cell_count() == 2);
    CHECK(two.lining == std::vector<cell_id>{1});
    CHECK(two.exposed == BoundaryEdge{0, SlotKind::LR});

    LiningState three = line_fin(a_fish(), 3);
    CHECK(three.fish.cell_count() == 3);
    CHECK(three.fish.head == 2);
    CHECK(three.fish.partner(2, SlotKind::UR) == 0);
    CHECK(three.exposed == BoundaryEdge{1, SlotKind::LR});

    // Consecutive LL edges chain the fresh cells through UL-LR gluings.
    LiningState chained = line_fin(b_fish(), 2);
    CHECK(chained.fish.cell_count() == 4);
    CHECK(chained.lining == std::vector<cell_id>{2, 3});
    CHECK(chained.fish.partner(3, SlotKind::UL) == 2);
    CHECK(chained.fish.partner(3, SlotKind::UR) == 1);
    CHECK(chained.exposed == BoundaryEdge{3, SlotKind::LR});

    CHECK_THROWS_AS(line_fin(FightingFish{}, 1), invalid_input);
    CHECK_THROWS_AS(line_fin(head_only(), 0), invalid_input);
    CHECK_THROWS_AS(line_fin(head_only(), 3), invalid_input);
}

TEST_CASE("c1 construction on pinned examples") {
    CHECK(c1_bullet({}, {}) == head_only());
    CHECK(isomorphic(c1_bullet({}, head_only()), a_fish()));
    CHECK(isomorphic(c1_bullet(head_only(), {}), b_fish()));

    FightingFish both = c1_bullet(head_only(), head_only());
    CHECK(both.cell_count() == 3);
    CHECK(fish_stats(both) == FishStats{4, 2, 2, 4, 1});
    // The hooked part hangs off the tail's LR slot.
    CHECK(both.partner(2, SlotKind::UL) == 0);
    CHECK(both.head == 1);
    CHECK(validate(both).ok);

    FightingFish tall = c1_bullet({}, b_fish());
    CHECK(tall.cell_count() == 4);
    CHECK(fish_stats(tall) == FishStats{4, 2, 2, 4, 1});
    CHECK(validate(tall).ok);
    CHECK(!isomorphic(tall, both));
}

TEST_CASE("c2 construction on pinned examples") {
    FightingFish f = c2_bullet(head_only(), head_only(), 1);
    CHECK(f.cell_count() == 3);
    CHECK(fish_stats(f) == FishStats{4, 2, 2, 3, 2});
    CHECK(f.partner(1, SlotKind::UR) == 0);
    CHECK(f.partner(1, SlotKind::LR) == 2);
    CHECK(f.head == 1);
    CHECK(validate(f).ok);

    CHECK(isomorphic(c2_bullet(head_only(), a_fish(), 1), staircase()));

    FightingFish deep = c2_bullet(head_only(), a_fish(), 2);
    CHECK(deep.cell_count() == 4);
    CHECK(fish_stats(deep) == FishStats{5, 2, 3, 3, 2});
    CHECK(validate(deep).ok);

    CHECK_THROWS_AS(c2_bullet({}, head_only(), 1), invalid_input);
    CHECK_THROWS_AS(c2_bullet(head_only(), {}, 1), invalid_input);
    CHECK_THROWS_AS(c2_bullet(head_only(), head_only(), 0), invalid_input);
    CHECK_THROWS_AS(c2_bullet(head_only(), head_only(), 2), invalid_input);
    CHECK_THROWS_AS(c2_bullet(head_only(), a_fish(), 3), invalid_input);
}

TEST_CASE("constructions reject invalid parts") {
    FightingFish junk;
    junk.cells.resize(2);
    junk.head = 0;
    CHECK_THROWS_AS(c1_bullet(junk, {}), invalid_complex);
    CHECK_THROWS_AS(c1_bullet({}, junk), invalid_complex);
    CHECK_THROWS_AS(c2_bullet(junk, head_only(), 1), invalid_complex);
}

TEST_CASE("waspwaist_decompose on pinned examples") {
    WaspWaist lone = waspwaist_decompose(head_only());
    CHECK(lone.kind == DecompKind{CKind::C1, 0});
    CHECK(lone.p1.empty());
    CHECK(lone.p2.empty());

    WaspWaist above = waspwaist_decompose(a_fish());
    CHECK(above.kind == DecompKind{CKind::C1, 0});
    CHECK(above.p1.empty());
    CHECK(isomorphic(above.p2, head_only()));

    WaspWaist below = waspwaist_decompose(b_fish());
    CHECK(below.kind == DecompKind{CKind::C1, 0});
    CHECK(isomorphic(below.p1, head_only()));
    CHECK(below.p2.empty());

    WaspWaist stairs = waspwaist_decompose(staircase());
    CHECK(stairs.kind == DecompKind{CKind::C2, 1});
    CHECK(isomorphic(stairs.p1, head_only()));
    CHECK(isomorphic(stairs.p2, a_fish()));

    WaspWaist fork = waspwaist_decompose(c2_bullet(head_only(), head_only(), 1));
    CHECK(fork.kind == DecompKind{CKind::C2, 1});
    CHECK(isomorphic(fork.p1, head_only()));
    CHECK(isomorphic(fork.p2, head_only()));

    // The hook sits on a fin edge of the lined part, not on a lining cell.
    WaspWaist hung = waspwaist_decompose(c1_bullet(head_only(), head_only()));
    CHECK(hung.kind == DecompKind{CKind::C1, 0});
    CHECK(isomorphic(hung.p1, head_only()));
    CHECK(isomorphic(hung.p2, head_only()));

    CHECK_THROWS_AS(waspwaist_decompose(FightingFish{}), domain_error);

    FightingFish junk;
    junk.cells.resize(2);
    junk.head = 0;
    CHECK_THROWS_AS(waspwaist_decompose(junk), invalid_complex);
}

TEST_CASE("construction statistics recurrences") {
    std::vector<FightingFish> parts{FightingFish{}, head_only(), a_fish(), b_fish(), staircase(),
                                    c2_bullet(head_only(), head_only(), 1),
                                    c1_bullet(head_only(), head_only())};
    for (const FightingFish& f1 : parts)
        for (const FightingFish& f2 : parts) {
            FishStats v1 = fish_stats(f1);
            FishStats v2 = fish_stats(f2);
            FishStats c1 = fish_stats(c1_bullet(f1, f2));
            CHECK(c1.size == v1.size + v2.size);
            CHECK(c1.fin == v1.fin + v2.fin);
            CHECK(c1.tails == v1.tails - 1 + v2.tails);
            CHECK(c1.lsize == (f1.empty() ? v2.lsize : v1.lsize + v2.lsize));
            CHECK(c1.rsize == (f2.empty() ? v1.rsize : v1.rsize + v2.rsize));
            if (f1.empty() || f2.empty()) continue;
            for (int i = 1; i < v2.fin; ++i) {
                FishStats c2 = fish_stats(c2_bullet(f1, f2, i));
                CHECK(c2.size == v1.size + v2.size);
                CHECK(c2.lsize == v1.lsize + v2.lsize);
                CHECK(c2.rsize == v1.rsize + v2.rsize);
                CHECK(c2.fin == v1.fin + v2.fin - i);
                CHECK(c2.tails == v1.tails + v2.tails);
            }
        }
}

TEST_CASE("fish trees round-trip") {
    CHECK(tree_of_fish(FightingFish{}).empty());
    CHECK(fish_of_tree(DecompTree{}) == FightingFish{});
    CHECK(tree_to_string(tree_of_fish(head_only())) == "(C1 E E)");
    CHECK(tree_to_string(tree_of_fish(staircase())) == "(C2:1 (C1 E E) (C1 E (C1 E E)))");
    CHECK(isomorphic(fish_of_tree(tree_from_string("(C2:1 (C1 E E) (C1 E (C1 E E)))")),
                     staircase()));

    for (int n = 1; n <= 5; ++n)
        for (const Perm& p : all_2ssp(n)) {
            DecompTree t = tree_of_perm(p);
            FightingFish f = fish_of_tree(t);
            CAPTURE(seq_to_string(p));
            CHECK(validate(f).ok);
            CHECK(tree_to_string(tree_of_fish(f)) == tree_to_string(t));
        }
}

TEST_CASE("decompose inverts both constructions exhaustively") {
    for (int n = 1; n <= 5; ++n)
        for (const Perm& p : all_2ssp(n)) {
            FightingFish f = fish_of_tree(tree_of_perm(p));
            if (f.cell_count() < 2) continue;
            WaspWaist w = waspwaist_decompose(f);
            CAPTURE(seq_to_string(p));
            CHECK(isomorphic(rebuild(w), f));
        }
}

TEST_CASE("malformed fish trees are rejected") {
    CHECK_THROWS_AS(fish_of_tree(tree_from_string("(C2:1 E (C1 E E))")), invalid_tree);
    CHECK_THROWS_AS(fish_of_tree(tree_from_string("(C2:2 (C1 E E) (C1 E E))")), invalid_tree);

    DecompTree cyc;
    cyc.nodes.push_back({{CKind::C1, 0}, 0, -1});
    cyc.root = 0;
    CHECK_THROWS_AS(fish_of_tree(cyc), invalid_tree);

    DecompTree oob;
    oob.nodes.push_back({{CKind::C1, 0}, -1, 5});
    oob.root = 0;
    CHECK_THROWS_AS(fish_of_tree(oob), invalid_tree);

    DecompTree rootless;
    rootless.root = 3;
    CHECK_THROWS_AS(fish_of_tree(rootless), invalid_tree);
}
