#include "finfish/jsonio.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "finfish/errors.hpp"

namespace finfish {

namespace {

using nlohmann::json;

constexpr std::array<SlotKind, 4> kSlots{SlotKind::LL, SlotKind::LR, SlotKind::UR, SlotKind::UL};

json slot_to_json(const FightingFish& f, cell_id c, SlotKind s) {
    cell_id d = f.partner(c, s);
    if (d == kFree) return nullptr;
    return json::array({d, slot_name(mate(s))});
}

cell_id checked_id(const json& j, int count, const std::string& what) {
    if (!j.is_number_integer()) throw invalid_input("fish JSON: " + what + " must be an integer");
    std::int64_t v = j.get<std::int64_t>();
    if (v < 0 || v >= count)
        throw invalid_input("fish JSON: " + what + " " + std::to_string(v) + " is out of range");
    return static_cast<cell_id>(v);
}

}  // namespace

json fish_to_json(const FightingFish& f) {
    json cells = json::array();
    for (cell_id c = 0; c < f.cell_count(); ++c) {
        json cell;
        cell["id"] = c;
        for (SlotKind s : kSlots) cell[slot_name(s)] = slot_to_json(f, c, s);
        cells.push_back(std::move(cell));
    }
    json out;
    out["head"] = f.head == kFree ? json(nullptr) : json(f.head);
    out["cells"] = std::move(cells);
    return out;
}

FightingFish fish_from_json(const json& j) {
    if (!j.is_object()) throw invalid_input("fish JSON: top level must be an object");
    if (auto it = j.find("format"); it != j.end() && *it != "ff-v1")
        throw invalid_input("fish JSON: unsupported format tag");
    auto hit = j.find("head");
    if (hit == j.end()) throw invalid_input("fish JSON: missing \"head\"");
    auto cit = j.find("cells");
    if (cit == j.end() || !cit->is_array())
        throw invalid_input("fish JSON: missing \"cells\" array");

    int count = static_cast<int>(cit->size());
    FightingFish f;
    f.cells.resize(cit->size());
    std::vector<char> used(cit->size(), 0);
    for (const json& cj : *cit) {
        if (!cj.is_object()) throw invalid_input("fish JSON: cell entries must be objects");
        auto idit = cj.find("id");
        if (idit == cj.end()) throw invalid_input("fish JSON: cell without an \"id\"");
        cell_id c = checked_id(*idit, count, "cell id");
        if (used[static_cast<std::size_t>(c)])
            throw invalid_input("fish JSON: duplicate cell id " + std::to_string(c));
        used[static_cast<std::size_t>(c)] = 1;
        for (SlotKind s : kSlots) {
            auto sit = cj.find(slot_name(s));
            if (sit == cj.end())
                throw invalid_input("fish JSON: cell " + std::to_string(c) + " lacks slot \"" +
                                    slot_name(s) + "\"");
            if (sit->is_null()) continue;
            if (!sit->is_array() || sit->size() != 2)
                throw invalid_input("fish JSON: slot values are null or [id, slot]");
            cell_id d = checked_id((*sit)[0], count, "gluing target");
            if (!(*sit)[1].is_string() || (*sit)[1].get<std::string>() != slot_name(mate(s)))
                throw invalid_input("fish JSON: cell " + std::to_string(c) + " slot " +
                                    slot_name(s) + " must carry the tag \"" +
                                    slot_name(mate(s)) + "\"");
            f.cells[static_cast<std::size_t>(c)].glue[static_cast<std::size_t>(slot_index(s))] = d;
        }
    }

    if (hit->is_null()) {
        if (count != 0) throw invalid_input("fish JSON: null head with cells present");
        f.head = kFree;
    } else {
        if (count == 0) throw invalid_input("fish JSON: head given for an empty fish");
        f.head = checked_id(*hit, count, "head");
    }

    for (cell_id c = 0; c < count; ++c)
        for (SlotKind s : kSlots) {
            cell_id d = f.partner(c, s);
            if (d != kFree && f.partner(d, mate(s)) != c)
                throw invalid_input("fish JSON: gluing at cell " + std::to_string(c) + " slot " +
                                    slot_name(s) + " is not recorded from both ends");
        }
    return f;
}

FightingFish fish_from_json_text(const std::string& text) {
    try {
        return fish_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
        throw invalid_input(std::string("fish JSON: ") + e.what());
    }
}

json waspwaist_to_json(const WaspWaist& w) {
    json out;
    out["kind"] = w.kind.tag == CKind::C1 ? "C1" : "C2";
    out["i"] = w.kind.tag == CKind::C1 ? json(nullptr) : json(w.kind.i);
    out["p1"] = fish_to_json(w.p1);
    out["p2"] = fish_to_json(w.p2);
    return out;
}

WaspWaist waspwaist_from_json(const json& j) {
    if (!j.is_object()) throw invalid_input("decomposition JSON: top level must be an object");
    auto kit = j.find("kind");
    if (kit == j.end() || !kit->is_string())
        throw invalid_input("decomposition JSON: missing \"kind\"");
    std::string kind = kit->get<std::string>();
    if (kind != "C1" && kind != "C2")
        throw invalid_input("decomposition JSON: kind must be \"C1\" or \"C2\"");
    auto p1 = j.find("p1");
    auto p2 = j.find("p2");
    if (p1 == j.end() || p2 == j.end())
        throw invalid_input("decomposition JSON: missing \"p1\" or \"p2\"");

    WaspWaist w;
    w.p1 = fish_from_json(*p1);
    w.p2 = fish_from_json(*p2);
    auto iit = j.find("i");
    if (kind == "C1") {
        w.kind = {CKind::C1, 0};
        if (iit != j.end() && !iit->is_null())
            throw invalid_input("decomposition JSON: C1 takes no index");
    } else {
        if (iit == j.end() || !iit->is_number_integer())
            throw invalid_input("decomposition JSON: C2 needs an integer \"i\"");
        std::int64_t i = iit->get<std::int64_t>();
        if (i < 1) throw invalid_input("decomposition JSON: \"i\" must be positive");
        w.kind = {CKind::C2, static_cast<int>(i)};
    }
    return w;
}

}  // namespace finfish
