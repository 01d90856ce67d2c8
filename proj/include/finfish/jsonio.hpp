#pragma once

#include <string>

#include "json.hpp"

#include "finfish/fish.hpp"
#include "finfish/waspwaist.hpp"

// JSON encoding of fish complexes.  A fish is
//   {"head": id|null, "cells": [{"id": n, "LL": null|[id,"UR"],
//     "LR": null|[id,"UL"], "UR": null|[id,"LL"], "UL": null|[id,"LR"]}]}
// with dense ids in any order; each gluing appears from both ends and the
// tag names the partner slot.  The empty fish is {"head": null, "cells": []}.
// A "format" member is accepted when it equals "ff-v1".  Decompositions are
// {"kind": "C1"|"C2", "i": n|null, "p1": fish, "p2": fish}.

namespace finfish {

nlohmann::json fish_to_json(const FightingFish& f);
FightingFish fish_from_json(const nlohmann::json& j);
FightingFish fish_from_json_text(const std::string& text);

nlohmann::json waspwaist_to_json(const WaspWaist& w);
WaspWaist waspwaist_from_json(const nlohmann::json& j);

}  // namespace finfish
