#pragma once

#include <string>

#include "finfish/fish.hpp"

namespace finfish {

// Standalone SVG document: one unit diamond per cell at its embedding
// coordinates, fin edges thickened, the nose and every tail vertex marked.
// Cells stacked on the same coordinates are nudged apart and drawn
// translucent so self-overlapping fish stay readable.  The empty fish gives
// a small canvas with a note.
std::string render_svg(const FightingFish& f);

}  // namespace finfish
