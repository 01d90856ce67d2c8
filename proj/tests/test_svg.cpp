#include <string>

#include "doctest.h"
#include "finfish/bijection.hpp"
#include "finfish/errors.hpp"
#include "finfish/svg.hpp"

using namespace finfish;

namespace {

std::size_t occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("svg for the single cell") {
    std::string svg = render_svg(head_only());
    CHECK(occurrences(svg, "<polygon") == 1);
    CHECK(occurrences(svg, "class=\"fin\"") == 2);
    CHECK(occurrences(svg, "class=\"nose\"") == 1);
    CHECK(occurrences(svg, "class=\"tail\"") == 1);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("svg for a four cell fish") {
    std::string svg = render_svg(phi({2, 4, 3, 1}));
    CHECK(occurrences(svg, "<polygon") == 4);
    CHECK(occurrences(svg, "class=\"fin\"") == 4);
    CHECK(occurrences(svg, "class=\"tail\"") == 2);
    CHECK(occurrences(svg, "class=\"nose\"") == 1);
}

TEST_CASE("svg handles overlaps and the empty fish") {
    CHECK(render_svg(FightingFish{}).find("empty fish") != std::string::npos);

    // (4,1,5,2,3) forces two cells onto one lattice point.
    std::string svg = render_svg(phi({4, 1, 5, 2, 3}));
    CHECK(occurrences(svg, "<polygon") == 5);
    CHECK(svg.find("fill-opacity=\"0.45\"") != std::string::npos);

    FightingFish junk;
    junk.cells.resize(2);
    junk.head = 0;
    CHECK_THROWS_AS(render_svg(junk), invalid_complex);
}
