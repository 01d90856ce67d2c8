#include "finfish/svg.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace finfish {

namespace {

constexpr double kUnit = 36.0;    // one lattice step in pixels
constexpr double kMargin = 30.0;
constexpr double kNudge = 4.0;    // per-depth shift for stacked cells

struct Canvas {
    int min_x = 0, max_y = 0;

    double px(double x) const { return kMargin + (x - min_x) * kUnit; }
    double py(double y) const { return kMargin + (max_y - y) * kUnit; }
};

}  // namespace

std::string render_svg(const FightingFish& f) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);

    if (f.empty()) {
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"220\" height=\"60\" "
              "viewBox=\"0 0 220 60\">\n"
              "  <text x=\"12\" y=\"34\" font-family=\"sans-serif\" font-size=\"14\">"
              "empty fish: one free lower edge, nothing to draw</text>\n"
              "</svg>\n";
        return os.str();
    }

    require_valid(f);
    const std::vector<std::pair<int, int>> at = embed(f);

    // Diamond around left vertex (X, Y) spans [X, X+2] x [Y-1, Y+1].
    Canvas cv;
    int max_x = at[0].first + 2;
    int min_y = at[0].second - 1;
    cv.min_x = at[0].first;
    cv.max_y = at[0].second + 1;
    for (const auto& [x, y] : at) {
        cv.min_x = std::min(cv.min_x, x);
        max_x = std::max(max_x, x + 2);
        min_y = std::min(min_y, y - 1);
        cv.max_y = std::max(cv.max_y, y + 1);
    }
    const double width = 2 * kMargin + (max_x - cv.min_x) * kUnit;
    const double height = 2 * kMargin + (cv.max_y - min_y) * kUnit;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";

    // Stacking depth per lattice point; deeper copies shift and fade.
    std::map<std::pair<int, int>, int> seen;
    std::vector<double> dx(at.size()), dy(at.size());
    for (cell_id c = 0; c < f.cell_count(); ++c) {
        const int depth = seen[at[static_cast<std::size_t>(c)]]++;
        dx[static_cast<std::size_t>(c)] = depth * kNudge;
        dy[static_cast<std::size_t>(c)] = depth * kNudge;
        const auto& [x, y] = at[static_cast<std::size_t>(c)];
        const double ox = dx[static_cast<std::size_t>(c)];
        const double oy = dy[static_cast<std::size_t>(c)];
        os << "  <polygon class=\"cell\" points=\""
           << cv.px(x) + ox << ',' << cv.py(y) + oy << ' '
           << cv.px(x + 1) + ox << ',' << cv.py(y + 1) + oy << ' '
           << cv.px(x + 2) + ox << ',' << cv.py(y) + oy << ' '
           << cv.px(x + 1) + ox << ',' << cv.py(y - 1) + oy
           << "\" fill=\"#8db8dd\" fill-opacity=\"" << (depth == 0 ? "0.85" : "0.45")
           << "\" stroke=\"#27415e\" stroke-width=\"1.5\"/>\n";
    }

    for (const BoundaryEdge& e : fin(f)) {
        const auto& [x, y] = at[static_cast<std::size_t>(e.cell)];
        const double ox = dx[static_cast<std::size_t>(e.cell)];
        const double oy = dy[static_cast<std::size_t>(e.cell)];
        const double bx = cv.px(x + 1) + ox, by = cv.py(y - 1) + oy;
        double fx, fy;
        if (e.slot == SlotKind::LL) {
            fx = cv.px(x) + ox;
            fy = cv.py(y) + oy;
        } else {
            fx = cv.px(x + 2) + ox;
            fy = cv.py(y) + oy;
        }
        os << "  <line class=\"fin\" x1=\"" << fx << "\" y1=\"" << fy << "\" x2=\"" << bx
           << "\" y2=\"" << by << "\" stroke=\"#d9542c\" stroke-width=\"4\" "
              "stroke-linecap=\"round\"/>\n";
    }

    // Nose at the head's left vertex, a marker at each tail's right vertex.
    {
        const auto& [hx, hy] = at[static_cast<std::size_t>(f.head)];
        os << "  <circle class=\"nose\" cx=\"" << cv.px(hx) + dx[static_cast<std::size_t>(f.head)]
           << "\" cy=\"" << cv.py(hy) + dy[static_cast<std::size_t>(f.head)]
           << "\" r=\"5\" fill=\"#27415e\"/>\n";
    }
    for (cell_id c = 0; c < f.cell_count(); ++c) {
        if (!f.free_slot(c, SlotKind::UR) || !f.free_slot(c, SlotKind::LR)) continue;
        const auto& [x, y] = at[static_cast<std::size_t>(c)];
        os << "  <circle class=\"tail\" cx=\"" << cv.px(x + 2) + dx[static_cast<std::size_t>(c)]
           << "\" cy=\"" << cv.py(y) + dy[static_cast<std::size_t>(c)]
           << "\" r=\"4\" fill=\"#d9542c\"/>\n";
    }

    os << "</svg>\n";
    return os.str();
}

}  // namespace finfish
