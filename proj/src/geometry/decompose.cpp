#include "geometry/decompose.h"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace srs {

namespace {

VerticalWall left_closed(const Scalar& x) { return VerticalWall(x, WallSide::KeepRight, true); }
VerticalWall right_open(const Scalar& x) { return VerticalWall(x, WallSide::KeepLeft, false); }
VerticalWall right_closed(const Scalar& x) { return VerticalWall(x, WallSide::KeepLeft, true); }

SidedRange band(const Line& upper, const Line& lower, VerticalWall lw, VerticalWall rw) {
    SidedRange r;
    r.upper = LineConstraint{upper, true};
    r.lower = LineConstraint{lower, true};
    r.left_wall = std::move(lw);
    r.right_wall = std::move(rw);
    return r;
}

}  // namespace

std::vector<SidedRange> vertical_decompose(const Triangle& t) {
    std::array<Point, 3> v = {t.a, t.b, t.c};
    std::sort(v.begin(), v.end(), [](const Point& p, const Point& q) {
        int c = cmp3(p.x, q.x);
        return c != 0 ? c < 0 : cmp3(p.y, q.y) < 0;
    });

    if (orient(v[0], v[1], v[2]) == 0) {
        // Degenerate: the closed segment from v[0] to v[2].
        if (v[0].x == v[2].x) {
            Line top(Scalar(0), -v[2].y), bottom(Scalar(0), -v[0].y);
            return {band(top, bottom, left_closed(v[0].x), right_closed(v[2].x))};
        }
        Line support = line_through(v[0], v[2]);
        return {band(support, support, left_closed(v[0].x), right_closed(v[2].x))};
    }

    if (v[0].x == v[1].x)
        return {band(line_through(v[1], v[2]), line_through(v[0], v[2]),
                     left_closed(v[0].x), right_closed(v[2].x))};
    if (v[1].x == v[2].x)
        return {band(line_through(v[0], v[2]), line_through(v[0], v[1]),
                     left_closed(v[0].x), right_closed(v[2].x))};

    Line long_edge = line_through(v[0], v[2]);
    bool apex_above = side_of_line(long_edge, v[1]) > 0;
    Line first = line_through(v[0], v[1]);
    Line second = line_through(v[1], v[2]);
    std::vector<SidedRange> cells;
    cells.push_back(band(apex_above ? first : long_edge, apex_above ? long_edge : first,
                         left_closed(v[0].x), right_open(v[1].x)));
    cells.push_back(band(apex_above ? second : long_edge, apex_above ? long_edge : second,
                         left_closed(v[1].x), right_closed(v[2].x)));
    return cells;
}

std::pair<SidedRange, SidedRange> split_by_subtraction(const SidedRange& r) {
    if (r.nonvertical_arity() != 2)
        throw std::invalid_argument("split_by_subtraction: range must have 2 non-vertical sides");
    SidedRange plus;
    plus.upper = r.upper;
    plus.left_wall = r.left_wall;
    plus.right_wall = r.right_wall;

    SidedRange minus;
    // Complement of the lower constraint within the walls: strictly below the
    // lower line when the lower side was closed, on-or-below otherwise.
    minus.upper = LineConstraint{r.lower->line, !r.lower->closed};
    minus.left_wall = r.left_wall;
    minus.right_wall = r.right_wall;
    return {plus, minus};
}

}  // namespace srs
