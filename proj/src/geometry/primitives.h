#pragma once

#include "geometry/scalar.h"

#include <optional>
#include <vector>

namespace srs {

struct Point {
    Scalar x, y;

    Point() = default;
    Point(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

// Non-vertical line y = slope*x - intercept.  Vertical boundaries are
// expressed with VerticalWall instead, so this type never aliases one.
struct Line {
    Scalar slope, intercept;

    Line() = default;
    Line(Scalar a, Scalar b) : slope(std::move(a)), intercept(std::move(b)) {}

    Scalar value_at(const Scalar& x) const { return slope * x - intercept; }

    bool operator==(const Line& o) const { return slope == o.slope && intercept == o.intercept; }
};

// Line through two points with distinct x.
inline Line line_through(const Point& p, const Point& q) {
    Scalar a = (q.y - p.y) / (q.x - p.x);
    return Line(a, a * p.x - p.y);
}

enum class WallSide { KeepLeft, KeepRight };

// Halfplane {x < x0}, {x <= x0}, {x > x0}, or {x >= x0}.
struct VerticalWall {
    Scalar x0;
    WallSide side = WallSide::KeepLeft;
    bool closed = true;

    VerticalWall() = default;
    VerticalWall(Scalar x, WallSide s, bool c) : x0(std::move(x)), side(s), closed(c) {}

    bool contains(const Scalar& x) const {
        int c = cmp3(x, x0);
        if (c == 0) return closed;
        return side == WallSide::KeepLeft ? c < 0 : c > 0;
    }
};

// Stored counter-clockwise after normalization; degenerate (collinear)
// triangles are legal queries and denote closed point sets.
struct Triangle {
    Point a, b, c;

    Triangle() = default;
    Triangle(Point pa, Point pb, Point pc);
};

struct LineConstraint {
    Line line;
    bool closed = true;
};

// Intersection of <=2 non-vertical halfplanes and <=2 vertical walls
// ((i,j)-sided range, instantiated in the plane).
struct SidedRange {
    std::optional<LineConstraint> upper;  // points (on or) below this line
    std::optional<LineConstraint> lower;  // points (on or) above this line
    std::optional<VerticalWall> left_wall, right_wall;

    int nonvertical_arity() const { return (upper ? 1 : 0) + (lower ? 1 : 0); }
    int vertical_arity() const { return (left_wall ? 1 : 0) + (right_wall ? 1 : 0); }
};

// p1.x <= p2.x after normalization (ties broken by y), so p_left() == p1.
struct Segment {
    Point p1, p2;
    int id = -1;

    Segment() = default;
    Segment(Point a, Point b, int sid);

    const Point& p_left() const { return p1; }
    const Point& p_right() const { return p2; }
    bool vertical() const { return p1.x == p2.x; }
    Line support() const { return line_through(p1, p2); }
};

// {(origin.x + t, origin.y + slope*t) : t >= 0}
struct RightRay {
    Point origin;
    Scalar slope;
    int id = -1;

    RightRay() = default;
    RightRay(Point o, Scalar m, int rid) : origin(std::move(o)), slope(std::move(m)), id(rid) {}

    Line support() const { return Line(slope, slope * origin.x - origin.y); }
};

// Symbolic infinitesimal vertical offset used to express closed/open query
// semantics through a single exact locate path.
enum class Nudge { None, Up, Down };

inline int nudge_sign(Nudge n) { return n == Nudge::Up ? 1 : (n == Nudge::Down ? -1 : 0); }

}  // namespace srs
