#include "geometry/predicates.h"

#include <algorithm>

namespace srs {

int orient(const Point& p, const Point& q, const Point& r) {
    Scalar det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sign(det);
}

Line dualize_point(const Point& p) { return Line(p.x, p.y); }

Point dualize_line(const Line& l) { return Point(l.slope, l.intercept); }

int side_of_line(const Line& l, const Point& p, Nudge n) {
    int c = cmp3(p.y, l.value_at(p.x));
    return c != 0 ? c : nudge_sign(n);
}

Triangle::Triangle(Point pa, Point pb, Point pc) : a(std::move(pa)), b(std::move(pb)), c(std::move(pc)) {
    if (orient(a, b, c) < 0) std::swap(b, c);
}

Segment::Segment(Point pa, Point pb, int sid) : p1(std::move(pa)), p2(std::move(pb)), id(sid) {
    if (cmp3(p1.x, p2.x) > 0 || (p1.x == p2.x && cmp3(p1.y, p2.y) > 0)) std::swap(p1, p2);
}

bool contains(const SidedRange& r, const Point& p) {
    if (r.left_wall && !r.left_wall->contains(p.x)) return false;
    if (r.right_wall && !r.right_wall->contains(p.x)) return false;
    if (r.upper) {
        int s = side_of_line(r.upper->line, p);
        if (s > 0 || (s == 0 && !r.upper->closed)) return false;
    }
    if (r.lower) {
        int s = side_of_line(r.lower->line, p);
        if (s < 0 || (s == 0 && !r.lower->closed)) return false;
    }
    return true;
}

bool contains(const Triangle& t, const Point& p) {
    int o1 = orient(t.a, t.b, p);
    int o2 = orient(t.b, t.c, p);
    int o3 = orient(t.c, t.a, p);
    if (orient(t.a, t.b, t.c) != 0) return o1 >= 0 && o2 >= 0 && o3 >= 0;

    // Collinear triangle: the closed segment between its extreme vertices.
    if (orient(t.a, t.b, p) != 0) return false;
    auto lex_le = [](const Point& u, const Point& v) {
        int c = cmp3(u.x, v.x);
        return c != 0 ? c < 0 : cmp3(u.y, v.y) <= 0;
    };
    Point lo = t.a, hi = t.a;
    for (const Point* q : {&t.b, &t.c}) {
        if (lex_le(*q, lo)) lo = *q;
        if (lex_le(hi, *q)) hi = *q;
    }
    if (t.a == t.b && t.b == t.c) return p == t.a;
    return lex_le(lo, p) && lex_le(p, hi);
}

namespace {

bool on_segment_collinear(const Point& a, const Point& b, const Point& p) {
    return cmp3(std::min(a.x, b.x), p.x) <= 0 && cmp3(p.x, std::max(a.x, b.x)) <= 0 &&
           cmp3(std::min(a.y, b.y), p.y) <= 0 && cmp3(p.y, std::max(a.y, b.y)) <= 0;
}

}  // namespace

bool segments_intersect(const Segment& s, const Segment& q) {
    const Point &a = s.p1, &b = s.p2, &c = q.p1, &d = q.p2;
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment_collinear(a, b, c)) return true;
    if (o2 == 0 && on_segment_collinear(a, b, d)) return true;
    if (o3 == 0 && on_segment_collinear(c, d, a)) return true;
    if (o4 == 0 && on_segment_collinear(c, d, b)) return true;
    return false;
}

bool rays_intersect(const RightRay& s, const RightRay& q) {
    if (s.slope == q.slope) {
        // Parallel: they meet iff collinear (both extend rightward forever).
        return side_of_line(s.support(), q.origin) == 0;
    }
    Scalar t1 = (q.origin.y - s.origin.y + (s.origin.x - q.origin.x) * q.slope) / (s.slope - q.slope);
    Scalar t2 = t1 + (s.origin.x - q.origin.x);
    return sign(t1) >= 0 && sign(t2) >= 0;
}

std::optional<Scalar> ray_segment_hit(const Point& origin, const Point& dir, const Segment& seg) {
    Point e(seg.p2.x - seg.p1.x, seg.p2.y - seg.p1.y);
    Point w(seg.p1.x - origin.x, seg.p1.y - origin.y);
    Scalar denom = dir.x * e.y - dir.y * e.x;
    if (sign(denom) != 0) {
        Scalar t = (w.x * e.y - w.y * e.x) / denom;
        Scalar u = (w.x * dir.y - w.y * dir.x) / denom;
        if (sign(t) >= 0 && sign(u) >= 0 && cmp3(u, Scalar(1)) <= 0) return t;
        return std::nullopt;
    }
    // Parallel: a hit requires collinearity.
    if (sign(w.x * dir.y - w.y * dir.x) != 0) return std::nullopt;
    auto param = [&](const Point& p) -> Scalar {
        if (sign(dir.x) != 0) return (p.x - origin.x) / dir.x;
        return (p.y - origin.y) / dir.y;
    };
    Scalar ta = param(seg.p1), tb = param(seg.p2);
    if (cmp3(ta, tb) > 0) std::swap(ta, tb);
    if (sign(tb) < 0) return std::nullopt;
    return sign(ta) >= 0 ? ta : Scalar(0);
}

}  // namespace srs
