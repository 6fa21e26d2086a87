#pragma once

#include "geometry/primitives.h"

namespace srs {

// Sign of the signed area of (p, q, r): +1 counter-clockwise, 0 collinear.
int orient(const Point& p, const Point& q, const Point& r);

// Order-preserving duality p=(a,b) <-> line y = a*x - b.
Line dualize_point(const Point& p);
Point dualize_line(const Line& l);

// Sign of p.y - l(p.x), with the nudge breaking exact incidences:
// +1 when p is above l.
int side_of_line(const Line& l, const Point& p, Nudge n = Nudge::None);

// Closed membership tests.
bool contains(const SidedRange& r, const Point& p);
bool contains(const Triangle& t, const Point& p);

bool segments_intersect(const Segment& s, const Segment& q);
bool rays_intersect(const RightRay& s, const RightRay& q);

// Parameter t >= 0 of the first point of `seg` hit along the ray, if any.
std::optional<Scalar> ray_segment_hit(const Point& origin, const Point& dir, const Segment& seg);

}  // namespace srs
