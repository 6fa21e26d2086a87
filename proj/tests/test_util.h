#pragma once

#include "geometry/classify.h"
#include "geometry/decompose.h"

#include <random>

namespace srs::testutil {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Point rand_point(Rng& rng, long range = 1000000) {
    return Point(scalar_of(rand_int(rng, -range, range)), scalar_of(rand_int(rng, -range, range)));
}

inline Triangle rand_triangle(Rng& rng, long range = 1000000) {
    while (true) {
        Point a = rand_point(rng, range), b = rand_point(rng, range), c = rand_point(rng, range);
        if (orient(a, b, c) != 0) return Triangle(a, b, c);
    }
}

inline Segment rand_segment(Rng& rng, int id, long range = 1000000) {
    while (true) {
        Point a = rand_point(rng, range), b = rand_point(rng, range);
        if (a.x != b.x) return Segment(a, b, id);
    }
}

inline Line rand_line(Rng& rng, long range = 1000) {
    while (true) {
        Point a = rand_point(rng, range), b = rand_point(rng, range);
        if (a.x != b.x) return line_through(a, b);
    }
}

inline RightRay rand_ray(Rng& rng, int id, long range = 1000000) {
    Point o = rand_point(rng, range);
    Scalar m = scalar_of(rand_int(rng, -range, range), 1 + rand_int(rng, 1, 64));
    return RightRay(o, m, id);
}

}  // namespace srs::testutil
