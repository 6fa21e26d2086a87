#pragma once

#include "geometry/predicates.h"

#include <utility>
#include <vector>

namespace srs {

// Vertical decomposition of a closed triangle into at most two cells, each
// with exactly two non-vertical constraints.  Walls are half-open on the
// right except for the rightmost cell, so the cells tile the triangle with
// no double counting.
std::vector<SidedRange> vertical_decompose(const Triangle& t);

// Rewrites a 2-nonvertical-sided range r as plus minus minus:
// [p in r] = [p in plus] - [p in minus] for every point p.
// Throws std::invalid_argument unless r has exactly 2 non-vertical sides.
std::pair<SidedRange, SidedRange> split_by_subtraction(const SidedRange& r);

}  // namespace srs
