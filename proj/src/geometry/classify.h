#pragma once

#include "geometry/predicates.h"

namespace srs {

enum class PairType { None, A, APrime, B, BPrime, C, CPrime, D, DPrime };

const char* pair_type_name(PairType t);

// Intersection type of two rightward rays (input s vs query q), or None when
// they do not meet.  Coordinate ties are broken lexicographically by
// (value, id); a point exactly on the other ray's line counts as incident.
PairType classify_ray_pair(const RightRay& s, const RightRay& q);

// Intersection type of two segments under the same degeneracy rule.  Exactly
// one label fires per intersecting pair in general position.
PairType classify_segment_pair(const Segment& s, const Segment& q);

}  // namespace srs
