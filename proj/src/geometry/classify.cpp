#include "geometry/classify.h"

#include <stdexcept>

namespace srs {

const char* pair_type_name(PairType t) {
    switch (t) {
        case PairType::None: return "none";
        case PairType::A: return "A";
        case PairType::APrime: return "A'";
        case PairType::B: return "B";
        case PairType::BPrime: return "B'";
        case PairType::C: return "C";
        case PairType::CPrime: return "C'";
        case PairType::D: return "D";
        case PairType::DPrime: return "D'";
    }
    return "?";
}

namespace {

// (value, owner id, end flag) lexicographic order; makes every comparison
// strict so degenerate coordinates resolve deterministically.
int cmp_key(const Scalar& av, int aid, int aend, const Scalar& bv, int bid, int bend) {
    int c = cmp3(av, bv);
    if (c != 0) return c;
    if (aid != bid) return aid < bid ? -1 : 1;
    return aend - bend;
}

// On-line resolves to "above".
int eff_side(int s) { return s == 0 ? 1 : s; }

}  // namespace

PairType classify_ray_pair(const RightRay& s, const RightRay& q) {
    // Parallel rays meet only when collinear; the slope tiebreak below is
    // only sound once that case is settled.
    if (s.slope == q.slope && side_of_line(s.support(), q.origin) != 0) return PairType::None;

    int xo = cmp_key(s.origin.x, s.id, 0, q.origin.x, q.id, 0);
    int mo = cmp_key(s.slope, s.id, 0, q.slope, q.id, 0);
    if (xo > 0) {
        int side = side_of_line(q.support(), s.origin);
        if (mo > 0) return side <= 0 ? PairType::A : PairType::None;
        return side >= 0 ? PairType::APrime : PairType::None;
    }
    int side = side_of_line(s.support(), q.origin);
    if (mo > 0) return side >= 0 ? PairType::B : PairType::None;
    return side <= 0 ? PairType::BPrime : PairType::None;
}

PairType classify_segment_pair(const Segment& s, const Segment& q) {
    if (s.vertical() || q.vertical())
        throw std::invalid_argument("classify_segment_pair: vertical segment (shear the instance first)");

    int sl_ql = cmp_key(s.p1.x, s.id, 0, q.p1.x, q.id, 0);
    if (sl_ql < 0) {
        if (cmp_key(s.p2.x, s.id, 1, q.p1.x, q.id, 0) < 0) return PairType::None;
        if (cmp_key(s.p2.x, s.id, 1, q.p2.x, q.id, 1) < 0) {
            // x_L(s) < x_L(q) <= x_R(s) < x_R(q)
            int left = eff_side(side_of_line(s.support(), q.p_left()));
            int right = eff_side(side_of_line(q.support(), s.p_right()));
            if (left > 0 && right > 0) return PairType::A;
            if (left < 0 && right < 0) return PairType::APrime;
            return PairType::None;
        }
        // x_L(s) < x_L(q) <= x_R(q) < x_R(s): q's span nested in s's
        int left = eff_side(side_of_line(s.support(), q.p_left()));
        int right = eff_side(side_of_line(s.support(), q.p_right()));
        if (left > 0 && right < 0) return PairType::C;
        if (left < 0 && right > 0) return PairType::CPrime;
        return PairType::None;
    }
    if (cmp_key(q.p2.x, q.id, 1, s.p1.x, s.id, 0) < 0) return PairType::None;
    if (cmp_key(q.p2.x, q.id, 1, s.p2.x, s.id, 1) < 0) {
        // x_L(q) < x_L(s) <= x_R(q) < x_R(s)
        int left = eff_side(side_of_line(q.support(), s.p_left()));
        int right = eff_side(side_of_line(s.support(), q.p_right()));
        if (left < 0 && right < 0) return PairType::B;
        if (left > 0 && right > 0) return PairType::BPrime;
        return PairType::None;
    }
    // x_L(q) < x_L(s) <= x_R(s) < x_R(q): s's span nested in q's
    int left = eff_side(side_of_line(q.support(), s.p_left()));
    int right = eff_side(side_of_line(q.support(), s.p_right()));
    if (left < 0 && right > 0) return PairType::D;
    if (left > 0 && right < 0) return PairType::DPrime;
    return PairType::None;
}

}  // namespace srs
