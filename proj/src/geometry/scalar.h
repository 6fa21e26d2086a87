#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace srs {

// Exact rational scalar. mpq_class keeps values canonical (gcd(num,den)=1,
// den>0), which is the invariant every predicate in this library relies on.
using Scalar = mpq_class;

inline int sign(const Scalar& s) { return sgn(s); }

inline int cmp3(const Scalar& a, const Scalar& b) { return cmp(a, b); }

inline Scalar scalar_of(long num, long den = 1) {
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

// Parses "p/q", plain integers, or decimal literals ("-3.25") exactly.
// Returns nullopt on malformed input.
std::optional<Scalar> parse_scalar(const std::string& token);

std::string to_string(const Scalar& s);

}  // namespace srs
