#pragma once

#include <gmpxx.h>
#include <string>

#include "qvakit/errors.hpp"

namespace qvakit {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den > 0 as
// long as values are built through the helpers below.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw non_invertible_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// Serialized form is always "p/q", q > 0, gcd-reduced ("3", "-1/2" accepted on read).
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

} // namespace qvakit
