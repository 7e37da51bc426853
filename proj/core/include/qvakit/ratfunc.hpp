#pragma once

#include <utility>
#include <vector>

#include "qvakit/rational.hpp"

namespace qvakit {

// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
using Poly = std::vector<Rat>;

Poly poly_trim(Poly p);
int poly_deg(const Poly& p); // -1 for the zero polynomial
Rat poly_eval(const Poly& p, const Rat& t);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(Poly p, const Rat& c);
// Euclidean remainder and gcd (gcd returned monic).
Poly poly_rem(Poly a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);
Poly poly_divexact(const Poly& a, const Poly& b);
std::string poly_to_string(const Poly& p, const std::string& var = "t");

// Reduced rational function in one variable: coprime, monic denominator.
struct RatFunc1 {
    Poly num;
    Poly den; // monic

    static RatFunc1 make(Poly n, Poly d); // canonicalizes
    Rat eval(const Rat& t) const;         // throws pole_at_sample_error on a pole
};

// Cauchy interpolation: the unique rational function with deg(num) <= deg_num,
// deg(den) <= deg_den through the samples. Requires at least
// deg_num + deg_den + 2 pairwise-distinct abscissae; the extra samples beyond
// the solve act as held-out consistency checks. Throws degree_bound_error if
// no interpolant of the stated shape exists.
RatFunc1 reconstruct_rational(const std::vector<std::pair<Rat, Rat>>& samples,
                              int deg_num, int deg_den);

bool pole_free_at(const RatFunc1& g, const Rat& t0);

} // namespace qvakit
