#pragma once

#include <string>
#include <vector>

#include "qvakit/rational.hpp"

namespace qvakit {

enum class Family { gl, o, sp };

std::string family_name(Family f);
Family family_from_string(const std::string& s);

// Structure constants of one algebra in the three classical series. All sign
// conventions are carried by the eps table; nothing downstream special-cases
// the symplectic family beyond reading it.
struct AlgebraSpec {
    Family family = Family::gl;
    int N = 2;
    std::vector<int> eps; // eps_i, +-1, size N (all +1 for gl)
    int epsilon = 1;      // 1 for gl/o, 2 for sp
    Rat kappa;            // N/2 - 1 (o), N/2 + 1 (sp), 0 and unused for gl
    Rat c_crit;           // -N (gl), -N+2 (o), -N/2-1 (sp)

    static AlgebraSpec make(Family f, int N);

    int conj(int i) const { return N + 1 - i; } // i' = N - i + 1, 1-based
    Rat eps_at(int i) const { return Rat(eps[static_cast<size_t>(i - 1)]); }
    bool has_q() const { return family != Family::gl; }
    std::string name() const { return family_name(family) + "_" + std::to_string(N); }
};

// A spectral argument base + hshift*h, exact in both parts. Staggered fusion
// tuples put integer multiples of h here; everything else keeps hshift small.
struct RArg {
    Rat base;
    Rat hshift;

    RArg() = default;
    explicit RArg(Rat b) : base(std::move(b)) {}
    RArg(Rat b, Rat s) : base(std::move(b)), hshift(std::move(s)) {}

    RArg operator+(const RArg& o) const { return {base + o.base, hshift + o.hshift}; }
    RArg operator-(const RArg& o) const { return {base - o.base, hshift - o.hshift}; }
    RArg operator-() const { return {-base, -hshift}; }
    bool pure_h() const { return is_zero(base); }
};

inline RArg rarg(long b, long s = 0) { return {Rat(b), Rat(s)}; }

} // namespace qvakit
