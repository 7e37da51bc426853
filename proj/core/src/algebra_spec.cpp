#include "qvakit/algebra_spec.hpp"

#include "qvakit/errors.hpp"

namespace qvakit {

std::string family_name(Family f) {
    switch (f) {
        case Family::gl: return "gl";
        case Family::o: return "o";
        case Family::sp: return "sp";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    if (s == "gl") return Family::gl;
    if (s == "o") return Family::o;
    if (s == "sp") return Family::sp;
    throw unsupported_error("unknown family: " + s);
}

AlgebraSpec AlgebraSpec::make(Family f, int N) {
    if (N < 2) throw unsupported_error("N must be at least 2");
    if (f == Family::sp && N % 2 != 0)
        throw unsupported_error("sp requires even N");
    AlgebraSpec s;
    s.family = f;
    s.N = N;
    s.eps.assign(static_cast<size_t>(N), 1);
    if (f == Family::sp) {
        for (int i = N / 2; i < N; ++i) s.eps[static_cast<size_t>(i)] = -1;
        s.epsilon = 2;
        s.kappa = rat(N, 2) + 1;
        s.c_crit = -rat(N, 2) - 1;
    } else if (f == Family::o) {
        s.epsilon = 1;
        s.kappa = rat(N, 2) - 1;
        s.c_crit = Rat(-N + 2);
    } else {
        s.epsilon = 1;
        s.kappa = Rat(0);
        s.c_crit = Rat(-N);
    }
    return s;
}

} // namespace qvakit
