#include "qvakit/fseries.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "qvakit/errors.hpp"

namespace qvakit {

namespace {

// Coefficient of u^{-s} in (u+c)^{-k}: (-1)^{s-k} binom(s-1, s-k) c^{s-k}.
Rat alpha(int k, int s, const Rat& c) {
    if (k == 0) return s == 0 ? Rat(1) : Rat(0);
    if (s < k) return Rat(0);
    const int j = s - k;
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(s - 1),
                 static_cast<unsigned long>(j));
    Rat r(binom);
    Rat cp(1);
    for (int t = 0; t < j; ++t) cp *= c;
    r *= cp;
    if (j % 2 != 0) r = -r;
    return r;
}

// rhs[r] of (1 - u^{-2})^{-1}.
Rat rhs_at(int r) { return (r % 2 == 0) ? Rat(1) : Rat(0); }

// Coefficient of u^{-s} in f(u+c), using coefficients of f up to index s.
Rat shifted_coeff(const USeries& f, int s, const Rat& c) {
    Rat acc(0);
    for (int k = 0; k <= s && k <= f.order(); ++k)
        acc += f[k] * alpha(k, s, c);
    return acc;
}

} // namespace

std::vector<Rat> f_equation_residual_reflect(const AlgebraSpec&, const USeries& f) {
    const int K = f.order();
    std::vector<Rat> res(static_cast<size_t>(K) + 1);
    for (int r = 0; r <= K; ++r) {
        Rat acc(0);
        for (int a = 0; a <= r; ++a) {
            Rat term = f[a] * f[r - a];
            if ((r - a) % 2 != 0) term = -term;
            acc += term;
        }
        res[static_cast<size_t>(r)] = acc - rhs_at(r);
    }
    return res;
}

std::vector<Rat> f_equation_residual_shift(const AlgebraSpec& spec, const USeries& f) {
    const int K = f.order();
    std::vector<Rat> res(static_cast<size_t>(K) + 1);
    if (spec.family == Family::gl) {
        // f(u) - (1 - u^{-2})^{-1} f(u+N) = 0
        const Rat N(spec.N);
        for (int r = 0; r <= K; ++r) {
            Rat acc(0);
            for (int m = 0; 2 * m <= r; ++m) acc += shifted_coeff(f, r - 2 * m, N);
            res[static_cast<size_t>(r)] = f[r] - acc;
        }
    } else {
        // f(u) f(u+kappa) - (1 - u^{-2})^{-1} = 0
        for (int r = 0; r <= K; ++r) {
            Rat acc(0);
            for (int a = 0; a <= r; ++a) acc += f[a] * shifted_coeff(f, r - a, spec.kappa);
            res[static_cast<size_t>(r)] = acc - rhs_at(r);
        }
    }
    return res;
}

USeries f_series(const AlgebraSpec& spec, int K) {
    if (K < 1) throw shape_error("f-series order must be at least 1");
    USeries f;
    f.coeffs.assign(static_cast<size_t>(K) + 1, Rat(0));
    f.coeffs[0] = 1;

    if (spec.family == Family::gl) {
        // Order-(r) expansion of f(u) = (1-u^{-2})^{-1} f(u+N): the c_r terms
        // cancel and the top surviving unknown is c_{r-1} with coefficient
        // -(r-1)N, so the equation at order r determines c_{r-1}.
        const Rat N(spec.N);
        for (int r = 2; r <= K + 1; ++r) {
            Rat rest(0);
            for (int k = 0; k <= r - 2; ++k) rest += f[k] * alpha(k, r, N);
            for (int m = 1; 2 * m <= r; ++m)
                for (int k = 0; k <= r - 2 * m; ++k) rest += f[k] * alpha(k, r - 2 * m, N);
            f.coeffs[static_cast<size_t>(r - 1)] = rest / (Rat(r - 1) * N);
        }
    } else {
        // Order-r expansion of f(u) f(u+kappa) = (1-u^{-2})^{-1}: c_r enters
        // twice with total coefficient 2, everything else is known.
        for (int r = 1; r <= K; ++r) {
            Rat rest(0);
            for (int a = 1; a <= r - 1; ++a) {
                Rat inner(0);
                for (int k = 0; k <= r - a; ++k) inner += f[k] * alpha(k, r - a, spec.kappa);
                rest += f[a] * inner;
            }
            for (int k = 0; k <= r - 1; ++k) rest += f[k] * alpha(k, r, spec.kappa);
            f.coeffs[static_cast<size_t>(r)] = (rhs_at(r) - rest) / 2;
        }
    }

    // The defining equations overdetermine the coefficients; uniqueness is
    // verified rather than assumed.
    for (const Rat& x : f_equation_residual_reflect(spec, f))
        if (!is_zero(x))
            throw internal_consistency_error("f-series: reflection equation failed for " +
                                             spec.name());
    for (const Rat& x : f_equation_residual_shift(spec, f))
        if (!is_zero(x))
            throw internal_consistency_error("f-series: shift equation failed for " +
                                             spec.name());
    if (spec.family != Family::gl && !is_zero(f[1]))
        throw internal_consistency_error("f-series: c_1 != 0 for " + spec.name());
    return f;
}

HSeries f_at(const USeries& f, const Rat& a, int H) {
    if (is_zero(a)) throw pole_at_sample_error("f(a/h) at a = 0");
    if (f.order() < H - 1)
        throw truncation_depth_error("f-series order " + std::to_string(f.order()) +
                                     " too shallow for h-order " + std::to_string(H));
    HSeries s(H);
    Rat inv_a = 1 / a;
    Rat p(1);
    for (int k = 0; k < H; ++k) {
        s[k] = f[k] * p;
        p *= inv_a;
    }
    return s;
}

HSeries f_at_arg(const USeries& f, const RArg& w, int H) {
    if (is_zero(w.hshift)) return f_at(f, w.base, H);
    if (w.pure_h()) throw pole_at_sample_error("f at a pure-h argument");
    if (f.order() < H - 1)
        throw truncation_depth_error("f-series too shallow");
    // h/w as an h-series, then sum c_k (h/w)^k
    HSeries hw = expand_shifted_inverse(w.base, w.hshift, H).shift_up();
    HSeries acc = HSeries::one(H);
    HSeries pw = HSeries::one(H);
    for (int k = 1; k < H; ++k) {
        pw = pw * hw;
        acc += pw * f[k];
    }
    return acc;
}

void write_f_cache(const AlgebraSpec& spec, const USeries& f, std::ostream& os) {
    os << family_name(spec.family) << ' ' << spec.N << ' ' << f.order() << '\n';
    for (const Rat& c : f.coeffs) os << rat_to_string(c) << '\n';
}

USeries read_f_cache(std::istream& is, std::string& family, int& N) {
    int K = -1;
    if (!(is >> family >> N >> K) || K < 0)
        throw parse_error("f-cache: bad header");
    family_from_string(family); // validates
    USeries f;
    f.coeffs.reserve(static_cast<size_t>(K) + 1);
    std::string line;
    for (int k = 0; k <= K; ++k) {
        std::string tok;
        if (!(is >> tok)) throw parse_error("f-cache: truncated coefficient list");
        f.coeffs.push_back(rat_from_string(tok));
    }
    if (f.coeffs.empty() || f.coeffs[0] != 1)
        throw parse_error("f-cache: leading coefficient must be 1");
    return f;
}

} // namespace qvakit
