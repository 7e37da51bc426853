#include "qvakit/rmatrix.hpp"

#include <algorithm>

#include "qvakit/errors.hpp"

namespace qvakit {

namespace {

// h/w as an h-series for w = base + shift*h. A pure-h argument gives the
// exact constant 1/shift.
HSeries h_over(const RArg& w, int H) {
    if (w.pure_h()) {
        if (is_zero(w.hshift)) throw pole_at_sample_error("h/0");
        return HSeries::constant(1 / w.hshift, H);
    }
    return expand_shifted_inverse(w.base, w.hshift, H).shift_up();
}

// w itself as an h-series (base + shift*h).
HSeries as_series(const RArg& w, int H) {
    HSeries s(H);
    if (H > 0) s[0] = w.base;
    if (H > 1) s[1] = w.hshift;
    return s;
}

} // namespace

TensorOp r_factor(const AlgebraEnv& env, RKind kind, const RArg& arg,
                  int arity, int a, int b) {
    const int H = env.H;
    const AlgebraSpec& spec = env.spec;
    FactorSet at{a < b ? a : b, a < b ? b : a};
    if (a >= b) throw shape_error("r_factor expects a < b");

    TensorOp r2(spec.N, 2, H);
    const TensorOp I2 = TensorOp::identity(spec.N, 2, H);
    const TensorOp P = op_P(spec, H);

    switch (kind) {
        case RKind::plain:
        case RKind::normalized: {
            HSeries cp = h_over(arg, H);
            r2 = I2 - P.scaled(cp);
            if (spec.has_q()) {
                RArg shifted{arg.base, arg.hshift - spec.kappa};
                HSeries cq = h_over(shifted, H);
                r2 += op_Q(spec, H).scaled(cq);
            }
            if (kind == RKind::normalized) {
                if (arg.pure_h())
                    throw pole_at_sample_error("normalized R at a pure-h argument");
                r2 = r2.scaled(f_at_arg(env.f, arg, H));
            }
            break;
        }
        case RKind::polynomial: {
            HSeries u = as_series(arg, H);
            HSeries h(H);
            if (H > 1) h[1] = 1;
            if (!spec.has_q()) {
                // u I - h P
                r2 = I2.scaled(u) - P.scaled(h);
            } else {
                // u(u - h kappa) I - h(u - h kappa) P + h u Q
                HSeries um = u;
                if (H > 1) um[1] -= spec.kappa;
                r2 = I2.scaled(u * um) - P.scaled(h * um) + op_Q(spec, H).scaled(h * u);
            }
            break;
        }
    }
    if (arity == 2 && a == 1 && b == 2) return r2;
    return embed(r2, arity, at);
}

TensorOp r_single(const AlgebraEnv& env, RKind kind, const RArg& arg) {
    return r_factor(env, kind, arg, 2, 1, 2);
}

BlockSide block_side(int first_index, const std::vector<RArg>& points) {
    BlockSide s;
    int f = first_index;
    for (const RArg& p : points) s.push_back({f++, p});
    return s;
}

BlockSide block_side_rat(int first_index, const std::vector<Rat>& points) {
    BlockSide s;
    int f = first_index;
    for (const Rat& p : points) s.push_back({f++, RArg(p)});
    return s;
}

TensorOp r_block_general(const AlgebraEnv& env, RKind kind, const BlockSide& A,
                         const BlockSide& B, const RArg& z, bool bar1, bool bar2,
                         bool underlined, int arity) {
    // plain: i forward, j backward; underlined: both forward. Bars reverse.
    std::vector<size_t> iord(A.size()), jord(B.size());
    for (size_t k = 0; k < A.size(); ++k) iord[k] = k;
    for (size_t k = 0; k < B.size(); ++k) jord[k] = k;
    if (bar1) std::reverse(iord.begin(), iord.end());
    const bool j_forward = underlined != bar2;
    if (!j_forward) std::reverse(jord.begin(), jord.end());

    TensorOp acc = TensorOp::identity(env.spec.N, arity, env.H);
    for (size_t ii : iord) {
        for (size_t jj : jord) {
            const BlockFactor& fa = A[ii];
            const BlockFactor& fb = B[jj];
            RArg arg = underlined ? z + fa.point + fb.point : z + fa.point - fb.point;
            int lo = std::min(fa.index, fb.index);
            int hi = std::max(fa.index, fb.index);
            TensorOp fac = r_factor(env, kind, arg, arity, lo, hi);
            acc = compose(acc, fac);
        }
    }
    return acc;
}

TensorOp r_block(const AlgebraEnv& env, RKind kind, const std::vector<RArg>& u,
                 const std::vector<RArg>& v, const RArg& z, bool bar1, bool bar2,
                 bool underlined) {
    const int n = static_cast<int>(u.size());
    const int m = static_cast<int>(v.size());
    return r_block_general(env, kind, block_side(1, u), block_side(n + 1, v), z,
                           bar1, bar2, underlined, n + m);
}

TensorOp r_fused(const AlgebraEnv& env, int n, const std::vector<RArg>& u) {
    if (static_cast<int>(u.size()) != n) throw shape_error("r_fused: |u| != n");
    TensorOp acc = TensorOp::identity(env.spec.N, n, env.H);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            RArg arg = u[static_cast<size_t>(i - 1)] - u[static_cast<size_t>(j - 1)];
            acc = compose(acc, r_factor(env, RKind::plain, arg, n, i, j));
        }
    Rat fact(1);
    for (int k = 2; k <= n; ++k) fact *= k;
    return acc.scaled(1 / fact);
}

std::vector<RArg> staggered_tuple(const AlgebraSpec& spec, int n, const Rat& base) {
    std::vector<RArg> u;
    u.reserve(static_cast<size_t>(n));
    if (spec.family == Family::o) {
        for (int i = 0; i < n; ++i) u.push_back({base, Rat(-(n - 1 - i))});
    } else {
        for (int i = 0; i < n; ++i) u.push_back({base, Rat(-i)});
    }
    return u;
}

TensorOp fusion_idempotent(const AlgebraEnv& env, int n) {
    const AlgebraSpec& spec = env.spec;
    int n_max = spec.family == Family::sp ? spec.N / 2 : spec.N;
    if (n < 1 || n > n_max)
        throw unsupported_error("fusion idempotent out of range for " + spec.name());
    return r_fused(env, n, staggered_tuple(spec, n, Rat(0)));
}

TensorOp antisymmetrizer(int N, int n, int H) {
    TensorOp acc(N, n, H);
    std::vector<int> p(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) p[static_cast<size_t>(k)] = k + 1;
    Rat fact(1);
    for (int k = 2; k <= n; ++k) fact *= k;
    do {
        int inv = 0;
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inv;
        TensorOp perm = op_permutation(N, p, H);
        acc += (inv % 2 == 0) ? perm : perm.scaled(Rat(-1));
    } while (std::next_permutation(p.begin(), p.end()));
    return acc.scaled(1 / fact);
}

} // namespace qvakit
