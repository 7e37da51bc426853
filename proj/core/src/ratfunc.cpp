#include "qvakit/ratfunc.hpp"

#include <algorithm>
#include <sstream>

#include "qvakit/errors.hpp"

namespace qvakit {

Poly poly_trim(Poly p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
    return p;
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Rat poly_eval(const Poly& p, const Rat& t) {
    Rat acc(0);
    for (size_t k = p.size(); k-- > 0;) {
        acc *= t;
        acc += p[k];
    }
    return acc;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return poly_trim(std::move(r));
}

Poly poly_scale(Poly p, const Rat& c) {
    for (Rat& x : p) x *= c;
    return poly_trim(std::move(p));
}

Poly poly_rem(Poly a, const Poly& b) {
    if (b.empty()) throw non_invertible_error("polynomial division by zero");
    a = poly_trim(std::move(a));
    while (poly_deg(a) >= poly_deg(b)) {
        Rat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        a = poly_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& x : a) x /= lead;
    }
    return a;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    Poly rem = poly_trim(a);
    Poly q(rem.size(), Rat(0));
    while (poly_deg(rem) >= poly_deg(b) && !rem.empty()) {
        Rat c = rem.back() / b.back();
        size_t shift = rem.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[i + shift] -= c * b[i];
        rem = poly_trim(std::move(rem));
    }
    if (!rem.empty()) throw internal_consistency_error("inexact polynomial division");
    return poly_trim(std::move(q));
}

std::string poly_to_string(const Poly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < p.size(); ++k) {
        if (is_zero(p[k])) continue;
        if (!first) os << " + ";
        os << rat_to_string(p[k]);
        if (k >= 1) os << "*" << var;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

RatFunc1 RatFunc1::make(Poly n, Poly d) {
    n = poly_trim(std::move(n));
    d = poly_trim(std::move(d));
    if (d.empty()) throw non_invertible_error("rational function with zero denominator");
    Poly g = poly_gcd(n, d);
    if (poly_deg(g) >= 1) {
        n = poly_divexact(n, g);
        d = poly_divexact(d, g);
    }
    Rat lead = d.back();
    for (Rat& x : d) x /= lead;
    for (Rat& x : n) x /= lead;
    return RatFunc1{std::move(n), std::move(d)};
}

Rat RatFunc1::eval(const Rat& t) const {
    Rat dv = poly_eval(den, t);
    if (is_zero(dv)) throw pole_at_sample_error("rational function pole");
    return poly_eval(num, t) / dv;
}

namespace {

// Exact kernel vector of an (rows x cols) matrix, rows < cols. Free variables
// are fixed deterministically (first free variable 1, the rest 0).
std::vector<Rat> kernel_vector(std::vector<std::vector<Rat>> m, size_t cols) {
    const size_t rows = m.size();
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (!is_zero(m[i][c])) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rat piv = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] /= piv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    size_t free_col = cols;
    for (size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) { free_col = c; break; }
    if (free_col == cols) throw degree_bound_error("no nontrivial interpolant");
    std::vector<Rat> x(cols, Rat(0));
    x[free_col] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) {
        // after full reduction row i reads x_c + sum_{j free} m[i][j] x_j = 0
        size_t c = pivot_col[i];
        Rat acc(0);
        for (size_t j = c + 1; j < cols; ++j)
            if (!is_zero(m[i][j])) acc += m[i][j] * x[j];
        x[c] = -acc;
    }
    return x;
}

} // namespace

RatFunc1 reconstruct_rational(const std::vector<std::pair<Rat, Rat>>& samples,
                              int deg_num, int deg_den) {
    if (deg_num < 0 || deg_den < 0) throw shape_error("negative degree bound");
    const size_t need = static_cast<size_t>(deg_num + deg_den + 2);
    if (samples.size() < need)
        throw shape_error("need at least " + std::to_string(need) + " samples");
    for (size_t i = 0; i < samples.size(); ++i)
        for (size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw shape_error("sample abscissae must be pairwise distinct");

    // Homogeneous system N(t_i) - y_i D(t_i) = 0 on the first
    // deg_num + deg_den + 1 samples; the rest are held out for verification.
    const size_t cols = static_cast<size_t>(deg_num + 1 + deg_den + 1);
    const size_t solve_rows = static_cast<size_t>(deg_num + deg_den + 1);
    std::vector<std::vector<Rat>> m(solve_rows, std::vector<Rat>(cols, Rat(0)));
    for (size_t i = 0; i < solve_rows; ++i) {
        const Rat& t = samples[i].first;
        const Rat& y = samples[i].second;
        Rat p(1);
        for (int k = 0; k <= deg_num; ++k) {
            m[i][static_cast<size_t>(k)] = p;
            p *= t;
        }
        p = 1;
        for (int k = 0; k <= deg_den; ++k) {
            m[i][static_cast<size_t>(deg_num + 1 + k)] = -y * p;
            p *= t;
        }
    }
    std::vector<Rat> x = kernel_vector(std::move(m), cols);
    Poly n(x.begin(), x.begin() + deg_num + 1);
    Poly d(x.begin() + deg_num + 1, x.end());
    n = poly_trim(std::move(n));
    d = poly_trim(std::move(d));
    if (d.empty()) throw degree_bound_error("interpolant has zero denominator");
    RatFunc1 g = RatFunc1::make(std::move(n), std::move(d));
    // Every sample, including the held-out ones, must match exactly.
    for (const auto& [t, y] : samples) {
        Rat dv = poly_eval(g.den, t);
        if (is_zero(dv) || poly_eval(g.num, t) != y * dv)
            throw degree_bound_error("no interpolant within degree bounds");
    }
    return g;
}

bool pole_free_at(const RatFunc1& g, const Rat& t0) {
    return !is_zero(poly_eval(g.den, t0));
}

} // namespace qvakit
