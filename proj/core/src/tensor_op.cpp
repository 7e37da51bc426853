#include "qvakit/tensor_op.hpp"

#include <algorithm>
#include <ostream>

#include "qvakit/errors.hpp"

namespace qvakit {

FactorSet::FactorSet(std::initializer_list<int> l) : idx(l) {}

FactorSet FactorSet::range(int lo, int hi) {
    FactorSet s;
    for (int f = lo; f <= hi; ++f) s.idx.push_back(f);
    return s;
}

bool FactorSet::contains(int f) const {
    return std::find(idx.begin(), idx.end(), f) != idx.end();
}

void FactorSet::validate(int arity) const {
    int prev = 0;
    for (int f : idx) {
        if (f <= prev || f > arity)
            throw shape_error("factor set must be strictly increasing within 1..arity");
        prev = f;
    }
}

namespace {
Flat pow_flat(int dim, int arity) {
    Flat s = 1;
    for (int k = 0; k < arity; ++k) {
        if (s > (1u << 28) / static_cast<Flat>(dim))
            throw shape_error("tensor space too large");
        s *= static_cast<Flat>(dim);
    }
    return s;
}
} // namespace

TensorOp::TensorOp(int dim, int arity, int order)
    : dim_(dim), arity_(arity), order_(order), side_(pow_flat(dim, arity)) {
    if (dim < 1 || arity < 0 || order < 0) throw shape_error("bad tensor shape");
}

TensorOp TensorOp::identity(int dim, int arity, int order) {
    TensorOp t(dim, arity, order);
    for (Flat x = 0; x < t.side_; ++x)
        t.ent_.emplace(static_cast<uint64_t>(x) * t.side_ + x, HSeries::one(order));
    return t;
}

Flat TensorOp::encode(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) != arity_) throw shape_error("multi-index length");
    Flat x = 0;
    for (int d : digits) {
        if (d < 1 || d > dim_) throw shape_error("multi-index digit out of range");
        x = x * static_cast<Flat>(dim_) + static_cast<Flat>(d - 1);
    }
    return x;
}

std::vector<int> TensorOp::decode(Flat x) const {
    std::vector<int> d(static_cast<size_t>(arity_));
    for (int k = arity_ - 1; k >= 0; --k) {
        d[static_cast<size_t>(k)] = static_cast<int>(x % static_cast<Flat>(dim_)) + 1;
        x /= static_cast<Flat>(dim_);
    }
    return d;
}

int TensorOp::digit(Flat x, int factor) const {
    int shift = arity_ - factor;
    for (int k = 0; k < shift; ++k) x /= static_cast<Flat>(dim_);
    return static_cast<int>(x % static_cast<Flat>(dim_)) + 1;
}

Flat TensorOp::with_digit(Flat x, int factor, int d) const {
    Flat p = 1;
    for (int k = 0; k < arity_ - factor; ++k) p *= static_cast<Flat>(dim_);
    int old = digit(x, factor);
    return x + (static_cast<Flat>(d - old)) * p;
}

void TensorOp::set(Flat row, Flat col, HSeries v) {
    if (v.order() != order_) throw order_mismatch_error("entry order mismatch");
    uint64_t key = static_cast<uint64_t>(row) * side_ + col;
    if (v.is_zero())
        ent_.erase(key);
    else
        ent_.insert_or_assign(key, std::move(v));
}

void TensorOp::add_to(Flat row, Flat col, const HSeries& v) {
    if (v.order() != order_) throw order_mismatch_error("entry order mismatch");
    if (v.is_zero()) return;
    uint64_t key = static_cast<uint64_t>(row) * side_ + col;
    auto it = ent_.find(key);
    if (it == ent_.end())
        ent_.emplace(key, v);
    else {
        it->second += v;
        if (it->second.is_zero()) ent_.erase(it);
    }
}

const HSeries* TensorOp::find(Flat row, Flat col) const {
    auto it = ent_.find(static_cast<uint64_t>(row) * side_ + col);
    return it == ent_.end() ? nullptr : &it->second;
}

HSeries TensorOp::at(Flat row, Flat col) const {
    const HSeries* p = find(row, col);
    return p ? *p : HSeries(order_);
}

void TensorOp::for_each(const std::function<void(Flat, Flat, const HSeries&)>& fn) const {
    for (const auto& [key, v] : ent_)
        fn(static_cast<Flat>(key / side_), static_cast<Flat>(key % side_), v);
}

void TensorOp::check_shape(const TensorOp& o) const {
    if (dim_ != o.dim_ || arity_ != o.arity_ || order_ != o.order_)
        throw shape_error("tensor shapes differ");
}

TensorOp& TensorOp::operator+=(const TensorOp& o) {
    check_shape(o);
    for (const auto& [key, v] : o.ent_) {
        auto it = ent_.find(key);
        if (it == ent_.end())
            ent_.emplace(key, v);
        else {
            it->second += v;
            if (it->second.is_zero()) ent_.erase(it);
        }
    }
    return *this;
}

TensorOp& TensorOp::operator-=(const TensorOp& o) {
    check_shape(o);
    for (const auto& [key, v] : o.ent_) {
        auto it = ent_.find(key);
        if (it == ent_.end())
            ent_.emplace(key, -v);
        else {
            it->second -= v;
            if (it->second.is_zero()) ent_.erase(it);
        }
    }
    return *this;
}

TensorOp TensorOp::scaled(const HSeries& s) const {
    TensorOp r(dim_, arity_, order_);
    if (s.is_zero()) return r;
    for (const auto& [key, v] : ent_) {
        HSeries w = v * s;
        if (!w.is_zero()) r.ent_.emplace(key, std::move(w));
    }
    return r;
}

TensorOp TensorOp::scaled(const Rat& c) const {
    TensorOp r(dim_, arity_, order_);
    if (is_zero(c)) return r;
    for (const auto& [key, v] : ent_) {
        HSeries w = v;
        w *= c;
        r.ent_.emplace(key, std::move(w));
    }
    return r;
}

bool TensorOp::operator==(const TensorOp& o) const {
    check_shape(o);
    return ent_ == o.ent_;
}

bool TensorOp::is_identity() const {
    if (ent_.size() != side_) return false;
    for (const auto& [key, v] : ent_) {
        if (key / side_ != key % side_) return false;
        if (!v.is_one()) return false;
    }
    return true;
}

bool TensorOp::is_zero() const { return ent_.empty(); }

int TensorOp::zero_up_to_order() const {
    int v = order_;
    for (const auto& [key, s] : ent_) v = std::min(v, s.valuation());
    return v;
}

void TensorOp::prune() {
    for (auto it = ent_.begin(); it != ent_.end();)
        it = it->second.is_zero() ? ent_.erase(it) : std::next(it);
}

void TensorOp::dump(std::ostream& os) const {
    for (const auto& [key, v] : ent_) {
        auto r = decode(static_cast<Flat>(key / side_));
        auto c = decode(static_cast<Flat>(key % side_));
        for (size_t k = 0; k < r.size(); ++k) os << (k ? "." : "") << r[k];
        os << ' ';
        for (size_t k = 0; k < c.size(); ++k) os << (k ? "." : "") << c[k];
        os << ' ' << v.to_string() << '\n';
    }
}

// ---- elementary operators ----

TensorOp op_identity(const AlgebraSpec& spec, int arity, int H) {
    return TensorOp::identity(spec.N, arity, H);
}

TensorOp op_P(const AlgebraSpec& spec, int H) {
    const int N = spec.N;
    TensorOp t(N, 2, H);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            t.set(t.encode({i, j}), t.encode({j, i}), HSeries::one(H));
    return t;
}

TensorOp op_Q(const AlgebraSpec& spec, int H) {
    if (!spec.has_q()) throw unsupported_error("Q is defined for o/sp only");
    const int N = spec.N;
    TensorOp t(N, 2, H);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            // Q = sum eps_i eps_j e_ij ⊗ e_{i'j'}
            HSeries v = HSeries::constant(spec.eps_at(i) * spec.eps_at(j), H);
            t.add_to(t.encode({i, spec.conj(i)}), t.encode({j, spec.conj(j)}), v);
        }
    return t;
}

TensorOp op_G(const AlgebraSpec& spec, int H) {
    if (!spec.has_q()) throw unsupported_error("G is defined for o/sp only");
    TensorOp t(spec.N, 1, H);
    for (int i = 1; i <= spec.N; ++i)
        t.set(t.encode({i}), t.encode({spec.conj(i)}), HSeries::constant(spec.eps_at(i), H));
    return t;
}

TensorOp op_e(const AlgebraSpec& spec, int i, int j, int H) {
    if (i < 1 || i > spec.N || j < 1 || j > spec.N)
        throw unsupported_error("matrix unit index out of range");
    TensorOp t(spec.N, 1, H);
    t.set(t.encode({i}), t.encode({j}), HSeries::one(H));
    return t;
}

TensorOp op_permutation(int dim, const std::vector<int>& p, int H) {
    const int n = static_cast<int>(p.size());
    TensorOp t(dim, n, H);
    std::vector<int> row(static_cast<size_t>(n));
    std::vector<int> col(static_cast<size_t>(n), 1);
    for (;;) {
        for (int k = 1; k <= n; ++k)
            row[static_cast<size_t>(p[static_cast<size_t>(k - 1)] - 1)] =
                col[static_cast<size_t>(k - 1)];
        t.set(t.encode(row), t.encode(col), HSeries::one(H));
        int k = n - 1;
        while (k >= 0 && col[static_cast<size_t>(k)] == dim) {
            col[static_cast<size_t>(k)] = 1;
            --k;
        }
        if (k < 0) break;
        ++col[static_cast<size_t>(k)];
    }
    return t;
}

// ---- structural operations ----

TensorOp embed(const TensorOp& op, int target_arity, const FactorSet& at) {
    at.validate(target_arity);
    if (static_cast<int>(at.size()) != op.arity())
        throw shape_error("embedding: |at| must equal operand arity");
    TensorOp r(op.dim(), target_arity, op.order());
    const int extra = target_arity - op.arity();
    // positions of the identity factors
    std::vector<int> id_pos;
    for (int f = 1; f <= target_arity; ++f)
        if (!at.contains(f)) id_pos.push_back(f);

    std::vector<int> id_digits(static_cast<size_t>(extra), 1);
    op.for_each([&](Flat orow, Flat ocol, const HSeries& v) {
        auto rd = op.decode(orow);
        auto cd = op.decode(ocol);
        std::fill(id_digits.begin(), id_digits.end(), 1);
        for (;;) {
            std::vector<int> row(static_cast<size_t>(target_arity));
            std::vector<int> col(static_cast<size_t>(target_arity));
            for (size_t k = 0; k < at.size(); ++k) {
                row[static_cast<size_t>(at.idx[k] - 1)] = rd[k];
                col[static_cast<size_t>(at.idx[k] - 1)] = cd[k];
            }
            for (size_t k = 0; k < id_pos.size(); ++k) {
                row[static_cast<size_t>(id_pos[k] - 1)] = id_digits[k];
                col[static_cast<size_t>(id_pos[k] - 1)] = id_digits[k];
            }
            r.add_to(r.encode(row), r.encode(col), v);
            int k = extra - 1;
            while (k >= 0 && id_digits[static_cast<size_t>(k)] == op.dim()) {
                id_digits[static_cast<size_t>(k)] = 1;
                --k;
            }
            if (k < 0) break;
            ++id_digits[static_cast<size_t>(k)];
        }
    });
    return r;
}

TensorOp compose(const TensorOp& a, const TensorOp& b) {
    if (a.dim() != b.dim() || a.arity() != b.arity() || a.order() != b.order())
        throw shape_error("compose: shapes differ");
    TensorOp r(a.dim(), a.arity(), a.order());
    // group b's entries by row for contiguous access
    std::map<Flat, std::vector<std::pair<Flat, const HSeries*>>> by_row;
    b.for_each([&](Flat row, Flat col, const HSeries& v) {
        by_row[row].emplace_back(col, &v);
    });
    a.for_each([&](Flat row, Flat mid, const HSeries& va) {
        auto it = by_row.find(mid);
        if (it == by_row.end()) return;
        for (const auto& [col, vb] : it->second) r.add_to(row, col, va * *vb);
    });
    return r;
}

TensorOp compose_twisted(const TensorOp& a, const TensorOp& b, const FactorSet& opposite) {
    if (a.dim() != b.dim() || a.arity() != b.arity() || a.order() != b.order())
        throw shape_error("compose_twisted: shapes differ");
    opposite.validate(a.arity());
    if (opposite.idx.empty()) return compose(a, b);
    const int n = a.arity();
    std::vector<bool> opp(static_cast<size_t>(n + 1), false);
    for (int f : opposite.idx) opp[static_cast<size_t>(f)] = true;

    TensorOp r(a.dim(), a.arity(), a.order());
    // Match: factors outside `opposite`: a.col == b.row (contraction a·b);
    // factors inside: a.row == b.col (contraction b·a). Group b by its
    // matching signature to avoid the full quadratic scan.
    auto sig_b = [&](Flat brow, Flat bcol) {
        uint64_t s = 0;
        for (int f = 1; f <= n; ++f)
            s = s * static_cast<uint64_t>(a.dim()) +
                static_cast<uint64_t>((opp[static_cast<size_t>(f)] ? b.digit(bcol, f)
                                                                   : b.digit(brow, f)) - 1);
        return s;
    };
    auto sig_a = [&](Flat arow, Flat acol) {
        uint64_t s = 0;
        for (int f = 1; f <= n; ++f)
            s = s * static_cast<uint64_t>(a.dim()) +
                static_cast<uint64_t>((opp[static_cast<size_t>(f)] ? a.digit(arow, f)
                                                                   : a.digit(acol, f)) - 1);
        return s;
    };
    std::map<uint64_t, std::vector<std::tuple<Flat, Flat, const HSeries*>>> bb;
    b.for_each([&](Flat row, Flat col, const HSeries& v) {
        bb[sig_b(row, col)].emplace_back(row, col, &v);
    });
    a.for_each([&](Flat arow, Flat acol, const HSeries& va) {
        auto it = bb.find(sig_a(arow, acol));
        if (it == bb.end()) return;
        for (const auto& [brow, bcol, vb] : it->second) {
            // rows: a's outside S, b's inside; cols: b's outside S, a's inside
            Flat row = arow, col = acol;
            for (int f = 1; f <= n; ++f) {
                if (opp[static_cast<size_t>(f)])
                    row = a.with_digit(row, f, b.digit(brow, f));
                else
                    col = a.with_digit(col, f, b.digit(bcol, f));
            }
            r.add_to(row, col, va * *vb);
        }
    });
    return r;
}

TensorOp partial_trace(const TensorOp& a, const FactorSet& over) {
    over.validate(a.arity());
    std::vector<int> keep;
    for (int f = 1; f <= a.arity(); ++f)
        if (!over.contains(f)) keep.push_back(f);
    TensorOp r(a.dim(), static_cast<int>(keep.size()), a.order());
    a.for_each([&](Flat row, Flat col, const HSeries& v) {
        for (int f : over.idx)
            if (a.digit(row, f) != a.digit(col, f)) return;
        std::vector<int> nr, nc;
        nr.reserve(keep.size());
        nc.reserve(keep.size());
        for (int f : keep) {
            nr.push_back(a.digit(row, f));
            nc.push_back(a.digit(col, f));
        }
        r.add_to(r.encode(nr), r.encode(nc), v);
    });
    return r;
}

TensorOp transpose_t(const TensorOp& a, const FactorSet& at) {
    at.validate(a.arity());
    TensorOp r(a.dim(), a.arity(), a.order());
    a.for_each([&](Flat row, Flat col, const HSeries& v) {
        Flat nr = row, nc = col;
        for (int f : at.idx) {
            int ri = a.digit(row, f), ci = a.digit(col, f);
            nr = a.with_digit(nr, f, ci);
            nc = a.with_digit(nc, f, ri);
        }
        r.add_to(nr, nc, v);
    });
    return r;
}

TensorOp transpose_prime(const TensorOp& a, const FactorSet& at, const AlgebraSpec& spec) {
    if (!spec.has_q()) throw unsupported_error("prime transposition is for o/sp only");
    at.validate(a.arity());
    TensorOp r(a.dim(), a.arity(), a.order());
    a.for_each([&](Flat row, Flat col, const HSeries& v) {
        // per factor: entry (a_{ij}) contributes to (j', i') with sign eps_{j'} eps_{i'}
        Flat nr = row, nc = col;
        Rat sign(1);
        for (int f : at.idx) {
            int ri = a.digit(row, f), ci = a.digit(col, f);
            int nri = spec.conj(ci), nci = spec.conj(ri);
            sign *= spec.eps_at(nri) * spec.eps_at(nci);
            nr = a.with_digit(nr, f, nri);
            nc = a.with_digit(nc, f, nci);
        }
        HSeries w = v;
        w *= sign;
        r.add_to(nr, nc, w);
    });
    return r;
}

TensorOp op_inverse(const TensorOp& a) {
    const int H = a.order();
    // check the h^0 part is the identity
    TensorOp a0(a.dim(), a.arity(), H);
    a.for_each([&](Flat row, Flat col, const HSeries& v) {
        if (!is_zero(v[0])) {
            HSeries c(H);
            c[0] = v[0];
            a0.add_to(row, col, c);
        }
    });
    if (!a0.is_identity())
        throw non_invertible_error("op_inverse: h^0 part is not the identity");
    TensorOp nil = a0 - a; // = I - a, valuation >= 1
    TensorOp acc = TensorOp::identity(a.dim(), a.arity(), H);
    TensorOp pw = TensorOp::identity(a.dim(), a.arity(), H);
    for (int k = 1; k < H; ++k) {
        pw = compose(pw, nil);
        pw.prune();
        if (pw.is_zero()) break;
        acc += pw;
    }
    return acc;
}

int rank_constant(const TensorOp& a) {
    const Flat n = a.side();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    a.for_each([&](Flat row, Flat col, const HSeries& v) {
        for (int k = 1; k < v.order(); ++k)
            if (!is_zero(v[k]))
                throw shape_error("rank_constant: operator is not h-constant");
        m[row][col] = v[0];
    });
    int rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < n && r < n; ++c) {
        size_t sel = n;
        for (size_t i = r; i < n; ++i)
            if (!is_zero(m[i][c])) { sel = i; break; }
        if (sel == n) continue;
        std::swap(m[r], m[sel]);
        for (size_t i = r + 1; i < n; ++i) {
            if (is_zero(m[i][c])) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

} // namespace qvakit
