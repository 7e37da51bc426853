#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <vector>

#include "qvakit/algebra_spec.hpp"
#include "qvakit/hseries.hpp"

namespace qvakit {

// Ordered subset of tensor factor positions, 1-based (factor 1 is the leftmost
// and most significant in the flattened index).
struct FactorSet {
    std::vector<int> idx;

    FactorSet() = default;
    FactorSet(std::initializer_list<int> l);
    static FactorSet range(int lo, int hi); // inclusive
    size_t size() const { return idx.size(); }
    bool contains(int f) const;
    void validate(int arity) const; // strictly increasing, within 1..arity
};

// Flattened multi-index over {1..N}^n, leftmost factor most significant.
using Flat = uint32_t;

// Sparse exact linear operator on the n-fold tensor power of C^N with
// HSeries entries. Absent entries are zero; all stored entries share the
// common truncation order.
class TensorOp {
public:
    TensorOp(int dim, int arity, int order);

    static TensorOp identity(int dim, int arity, int order);

    int dim() const { return dim_; }
    int arity() const { return arity_; }
    int order() const { return order_; }
    size_t nnz() const { return ent_.size(); }
    Flat side() const { return side_; } // dim^arity

    // Multi-index helpers (digits 1..N, index vector length = arity).
    Flat encode(const std::vector<int>& digits) const;
    std::vector<int> decode(Flat x) const;
    int digit(Flat x, int factor) const;            // 1-based factor
    Flat with_digit(Flat x, int factor, int d) const;

    void set(Flat row, Flat col, HSeries v);
    void add_to(Flat row, Flat col, const HSeries& v);
    const HSeries* find(Flat row, Flat col) const;
    HSeries at(Flat row, Flat col) const; // zero series when absent

    void for_each(const std::function<void(Flat, Flat, const HSeries&)>& fn) const;

    TensorOp& operator+=(const TensorOp& o);
    TensorOp& operator-=(const TensorOp& o);
    friend TensorOp operator+(TensorOp a, const TensorOp& b) { return a += b; }
    friend TensorOp operator-(TensorOp a, const TensorOp& b) { return a -= b; }
    TensorOp scaled(const HSeries& s) const;
    TensorOp scaled(const Rat& r) const;

    bool operator==(const TensorOp& o) const;
    bool is_identity() const;
    bool is_zero() const;

    // Largest k such that this operator vanishes mod h^k (order() if zero).
    int zero_up_to_order() const;

    void prune(); // drop exact-zero entries

    // Debug dump: one line per entry, "row col c0 c1 ... c_{H-1}".
    void dump(std::ostream& os) const;

private:
    void check_shape(const TensorOp& o) const;
    int dim_, arity_, order_;
    Flat side_;
    std::map<uint64_t, HSeries> ent_; // key = row * side + col
};

// ---- construction of elementary operators ----

TensorOp op_identity(const AlgebraSpec& spec, int arity, int H);
TensorOp op_P(const AlgebraSpec& spec, int H);                  // arity 2
TensorOp op_Q(const AlgebraSpec& spec, int H);                  // arity 2, o/sp only
TensorOp op_G(const AlgebraSpec& spec, int H);                  // arity 1, o/sp only
TensorOp op_e(const AlgebraSpec& spec, int i, int j, int H);    // arity 1 matrix unit

// Permutation action on tensor factors: factor k of the input moves to
// factor p[k] of the output (p is 1-based, a bijection on 1..n).
TensorOp op_permutation(int dim, const std::vector<int>& p, int H);

// ---- structural operations ----

// Place `op` on the named factors of a larger identity.
TensorOp embed(const TensorOp& op, int target_arity, const FactorSet& at);

// Operator product a ∘ b.
TensorOp compose(const TensorOp& a, const TensorOp& b);

// Product in the algebra that is opposite on the named factors: outside
// `opposite` multiply a·b, on `opposite` multiply b·a.
TensorOp compose_twisted(const TensorOp& a, const TensorOp& b, const FactorSet& opposite);

// Trace over the named factors; arity drops by |over|.
TensorOp partial_trace(const TensorOp& a, const FactorSet& over);

// Entry-wise transposition on the named factors.
TensorOp transpose_t(const TensorOp& a, const FactorSet& at);

// Prime transposition a_{ij} -> eps_i eps_j a_{j'i'} on the named factors.
TensorOp transpose_prime(const TensorOp& a, const FactorSet& at, const AlgebraSpec& spec);

// h-adic inverse of an operator whose h^0 part is the identity.
TensorOp op_inverse(const TensorOp& a);

// Exact rank of an h-constant operator (throws if any h>=1 coefficient is set).
int rank_constant(const TensorOp& a);

} // namespace qvakit
