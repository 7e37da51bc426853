#pragma once

#include <vector>

#include "qvakit/algebra_spec.hpp"
#include "qvakit/fseries.hpp"
#include "qvakit/tensor_op.hpp"

namespace qvakit {

enum class RKind { plain, normalized, polynomial };

// One algebra family with its normalizing series and the working h-order.
// Built once per check; shared read-only afterwards.
struct AlgebraEnv {
    AlgebraSpec spec;
    int H;
    USeries f;

    static AlgebraEnv make(Family fam, int N, int H, int K = 0) {
        AlgebraSpec s = AlgebraSpec::make(fam, N);
        int depth = std::max(K, H);
        return AlgebraEnv{s, H, f_series(s, depth)};
    }
};

// Pairwise R-matrix acting on factors (a, b) of an arity-`arity` space.
//   plain:      R(u) = I - (h/u) P [+ h/(u - h kappa) Q]
//   normalized: f(u/h) R(u)
//   polynomial: u R(u)  resp.  u (u - h kappa) R(u)
// Pure-h arguments (base 0, nonzero integer shift) are handled exactly for
// the plain kind; they are a pole for the other kinds.
TensorOp r_factor(const AlgebraEnv& env, RKind kind, const RArg& arg,
                  int arity, int a, int b);

TensorOp r_single(const AlgebraEnv& env, RKind kind, const RArg& arg); // arity 2

// One side of a block product: factor positions with their spectral points.
struct BlockFactor {
    int index;
    RArg point;
};
using BlockSide = std::vector<BlockFactor>;

BlockSide block_side(int first_index, const std::vector<RArg>& points);
BlockSide block_side_rat(int first_index, const std::vector<Rat>& points);

// Ordered product of pairwise R-matrices coupling side A with side B inside
// an arity-`arity` space:
//   plain      factors R_{a_i b_j}(z + p_i - q_j), i forward, j backward;
//   underlined factors R_{a_i b_j}(z + p_i + q_j), i forward, j forward.
// bar1 / bar2 reverse the respective loop direction. Passing the sides in
// swapped order builds the role-swapped products the 21-maps need.
TensorOp r_block_general(const AlgebraEnv& env, RKind kind, const BlockSide& A,
                         const BlockSide& B, const RArg& z, bool bar1, bool bar2,
                         bool underlined, int arity);

// Spec layout: side 1 on factors 1..n, side 2 on factors n+1..n+m.
TensorOp r_block(const AlgebraEnv& env, RKind kind, const std::vector<RArg>& u,
                 const std::vector<RArg>& v, const RArg& z, bool bar1, bool bar2,
                 bool underlined);

// Fusion: (1/n!) prod_{i<j, lexicographic} R_ij(u_i - u_j), plain kind.
TensorOp r_fused(const AlgebraEnv& env, int n, const std::vector<RArg>& u);

// The staggered evaluation tuple with base point `base`.
std::vector<RArg> staggered_tuple(const AlgebraSpec& spec, int n, const Rat& base);

// E_[n]: the fused product at the staggered tuple. n <= N for gl/o,
// n <= N/2 for sp.
TensorOp fusion_idempotent(const AlgebraEnv& env, int n);

// Direct antisymmetrizer (1/n!) sum_p sgn(p) p on n factors; the independent
// route the gl fusion output is compared against.
TensorOp antisymmetrizer(int N, int n, int H);

} // namespace qvakit
