#pragma once

#include "capelli/lie_algebra.hpp"
#include "capelli/operator_matrix.hpp"
#include "capelli/report.hpp"
#include "capelli/uea.hpp"
#include "capelli/weyl.hpp"

#include <optional>
#include <vector>

namespace capelli {

using WeylMatrix = OperatorMatrix<WeylElement>;

/// Block matrices of the o-sp realization on N x k matrices:
/// P = [X D], P* = [D^t; -X^t], J = [[0, -I_k], [I_k, 0]].
struct SymplecticBlocks {
    WeylMatrix p;
    WeylMatrix p_transpose;
    WeylMatrix p_star;
    WeylMatrix p_star_transpose;
    WeylMatrix j;
};

/// Realized homomorphisms L (small member) and R (large member) of a dual
/// pair into the Weyl algebra of the large x small matrix space.
///
///   gl-gl unnormalized: R(E) = X D^t,              L(E') = X^t D
///   gl-gl normalized:   R(E) = X D^t + k/2 I_n,    L(E') = X^t D + n/2 I_k
///   o-sp (normalized):  R(F) = P P* + k I_N,       L(F') = P^t (P*)^t + N/2 I_2k
struct DualPairContext {
    PairType pair;
    int large;  // n or N
    int small;  // k
    Convention convention;
    bool stable_range;

    WeylShape shape;
    LieAlgebraPtr large_algebra;
    /// gl_k for gl-gl; sp_2k has no structure table and is only realized.
    LieAlgebraPtr small_algebra;

    WeylMatrix x;
    WeylMatrix d;
    WeylMatrix right_image;
    WeylMatrix left_image;
    std::optional<SymplecticBlocks> blocks;

    /// R image of each basis generator of the large algebra.
    std::vector<WeylElement> generator_images;

    Parameters parameters() const;
};

/// Throws std::invalid_argument on nonpositive sizes, N < 2 for o-sp, or an
/// unnormalized o-sp request.
DualPairContext make_dual_pair(PairType pair, int large, int small, Convention convention);

/// Multiplicative substitution of generator images along each PBW monomial.
WeylElement realize_right(const DualPairContext& ctx, const UEAElement& a);

/// Entry (a, b) of L(E') or L(F'), 1-based.
WeylElement realize_left(const DualPairContext& ctx, int a, int b);

/// [R(g1), R(g2)] = R([g1, g2]) over all ordered generator pairs.
IdentityReport check_right_homomorphism(const DualPairContext& ctx);

/// gl-gl: [L(E'_ab), L(E'_cd)] = d_bc L(E'_ad) - d_da L(E'_cb).
/// o-sp: each [L(F')_ab, L(F')_cd] lies in span{L(F')_ef} + K*1, certified
/// by explicit coefficients.
IdentityReport check_left_closure(const DualPairContext& ctx);

/// Both of the above merged into one report.
IdentityReport check_structure_closure(const DualPairContext& ctx);

}  // namespace capelli
