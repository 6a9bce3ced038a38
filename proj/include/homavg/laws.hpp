// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HOMAVG_LAWS_HPP
#define HOMAVG_LAWS_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "homavg/algebra.hpp"
#include "homavg/operator.hpp"
#include "homavg/report.hpp"

namespace homavg {

/// Every check quantifies over all basis symbols with |degree| <= M. Brackets,
/// twists and operators are evaluated with their total rules, so nothing is
/// truncated at the window edge. M must be >= 1.

Report check_skew(const HomAlgebra& alg, long M);
/// [a(x),[y,z]] + [a(y),[z,x]] + [a(z),[x,y]] = 0.
Report check_hom_jacobi(const HomAlgebra& alg, long M);
/// [a(x),[y,z]] = [[x,y],a(z)] + [a(y),[x,z]].
Report check_hom_leibniz(const HomAlgebra& alg, long M);
/// a([x,y]) = [a(x),a(y)].
Report check_multiplicative(const HomAlgebra& alg, long M);
/// Scalar conditions on structure constants and twist coefficients, for
/// algebras with one-dimensional homogeneous components.
Report criterion_multiplicative(const HomAlgebra& alg, long M);

/// Output degrees at which check_averaging evaluates P.
std::set<long> averaging_degrees(const HomAlgebra& alg, long d, long M);

/// a o P = P o a, and [Px,Py] = P([Px,y]) = P([x,Py]).
///
/// Sub-verdicts: "commute", "left", "right", "reduced" (commute and left) and
/// "two_sided" (all three). The overall verdict is the two-sided one.
Report check_averaging(const HomAlgebra& alg, const HomogeneousOperator& p, long M);

/// Image and kernel facts for an averaging operator on the window:
/// (i) the image is closed under the bracket and stable under the twist;
/// (ii) [P(A), ker P] and [ker P, P(A)] lie in ker P;
/// (iii) when P is onto every component reached from the window, ker P is a
/// two-sided ideal stable under the twist.
Report check_subalgebra_ideal(const HomAlgebra& alg, const HomogeneousOperator& p, long M);

/// P([Qx,y]) + Q([Px,y]) = [Qx,Py] + [Px,Qy]; when it holds, P + Q is also
/// checked for averaging.
Report check_sum_compatibility(const HomAlgebra& alg, const HomogeneousOperator& p, const HomogeneousOperator& q,
                               long M);

/// A per-degree direct sum A_t = A0_t + A1_t, each part given by a spanning
/// list of coordinate vectors (coefficient of L, coefficient of W).
struct Split {
    std::string name;
    std::function<std::vector<Element>(long t)> a0;
    std::function<std::vector<Element>(long t)> a1;

    /// A0 = everything.
    static Split all(const ScalarField& f, int components);
    /// A0 = span{L_t}, A1 = span{W_t}.
    static Split l_w(const ScalarField& f);
    /// A0 = span{W_t}, A1 = span{L_t}.
    static Split w_l(const ScalarField& f);
};

/// The idempotent onto A0 along A1, as a degree-0 operator.
HomogeneousOperator projection(const HomAlgebra& alg, const Split& split);

/// Compares the subspace conditions ([A0,A0] in A0, [A0,A1] and [A1,A0] in A1,
/// twist preserves A0 and A1) against check_averaging of the projection.
/// Passes when both sides agree.
Report check_projection_criterion(const HomAlgebra& alg, const Split& split, long M);

} // namespace homavg

#endif
