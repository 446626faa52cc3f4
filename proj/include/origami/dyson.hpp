#pragma once

// Descending-x expansion of the non-normalized crossed partition function,
// the per-fixed-point residue vanishing, the rank-1 adjoint series with its
// closed form, and the first q-difference/differential consequence.

#include "origami/euler.hpp"
#include "origami/nekrasov.hpp"
#include "origami/qseries.hpp"
#include "origami/ratfun.hpp"

namespace origami {

// How the symbolic variable x enters the 12-plane framing parameters.
//   First: x = v[12,1] and the remaining v[12,alpha] stay numeric (default).
//   All:   every v[12,alpha] = x + c_alpha with distinct offsets c_1 = 0,
//          c_alpha random (experimental for r12 >= 2).
enum class XMode { First, All };

// Ranks supported on the 12/34 pair with both sides populated; throws
// std::invalid_argument otherwise.
void require_crossed(const RankVector& ranks);

// Point with the symbolic slots installed per the mode; all other parameters
// are generic numeric rationals.
CohPoint draw_ds_point(std::uint64_t seed, const RankVector& ranks, XMode xmode = XMode::First);

// e(-v) at one fixed point as a univariate rational function of x.
RationalFunction1V ev_in_x(const NekContext& ctx, const CohPoint& p);

// The normalization factor e(c_norm) in x (a polynomial of degree r12 * r34
// in the First mode with unit ranks: -x + v[34,1] + s1 + s2).
RationalFunction1V c_norm_in_x(const RankVector& ranks, const CohPoint& p);

// q^n coefficient of C * Z: c_norm_in_x times the sum of ev_in_x over all
// tuples of total size n.
RationalFunction1V cz_in_x(const RankVector& ranks, int n, const CohPoint& p, int threads = 0);

// Arm/leg form of the 12-plane tangent character for partitions
// (lambda_1, ..., lambda_r) in slots 12.1 .. 12.r:
//   sum_{alpha,beta} w_alpha w_beta^-1 (
//       sum_{box in lambda_alpha} t1^-leg_beta(box) t2^(arm_alpha(box)+1)
//     + sum_{box in lambda_beta} t1^(leg_alpha(box)+1) t2^-arm_beta(box) )
// with signed arms/legs.  Equals big_T on the 12 plane.
Character armleg_T12(const std::vector<Partition>& lambdas);

// Adjoint-mass series of the 12-plane: q^n coefficient is the sum over
// partitions of n of prod (mu - s3) / prod mu, mu running over the
// cohomological weights of t12^-1 T_12(lambda).  Throws PoleError when a
// denominator weight vanishes.
QSeries g_series(const Rat& s1, const Rat& s2, const Rat& s3, int order);

// s3 s4 G(s1,s2,s3) G'(s3,s4,s1) + s1 s2 G(s3,s4,s1) G'(s1,s2,s3) with
// s4 = -s1-s2-s3 and ' = d/dq; identically zero through q^(order-1).
QSeries ds_ode_residual(const Rat& s1, const Rat& s2, const Rat& s3, int order);

}  // namespace origami
