#pragma once

// Partition-function series: localization sums of factored Euler classes over
// all partition tuples, graded by total box count.

#include <cstdint>

#include "origami/euler.hpp"
#include "origami/nekrasov.hpp"
#include "origami/qseries.hpp"

namespace origami {

enum class ZMode { KTheory, Cohomological, Costable, CY3, DiagonalModular };

struct ZRequest {
  RankVector ranks;
  int order = 4;
  ZMode mode = ZMode::KTheory;
  std::uint64_t seed = 7;
  int trials = 3;
};

// K-theoretic series at a fixed point of the parameter torus: coefficient of
// q^n is the sum over tuples of total size n of the symmetrized Euler class of
// -v.  Throws PoleError when a factor vanishes at the point.
QSeries zk_coeffs(const RankVector& ranks, int order, const EvalPoint& p, int threads = 0);

// Same sum with the costable substitution w -> t_A w^-1 applied to v first.
QSeries zk_costable_coeffs(const RankVector& ranks, int order, const EvalPoint& p,
                           int threads = 0);

// Cohomological series: sum of e(-v) at a rational point.  For the CY3 and
// diagonal specializations, draw the point with the matching constructor.
QSeries z_coeffs(const RankVector& ranks, int order, const CohPoint& p, int threads = 0);

// Retry wrappers: redraw the point (derived deterministically from the seed)
// until no factor vanishes; at most 32 draws.  The point actually used is
// returned through the reference.
QSeries zk_with_retries(const RankVector& ranks, int order, std::uint64_t seed, EvalPoint& used,
                        bool costable = false, int threads = 0);
QSeries z_with_retries(const RankVector& ranks, int order, std::uint64_t seed, ZMode mode,
                       CohPoint& used, int threads = 0);

struct ModularCheck {
  bool pass = false;
  QSeries lhs;  // z(diagonal) * eta_bar^8
  QSeries rhs;  // the eta-quotient
};

// Diagonal specialization for ranks 12=1,13=1: z * eta_bar^8 must reproduce
// the eta quotient through q^(order-1); also asserts the diagonal coefficients
// are independent of the drawn point across trials.
ModularCheck z_modular_check(int order = 5, std::uint64_t seed = 7, int trials = 3);

}  // namespace origami
