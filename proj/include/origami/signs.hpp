#pragma once

// Orientation bookkeeping: the parity of the hook-anchored box counts, the
// matrix-rank cokernel oracle for the commutator pencil at a fixed point, the
// weight-space dimension checks it rests on, and the total sign cancellation.

#include "origami/nekrasov.hpp"

namespace origami {

// Linear-algebra model of a fixed point: one basis vector per box per slot,
// with its full torus weight, plus the four shift matrices B_a acting within
// each slot (multiplication by the two plane coordinates; zero transversally).
struct FixedPointRep {
  struct BasisVec {
    Monomial weight;
  };
  std::vector<BasisVec> basis;
  // B[a-1][i] = index of B_a(basis i), or -1 when the image leaves the ideal.
  std::array<std::vector<int>, 4> B;

  static FixedPointRep build(const NekContext& ctx);
  int dim() const { return (int)basis.size(); }
};

// Sum over slots on the anti-holomorphic planes {14, 24, 34} of
// (|lambda| - hook(0,0)), taken mod 2.
int hook_parity(const NekContext& ctx);

// Dimension of the cokernel, restricted to torus-fixed weight blocks, of the
// commutator pencil (B_1,B_2,B_3) -> ([B_a^P, B_b] + [B_a, B_b^P])_{a<b<=3};
// computed by exact Gaussian elimination.
int xi_cok_dim(const NekContext& ctx);

// Weight-space dimension identities for a single partition lambda:
//   dim (t2 Z Z*)^fixed   = |lambda| - length(lambda)
//   dim (t3 Z Z*)^fixed   = 0
//   dim (t1t2 Z Z*)^fixed = |lambda| - hook(0,0)
//   dim (t1t3 Z Z*)^fixed = 0
// where Z is the box character of lambda in the (1,2) plane without framing.
bool comb_check(const Partition& lambda);

// The full sign cancellation: (r-1) n + xi_cok_dim + moving rank of the 4d
// comparison character must be even.
bool total_sign_check(const NekContext& ctx);

}  // namespace origami
