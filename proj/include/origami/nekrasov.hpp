#pragma once

// The named equivariant characters attached to a fixed point: the box-count
// characters per plane, the vertex character v, the ambient tangent spaces,
// the auxiliary bundle Lambda, the normalization character, the comparison
// characters G (4d and 3d), and the sheaf-side virtual tangent character.

#include "origami/kchar.hpp"
#include "origami/partitions.hpp"

namespace origami {

struct NekContext {
  RankVector ranks;
  PartitionTuple tuple;

  NekContext(const RankVector& r, const PartitionTuple& t) : ranks(r), tuple(t) {}
  explicit NekContext(const PartitionTuple& t) : ranks(t.ranks()), tuple(t) {}
};

// --- constant characters ---------------------------------------------------

Character p_axis(int axis);              // 1 - t_a, axis 1..4
Character p_plane(int plane);            // (1 - t_a)(1 - t_b)
Character p_1234();                      // prod over all four axes
Character t_plane_char(int plane);       // t_a t_b as a one-term character
Monomial t_plane_mono(int plane);

// --- per-plane pieces -------------------------------------------------------

// Sum of k_char over the plane's slots.
Character big_K(const NekContext& ctx, int plane);
// Sum of the framing monomials w[A,alpha] over the plane's slots.
Character big_N(const RankVector& ranks, int plane);

// T_A = N_A K_A* + t_A N_A* K_A - P_A K_A K_A*.
Character big_T(const NekContext& ctx, int plane);

// --- the vertex character ---------------------------------------------------

// v = sum_A [ P_phi(A) T_A + P_Abar N_A sum_{B != A} K_B* ]
//     - P_1234 sum_{A < B} K_A K_B*.
// Throws std::logic_error if a term fixed by the full torus survives.
Character v_char(const NekContext& ctx);

// --- ambient spaces and comparison characters -------------------------------

// Tangent character of the ambient quiver variety (endomorphisms removed):
// (t1^-1 + t2^-1 + t3^-1 + t4^-1 - 1) K* K + N* K + K* (sum_B N_B t_B^-1),
// where K, N are the totals over all six planes.  Rank 3n^2 + 2rn.
Character tangent_ambient(const NekContext& ctx);

// Character of the auxiliary bundle Lambda over the ambient space.
Character lambda_char(const NekContext& ctx);

// Empty-tuple value of lambda_char: sum over A in {12,13,23} of
// N_A* N_Abar t_Abar^-1.  Its Euler classes normalize the partition function.
Character c_norm_char(const RankVector& ranks);

// 4d comparison character: v - (tangent_ambient - lambda_char + c_norm_char)
// equals g_4d - dual(g_4d).
Character g_4d(const NekContext& ctx);

// 3d sector (all ranks on planes touching axis 4 must vanish; throws
// std::invalid_argument otherwise).
Character tangent_ambient_3d(const NekContext& ctx);

// 3d comparison character: v - (T3 - dual(T3) * (t1 t2 t3)^-1) equals
// g_3d - dual(g_3d).
Character g_3d(const NekContext& ctx);

// Sheaf-side virtual tangent character:
// -sum_A N_A N_Abar* t_Abar
//   + sum_{A,B} (P_Abar N_A K_B* + P_Abar* N_A* K_B - P_1234 K_A K_B*).
// Equals -sum_A N_A N_Abar* t_Abar + v + dual(v); rank -2 sum_{A in 3} r_A r_Abar.
Character sheaf_tangent(const NekContext& ctx);

}  // namespace origami
