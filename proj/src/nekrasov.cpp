#include "origami/nekrasov.hpp"

#include <stdexcept>

namespace origami {

Character p_axis(int axis) {
  Character c = Character::one();
  c.add_term(mono_t(axis, 2), -1);
  return c;
}

Character p_plane(int plane) {
  auto [a, b] = plane_axes(plane);
  return p_axis(a) * p_axis(b);
}

Character p_1234() { return p_axis(1) * p_axis(2) * p_axis(3) * p_axis(4); }

Monomial t_plane_mono(int plane) {
  auto [a, b] = plane_axes(plane);
  return mono_t(a, 2) * mono_t(b, 2);
}

Character t_plane_char(int plane) { return Character::from(t_plane_mono(plane)); }

Character big_K(const NekContext& ctx, int plane) {
  Character out;
  for (int alpha = 1; alpha <= ctx.ranks.at(plane); ++alpha)
    out += k_char(ctx.tuple.at(slot_key(plane, alpha)), plane, alpha);
  return out;
}

Character big_N(const RankVector& ranks, int plane) {
  Character out;
  for (int alpha = 1; alpha <= ranks.at(plane); ++alpha)
    out.add_term(mono_w(plane, alpha, 2), 1);
  return out;
}

Character big_T(const NekContext& ctx, int plane) {
  Character K = big_K(ctx, plane);
  Character N = big_N(ctx.ranks, plane);
  Character Ks = dual(K);
  return N * Ks + t_plane_char(plane) * dual(N) * K - p_plane(plane) * K * Ks;
}

Character v_char(const NekContext& ctx) {
  std::array<Character, 6> K, Ks, N;
  for (int p = 0; p < kNumPlanes; ++p) {
    K[p] = big_K(ctx, p);
    Ks[p] = dual(K[p]);
    N[p] = big_N(ctx.ranks, p);
  }
  Character v;
  for (int A = 0; A < kNumPlanes; ++A) {
    v += p_axis(plane_phi(A)) * big_T(ctx, A);
    Character cross;
    for (int B = 0; B < kNumPlanes; ++B)
      if (B != A) cross += Ks[B];
    v += p_plane(plane_complement(A)) * N[A] * cross;
  }
  Character dbl;
  for (int A = 0; A < kNumPlanes; ++A)
    for (int B = A + 1; B < kNumPlanes; ++B) dbl += K[A] * Ks[B];
  v -= p_1234() * dbl;

  if (!fixed_part(v, Torus::BigT).is_zero())
    throw std::logic_error("v_char: fully fixed term survives in " + v.str());
  return v;
}

namespace {

// K and N totals over all six planes (skipping empty ones is automatic).
void totals(const NekContext& ctx, Character& K, Character& N, Character& NtInv) {
  for (int p = 0; p < kNumPlanes; ++p) {
    K += big_K(ctx, p);
    Character Np = big_N(ctx.ranks, p);
    N += Np;
    NtInv += Np * Character::from(mono_inverse(t_plane_mono(p)));
  }
}

}  // namespace

Character tangent_ambient(const NekContext& ctx) {
  Character K, N, NtInv;
  totals(ctx, K, N, NtInv);
  Character hor;  // t1^-1 + t2^-1 + t3^-1 + t4^-1 - 1
  for (int a = 1; a <= 4; ++a) hor.add_term(mono_t(a, -2), 1);
  hor.add_term(Monomial{}, -1);
  return hor * dual(K) * K + dual(N) * K + dual(K) * NtInv;
}

Character lambda_char(const NekContext& ctx) {
  Character K, N, NtInv;
  totals(ctx, K, N, NtInv);
  Character Ks = dual(K);

  Character coeff;  // (t1 t2)^-1 + (t1 t3)^-1 + (t2 t3)^-1
  for (int p : {0, 1, 3}) coeff.add_term(mono_inverse(t_plane_mono(p)), 1);
  Character out = coeff * Ks * K;

  out += c_norm_char(ctx.ranks);

  for (int A = 0; A < kNumPlanes; ++A) {
    Character NA = big_N(ctx.ranks, A);
    if (NA.is_zero()) continue;
    auto [c, d] = plane_axes(plane_complement(A));
    Character axes_inv;
    axes_inv.add_term(mono_t(c, -2), 1);
    axes_inv.add_term(mono_t(d, -2), 1);
    out += Ks * NA * axes_inv * Character::from(mono_inverse(t_plane_mono(A)));
  }
  return out;
}

Character c_norm_char(const RankVector& ranks) {
  Character out;
  for (int A : {0, 1, 3}) {
    int Ab = plane_complement(A);
    out += dual(big_N(ranks, A)) * big_N(ranks, Ab) *
           Character::from(mono_inverse(t_plane_mono(Ab)));
  }
  return out;
}

Character g_4d(const NekContext& ctx) {
  std::array<Character, 6> K, N;
  for (int p = 0; p < kNumPlanes; ++p) {
    K[p] = big_K(ctx, p);
    N[p] = big_N(ctx.ranks, p);
  }

  Character out;

  Character coeff3;  // t1 + t2 + t3 - t1t2 - t1t3 - t2t3
  for (int a = 1; a <= 3; ++a) coeff3.add_term(mono_t(a, 2), 1);
  for (int p : {0, 1, 3}) coeff3.add_term(t_plane_mono(p), -1);
  for (int A : {0, 1, 3}) out += coeff3 * dual(K[A]) * K[A];

  for (int A : {2, 4, 5}) {  // planes 14, 24, 34
    int psi = plane_psi(A);
    Character c;
    for (int a = 1; a <= 4; ++a)
      if (a != psi) c.add_term(mono_t(a, 2), 1);
    for (int B : {0, 1, 3}) {
      auto [x, y] = plane_axes(B);
      if (x != psi && y != psi) c.add_term(t_plane_mono(B), -1);
    }
    out += c * dual(K[A]) * K[A];
  }

  for (int A = 0; A < kNumPlanes; ++A) {
    // (1 - t_A + t_phi(A) t_A) with a minus sign in front
    Character c = Character::one();
    c.add_term(t_plane_mono(A), -1);
    c.add_term(mono_t(plane_phi(A), 2) * t_plane_mono(A), 1);
    out -= c * dual(N[A]) * K[A];
  }

  for (int A = 0; A < kNumPlanes; ++A)
    for (int B = 0; B < kNumPlanes; ++B)
      if (A != B) out -= dual(N[A]) * K[B];

  Character cAB;  // 1 - t1^-1 - t2^-1 - t3^-1 - t4^-1 + t1t4 + t2t4 + t3t4
  cAB.add_term(Monomial{}, 1);
  for (int a = 1; a <= 4; ++a) cAB.add_term(mono_t(a, -2), -1);
  for (int a = 1; a <= 3; ++a) cAB.add_term(mono_t(a, 2) * mono_t(4, 2), 1);
  for (int A = 0; A < kNumPlanes; ++A)
    for (int B = A + 1; B < kNumPlanes; ++B) out += cAB * dual(K[A]) * K[B];

  return out;
}

namespace {

void require_3d(const RankVector& ranks, const char* who) {
  if (!ranks.three_dim())
    throw std::invalid_argument(std::string(who) +
                                ": ranks on planes 14, 24, 34 must vanish (got " + ranks.str() +
                                ")");
}

}  // namespace

Character tangent_ambient_3d(const NekContext& ctx) {
  require_3d(ctx.ranks, "tangent_ambient_3d");
  Character K, N, NtInv;
  for (int p : {0, 1, 3}) {
    K += big_K(ctx, p);
    Character Np = big_N(ctx.ranks, p);
    N += Np;
    NtInv += Np * Character::from(mono_inverse(t_plane_mono(p)));
  }
  Character hor;  // t1^-1 + t2^-1 + t3^-1 - 1
  for (int a = 1; a <= 3; ++a) hor.add_term(mono_t(a, -2), 1);
  hor.add_term(Monomial{}, -1);
  return hor * dual(K) * K + dual(N) * K + dual(K) * NtInv;
}

Character g_3d(const NekContext& ctx) {
  require_3d(ctx.ranks, "g_3d");
  std::array<Character, 6> K, N;
  for (int p : {0, 1, 3}) {
    K[p] = big_K(ctx, p);
    N[p] = big_N(ctx.ranks, p);
  }
  // The axis of {1,2,3} not in plane A.
  auto odd_axis = [](int plane) {
    auto [a, b] = plane_axes(plane);
    return 6 - a - b;
  };

  Character out;

  Character diag;  // t1+t2+t3 + (t1t2)^-1 + (t1t3)^-1 + (t2t3)^-1 + t1t2t3
  for (int a = 1; a <= 3; ++a) diag.add_term(mono_t(a, 2), 1);
  for (int p : {0, 1, 3}) diag.add_term(mono_inverse(t_plane_mono(p)), 1);
  diag.add_term(mono_t(1, 2) * mono_t(2, 2) * mono_t(3, 2), 1);
  for (int A : {0, 1, 3}) out += diag * K[A] * dual(K[A]);

  Monomial t123 = mono_t(1, 2) * mono_t(2, 2) * mono_t(3, 2);
  for (int A : {0, 1, 3}) {
    // t_A - t1t2t3 - 1 + t_c^-1
    Character c;
    c.add_term(t_plane_mono(A), 1);
    c.add_term(t123, -1);
    c.add_term(Monomial{}, -1);
    c.add_term(mono_t(odd_axis(A), -2), 1);
    out += c * dual(N[A]) * K[A];
  }

  Character cAB;  // -1 + t1+t2+t3 - t1t2 - t1t3 - t2t3 + t1t2t3
  cAB.add_term(Monomial{}, -1);
  for (int a = 1; a <= 3; ++a) cAB.add_term(mono_t(a, 2), 1);
  for (int p : {0, 1, 3}) cAB.add_term(t_plane_mono(p), -1);
  cAB.add_term(t123, 1);
  for (int A : {0, 1, 3})
    for (int B : {0, 1, 3})
      if (A < B) out += cAB * K[A] * dual(K[B]);

  for (int A : {0, 1, 3})
    for (int B : {0, 1, 3})
      if (A != B) out += p_axis(odd_axis(A)) * N[A] * dual(K[B]);

  return out;
}

Character sheaf_tangent(const NekContext& ctx) {
  std::array<Character, 6> K, N;
  for (int p = 0; p < kNumPlanes; ++p) {
    K[p] = big_K(ctx, p);
    N[p] = big_N(ctx.ranks, p);
  }
  Character out;
  for (int A = 0; A < kNumPlanes; ++A) {
    int Ab = plane_complement(A);
    out -= N[A] * dual(N[Ab]) * t_plane_char(Ab);
  }
  for (int A = 0; A < kNumPlanes; ++A) {
    int Ab = plane_complement(A);
    Character pAb = p_plane(Ab);
    for (int B = 0; B < kNumPlanes; ++B) {
      out += pAb * N[A] * dual(K[B]);
      out += dual(pAb) * dual(N[A]) * K[B];
    }
  }
  Character P = p_1234();
  for (int A = 0; A < kNumPlanes; ++A)
    for (int B = 0; B < kNumPlanes; ++B) out -= P * K[A] * dual(K[B]);
  return out;
}

}  // namespace origami
