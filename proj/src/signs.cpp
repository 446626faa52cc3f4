#include "origami/signs.hpp"

#include <stdexcept>

namespace origami {

FixedPointRep FixedPointRep::build(const NekContext& ctx) {
  FixedPointRep rep;
  // box lookup: (slot, i, j) -> basis index, in slot-major order
  struct SlotInfo {
    SlotKey key;
    int a, b;       // plane axes
    int base;       // index of the slot's first basis vector
    const Partition* lambda;
  };
  std::vector<SlotInfo> slots;
  for (SlotKey k : ctx.ranks.slot_keys()) {
    auto [a, b] = plane_axes(slot_plane(k));
    const Partition& lam = ctx.tuple.at(k);
    slots.push_back({k, a, b, (int)rep.basis.size(), &lam});
    for (int i = 0; i < lam.length(); ++i)
      for (int j = 0; j < lam.row(i); ++j)
        rep.basis.push_back(
            {mono_t(a, 2 * i) * mono_t(b, 2 * j) * mono_w(slot_plane(k), slot_alpha(k), 2)});
  }
  auto box_index = [](const SlotInfo& s, int i, int j) {
    // boxes are emitted row-major: rows 0..i-1 contribute lambda_{1..i}
    int idx = 0;
    for (int r = 0; r < i; ++r) idx += s.lambda->row(r);
    return s.base + idx + j;
  };
  for (int a = 1; a <= 4; ++a) rep.B[a - 1].assign(rep.basis.size(), -1);
  for (const auto& s : slots) {
    for (int i = 0; i < s.lambda->length(); ++i)
      for (int j = 0; j < s.lambda->row(i); ++j) {
        int src = box_index(s, i, j);
        if (s.lambda->contains(i + 1, j)) rep.B[s.a - 1][src] = box_index(s, i + 1, j);
        if (s.lambda->contains(i, j + 1)) rep.B[s.b - 1][src] = box_index(s, i, j + 1);
      }
  }
  return rep;
}

int hook_parity(const NekContext& ctx) {
  int sum = 0;
  for (int plane : {2, 4, 5}) {  // 14, 24, 34
    for (int alpha = 1; alpha <= ctx.ranks.at(plane); ++alpha) {
      const Partition& lam = ctx.tuple.at(slot_key(plane, alpha));
      sum += lam.size() - lam.hook(0, 0);
    }
  }
  return ((sum % 2) + 2) % 2;
}

namespace {

// Exact rank of a dense rational matrix.
int rational_rank(std::vector<std::vector<Rat>> m) {
  int rows = (int)m.size();
  if (rows == 0) return 0;
  int cols = (int)m[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Rat inv = Rat(1) / m[rank][c];
    for (int cc = c; cc < cols; ++cc) m[rank][cc] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int xi_cok_dim(const NekContext& ctx) {
  FixedPointRep rep = FixedPointRep::build(ctx);
  int dim = rep.dim();

  // Preimage tables: pre[a][u] = the basis index c with B_a(c) = u, or -1.
  std::array<std::vector<int>, 4> pre;
  for (int a = 0; a < 4; ++a) {
    pre[a].assign(dim, -1);
    for (int c = 0; c < dim; ++c)
      if (rep.B[a][c] >= 0) pre[a][rep.B[a][c]] = c;
  }

  // Fixed weight blocks.  Domain: triples a in {1,2,3} with elementary maps of
  // weight t_a; codomain: planes {12, 13, 23} with weight t_A.
  struct Elem {
    int v, u;
  };
  auto collect = [&](const Monomial& shift) {
    std::vector<Elem> out;
    for (int v = 0; v < dim; ++v)
      for (int u = 0; u < dim; ++u)
        if (rep.basis[v].weight == rep.basis[u].weight * shift) out.push_back({v, u});
    return out;
  };

  std::array<std::vector<Elem>, 3> domain;
  for (int a = 1; a <= 3; ++a) domain[a - 1] = collect(mono_t(a, 2));

  constexpr std::array<int, 3> kCodPlanes{0, 1, 3};  // 12, 13, 23
  std::array<std::vector<Elem>, 3> codomain;
  std::array<int, 3> cod_base{};
  int cod_total = 0;
  for (int k = 0; k < 3; ++k) {
    codomain[k] = collect(t_plane_mono(kCodPlanes[k]));
    cod_base[k] = cod_total;
    cod_total += (int)codomain[k].size();
  }
  auto cod_index = [&](int k, int r, int s) {
    for (std::size_t i = 0; i < codomain[k].size(); ++i)
      if (codomain[k][i].v == r && codomain[k][i].u == s) return cod_base[k] + (int)i;
    throw std::logic_error("xi_cok_dim: image leaves the fixed codomain block");
  };

  int dom_total = 0;
  for (auto& d : domain) dom_total += (int)d.size();

  std::vector<std::vector<Rat>> mat(cod_total, std::vector<Rat>(dom_total, Rat(0)));
  int col = 0;
  for (int a = 1; a <= 3; ++a) {
    for (const Elem& e : domain[a - 1]) {
      for (int k = 0; k < 3; ++k) {
        auto [c, d] = plane_axes(kCodPlanes[k]);
        if (a == c) {
          // component [X, B_d]: X B_d - B_d X
          if (pre[d - 1][e.u] >= 0) mat[cod_index(k, e.v, pre[d - 1][e.u])][col] += 1;
          if (rep.B[d - 1][e.v] >= 0) mat[cod_index(k, rep.B[d - 1][e.v], e.u)][col] -= 1;
        } else if (a == d) {
          // component [B_c, X]: B_c X - X B_c
          if (rep.B[c - 1][e.v] >= 0) mat[cod_index(k, rep.B[c - 1][e.v], e.u)][col] += 1;
          if (pre[c - 1][e.u] >= 0) mat[cod_index(k, e.v, pre[c - 1][e.u])][col] -= 1;
        }
      }
      ++col;
    }
  }

  return cod_total - rational_rank(std::move(mat));
}

bool comb_check(const Partition& lambda) {
  Character Z;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.row(i); ++j) Z.add_term(mono_t(1, 2 * i) * mono_t(2, 2 * j), 1);
  Character ZZs = Z * dual(Z);
  auto dim_of = [&](const Character& shift) {
    return fixed_dim(shift * ZZs, Torus::SmallT);
  };
  long long n = lambda.size();
  bool ok = true;
  ok &= dim_of(Character::from(mono_t(2, 2))) == n - lambda.length();
  ok &= dim_of(Character::from(mono_t(3, 2))) == 0;
  ok &= dim_of(Character::from(mono_t(1, 2) * mono_t(2, 2))) == n - lambda.hook(0, 0);
  ok &= dim_of(Character::from(mono_t(1, 2) * mono_t(3, 2))) == 0;
  return ok;
}

bool total_sign_check(const NekContext& ctx) {
  long long r = ctx.ranks.total();
  long long n = ctx.tuple.total_size();
  long long parity = (r - 1) * n + xi_cok_dim(ctx) + moving_rank(g_4d(ctx), Torus::BigT);
  return ((parity % 2) + 2) % 2 == 0;
}

}  // namespace origami
