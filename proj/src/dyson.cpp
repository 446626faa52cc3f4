#include "origami/dyson.hpp"

#include <stdexcept>

#include "origami/parallel.hpp"

namespace origami {

void require_crossed(const RankVector& ranks) {
  bool ok = ranks.at(0) > 0 && ranks.at(5) > 0;
  for (int p : {1, 2, 3, 4}) ok = ok && ranks.at(p) == 0;
  if (!ok)
    throw std::invalid_argument("descending-x expansion needs ranks on the 12/34 pair only, got " +
                                ranks.str());
}

CohPoint draw_ds_point(std::uint64_t seed, const RankVector& ranks, XMode xmode) {
  CohPoint p = CohPoint::draw(seed, ranks.slot_keys());
  int r12 = ranks.at(0);
  for (int alpha = 1; alpha <= r12; ++alpha) {
    CohPoint::VVal& val = p.v.at(slot_key(0, alpha));
    if (alpha == 1) {
      val = {Rat(0), 1};
    } else if (xmode == XMode::All) {
      val.xc = 1;  // keep the drawn value as the offset c_alpha
    }
  }
  return p;
}

RationalFunction1V ev_in_x(const NekContext& ctx, const CohPoint& p) {
  return eval_coh_in_x(euler_coh(-v_char(ctx)), p);
}

RationalFunction1V c_norm_in_x(const RankVector& ranks, const CohPoint& p) {
  return eval_coh_in_x(euler_coh(c_norm_char(ranks)), p);
}

RationalFunction1V cz_in_x(const RankVector& ranks, int n, const CohPoint& p, int threads) {
  require_crossed(ranks);
  const std::vector<PartitionTuple>& tuples = enumerate_tuples(ranks, n);
  std::vector<RationalFunction1V> parts = parallel_map(
      tuples, [&](const PartitionTuple& t) { return ev_in_x(NekContext(t), p); }, threads);
  RationalFunction1V sum;
  for (const RationalFunction1V& f : parts) sum = sum + f;
  return c_norm_in_x(ranks, p) * sum;
}

Character armleg_T12(const std::vector<Partition>& lambdas) {
  Character out;
  int r = (int)lambdas.size();
  for (int alpha = 1; alpha <= r; ++alpha) {
    for (int beta = 1; beta <= r; ++beta) {
      Monomial wfac = mono_w(0, alpha, 2) * mono_w(0, beta, -2);
      const Partition& la = lambdas[alpha - 1];
      const Partition& lb = lambdas[beta - 1];
      for (int i = 0; i < la.length(); ++i)
        for (int j = 0; j < la.row(i); ++j)
          out.add_term(wfac * mono_t(1, -2 * lb.leg_signed(i, j)) *
                           mono_t(2, 2 * (la.arm_signed(i, j) + 1)),
                       1);
      for (int i = 0; i < lb.length(); ++i)
        for (int j = 0; j < lb.row(i); ++j)
          out.add_term(wfac * mono_t(1, 2 * (la.leg_signed(i, j) + 1)) *
                           mono_t(2, -2 * lb.arm_signed(i, j)),
                       1);
    }
  }
  return out;
}

namespace {

// prod over the weights of t12^-1 T_12(lambda) of (mu - s3) / mu.
Rat adjoint_weight_product(const Partition& lambda, const Rat& s1, const Rat& s2, const Rat& s3) {
  Character tangent = Character::from(mono_t(1, -2) * mono_t(2, -2)) * armleg_T12({lambda});
  Rat value(1);
  for (const auto& [m, c] : tangent.terms()) {
    Rat mu = Rat(m.dt[0]) / 2 * s1 + Rat(m.dt[1]) / 2 * s2 + Rat(m.dt[2]) / 2 * s3;
    if (mu == 0) throw PoleError("vanishing tangent weight " + mono_str(m));
    Rat top = mu - s3;
    if (top == 0 && c < 0) throw PoleError("vanishing shifted weight " + mono_str(m));
    value *= rat_pow(top, c) * rat_pow(mu, -c);
  }
  return value;
}

}  // namespace

QSeries g_series(const Rat& s1, const Rat& s2, const Rat& s3, int order) {
  QSeries out(order);
  for (int n = 0; n <= order; ++n) {
    Rat coeff(0);
    for (const Partition& lambda : partitions_of(n))
      coeff += adjoint_weight_product(lambda, s1, s2, s3);
    out.at(n) = coeff;
  }
  return out;
}

QSeries ds_ode_residual(const Rat& s1, const Rat& s2, const Rat& s3, int order) {
  Rat s4 = -s1 - s2 - s3;
  if (s1 == 0 || s2 == 0 || s3 == 0 || s4 == 0) throw PoleError("degenerate slope");
  QSeries g123 = g_series(s1, s2, s3, order);
  QSeries g341 = g_series(s3, s4, s1, order);
  QSeries lhs = g123.truncated(order - 1) * g341.dq();
  QSeries rhs = g341.truncated(order - 1) * g123.dq();
  return lhs.scaled_by(s3 * s4) + rhs.scaled_by(s1 * s2);
}

}  // namespace origami
