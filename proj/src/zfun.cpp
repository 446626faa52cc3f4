#include "origami/zfun.hpp"

#include <functional>
#include <stdexcept>

#include "origami/parallel.hpp"

namespace origami {

namespace {

QSeries sum_over_tuples(const RankVector& ranks, int order, int threads,
                        const std::function<Rat(const PartitionTuple&)>& contribution) {
  QSeries out(order);
  for (int n = 0; n <= order; ++n) {
    auto tuples = enumerate_tuples(ranks, n);
    auto vals = parallel_map(tuples, contribution, threads);
    Rat acc(0);
    for (const Rat& v : vals) acc += v;  // fixed order: thread-count independent
    out.at(n) = acc;
  }
  return out;
}

}  // namespace

QSeries zk_coeffs(const RankVector& ranks, int order, const EvalPoint& p, int threads) {
  return sum_over_tuples(ranks, order, threads, [&](const PartitionTuple& t) {
    return eval_k(bracket(-v_char(NekContext(ranks, t))), p);
  });
}

QSeries zk_costable_coeffs(const RankVector& ranks, int order, const EvalPoint& p, int threads) {
  return sum_over_tuples(ranks, order, threads, [&](const PartitionTuple& t) {
    return eval_k(bracket(subst_costable(-v_char(NekContext(ranks, t)))), p);
  });
}

QSeries z_coeffs(const RankVector& ranks, int order, const CohPoint& p, int threads) {
  return sum_over_tuples(ranks, order, threads, [&](const PartitionTuple& t) {
    return eval_coh(euler_coh(-v_char(NekContext(ranks, t))), p);
  });
}

QSeries zk_with_retries(const RankVector& ranks, int order, std::uint64_t seed, EvalPoint& used,
                        bool costable, int threads) {
  std::string last;
  for (int attempt = 0; attempt < 32; ++attempt) {
    used = EvalPoint::draw(seed + 1000003ull * attempt, ranks.slot_keys());
    try {
      return costable ? zk_costable_coeffs(ranks, order, used, threads)
                      : zk_coeffs(ranks, order, used, threads);
    } catch (const PoleError& e) {
      last = e.what();
    }
  }
  throw PoleError("zk_with_retries: no pole-free point in 32 draws; last: " + last);
}

QSeries z_with_retries(const RankVector& ranks, int order, std::uint64_t seed, ZMode mode,
                       CohPoint& used, int threads) {
  if (mode == ZMode::CY3 && !ranks.three_dim())
    throw std::invalid_argument("z_with_retries: CY3 mode needs vanishing ranks on 14, 24, 34");
  std::string last;
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::uint64_t s = seed + 1000003ull * attempt;
    auto slots = ranks.slot_keys();
    switch (mode) {
      case ZMode::CY3:
        used = CohPoint::draw_cy3(s, slots);
        break;
      case ZMode::DiagonalModular:
        used = CohPoint::draw_diagonal(s, slots);
        break;
      default:
        used = CohPoint::draw(s, slots);
        break;
    }
    try {
      return z_coeffs(ranks, order, used, threads);
    } catch (const PoleError& e) {
      last = e.what();
    }
  }
  throw PoleError("z_with_retries: no pole-free point in 32 draws; last: " + last);
}

ModularCheck z_modular_check(int order, std::uint64_t seed, int trials) {
  RankVector ranks = RankVector::parse("12=1,13=1");
  ModularCheck out;
  int n = order - 1;  // comparisons are mod q^order
  QSeries z(n);
  bool have = false;
  bool stable = true;
  for (int t = 0; t < trials; ++t) {
    CohPoint p;
    QSeries zt = z_with_retries(ranks, n, seed + 7919ull * t, ZMode::DiagonalModular, p);
    if (!have) {
      z = zt;
      have = true;
    } else if (!(zt == z)) {
      stable = false;
    }
  }
  out.lhs = z * eta_bar(n).pow_rational(Rat(8));
  out.rhs = modular_rhs(n);
  out.pass = stable && out.lhs == out.rhs;
  return out;
}

}  // namespace origami
