#pragma once

// Truncated formal power series in q over the rationals, the Euler function,
// plethystic exponentials of bracket expressions, and the closed-form series
// the partition-function computations are tested against.

#include <memory>
#include <string>
#include <vector>

#include "origami/euler.hpp"
#include "origami/kchar.hpp"

namespace origami {

class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(int order) : c_(order + 1, Rat(0)) {}
  QSeries(int order, std::vector<Rat> coeffs);

  static QSeries one(int order);

  int order() const { return (int)c_.size() - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat at(int k) const { return k >= 0 && k <= order() ? c_[k] : Rat(0); }
  Rat& at(int k) { return c_.at(k); }

  QSeries truncated(int order) const;

  friend QSeries operator+(const QSeries&, const QSeries&);
  friend QSeries operator-(const QSeries&, const QSeries&);
  friend QSeries operator*(const QSeries&, const QSeries&);
  // Division; denominator needs a nonzero constant term.
  friend QSeries operator/(const QSeries&, const QSeries&);
  friend bool operator==(const QSeries&, const QSeries&) = default;

  QSeries inverse() const;
  QSeries log() const;            // constant term must be 1
  QSeries exp() const;            // constant term must be 0
  QSeries pow_rational(const Rat& e) const;  // constant term must be 1
  QSeries dq() const;             // d/dq, order drops by one

  QSeries scaled_by(const Rat& k) const {
    QSeries out = *this;
    for (Rat& c : out.c_) c *= k;
    return out;
  }

  // True when the two series agree on q^0..q^(order); compares through the
  // smaller of the two orders when through < 0.
  bool agrees(const QSeries& other, int through = -1) const;

  std::string str() const;  // "[1, -1/2, 0, ...]" exact-rational form

 private:
  std::vector<Rat> c_;  // c_[k] is the q^k coefficient
};

// prod_{n >= 1} (1 - q^(step*n)), truncated at the given order.
QSeries eta_bar(int order, int step = 1);

// ---------------------------------------------------------------------------
// Bracket expressions: symbolic products/ratios of [m] atoms and the kernel
// q/(1-q), evaluated per plethystic power.

class BracketExpr {
 public:
  static BracketExpr atom(const Monomial& m);        // [m]
  static BracketExpr constant(const Rat& c);
  static BracketExpr qkernel();                      // q/(1-q)
  static BracketExpr mul(BracketExpr a, BracketExpr b);
  static BracketExpr div(BracketExpr a, BracketExpr b);
  static BracketExpr add(BracketExpr a, BracketExpr b);

  // Value after substituting u -> u^n, y -> y^n, q -> q^n.  Throws PoleError
  // if a bracket atom vanishes or a division by a series with zero constant
  // term occurs.
  QSeries eval(const EvalPoint& p, int power, int order) const;

 private:
  struct Node;
  explicit BracketExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  BracketExpr() = default;
  std::shared_ptr<const Node> node_;
};

// Plethystic exponential Exp(f) = exp(sum_{n>=1} f(p^n, q^n)/n); f must vanish
// at q = 0.
QSeries plethystic_exp(const BracketExpr& f, const EvalPoint& p, int order);

// ---------------------------------------------------------------------------
// Closed forms

// Exp([t1t3][t2t3]/([t1][t2]) q/(1-q)) * Exp([t1t3][t1t4]/([t3][t4]) q/(1-q)).
QSeries crossed_rhs(const EvalPoint& p, int order);

// Exp([t1t3][t2t3]/([t1][t2]) q/(1-q)).
QSeries rank1_rhs(const EvalPoint& p, int order);

// eta_bar(q^4)^2 / (eta_bar(q^2) eta_bar(q)^6).
QSeries modular_rhs(int order);

// prod_{n >= 1} (1 - q^n)^(-(s1+s3)(s2+s3)/(s1 s2)).
QSeries g_closed(const Rat& s1, const Rat& s2, const Rat& s3, int order);

}  // namespace origami
