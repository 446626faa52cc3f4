#include "origami/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace origami {

QSeries::QSeries(int order, std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  c_.resize(order + 1, Rat(0));
}

QSeries QSeries::one(int order) {
  QSeries s(order);
  s.c_[0] = 1;
  return s;
}

QSeries QSeries::truncated(int order) const {
  QSeries s(order);
  for (int k = 0; k <= order && k <= this->order(); ++k) s.c_[k] = c_[k];
  return s;
}

namespace {
int common_order(const QSeries& a, const QSeries& b) {
  return std::min(a.order(), b.order());
}
}  // namespace

QSeries operator+(const QSeries& a, const QSeries& b) {
  int n = common_order(a, b);
  QSeries s(n);
  for (int k = 0; k <= n; ++k) s.at(k) = a.at(k) + b.at(k);
  return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  int n = common_order(a, b);
  QSeries s(n);
  for (int k = 0; k <= n; ++k) s.at(k) = a.at(k) - b.at(k);
  return s;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  int n = common_order(a, b);
  QSeries s(n);
  for (int i = 0; i <= n; ++i) {
    if (a.at(i) == 0) continue;
    for (int j = 0; i + j <= n; ++j) s.at(i + j) += a.at(i) * b.at(j);
  }
  return s;
}

QSeries QSeries::inverse() const {
  if (c_.empty() || c_[0] == 0)
    throw std::domain_error("QSeries::inverse: zero constant term");
  int n = order();
  QSeries s(n);
  s.at(0) = Rat(1) / c_[0];
  for (int k = 1; k <= n; ++k) {
    Rat acc(0);
    for (int i = 1; i <= k; ++i) acc += c_[i] * s.at(k - i);
    s.at(k) = -acc / c_[0];
  }
  return s;
}

QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

QSeries QSeries::log() const {
  if (c_.empty() || c_[0] != 1) throw std::domain_error("QSeries::log: constant term must be 1");
  int n = order();
  // l' = f'/f  =>  n l_n = n f_n - sum_{k=1}^{n-1} k l_k f_{n-k}
  QSeries l(n);
  for (int k = 1; k <= n; ++k) {
    Rat acc = Rat(k) * c_[k];
    for (int i = 1; i < k; ++i) acc -= Rat(i) * l.at(i) * c_[k - i];
    l.at(k) = acc / k;
  }
  return l;
}

QSeries QSeries::exp() const {
  if (!c_.empty() && c_[0] != 0)
    throw std::domain_error("QSeries::exp: constant term must be 0");
  int n = order();
  QSeries g(n);
  g.at(0) = 1;
  // g' = f' g  =>  n g_n = sum_{k=1}^{n} k f_k g_{n-k}
  for (int k = 1; k <= n; ++k) {
    Rat acc(0);
    for (int i = 1; i <= k; ++i) acc += Rat(i) * at(i) * g.at(k - i);
    g.at(k) = acc / k;
  }
  return g;
}

QSeries QSeries::pow_rational(const Rat& e) const { return (log() * QSeries(order(), {e})).exp(); }

QSeries QSeries::dq() const {
  if (order() < 1) throw std::domain_error("QSeries::dq: order too small");
  QSeries s(order() - 1);
  for (int k = 0; k < order(); ++k) s.at(k) = Rat(k + 1) * c_[k + 1];
  return s;
}

bool QSeries::agrees(const QSeries& other, int through) const {
  int n = through >= 0 ? through : common_order(*this, other);
  if (n > order() || n > other.order()) return false;
  for (int k = 0; k <= n; ++k)
    if (at(k) != other.at(k)) return false;
  return true;
}

std::string QSeries::str() const {
  std::ostringstream os;
  os << "[";
  for (int k = 0; k <= order(); ++k) {
    if (k) os << ", ";
    os << rat_str(at(k));
  }
  os << "]";
  return os.str();
}

QSeries eta_bar(int order, int step) {
  if (step < 1) throw std::invalid_argument("eta_bar: step must be positive");
  QSeries s = QSeries::one(order);
  for (int n = 1; n * step <= order; ++n) {
    QSeries f = QSeries::one(order);
    f.at(n * step) = -1;
    s = s * f;
  }
  return s;
}

// ---------------------------------------------------------------------------

struct BracketExpr::Node {
  enum class Kind { Atom, Const, QKernel, Mul, Div, Add } kind;
  Monomial mono;  // Atom
  Rat c;          // Const
  std::shared_ptr<const Node> lhs, rhs;
};

BracketExpr BracketExpr::atom(const Monomial& m) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Atom;
  n->mono = m;
  return BracketExpr(std::move(n));
}

BracketExpr BracketExpr::constant(const Rat& c) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Const;
  n->c = c;
  return BracketExpr(std::move(n));
}

BracketExpr BracketExpr::qkernel() {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::QKernel;
  return BracketExpr(std::move(n));
}

BracketExpr BracketExpr::mul(BracketExpr a, BracketExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Mul;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return BracketExpr(std::move(n));
}
BracketExpr BracketExpr::div(BracketExpr a, BracketExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Div;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return BracketExpr(std::move(n));
}
BracketExpr BracketExpr::add(BracketExpr a, BracketExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Add;
  n->lhs = a.node_;
  n->rhs = b.node_;
  return BracketExpr(std::move(n));
}

QSeries BracketExpr::eval(const EvalPoint& p, int power, int order) const {
  if (!node_) throw std::logic_error("BracketExpr: empty expression");
  switch (node_->kind) {
    case Node::Kind::Atom: {
      EvalPoint q = p.pow(power);
      Rat h = eval_sqrt(node_->mono, q);
      if (h == 0) throw PoleError("bracket atom evaluates through zero");
      Rat val = h - Rat(1) / h;
      if (val == 0)
        throw PoleError("bracket atom [" + mono_str(node_->mono) + "] vanishes at the point");
      return QSeries(order, {val});
    }
    case Node::Kind::Const:
      return QSeries(order, {node_->c});
    case Node::Kind::QKernel: {
      QSeries s(order);
      for (int k = power; k <= order; k += power) s.at(k) = 1;
      return s;
    }
    case Node::Kind::Mul:
      return BracketExpr(node_->lhs).eval(p, power, order) *
             BracketExpr(node_->rhs).eval(p, power, order);
    case Node::Kind::Div: {
      QSeries d = BracketExpr(node_->rhs).eval(p, power, order);
      if (d.at(0) == 0) throw PoleError("bracket expression divides by zero constant term");
      return BracketExpr(node_->lhs).eval(p, power, order) / d;
    }
    case Node::Kind::Add:
      return BracketExpr(node_->lhs).eval(p, power, order) +
             BracketExpr(node_->rhs).eval(p, power, order);
  }
  throw std::logic_error("unreachable");
}

QSeries plethystic_exp(const BracketExpr& f, const EvalPoint& p, int order) {
  QSeries first = f.eval(p, 1, order);
  if (first.at(0) != 0)
    throw std::domain_error("plethystic_exp: expression does not vanish at q = 0");
  QSeries acc(order);
  for (int n = 1; n <= order; ++n) {
    QSeries term = f.eval(p, n, order);
    for (int k = 0; k <= order; ++k) acc.at(k) += term.at(k) / n;
  }
  return acc.exp();
}

// ---------------------------------------------------------------------------

namespace {

BracketExpr crossing_factor(int a1, int b1, int a2, int b2, int d1, int d2) {
  // [t_{a1} t_{b1}][t_{a2} t_{b2}] / ([t_{d1}][t_{d2}]) * q/(1-q)
  using BE = BracketExpr;
  BE num = BE::mul(BE::atom(mono_t(a1, 2) * mono_t(b1, 2)), BE::atom(mono_t(a2, 2) * mono_t(b2, 2)));
  BE den = BE::mul(BE::atom(mono_t(d1, 2)), BE::atom(mono_t(d2, 2)));
  return BE::mul(BE::div(std::move(num), std::move(den)), BE::qkernel());
}

}  // namespace

QSeries crossed_rhs(const EvalPoint& p, int order) {
  QSeries a = plethystic_exp(crossing_factor(1, 3, 2, 3, 1, 2), p, order);
  QSeries b = plethystic_exp(crossing_factor(1, 3, 1, 4, 3, 4), p, order);
  return a * b;
}

QSeries rank1_rhs(const EvalPoint& p, int order) {
  return plethystic_exp(crossing_factor(1, 3, 2, 3, 1, 2), p, order);
}

QSeries modular_rhs(int order) {
  QSeries num = eta_bar(order, 4);
  num = num * num;
  return num / (eta_bar(order, 2) * (eta_bar(order, 1).pow_rational(Rat(6))));
}

QSeries g_closed(const Rat& s1, const Rat& s2, const Rat& s3, int order) {
  if (s1 == 0 || s2 == 0) throw std::domain_error("g_closed: s1 s2 must be nonzero");
  Rat e = -((s1 + s3) * (s2 + s3)) / (s1 * s2);
  return eta_bar(order).pow_rational(e);
}

}  // namespace origami
