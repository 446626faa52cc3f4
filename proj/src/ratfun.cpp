#include "origami/ratfun.hpp"

#include <sstream>
#include <stdexcept>

namespace origami {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::linear(const Rat& a, const Rat& b) { return Poly(std::vector<Rat>{b, a}); }

Rat Poly::lead() const {
  if (c_.empty()) throw std::domain_error("lead of zero polynomial");
  return c_.back();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = num.c_;
  int dn = num.degree(), dd = den.degree();
  if (dn < dd) return {Poly(), num};
  std::vector<Rat> quo(dn - dd + 1, Rat(0));
  Rat lead = den.c_.back();
  for (int k = dn - dd; k >= 0; --k) {
    Rat q = rem[k + dd] / lead;
    quo[k] = q;
    if (q != 0)
      for (int i = 0; i <= dd; ++i) rem[k + i] -= q * den.c_[i];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // monic normalization
  Rat inv = Rat(1) / a.lead();
  std::vector<Rat> c = a.coeffs();
  for (auto& x : c) x *= inv;
  return Poly(std::move(c));
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << rat_str(c_[k]);
    if (k >= 1) os << "*" << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

RationalFunction1V::RationalFunction1V() : num_(), den_(Poly::constant(Rat(1))) {}

RationalFunction1V::RationalFunction1V(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

void RationalFunction1V::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(Rat(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  Rat inv = Rat(1) / den_.lead();
  if (inv != 1) {
    std::vector<Rat> n = num_.coeffs(), d = den_.coeffs();
    for (auto& x : n) x *= inv;
    for (auto& x : d) x *= inv;
    num_ = Poly(std::move(n));
    den_ = Poly(std::move(d));
  }
}

bool RationalFunction1V::is_polynomial() const {
  return den_.degree() == 0 && den_.at(0) == 1;
}

RationalFunction1V operator+(const RationalFunction1V& a, const RationalFunction1V& b) {
  return RationalFunction1V(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction1V operator*(const RationalFunction1V& a, const RationalFunction1V& b) {
  return RationalFunction1V(a.num_ * b.num_, a.den_ * b.den_);
}

Rat RationalFunction1V::x_coeff(long k) const {
  if (num_.is_zero()) return Rat(0);
  long dn = num_.degree(), dd = den_.degree();
  // Want the coefficient of xi^(k) in f(1/xi) = xi^(dd-dn) * Ntilde/Dtilde,
  // i.e. the series coefficient of Ntilde/Dtilde at order k - (dd - dn).
  long order = k - (dd - dn);
  if (order < 0) return Rat(0);
  // Reversed coefficient vectors.
  std::vector<Rat> N(order + 1, Rat(0)), D(order + 1, Rat(0));
  for (long i = 0; i <= order && i <= dn; ++i) N[i] = num_.at(int(dn - i));
  for (long i = 0; i <= order && i <= dd; ++i) D[i] = den_.at(int(dd - i));
  // Series division S = N / D with D[0] = lead(den) != 0.
  std::vector<Rat> S(order + 1, Rat(0));
  for (long n = 0; n <= order; ++n) {
    Rat acc = N[n];
    for (long i = 1; i <= n; ++i) acc -= D[i] * S[n - i];
    S[n] = acc / D[0];
  }
  return S[order];
}

std::string RationalFunction1V::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace origami
