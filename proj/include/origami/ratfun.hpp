#pragma once

// Dense univariate polynomials and reduced rational functions over the
// rationals, with Laurent expansion at infinity (descending powers of x).

#include <string>
#include <vector>

#include "origami/rat.hpp"

namespace origami {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);      // coeffs[k] is the x^k coefficient
  static Poly constant(const Rat& c);
  static Poly linear(const Rat& a, const Rat& b);  // a x + b

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return (int)c_.size() - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  Rat at(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : Rat(0); }
  Rat lead() const;

  friend Poly operator+(const Poly&, const Poly&);
  friend Poly operator-(const Poly&, const Poly&);
  friend Poly operator*(const Poly&, const Poly&);
  friend bool operator==(const Poly&, const Poly&) = default;

  // Quotient and remainder; throws std::domain_error on division by zero.
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

  // Monic greatest common divisor.
  static Poly gcd(Poly a, Poly b);

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

class RationalFunction1V {
 public:
  RationalFunction1V();  // zero
  RationalFunction1V(Poly num, Poly den);  // reduces; den must be nonzero

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_polynomial() const;  // reduced denominator is the constant 1
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction1V operator+(const RationalFunction1V&, const RationalFunction1V&);
  friend RationalFunction1V operator*(const RationalFunction1V&, const RationalFunction1V&);
  friend bool operator==(const RationalFunction1V&, const RationalFunction1V&) = default;

  // Coefficient of x^k in the Laurent expansion in DESCENDING powers of x
  // (expansion at infinity); k may be negative.
  Rat x_coeff(long k) const;

  std::string str() const;

 private:
  void reduce();
  Poly num_, den_;  // den_ monic after reduction
};

}  // namespace origami
