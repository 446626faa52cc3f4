#pragma once

// Equivariant character ring of a point for the gauge-origami torus.
//
// Coordinates t1..t4 satisfy t1*t2*t3*t4 = 1; the canonical form eliminates t4
// (t4^d -> t1^-d t2^-d t3^-d).  Framing coordinates w[A,alpha] are indexed by
// one of the six coordinate planes A and a slot index alpha >= 1.  All
// exponents are stored DOUBLED as integers so that genuine half-powers (square
// roots of monomials) stay in integer arithmetic; the evaluation substitution
// t_i = u_i^2, w = y^2 then lands every value in the rationals.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "origami/rat.hpp"

namespace origami {

// ---------------------------------------------------------------------------
// Coordinate planes

// Plane order is lexicographic in the axis pair: 12 < 13 < 14 < 23 < 24 < 34.
inline constexpr int kNumPlanes = 6;

// 1-based axes {a, b} of plane p, a < b.
std::pair<int, int> plane_axes(int p);

// Index of the plane with axes {a, b} (order-insensitive); throws on bad axes.
int plane_of_axes(int a, int b);

// Complementary plane (axes {1..4} minus this plane's axes).
int plane_complement(int p);

// True for the holomorphic half {12, 13, 23}.
bool plane_in3(int p);

// Smallest / largest axis of the complementary plane.
int plane_phi(int p);
int plane_psi(int p);

const char* plane_name(int p);       // "12", ..., "34"
int plane_from_name(const std::string& s);  // throws std::invalid_argument

// ---------------------------------------------------------------------------
// Framing slots

// A slot is a (plane, alpha) pair packed into 16 bits; alpha is 1-based.
using SlotKey = std::uint16_t;

inline SlotKey slot_key(int plane, int alpha) {
  return static_cast<SlotKey>((plane << 8) | alpha);
}
inline int slot_plane(SlotKey k) { return k >> 8; }
inline int slot_alpha(SlotKey k) { return k & 0xff; }
std::string slot_name(SlotKey k);  // "12.1"

// ---------------------------------------------------------------------------
// Monomial

struct Monomial {
  // Doubled exponents of t1, t2, t3 (t4 already folded away).
  std::array<int, 3> dt{0, 0, 0};
  // Doubled exponents of the framing coordinates, sorted by slot, no zeros.
  std::vector<std::pair<SlotKey, int>> dw;

  bool is_one() const { return dt[0] == 0 && dt[1] == 0 && dt[2] == 0 && dw.empty(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
    if (auto c = x.dt <=> y.dt; c != 0) return c;
    return x.dw <=> y.dw;
  }
};

// t_axis^(doubled/2); axis in 1..4, axis 4 is folded into t1..t3.
Monomial mono_t(int axis, int doubled);
// w[plane,alpha]^(doubled/2).
Monomial mono_w(int plane, int alpha, int doubled);

Monomial operator*(const Monomial& x, const Monomial& y);
Monomial mono_inverse(const Monomial& m);
std::string mono_str(const Monomial& m);

// ---------------------------------------------------------------------------
// Torus choices for fixed-part extraction.
//
//   BigT   : full torus (3-dim t-torus times the framing torus)
//   SmallT : t-torus only (framing directions ignored)
//   BigT0  : CY3 subtorus times framing (extra relation t1 t2 t3 = 1)
//   SmallT0: CY3 subtorus only

enum class Torus { BigT, SmallT, BigT0, SmallT0 };

bool mono_fixed(const Monomial& m, Torus torus);

// ---------------------------------------------------------------------------
// Evaluation points (square-root substitution t_i = u_i^2, w = y^2).

struct EvalPoint {
  std::array<Rat, 3> u{Rat(1), Rat(1), Rat(1)};
  std::map<SlotKey, Rat> y;
  std::uint64_t seed = 0;

  // Seeded draw: all of u1,u2,u3 and the y's are nonzero rationals with
  // numerator and denominator bounded by 64 and pairwise distinct absolute
  // values, none equal to 1.
  static EvalPoint draw(std::uint64_t seed, const std::vector<SlotKey>& slots);

  // Point with u_i -> u_i^n, y -> y^n (plethystic powers).
  EvalPoint pow(long n) const;

  const Rat& y_at(SlotKey k) const;  // throws if the slot was not drawn
};

// ---------------------------------------------------------------------------
// Character: finite integer combination of monomials.

class Character {
 public:
  using Map = std::map<Monomial, long long>;

  Character() = default;
  static Character zero() { return Character(); }
  static Character one() { return from(Monomial{}); }
  static Character from(const Monomial& m, long long coeff = 1);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  long long coeff(const Monomial& m) const;

  void add_term(const Monomial& m, long long c);

  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(const Character& a, const Character& b);
  friend Character operator-(const Character& a);
  Character scaled(long long c) const;

  friend bool operator==(const Character&, const Character&) = default;

  std::string str() const;

 private:
  Map terms_;
};

// Dual: negate every exponent.
Character dual(const Character& chi);

// Virtual rank: sum of coefficients.
long long rank(const Character& chi);

// Sub-sum of terms fixed by the given torus.
Character fixed_part(const Character& chi, Torus torus);

// Rank of the fixed part; throws std::domain_error if any retained coefficient
// is negative (not a genuine dimension).
long long fixed_dim(const Character& chi, Torus torus);

// Rank of the moving (non-fixed) part; may be any integer.
long long moving_rank(const Character& chi, Torus torus);

// Costable substitution w[A,alpha]^k -> t_A^k w[A,alpha]^-k (an involution).
Character subst_costable(const Character& chi);

// Exact evaluation via the square-root substitution (doubled exponents applied
// directly to u, y).  Throws std::out_of_range for a framing slot missing from
// the point.
Rat eval(const Character& chi, const EvalPoint& p);

// Single monomial evaluated at the point (doubled exponents on u, y), i.e. the
// value of m^(1/2).
Rat eval_sqrt(const Monomial& m, const EvalPoint& p);

// ---------------------------------------------------------------------------
// Seeded small-rational draws shared by the point constructors.

class RatDraw {
 public:
  explicit RatDraw(std::uint64_t seed) : rng_(seed) {}

  // Nonzero rational, |num|,|den| <= 64, |value| != 1, absolute value distinct
  // from everything drawn so far through this object.
  Rat next();

 private:
  std::mt19937_64 rng_;
  std::vector<Rat> used_abs_;
};

}  // namespace origami
