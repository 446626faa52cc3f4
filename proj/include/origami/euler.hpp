#pragma once

// Factored multiplicative classes attached to a character: the symmetrized
// K-theoretic class [chi] = prod_m (m^(1/2) - m^(-1/2))^c_m and the
// cohomological class e(chi) = prod_m (linear form of m)^c_m.  Both are kept
// factored; identity testing happens by exact evaluation at random points.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "origami/kchar.hpp"

namespace origami {

// Thrown when a factor of a class under evaluation vanishes at the chosen
// point; callers redraw the point.
struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// K-theoretic side

struct FactoredK {
  std::map<Monomial, long long> factors;  // monomial -> multiplicity (nonzero)
  int sign = 1;
};

// [chi]; throws std::domain_error if chi has a term fixed by the full torus.
FactoredK bracket(const Character& chi);

// Exact value at an evaluation point.  Every monomial must have even doubled
// exponents (genuine integral powers).  Throws PoleError when any factor
// vanishes, regardless of the sign of its multiplicity.
Rat eval_k(const FactoredK& f, const EvalPoint& p);

// ---------------------------------------------------------------------------
// Cohomological side

// Integer linear form  sum_i a_i s_i + sum f_(A,alpha) v_(A,alpha)
// (s4 = -s1-s2-s3 already folded away with t4).
struct LinearForm {
  std::array<long, 3> s{0, 0, 0};
  std::vector<std::pair<SlotKey, long>> v;  // sorted, no zeros

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
};

std::string form_str(const LinearForm& f);

// Linear form of a monomial (true exponents; throws std::domain_error on odd
// doubled exponents).
LinearForm form_of(const Monomial& m);

struct FactoredCoh {
  std::map<LinearForm, long long> factors;
  int sign = 1;
};

// e(chi); same precondition as bracket.
FactoredCoh euler_coh(const Character& chi);

// ---------------------------------------------------------------------------
// Cohomological evaluation points

struct CohPoint {
  // Value of a framing parameter: c + xc * x, where x is the designated
  // symbolic variable (xc is 0 or 1).
  struct VVal {
    Rat c{0};
    int xc = 0;
  };

  std::array<Rat, 3> s{Rat(0), Rat(0), Rat(0)};
  std::map<SlotKey, VVal> v;
  std::uint64_t seed = 0;

  bool has_symbolic() const;
  const VVal& v_at(SlotKey k) const;

  // Generic draw: s1,s2,s3 and every v nonzero, pairwise-distinct small
  // rationals.
  static CohPoint draw(std::uint64_t seed, const std::vector<SlotKey>& slots);
  // Draw constrained to s1 + s2 + s3 = 0 (axis-4 weight zero).
  static CohPoint draw_cy3(std::uint64_t seed, const std::vector<SlotKey>& slots);
  // Draw with s1 = s2 = s3 and all framing values equal.
  static CohPoint draw_diagonal(std::uint64_t seed, const std::vector<SlotKey>& slots);
};

// Exact value at a point with no symbolic variable in any factor's support;
// throws PoleError on a vanishing factor and std::domain_error if a factor
// actually involves x.
Rat eval_coh(const FactoredCoh& f, const CohPoint& p);

// Mixed evaluation: factors become linear polynomials a x + b; the result is
// a reduced univariate rational function in x (declared in ratfun.hpp).
class RationalFunction1V;
RationalFunction1V eval_coh_in_x(const FactoredCoh& f, const CohPoint& p);

}  // namespace origami
