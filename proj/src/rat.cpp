#include "origami/rat.hpp"

#include <stdexcept>

namespace origami {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (base == 0 && exp < 0) throw std::domain_error("rat_pow: 0 to a negative power");
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  if (exp < 0) {
    mpq_inv(out.get_mpq_t(), out.get_mpq_t());
  }
  out.canonicalize();
  return out;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace origami
