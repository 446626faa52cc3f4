#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace origami {

// Exact rational scalar used throughout the engine.
using Rat = mpq_class;

// Canonicalized rational from a num/den pair (mpq_class does not reduce on
// construction by itself).
Rat make_rat(long num, long den = 1);

// base^exp for any integer exp; throws std::domain_error on 0^negative.
Rat rat_pow(const Rat& base, long exp);

// Canonical "p/q" (or "p" when q == 1) form.
std::string rat_str(const Rat& r);

}  // namespace origami
