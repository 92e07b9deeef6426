#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qtwist {

// Exact scalars. IntZ is an arbitrary-precision integer, Rat an
// arbitrary-precision rational kept in lowest terms with positive
// denominator. Both are immutable values for our purposes and safe to
// move between threads.
using IntZ = mpz_class;
using Rat = mpq_class;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// num/den in canonical form (gcd 1, den >= 1). Throws on den == 0.
Rat make_rat(const IntZ& num, const IntZ& den);

Rat rat_from_long(long num, long den = 1);

// "p" or "p/q", canonical form. This is the wire format for every exact
// value the tool emits.
std::string rat_str(const Rat& r);
std::string int_str(const IntZ& n);

// Accepts "p" and "p/q" with an optional leading '-'. Rejects anything else.
std::optional<Rat> rat_parse(std::string_view s);
std::optional<IntZ> int_parse(std::string_view s);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

bool rat_is_square(const Rat& r);
// Exact square root if r is the square of a rational (nonnegative root).
std::optional<Rat> rat_sqrt(const Rat& r);

// gcd(numerators)/lcm(denominators) > 0; gcd(0,0) is 0.
Rat rat_content_pair(const Rat& a, const Rat& b);

// Fits-in-long helpers for exponent/CLI plumbing.
std::optional<long> to_long(const IntZ& n);

}  // namespace qtwist
