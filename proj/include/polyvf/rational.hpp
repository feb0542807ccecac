#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace polyvf {

/// Exact rationals. GMP keeps every result in lowest terms with a positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p", "-p" or "p/q" (no whitespace, no floats). Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

/// Parses a comma separated list of rationals, e.g. "0,1/2,-3".
std::vector<Rat> parse_rat_list(std::string_view text);

std::string to_string(const Rat& q);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Least common multiple of the denominators of a range of rationals.
template <class Range>
Int common_denominator(const Range& values) {
  Int l = 1;
  for (const Rat& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

Int binomial(long n, long k);
Int factorial(long n);

}  // namespace polyvf
