#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blvoa {

/// Exact rational backed by GMP. Always kept canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown when an expression grows past the configured term budget.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when two independent computations disagree where they must not.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "num/den" with den > 0, always including the denominator.
std::string to_fraction_string(const Rational& q);

/// Human-oriented form: "3", "-1/2".
std::string to_display_string(const Rational& q);

/// Accepts "p", "p/q", "-p/q" (whitespace not allowed). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "1,-1/2,0".
std::vector<Rational> parse_rational_list(std::string_view text);

bool is_integer(const Rational& q);

/// True when q is an integer <= 0.
bool is_nonpositive_integer(const Rational& q);

Integer factorial(unsigned n);

/// n (n-1) ... (n-k+1); equals zero when 0 <= n < k.
Integer falling_factorial(long n, unsigned k);

/// n! / (k_1! ... k_m!) for k_1 + ... + k_m = n.
Integer multinomial(const std::vector<unsigned>& parts);

}  // namespace blvoa
