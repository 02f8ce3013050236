#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "kato/error.hpp"

namespace kato {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p", "p/q" with arbitrary-precision integers. Rejects q == 0.
Rational parse_rational(const std::string& s);

// Lowest-terms string, "/1" omitted.
std::string rational_to_string(const Rational& r);

// Exact square root when r is a square of a rational, std::nullopt otherwise.
// The nonnegative root is returned.
std::optional<Rational> rational_sqrt(const Rational& r);

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace kato
