#pragma once

#include <gmpxx.h>

#include <string>

namespace difinv {

/// Arbitrary-precision rational; always kept canonical by gmpxx.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p" or "p/q".
std::string to_string(const Rational& q);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

Rational pow(const Rational& base, long exponent);

}  // namespace difinv
