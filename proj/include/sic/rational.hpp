#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace sic {

/// Exact fraction; always kept in canonical form (reduced, positive denominator).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Least integer not smaller than q.
Integer ceil(const Rational& q);
/// Greatest integer not larger than q.
Integer floor(const Rational& q);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
/// Accepts "p", "-p", "p/q" and finite decimals such as "0.25".
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

}  // namespace sic
