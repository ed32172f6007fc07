#ifndef CUTLIFT_RATIONAL_HPP
#define CUTLIFT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace cutlift {

// Exact arithmetic everywhere; no floating point in this library.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Parses "p/q" or a bare integer "p". Throws ParseError-compatible
// std::runtime_error on malformed input; callers in io.cpp wrap it with
// line context.
Rational parse_rational(const std::string& token);

// Always emits "p/q" with q >= 1 and the fraction in lowest terms.
std::string format_rational(const Rational& r);

}  // namespace cutlift

#endif
