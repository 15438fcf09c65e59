// Exact rational scalars and vectors. All geometry in this project runs on
// exact arithmetic; nothing here ever rounds.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace tropgenus {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical "p/q" form: gcd(p,q) = 1, q > 0, denominator always written.
std::string to_fraction(const Rational& value);

// Accepts "p" or "p/q"; normalises sign and gcd. Throws InvalidInput on
// malformed text or zero denominator.
Rational parse_fraction(const std::string& text);

BigInt floor_of(const Rational& value);
BigInt ceil_of(const Rational& value);
bool is_integer(const Rational& value);

// Fixed-length vector of rationals; length is the ambient dimension
// n = |E|-1 wherever tropical coordinates are involved.
using QVector = std::vector<Rational>;

std::string to_fraction_list(const QVector& values);

}  // namespace tropgenus
