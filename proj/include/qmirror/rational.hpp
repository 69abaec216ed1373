#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qmirror {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "7", "-3/4" style; denominator omitted when 1.
std::string to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace qmirror
