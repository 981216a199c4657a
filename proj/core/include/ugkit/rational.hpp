#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ugkit {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p". Throws ugkit::Error on bad syntax or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q", with q > 0 and the fraction in lowest terms.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Largest integer <= q. Throws if it does not fit in 64 bits.
std::int64_t floor_int(const Rational& q);

/// 2^-k as an exact rational.
Rational dyadic(unsigned k);

}  // namespace ugkit
