#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace ehpath {

/// Exact rational number. All threshold decisions (epsilon densities,
/// side targets) go through this type; floating point never decides.
using Rational = boost::rational<std::int64_t>;

/// Smallest integer >= r * n.
std::int64_t ceil_mul(const Rational& r, std::int64_t n);

/// Largest integer <= r * n.
std::int64_t floor_mul(const Rational& r, std::int64_t n);

/// Smallest integer >= r.
std::int64_t ceil(const Rational& r);

/// Largest integer <= r.
std::int64_t floor(const Rational& r);

/// Formats as "num/den" (always with a denominator, "1/1" for one).
std::string to_string(const Rational& r);

/// Parses "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace ehpath
