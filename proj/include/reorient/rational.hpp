#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace reorient {

/// Exact weight / cost type. Optima are never computed in floating point.
using Rational = boost::rational<std::int64_t>;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

}  // namespace reorient
