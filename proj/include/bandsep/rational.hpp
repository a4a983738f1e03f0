#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace bandsep {

/// Exact rational used for every threshold the definitions compare exactly
/// (balance alpha, expansion epsilon, tree labels).
using Rational = boost::rational<std::int64_t>;

/// Smallest integer >= r.
std::int64_t ceil(const Rational& r);

/// Largest integer <= r.
std::int64_t floor(const Rational& r);

double to_double(const Rational& r);

/// Parses "p/q" or "p". Throws PreconditionError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

}  // namespace bandsep
