#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace motionfact {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Backed by boost::multiprecision::cpp_rational,
/// which keeps values in lowest terms with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;

/// Parses "p/q" (q omitted when 1). The denominator must be positive.
Rat rat_from_string(std::string_view text);

/// Renders "p/q", omitting "/1".
std::string rat_to_string(const Rat& value);

/// Renders a decimal expansion with the given number of fractional digits.
std::string rat_to_decimal(const Rat& value, int digits);

int sign(const Rat& value);
Rat abs(const Rat& value);

/// True iff value is the square of a rational; the root (>= 0) is stored
/// through `root` when given.
bool rat_is_square(const Rat& value, Rat* root = nullptr);

double rat_to_double(const Rat& value);

/// Exact binary expansion of a finite double.
Rat rat_from_double(double value);

/// Best rational approximation of `x` with denominator <= max_den, found by
/// walking the continued fraction convergents of x.
Rat reconstruct_rational(const Rat& x, const Int& max_den);

} // namespace motionfact
