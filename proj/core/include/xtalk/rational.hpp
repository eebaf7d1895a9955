#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace xtalk {

// All node voltages are exact fractions of the supply, so threshold
// comparisons never hit floating-point ties. Numerators and denominators
// stay tiny (capacitances are small integers in deci-units).
using Rat = boost::rational<std::int64_t>;

// Accepts "p/q" or a decimal with at most six fractional digits.
Rat parse_rational(const std::string& text);

// Canonical "p/q" form; integers print without the "/1".
std::string format_rational(const Rat& r);

// Fixed six decimal places, ties rounded half to even. Used for waveform
// and trace exports, which must be byte-stable.
std::string format_decimal6(const Rat& r);

}  // namespace xtalk
