#ifndef GFW_RATIONAL_HPP
#define GFW_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gfw {

// Exact arithmetic only. cpp_rational keeps values in lowest terms with a
// positive denominator, so equality is plain value equality.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

/// "num" if integral, otherwise "num/den".
std::string rat_string(const Rat& r);

/// Parses "num" or "num/den" with optional leading sign. Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

}  // namespace gfw

#endif
