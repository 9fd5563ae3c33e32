#ifndef AWAREKIT_RATIONAL_HPP
#define AWAREKIT_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace awarekit {

using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", "-p/q" or a plain integer. Throws Error("BadRational").
Rational parse_rational(std::string_view text);

// Canonical text: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace awarekit

#endif  // AWAREKIT_RATIONAL_HPP
