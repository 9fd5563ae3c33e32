#include "awarekit/rational.hpp"

#include <cctype>

#include "awarekit/error.hpp"

namespace awarekit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error("BadRational", "'" + std::string(text) + "' is not p/q or an integer");
  }
  boost::multiprecision::cpp_int n{std::string(num)};
  boost::multiprecision::cpp_int d{std::string(den)};
  if (d == 0) throw Error("BadRational", "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  auto n = boost::multiprecision::numerator(r);
  auto d = boost::multiprecision::denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

}  // namespace awarekit
