#include "z2c/rational.hpp"

#include <cctype>

#include "z2c/error.hpp"

namespace z2c {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  if (slash != std::string_view::npos) {
    if (!all_digits(den)) throw ParseError("malformed rational '" + std::string(text) + "'", slash + 1);
    if (den.find_first_not_of('0') == std::string_view::npos)
      throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  }
  Rational r;
  r.get_num() = mpz_class(std::string(num));
  r.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den));
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace z2c
