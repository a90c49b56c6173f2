#include "colorgame/rational.hpp"

#include "colorgame/errors.hpp"

#include <cctype>

namespace colorgame {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return Integer(digits);
}

}  // namespace

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.front() == '-' || den.front() == '+') {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  }
  Integer q = parse_integer(den);
  if (q == 0) {
    throw ValidationError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num), q);
}

Integer numerator_of(const Rational& r) { return numerator(r); }
Integer denominator_of(const Rational& r) { return denominator(r); }

Rational floor_of(const Rational& r) {
  Integer q = numerator(r) / denominator(r);  // truncates toward zero
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) q -= 1;
  return Rational(q);
}

Rational ceil_div(const Rational& r) { return -floor_of(-r); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace colorgame
