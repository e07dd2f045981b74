// SPDX-License-Identifier: Apache-2.0
#include "lfrac/scalar.hpp"

#include <cctype>

namespace lfrac {

OverflowError::OverflowError(const std::string& what, long index_)
    : std::runtime_error(what + " (index " + std::to_string(index_) + ")"), index(index_) {}

ParseError::ParseError(const std::string& what, std::string field_)
    : std::runtime_error("field '" + field_ + "': " + what), field(std::move(field_)) {}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view field) {
  std::string_view digits = s;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw ParseError("expected an integer, got '" + std::string(s) + "'", std::string(field));
  }
  mpz_class z(std::string(digits), 10);
  return negative ? mpz_class(-z) : z;
}

mpz_class pow10(unsigned long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
  return p;
}

Rational parse_decimal(std::string_view text, std::string_view field) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  size_t epos = s.find_first_of("eE");
  long exponent = 0;
  if (epos != std::string_view::npos) {
    mpz_class e = parse_integer(s.substr(epos + 1), field);
    if (!e.fits_slong_p()) throw ParseError("exponent out of range", std::string(field));
    exponent = e.get_si();
    s = s.substr(0, epos);
  }
  size_t dot = s.find('.');
  std::string digits;
  long frac_digits = 0;
  if (dot == std::string_view::npos) {
    digits = std::string(s);
  } else {
    digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    frac_digits = static_cast<long>(s.size() - dot - 1);
  }
  if (!all_digits(digits)) {
    throw ParseError("malformed number '" + std::string(text) + "'", std::string(field));
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  long scale = exponent - frac_digits;
  Rational q;
  if (scale >= 0) {
    q = Rational(mantissa * pow10(static_cast<unsigned long>(scale)));
  } else {
    q = Rational(mantissa, pow10(static_cast<unsigned long>(-scale)));
  }
  q.canonicalize();
  return q;
}

}  // namespace

Rational parse_rational(std::string_view text, std::string_view field) {
  if (text.empty()) throw ParseError("empty value", std::string(field));
  size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), field);
    mpz_class den = parse_integer(text.substr(slash + 1), field);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", std::string(field));
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (text.find('.') != std::string_view::npos ||
      text.find('e') != std::string_view::npos ||
      text.find('E') != std::string_view::npos) {
    return parse_decimal(text, field);
  }
  Rational q(parse_integer(text, field));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

void check_finite(std::span<const double> values, const char* what) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw OverflowError(std::string(what) + ": non-finite value", static_cast<long>(i));
    }
  }
}

}  // namespace lfrac
