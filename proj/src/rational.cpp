#include "pqk/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "pqk/error.hpp"

namespace pqk {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::size_t scan_digits(std::string_view s, std::size_t pos) {
  while (pos < s.size() && is_digit(s[pos])) ++pos;
  return pos;
}

constexpr long kMaxDecimalExponent = 4096;

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t int_begin = pos;
  pos = scan_digits(text, pos);
  std::string digits(text.substr(int_begin, pos - int_begin));

  Rational result;
  if (pos < text.size() && text[pos] == '/') {
    if (digits.empty()) throw ParseError("expected numerator digits", int_begin);
    const std::size_t den_begin = ++pos;
    pos = scan_digits(text, pos);
    if (pos == den_begin) throw ParseError("expected denominator digits", den_begin);
    if (pos != text.size()) throw ParseError("unexpected character in rational", pos);
    mpz_class den(std::string(text.substr(den_begin, pos - den_begin)), 10);
    if (den == 0) throw ParseError("zero denominator", den_begin);
    result = Rational(mpz_class(digits, 10), den);
    result.canonicalize();
  } else {
    std::size_t frac_digits = 0;
    if (pos < text.size() && text[pos] == '.') {
      const std::size_t frac_begin = ++pos;
      pos = scan_digits(text, pos);
      frac_digits = pos - frac_begin;
      digits.append(text.substr(frac_begin, frac_digits));
    }
    if (digits.empty()) throw ParseError("expected digits", int_begin);
    long exponent = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
      const std::size_t exp_begin = ++pos;
      bool exp_negative = false;
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        exp_negative = text[pos] == '-';
        ++pos;
      }
      const std::size_t exp_digits = pos;
      pos = scan_digits(text, pos);
      if (pos == exp_digits) throw ParseError("expected exponent digits", exp_begin);
      if (pos - exp_digits > 6) throw ParseError("exponent out of range", exp_digits);
      exponent = std::strtol(std::string(text.substr(exp_digits, pos - exp_digits)).c_str(), nullptr, 10);
      if (exponent > kMaxDecimalExponent) throw ParseError("exponent out of range", exp_digits);
      if (exp_negative) exponent = -exponent;
    }
    if (pos != text.size()) throw ParseError("unexpected character in number", pos);
    exponent -= static_cast<long>(frac_digits);
    mpz_class num(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent >= 0) {
      result = Rational(num * scale);
    } else {
      result = Rational(num, scale);
      result.canonicalize();
    }
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace pqk
