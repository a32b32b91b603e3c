#include "evtp/core/scalar.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace evtp {

namespace {

mpz_class pow10(unsigned long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
  return p;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_token(std::string_view text) {
  throw std::invalid_argument("not a number: '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) bad_token(text);
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }

  std::string digits;
  auto dot = s.find('.');
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) bad_token(text);
  if (!int_part.empty() && !all_digits(int_part)) bad_token(text);
  if (!frac_part.empty() && !all_digits(frac_part)) bad_token(text);
  digits.append(int_part);
  digits.append(frac_part);
  exponent -= static_cast<long>(frac_part.size());

  mpz_class mantissa(digits, 10);
  Rational value;
  if (exponent >= 0) {
    value = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
  } else {
    value = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) bad_token(text);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) bad_token(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational value(mpz_class(std::string(num), 10), d);
    value.canonicalize();
    return negative ? Rational(-value) : value;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& value) {
  // A reduced fraction terminates in base 10 iff its denominator is 2^a 5^b.
  mpz_class den = value.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return value.get_str();

  const unsigned long places = std::max(twos, fives);
  if (places == 0) return value.get_num().get_str();

  mpz_class scaled = abs(value.get_num()) * pow10(places) / value.get_den();
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (sgn(value) < 0 ? "-" : "") + digits;
}

}  // namespace evtp
