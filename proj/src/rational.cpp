#include "ehpath/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace ehpath {

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  // den > 0 (boost::rational keeps the sign in the numerator)
  std::int64_t q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && (num > 0)) ++q;
  return q;
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  return value;
}

}  // namespace

std::int64_t ceil_mul(const Rational& r, std::int64_t n) {
  return ceil_div(r.numerator() * n, r.denominator());
}

std::int64_t floor_mul(const Rational& r, std::int64_t n) {
  return floor_div(r.numerator() * n, r.denominator());
}

std::int64_t ceil(const Rational& r) { return ceil_div(r.numerator(), r.denominator()); }

std::int64_t floor(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  auto num = parse_int(text.substr(0, slash), text);
  auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace ehpath
