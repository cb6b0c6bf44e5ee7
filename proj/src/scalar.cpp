#include "spinforge/scalar.hpp"

#include <charconv>
#include <cstdlib>
#include <numbers>

namespace spinforge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// GMP reads a leading 0 as an octal prefix.
boost::multiprecision::mpz_int decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return boost::multiprecision::mpz_int{std::string(digits.empty() ? "0" : digits)};
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(double d) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, res.ptr);
}

std::string to_string(long long v) { return std::to_string(v); }

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  if (s.empty()) throw ParseError("empty scalar literal");
  bool negative = false;
  std::string_view body = s;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational literal '" + std::string(s) + "'");
    }
    auto n = decimal_integer(num);
    auto d = decimal_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    value = Rational(n, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto ip = body.substr(0, dot);
    auto fp = body.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
        (ip.empty() && fp.empty())) {
      throw ParseError("malformed decimal literal '" + std::string(s) + "'");
    }
    std::string digits = std::string(ip) + std::string(fp);
    auto n = decimal_integer(digits);
    boost::multiprecision::mpz_int d = boost::multiprecision::pow(
        boost::multiprecision::mpz_int(10), static_cast<unsigned>(fp.size()));
    value = Rational(n, d);
  } else {
    if (!all_digits(body)) throw ParseError("malformed integer literal '" + std::string(s) + "'");
    value = Rational(decimal_integer(body));
  }
  return negative ? Rational(-value) : value;
}

double parse_double(std::string_view text) {
  auto s = trim(text);
  if (s.empty()) throw ParseError("empty scalar literal");
  if (s.find('/') != std::string_view::npos) return to_double(parse_rational(s));
  std::string owned(s);
  char* end = nullptr;
  double v = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size() || !std::isfinite(v)) {
    throw ParseError("malformed floating literal '" + owned + "'");
  }
  return v;
}

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Rational random_rational(Rng& rng, int range) {
  auto num = uniform_int(rng, -range, range);
  auto den = uniform_int(rng, 1, range);
  return Rational(num, den);
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double normal_deviate(Rng& rng) {
  double u1 = uniform_unit(rng);
  while (u1 <= 0.0) u1 = uniform_unit(rng);
  double u2 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace spinforge
