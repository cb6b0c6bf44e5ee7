#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace spinforge {

/// Exact rational scalar. Expression templates are disabled so `auto` is safe.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Rng = std::mt19937_64;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
inline constexpr bool is_exact_v = !std::is_floating_point_v<T>;

/// Scalars accepted by the algebra templates: Rational, double and the
/// integer types used for basis tables.
template <class T>
concept Scalar = requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  T(0);
  T(1);
};

std::string to_string(const Rational& r);
std::string to_string(double d);
std::string to_string(long long v);

/// Parses "3", "-1/2" or a finite decimal such as "0.25" exactly.
Rational parse_rational(std::string_view text);
double parse_double(std::string_view text);

template <class T>
T parse_scalar(std::string_view text) {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(parse_double(text));
  } else {
    return T(parse_rational(text));
  }
}

/// Splits a comma-separated list and parses every field.
template <class T>
std::vector<T> parse_list(std::string_view text) {
  std::vector<T> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto field = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                     : comma - start);
    out.push_back(parse_scalar<T>(field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class Range>
std::string join_scalars(const Range& values) {
  std::string s;
  bool first = true;
  for (const auto& v : values) {
    if (!first) s += ',';
    s += to_string(v);
    first = false;
  }
  return s;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double d) { return d; }

template <class T>
T abs_value(const T& v) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::abs(v);
  } else {
    return v < T(0) ? T(-v) : v;
  }
}

/// Small-height random rational: numerator in [-range, range], denominator in [1, range].
Rational random_rational(Rng& rng, int range = 9);

/// Seeded uniform integer in [lo, hi] that does not depend on the
/// implementation-defined std::uniform_int_distribution.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Uniform double in [0, 1) built from the top 53 bits of the engine.
double uniform_unit(Rng& rng);

/// Standard normal deviate via Box-Muller.
double normal_deviate(Rng& rng);

}  // namespace spinforge
