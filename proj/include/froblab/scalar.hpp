#pragma once

#include <gmpxx.h>

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace froblab {

/// Exact rational scalar used by the default matrix backend.
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

namespace detail {

/// Exact value of a decimal literal such as "-1.25" or "3e-2".
inline Rational parse_decimal(std::string const& s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    char const c = s[i];
    if (c >= '0' && c <= '9') {
      digits += c;
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ParseError("malformed decimal literal '" + s + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::string const tail = s.substr(i + 1);
    long e = 0;
    auto const* begin = tail.data() + (!tail.empty() && tail[0] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(begin, tail.data() + tail.size(), e);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || tail.empty())
      throw ParseError("malformed decimal literal '" + s + "'");
    exponent += e;
    i = s.size();
  }
  if (i != s.size()) throw ParseError("malformed decimal literal '" + s + "'");
  mpz_class num(digits, 10);
  mpz_class scale = 1;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational q = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace detail

/// Parses "p", "-p", "p/q" and exact decimals ("0.25", "1e-3"). Rejects zero
/// denominators and trailing junk.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto const first = s.find_first_not_of(" \t");
  auto const last = s.find_last_not_of(" \t");
  if (first == std::string::npos) {
    throw ParseError("empty rational literal");
  }
  s = s.substr(first, last - first + 1);
  if (s.find_first_of(".eE") != std::string::npos && s.find('/') == std::string::npos)
    return detail::parse_decimal(s);
  auto const slash = s.find('/');
  if (slash != std::string::npos) {
    auto const den = s.substr(slash + 1);
    if (den.empty() || den.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("malformed rational literal '" + s + "'");
    }
    if (den.find_first_not_of('0') == std::string::npos) {
      throw ParseError("zero denominator in '" + s + "'");
    }
  }
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw ParseError("malformed rational literal '" + s + "'");
  }
  q.canonicalize();
  return q;
}

inline std::string to_string(Rational const& q) { return q.get_str(); }

/// Arithmetic hooks the generic matrix code needs from a scalar type.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr char const* name = "rational";

  static Rational from_rational(Rational const& q) { return q; }
  static bool is_zero(Rational const& x, double = 0.0) { return sgn(x) == 0; }
  static bool near(Rational const& a, Rational const& b, double) { return a == b; }
  static double magnitude(Rational const& x) { return std::fabs(x.get_d()); }

  static void add_product(Rational& acc, Rational const& a, Rational const& b) {
    thread_local Rational tmp;
    mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
  }

  static std::string format(Rational const& x) { return x.get_str(); }
  static Rational parse(std::string_view text) { return parse_rational(text); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr char const* name = "float64";

  static double from_rational(Rational const& q) { return q.get_d(); }
  static bool is_zero(double x, double tolerance = 0.0) {
    return std::fabs(x) <= tolerance;
  }
  static bool near(double a, double b, double tolerance) {
    double const scale = 1.0 + std::fmax(std::fabs(a), std::fabs(b));
    return std::fabs(a - b) <= tolerance * scale;
  }
  static double magnitude(double x) { return std::fabs(x); }
  static void add_product(double& acc, double a, double b) { acc += a * b; }

  static std::string format(double x) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    (void)ec;
    return std::string(buf, end);
  }
  static double parse(std::string_view text) {
    if (text.find('/') != std::string_view::npos) {
      return parse_rational(text).get_d();
    }
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError("malformed float literal '" + std::string(text) + "'");
    }
    return x;
  }
};

template <class S>
concept Scalar = requires { scalar_traits<S>::exact; };

}  // namespace froblab
