#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace intspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
  return Rational(BigInt(num), BigInt(den));
}

// Always "num/den", also for integers ("2/1").
inline std::string to_fraction_string(const Rational& r)
{
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

// Accepts "a/b", "a" or "-a/b".
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt floor_rational(const Rational& r)
{
  BigInt n = boost::multiprecision::numerator(r);
  BigInt d = boost::multiprecision::denominator(r);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

// Closest rational to x with denominator at most max_den (continued fractions).
Rational rationalize(double x, std::int64_t max_den);

} // namespace intspec
