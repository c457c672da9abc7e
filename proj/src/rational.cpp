#include "intspec/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace intspec {

Rational parse_rational(const std::string& text)
{
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational: '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad rational: '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad rational: '" + text + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Rational rationalize(double x, std::int64_t max_den)
{
  if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite input");
  // Convergents h/k of the continued fraction of x.
  BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  Rational best(0);
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(r);
    const BigInt ai(static_cast<long long>(a));
    BigInt h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    best = Rational(h1, k1);
    const double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
    if (std::abs(to_double(best) - x) < 1e-15 * std::max(1.0, std::abs(x))) break;
  }
  return best;
}

} // namespace intspec
