#include "intspec/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace intspec {

struct CycloContext {
  std::uint32_t n = 1, phi = 1;
  // red[e] = zeta^e in the power basis, 0 <= e < n.
  std::vector<std::vector<std::int64_t>> red;
};

std::uint32_t euler_phi(std::uint32_t n)
{
  std::uint32_t r = n;
  for (std::uint32_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

std::vector<std::int64_t> cyclo_poly(std::uint32_t n, std::map<std::uint32_t, std::vector<std::int64_t>>& memo)
{
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto den = cyclo_poly(d, memo); // monic
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dd; --i) {
      const std::int64_t f = num[i];
      const std::size_t shift = i - dd;
      quot[shift] = f;
      for (std::size_t t = 0; t <= dd; ++t) num[shift + t] -= f * den[t];
      if (i == dd) break;
    }
    num = std::move(quot);
  }
  memo.emplace(n, num);
  return num;
}

} // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n)
{
  if (n == 0) throw std::invalid_argument("conductor must be positive");
  std::map<std::uint32_t, std::vector<std::int64_t>> memo;
  return cyclo_poly(n, memo);
}

namespace {

std::shared_ptr<const CycloContext> context(std::uint32_t n)
{
  static std::mutex m;
  static std::map<std::uint32_t, std::shared_ptr<const CycloContext>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n == 0 || n > 20000) throw std::invalid_argument("cyclotomic conductor out of range");
  auto ctx = std::make_shared<CycloContext>();
  ctx->n = n;
  const auto Phi = cyclotomic_polynomial(n);
  ctx->phi = static_cast<std::uint32_t>(Phi.size() - 1);
  const std::uint32_t phi = ctx->phi;
  ctx->red.assign(n, std::vector<std::int64_t>(phi, 0));
  std::vector<std::int64_t> cur(phi, 0);
  cur[0] = 1;
  for (std::uint32_t e = 0; e < n; ++e) {
    ctx->red[e] = cur;
    // multiply by x and reduce with the monic Phi
    const std::int64_t top = cur[phi - 1];
    for (std::uint32_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top)
      for (std::uint32_t i = 0; i < phi; ++i) cur[i] -= top * Phi[i];
  }
  cache.emplace(n, ctx);
  return ctx;
}

std::uint32_t mod_exp(std::int64_t e, std::uint32_t n)
{
  const std::int64_t r = e % static_cast<std::int64_t>(n);
  return static_cast<std::uint32_t>(r < 0 ? r + n : r);
}

} // namespace

Cyclotomic Cyclotomic::zero(std::uint32_t n)
{
  Cyclotomic z;
  z.ctx_ = context(n);
  z.c_.assign(z.ctx_->phi, Rational(0));
  return z;
}

Cyclotomic Cyclotomic::from_rational(std::uint32_t n, const Rational& r)
{
  Cyclotomic z = zero(n);
  z.c_[0] = r;
  return z;
}

Cyclotomic Cyclotomic::root(std::uint32_t n, std::int64_t e)
{
  Cyclotomic z = zero(n);
  const auto& v = z.ctx_->red[mod_exp(e, n)];
  for (std::uint32_t i = 0; i < z.ctx_->phi; ++i)
    if (v[i]) z.c_[i] = Rational(v[i]);
  return z;
}

std::uint32_t Cyclotomic::conductor() const { return ctx_ ? ctx_->n : 0; }

void Cyclotomic::same_field(const Cyclotomic& o) const
{
  if (!ctx_ || !o.ctx_) throw std::logic_error("uninitialized cyclotomic value");
  if (ctx_->n != o.ctx_->n) throw std::invalid_argument("cyclotomic values from different fields");
}

bool Cyclotomic::is_zero() const
{
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const
{
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::to_rational() const
{
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

std::complex<double> Cyclotomic::to_complex() const
{
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const double a = 2 * std::numbers::pi * double(i) / double(ctx_->n);
    s += to_double(c_[i]) * std::complex<double>(std::cos(a), std::sin(a));
  }
  return s;
}

Cyclotomic Cyclotomic::conj() const
{
  Cyclotomic z = zero(ctx_->n);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& v = ctx_->red[mod_exp(-static_cast<std::int64_t>(i), ctx_->n)];
    for (std::uint32_t t = 0; t < ctx_->phi; ++t)
      if (v[t]) z.c_[t] += c_[i] * v[t];
  }
  return z;
}

std::string Cyclotomic::to_string() const
{
  if (is_rational()) {
    const Rational r = to_rational();
    return denominator(r) == 1 ? numerator(r).str() : to_fraction_string(r);
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational a = c_[i];
    if (!first) out << (a < 0 ? " - " : " + ");
    else if (a < 0) out << "-";
    if (a < 0) a = -a;
    first = false;
    const std::string mag = denominator(a) == 1 ? numerator(a).str() : to_fraction_string(a);
    if (i == 0) out << mag;
    else {
      if (a != 1) out << mag << "*";
      out << "z" << ctx_->n << "^" << i;
    }
  }
  return out.str();
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
  same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (o.c_[i] != 0) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o)
{
  same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (o.c_[i] != 0) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o)
{
  same_field(o);
  const std::uint32_t n = ctx_->n, phi = ctx_->phi;
  std::vector<Rational> acc(phi, Rational(0));
  for (std::uint32_t i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (std::uint32_t j = 0; j < phi; ++j) {
      if (o.c_[j] == 0) continue;
      const Rational f = c_[i] * o.c_[j];
      const auto& v = ctx_->red[(i + j) % n];
      for (std::uint32_t t = 0; t < phi; ++t)
        if (v[t]) acc[t] += f * v[t];
    }
  }
  c_ = std::move(acc);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r)
{
  for (auto& x : c_)
    if (x != 0) x *= r;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const
{
  Cyclotomic z = *this;
  for (auto& x : z.c_) x = -x;
  return z;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
  a.same_field(b);
  return a.c_ == b.c_;
}

Cyclotomic cyclic_character(std::uint32_t n, std::int64_t i, std::int64_t j, std::uint32_t N)
{
  if (n == 0 || N % n) throw std::invalid_argument("cyclic character order must divide the conductor");
  const std::int64_t e = static_cast<std::int64_t>(((i % n) * (j % n)) % static_cast<std::int64_t>(n));
  return Cyclotomic::root(N, e * static_cast<std::int64_t>(N / n));
}

} // namespace intspec
