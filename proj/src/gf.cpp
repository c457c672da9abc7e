#include "intspec/gf.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace intspec {

namespace {

constexpr std::uint32_t kTableLimit = 1024;

// p, k, then the k + 1 coefficients of the monic modulus.
const std::vector<std::vector<std::uint32_t>> kModuli = {
    {2, 2, 1, 1, 1},       {2, 3, 1, 1, 0, 1},    {2, 4, 1, 1, 0, 0, 1},
    {3, 2, 1, 0, 1},       {3, 3, 1, 2, 0, 1},    {3, 4, 2, 1, 0, 0, 1},
    {5, 2, 2, 0, 1},       {5, 3, 1, 1, 0, 1},    {7, 2, 1, 0, 1},
    {7, 3, 2, 0, 0, 1},    {11, 2, 1, 0, 1},      {13, 2, 2, 0, 1},
    {17, 2, 3, 0, 1},      {19, 2, 1, 0, 1},
};

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t qq = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - qq * nt);
    std::tie(r, nr) = std::make_pair(nr, r - qq * nr);
  }
  return static_cast<std::uint32_t>((t % p + p) % p);
}

// Remainder of a modulo monic-or-not b over GF(p); both trimmed.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b, std::uint32_t p)
{
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (!a.empty() && a.back() == 0) a.pop_back();
  while (a.size() >= b.size()) {
    const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * b[i] % p) % p);
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

} // namespace

struct Field::Impl {
  std::uint32_t p = 0, k = 0, q = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> pw; // p^i
  std::vector<std::uint16_t> add_table, mul_table;
  std::vector<std::uint32_t> log_table, exp_table; // exp has length q - 1
  std::vector<std::uint32_t> neg_table;
  std::uint32_t primitive = 0;

  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const
  {
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      const std::uint32_t da = a % p, db = b % p;
      a /= p;
      b /= p;
      out += ((da + db) % p) * pw[i];
    }
    return out;
  }

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const
  {
    std::vector<std::uint64_t> prod(2 * k, 0);
    std::vector<std::uint32_t> da(k), db(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      da[i] = a % p;
      a /= p;
      db[i] = b % p;
      b /= p;
    }
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (std::size_t d = 2 * k - 1; d >= k; --d) {
      const std::uint64_t c = prod[d] % p;
      if (c == 0) continue;
      prod[d] = 0;
      for (std::uint32_t i = 0; i < k; ++i)
        prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < k; ++i) out += static_cast<std::uint32_t>(prod[i]) * pw[i];
    return out;
  }
};

bool is_prime(std::uint64_t n)
{
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q)
{
  if (q < 2) throw FieldError("not a prime power: " + std::to_string(q));
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw FieldError("not a prime power: " + std::to_string(q));
  return {static_cast<std::uint32_t>(p), k};
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p)
{
  const std::size_t deg = monic.size() - 1;
  if (deg == 0) return false;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_rem(monic, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> lowest_irreducible(std::uint32_t p, std::uint32_t k)
{
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> f(k + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[k] = 1;
    if (is_irreducible_mod_p(f, p)) return f;
  }
  throw FieldError("no irreducible polynomial found");
}

const std::vector<std::vector<std::uint32_t>>& builtin_moduli() { return kModuli; }

Field Field::make(std::uint32_t p, std::uint32_t k)
{
  if (!is_prime(p)) throw FieldError("characteristic is not prime: " + std::to_string(p));
  if (k < 1 || k > 4) throw FieldError("extension degree must be in [1, 4], got " + std::to_string(k));
  std::uint64_t q64 = 1;
  for (std::uint32_t i = 0; i < k; ++i) q64 *= p;
  if (q64 > (1u << 20)) throw FieldError("field order exceeds 2^20");

  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Impl>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find({p, k}); it != cache.end()) return Field(it->second);

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = static_cast<std::uint32_t>(q64);
  if (k == 1) {
    impl->modulus = {0, 1};
  } else {
    for (const auto& row : kModuli)
      if (row[0] == p && row[1] == k) impl->modulus.assign(row.begin() + 2, row.end());
    if (impl->modulus.empty()) impl->modulus = lowest_irreducible(p, k);
    if (!is_irreducible_mod_p(impl->modulus, p)) throw FieldError("modulus table entry is reducible");
  }
  impl->pw.resize(k);
  impl->pw[0] = 1;
  for (std::uint32_t i = 1; i < k; ++i) impl->pw[i] = impl->pw[i - 1] * p;

  const std::uint32_t q = impl->q;
  impl->neg_table.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint32_t out = 0, x = a;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += ((p - x % p) % p) * impl->pw[i];
      x /= p;
    }
    impl->neg_table[a] = out;
  }
  if (q <= kTableLimit) {
    impl->add_table.resize(std::size_t(q) * q);
    impl->mul_table.resize(std::size_t(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        impl->add_table[std::size_t(a) * q + b] = static_cast<std::uint16_t>(impl->add_slow(a, b));
        impl->mul_table[std::size_t(a) * q + b] = static_cast<std::uint16_t>(impl->mul_slow(a, b));
      }
  }

  // Smallest code of full multiplicative order.
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint32_t x = g, ord = 1;
    while (x != 1) {
      x = impl->mul_slow(x, g);
      ++ord;
    }
    if (ord == q - 1) {
      impl->primitive = g;
      break;
    }
  }
  impl->exp_table.resize(q - 1);
  impl->log_table.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t e = 0; e + 1 < q; ++e) {
    impl->exp_table[e] = x;
    impl->log_table[x] = e;
    x = impl->mul_slow(x, impl->primitive);
  }

  cache.emplace(std::make_pair(p, k), impl);
  return Field(impl);
}

Field Field::make_order(std::uint32_t q)
{
  auto [p, k] = prime_power(q);
  return make(p, k);
}

std::uint32_t Field::p() const { return impl_->p; }
std::uint32_t Field::k() const { return impl_->k; }
std::uint32_t Field::q() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->modulus; }

Field::Code Field::add(Code a, Code b) const
{
  if (!impl_->add_table.empty()) return impl_->add_table[std::size_t(a) * impl_->q + b];
  return impl_->add_slow(a, b);
}

Field::Code Field::neg(Code a) const { return impl_->neg_table[a]; }
Field::Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Field::Code Field::mul(Code a, Code b) const
{
  if (!impl_->mul_table.empty()) return impl_->mul_table[std::size_t(a) * impl_->q + b];
  if (a == 0 || b == 0) return 0;
  return impl_->exp_table[(std::uint64_t(impl_->log_table[a]) + impl_->log_table[b]) % (impl_->q - 1)];
}

Field::Code Field::inv(Code a) const
{
  if (a == 0) throw FieldError("division by zero");
  const std::uint32_t n = impl_->q - 1;
  return impl_->exp_table[(n - impl_->log_table[a]) % n];
}

Field::Code Field::div(Code a, Code b) const { return mul(a, inv(b)); }

Field::Code Field::pow(Code a, std::int64_t e) const
{
  if (a == 0) {
    if (e < 0) throw FieldError("division by zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t n = impl_->q - 1;
  std::int64_t r = (std::int64_t(impl_->log_table[a]) * (e % n)) % n;
  if (r < 0) r += n;
  return impl_->exp_table[static_cast<std::size_t>(r)];
}

Field::Code Field::from_int(std::int64_t n) const
{
  std::int64_t r = n % std::int64_t(impl_->p);
  if (r < 0) r += impl_->p;
  return static_cast<Code>(r);
}

std::uint32_t Field::log(Code a) const
{
  if (a == 0) throw FieldError("log of zero");
  return impl_->log_table[a];
}

Field::Code Field::exp(std::int64_t e) const
{
  const std::int64_t n = impl_->q - 1;
  std::int64_t r = e % n;
  if (r < 0) r += n;
  return impl_->exp_table[static_cast<std::size_t>(r)];
}

std::uint32_t Field::multiplicative_order(Code a) const
{
  if (a == 0) throw FieldError("zero has no multiplicative order");
  const std::uint32_t n = impl_->q - 1;
  const std::uint32_t l = impl_->log_table[a];
  std::uint32_t g = n, x = l;
  while (x != 0) {
    std::uint32_t t = g % x;
    g = x;
    x = t;
  }
  return n / g;
}

bool Field::is_square(Code a) const
{
  if (a == 0 || impl_->p == 2) return true;
  return impl_->log_table[a] % 2 == 0;
}

Field::Code Field::primitive() const { return impl_->primitive; }

Field::Code Field::nonsquare() const
{
  if (impl_->p == 2) throw FieldError("every element is a square in even characteristic");
  if (impl_->q % 4 == 3) return neg(1);
  return impl_->primitive;
}

bool Field::is_positive(Code a) const
{
  if (a == 0) return false;
  return a < neg(a) || impl_->p == 2;
}

std::vector<std::uint32_t> Field::coefficients(Code a) const
{
  std::vector<std::uint32_t> c(impl_->k);
  for (std::uint32_t i = 0; i < impl_->k; ++i) {
    c[i] = a % impl_->p;
    a /= impl_->p;
  }
  return c;
}

Field::Code Field::from_coefficients(const std::vector<std::uint32_t>& c) const
{
  if (c.size() != impl_->k) throw FieldError("coefficient vector has wrong length");
  Code out = 0;
  for (std::uint32_t i = 0; i < impl_->k; ++i) {
    if (c[i] >= impl_->p) throw FieldError("coefficient out of range");
    out += c[i] * impl_->pw[i];
  }
  return out;
}

std::string Field::to_string(Code a) const
{
  if (impl_->k == 1) return std::to_string(a);
  const auto c = coefficients(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

FieldElement Field::element(Code a) const
{
  if (a >= impl_->q) throw FieldError("element code out of range");
  return FieldElement(*this, a);
}

FieldElement::FieldElement(Field field, Field::Code code) : field_(std::move(field)), code_(code) {}

void FieldElement::check_same(const FieldElement& o) const
{
  if (field_ != o.field_) throw FieldError("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const
{
  check_same(o);
  return {field_, field_.add(code_, o.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const
{
  check_same(o);
  return {field_, field_.sub(code_, o.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const
{
  check_same(o);
  return {field_, field_.mul(code_, o.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const
{
  check_same(o);
  return {field_, field_.div(code_, o.code_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_.neg(code_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_.inv(code_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_.pow(code_, e)}; }

} // namespace intspec
