#include "intspec/poly.hpp"

#include <stdexcept>

namespace intspec {

void poly_trim(Poly& p)
{
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Rational poly_eval(const Poly& p, const Rational& x)
{
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly poly_derivative(const Poly& p)
{
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long long>(i));
  poly_trim(d);
  return d;
}

Poly poly_rem(Poly a, const Poly& b)
{
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  poly_trim(a);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

Poly poly_quot(Poly a, const Poly& b)
{
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  poly_trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    poly_trim(a);
  }
  poly_trim(q);
  return q;
}

Poly poly_gcd(Poly a, Poly b)
{
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Poly charpoly(const RationalMatrix& A)
{
  const std::size_t n = A.size();
  for (const auto& row : A)
    if (row.size() != n) throw std::invalid_argument("charpoly needs a square matrix");
  // c[n] = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k
  Poly c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix M(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix AM(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) {
        if (A[i][t] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (M[t][j] != 0) AM[i][j] += A[i][t] * M[t][j];
      }
    for (std::size_t i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
    M = std::move(AM);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t)
        if (A[i][t] != 0 && M[t][i] != 0) tr += A[i][t] * M[t][i];
    c[n - k] = -tr / static_cast<long long>(k);
  }
  return c;
}

SturmSequence::SturmSequence(const Poly& p0)
{
  Poly p = p0;
  poly_trim(p);
  if (p.empty()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  const Poly g = poly_gcd(p, poly_derivative(p));
  if (g.size() > 1) p = poly_quot(p, g);
  seq_.push_back(p);
  seq_.push_back(poly_derivative(p));
  while (seq_.back().size() > 1) {
    Poly r = poly_rem(seq_[seq_.size() - 2], seq_.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq_.push_back(std::move(r));
  }
  if (seq_.back().empty()) seq_.pop_back();
}

int SturmSequence::sign_changes(const Rational& x) const
{
  int changes = 0, last = 0;
  for (const auto& p : seq_) {
    const Rational v = poly_eval(p, x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::sign_changes_at_infinity(bool positive) const
{
  int changes = 0, last = 0;
  for (const auto& p : seq_) {
    if (p.empty()) continue;
    int s = p.back() > 0 ? 1 : -1;
    if (!positive && (p.size() - 1) % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const { return sign_changes(a) - sign_changes(b); }

int SturmSequence::count_at_most(const Rational& x) const { return sign_changes_at_infinity(false) - sign_changes(x); }

int SturmSequence::total() const { return sign_changes_at_infinity(false) - sign_changes_at_infinity(true); }

Rational SturmSequence::root_bound() const
{
  const Poly& p = seq_.front();
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rational r = p[i] / p.back();
    if (r < 0) r = -r;
    if (r > m) m = r;
  }
  return m + 1;
}

namespace {

RootBracket extreme_root(const Poly& p, double approx, const Rational& tol, bool smallest)
{
  SturmSequence s(p);
  if (s.total() == 0) throw std::invalid_argument("polynomial has no real roots");
  const Rational B = s.root_bound();
  // Exact rational guess first.
  for (std::int64_t den : {1, 2, 3, 4, 6, 8, 12, 16, 24, 48, 1000, 1000000}) {
    const Rational g = rationalize(approx, den);
    if (poly_eval(s.squarefree(), g) != 0) continue;
    const bool extreme = smallest ? s.count_at_most(g) == 1 : s.count(g, B) == 0;
    if (extreme) return {g, g, true};
  }
  Rational lo = -B, hi = B;
  // Invariant: the extreme root lies in (lo, hi].
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) / 2;
    if (smallest) {
      if (s.count(lo, mid) >= 1)
        hi = mid;
      else
        lo = mid;
    } else {
      if (s.count(mid, hi) >= 1)
        lo = mid;
      else
        hi = mid;
    }
  }
  if (poly_eval(s.squarefree(), hi) == 0 && smallest && s.count_at_most(hi) == 1) return {hi, hi, true};
  return {lo, hi, false};
}

} // namespace

RootBracket smallest_root(const Poly& p, double approx, const Rational& tol) { return extreme_root(p, approx, tol, true); }

RootBracket largest_root(const Poly& p, double approx, const Rational& tol) { return extreme_root(p, approx, tol, false); }

} // namespace intspec
