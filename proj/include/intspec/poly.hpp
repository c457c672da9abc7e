#pragma once

#include <vector>

#include "intspec/rational.hpp"

namespace intspec {

// Dense rational polynomial, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;

void poly_trim(Poly& p);
int poly_degree(const Poly& p);
Rational poly_eval(const Poly& p, const Rational& x);
Poly poly_derivative(const Poly& p);
Poly poly_rem(Poly a, const Poly& b);
Poly poly_quot(Poly a, const Poly& b);
Poly poly_gcd(Poly a, Poly b); // monic

// det(xI - M), monic, by the Faddeev-LeVerrier recurrence.
Poly charpoly(const RationalMatrix& M);

/// Sturm sequence of the square-free part of p.
class SturmSequence {
public:
  explicit SturmSequence(const Poly& p);
  // Distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const;
  int count_at_most(const Rational& x) const;
  int total() const;
  const Poly& squarefree() const { return seq_.front(); }
  // Bound B with every real root in (-B, B).
  Rational root_bound() const;

private:
  int sign_changes(const Rational& x) const;
  int sign_changes_at_infinity(bool positive) const;
  std::vector<Poly> seq_;
};

struct RootBracket {
  Rational lo, hi;   // lo < root <= hi, or lo == hi == root when exact
  bool exact = false;
};

// Smallest / largest real root of p; approx guides the exact-rational guess.
RootBracket smallest_root(const Poly& p, double approx, const Rational& tolerance);
RootBracket largest_root(const Poly& p, double approx, const Rational& tolerance);

} // namespace intspec
