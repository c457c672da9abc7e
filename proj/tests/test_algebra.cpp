#include "doctest.h"

#include <algorithm>

#include "intspec/chartab.hpp"
#include "intspec/class_algebra.hpp"
#include "intspec/cyclotomic.hpp"
#include "intspec/poly.hpp"

using namespace intspec;

namespace {

Poly poly_of(std::initializer_list<long> c)
{
  Poly p;
  for (long x : c) p.push_back(Rational(x));
  return p;
}

} // namespace

TEST_CASE("polynomial arithmetic")
{
  const Poly p = poly_of({-6, 11, -6, 1}); // (x-1)(x-2)(x-3)
  CHECK(poly_degree(p) == 3);
  CHECK(poly_eval(p, 2) == 0);
  CHECK(poly_eval(p, 4) == 6);
  CHECK(poly_derivative(p) == poly_of({11, -12, 3}));
  CHECK(poly_rem(p, poly_of({-1, 1})).empty());
  CHECK(poly_quot(p, poly_of({-1, 1})) == poly_of({6, -5, 1}));
  CHECK(poly_gcd(p, poly_of({-2, 1, 1})) == poly_of({-1, 1})); // x^2+x-2 = (x-1)(x+2)
  CHECK_THROWS(poly_rem(p, Poly{}));
}

TEST_CASE("characteristic polynomial and Sturm counts")
{
  const RationalMatrix M{{2, 1, 0}, {1, 2, 0}, {0, 0, 3}}; // eigenvalues 1, 3, 3
  const Poly c = charpoly(M);
  CHECK(c == poly_of({-9, 15, -7, 1}));
  SturmSequence s(c);
  CHECK(s.total() == 2); // distinct roots
  CHECK(s.count(0, 2) == 1);
  CHECK(s.count_at_most(3) == 2);
  CHECK(s.root_bound() > 3);
  const RootBracket lo = smallest_root(c, 1.0, Rational(1, 1000000));
  CHECK(lo.exact);
  CHECK(lo.lo == 1);
  const RootBracket hi = largest_root(c, 3.0, Rational(1, 1000000));
  CHECK(hi.exact);
  CHECK(hi.hi == 3);
}

TEST_CASE("irrational roots are bracketed")
{
  const Poly p = poly_of({-2, 0, 1});
  const RootBracket r = smallest_root(p, -1.41421356, Rational(1, 1000000));
  CHECK_FALSE(r.exact);
  CHECK(r.lo < r.hi);
  CHECK(r.hi - r.lo <= Rational(1, 1000000));
  CHECK(r.lo * r.lo > 2); // negative root: lo < -sqrt 2
  CHECK(r.hi * r.hi <= 2);
}

TEST_CASE("cyclotomic arithmetic")
{
  const std::uint32_t n = 12;
  const Cyclotomic z = Cyclotomic::root(n, 1);
  Cyclotomic p = Cyclotomic::from_rational(n, 1), sum = Cyclotomic::zero(n);
  for (int k = 0; k < 12; ++k) {
    sum += p;
    p *= z;
  }
  CHECK(p == Cyclotomic::from_rational(n, 1));
  CHECK(sum.is_zero());
  CHECK(Cyclotomic::root(n, 6) == Cyclotomic::from_rational(n, -1));
  CHECK((z * z.conj()) == Cyclotomic::from_rational(n, 1));
  CHECK((z + z.conj()).is_rational() == false); // 2 cos(pi/6) = sqrt 3
  CHECK(((z + z.conj()) * (z + z.conj())).to_rational() == 3);
  CHECK(euler_phi(12) == 4);
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
}

TEST_CASE("characters of cyclic groups")
{
  for (std::int64_t j = 0; j < 12; ++j) CHECK(cyclic_character(12, 0, j, 12) == Cyclotomic::from_rational(12, 1));
  Cyclotomic sum = Cyclotomic::zero(12);
  for (std::int64_t j = 0; j < 12; ++j) sum += cyclic_character(12, 4, j, 12);
  CHECK(sum.is_zero());
  // The quadratic character of F_13^*: value -1 at the generator.
  CHECK(cyclic_character(12, 6, 1, 84) == Cyclotomic::from_rational(84, -1));
}

TEST_CASE("class algebra eigenvalues agree with the character formula")
{
  auto G = Group::psl2(7);
  const auto w = weights_unipotent_split(*G);
  const SpectralCertificate cert = certify_spectrum(*G, w);
  CHECK(cert.d == 20);
  CHECK(cert.tau.exact);
  CHECK(cert.tau.lo == -1);
  CHECK(cert.lambda_max == 20);
  CharTable tbl(G);
  std::vector<double> from_chars;
  for (const auto& e : weighted_eigenvalues(tbl, w)) from_chars.push_back(e.exact->to_complex().real());
  std::sort(from_chars.begin(), from_chars.end());
  REQUIRE(from_chars.size() == cert.eigenvalues.size());
  for (std::size_t i = 0; i < from_chars.size(); ++i) CHECK(from_chars[i] == doctest::Approx(cert.eigenvalues[i]));
}

TEST_CASE("zero weights give zero eigenvalues")
{
  auto G = Group::psl2(9);
  const std::vector<Rational> w(G->classes().size(), Rational(0));
  CharTable tbl(G);
  for (const auto& e : weighted_eigenvalues(tbl, w)) CHECK(e.exact->is_zero());
  for (const auto& c : class_multiplication_matrix(*G, w))
    for (const auto& x : c) CHECK(x == 0);
}

TEST_CASE("central characters and inverse pairs")
{
  auto G = Group::psl2(7); // c2(1) and c2(-1) are mutually inverse
  const auto pairs = inverse_pairs(*G);
  CHECK(pairs.size() == G->classes().size() - 1);
  const CentralCharacters cc = central_characters(*G);
  CHECK(cc.value.rows() == static_cast<long>(G->classes().size()));
  // Trivial character first: the eigenvalue of a class sum is its size.
  for (std::size_t p = 0; p < cc.pairs.size(); ++p) {
    double size = 0;
    for (auto c : cc.pairs[p]) size += G->classes()[c].size;
    CHECK(cc.value(0, p) == doctest::Approx(size));
  }
}
