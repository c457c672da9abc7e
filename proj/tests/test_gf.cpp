#include "doctest.h"

#include "intspec/gf.hpp"

using namespace intspec;

TEST_CASE("prime field construction")
{
  Field F = Field::make(3, 1);
  CHECK(F.q() == 3);
  CHECK(F.mul(2, 2) == 1);
  CHECK(Field::make(3, 1) == F);
}

TEST_CASE("GF(9) uses x^2 + 1 and x*x = 2")
{
  // Oracle: x^2 + 1 has no root mod 3.
  for (int a = 0; a < 3; ++a) CHECK((a * a + 1) % 3 != 0);
  Field F = Field::make(3, 2);
  CHECK(F.modulus() == std::vector<std::uint32_t>{1, 0, 1});
  const auto x = F.from_coefficients({0, 1});
  CHECK(F.mul(x, x) == F.from_int(2));
}

TEST_CASE("GF(8) is a cubic extension")
{
  Field F = Field::make(2, 3);
  CHECK(F.q() == 8);
  CHECK(F.modulus().size() == 4);
  CHECK(is_irreducible_mod_p(F.modulus(), 2));
}

TEST_CASE("construction errors")
{
  CHECK_THROWS_AS(Field::make(4, 1), FieldError);
  CHECK_THROWS_AS(Field::make(3, 0), FieldError);
  CHECK_THROWS_AS(Field::make(3, 5), FieldError);
  CHECK_THROWS_AS(Field::make_order(12), FieldError);
}

TEST_CASE("mixed fields and division by zero are rejected")
{
  Field A = Field::make(5, 1), B = Field::make(7, 1);
  CHECK_THROWS_AS(A.element(1) + B.element(1), FieldError);
  CHECK_THROWS_AS(A.element(1) / A.element(0), FieldError);
}

TEST_CASE("primitive elements")
{
  // Brute-force orders mod 5: ord(2)=4, ord(3)=4, ord(4)=2.
  auto order_mod = [](int a, int p) {
    int x = a, k = 1;
    while (x != 1) {
      x = x * a % p;
      ++k;
    }
    return k;
  };
  CHECK(order_mod(2, 5) == 4);
  CHECK(Field::make(5, 1).primitive() == 2);
  CHECK(Field::make(3, 1).primitive() == 2);
  Field F9 = Field::make(3, 2);
  CHECK(F9.multiplicative_order(F9.primitive()) == 8);
  for (std::uint32_t g = 1; g < F9.primitive(); ++g) CHECK(F9.multiplicative_order(g) < 8);
}

TEST_CASE("nonsquares")
{
  CHECK(Field::make(7, 1).nonsquare() == 6);
  // Squares mod 5 are {0, 1, 4}; squares mod 13 exclude 2.
  CHECK(Field::make(5, 1).nonsquare() == 2);
  std::vector<bool> sq13(13, false);
  for (int a = 0; a < 13; ++a) sq13[a * a % 13] = true;
  CHECK_FALSE(sq13[2]);
  CHECK(Field::make(13, 1).nonsquare() == 2);
  CHECK_THROWS_AS(Field::make(2, 2).nonsquare(), FieldError);
}

TEST_CASE("builtin modulus table matches the lowest irreducible search")
{
  for (const auto& row : builtin_moduli()) {
    std::vector<std::uint32_t> f(row.begin() + 2, row.end());
    CHECK(f == lowest_irreducible(row[0], row[1]));
  }
}

TEST_CASE("field axioms, squares and Frobenius exhaustively for q <= 49")
{
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 19u, 23u, 25u, 27u, 29u, 31u, 37u, 41u, 43u,
                          47u, 49u}) {
    Field F = Field::make_order(q);
    CAPTURE(q);
    bool ok = true;
    for (std::uint32_t a = 0; a < q && ok; ++a)
      for (std::uint32_t b = 0; b < q && ok; ++b) {
        ok &= F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a);
        ok &= F.sub(F.add(a, b), b) == a;
        ok &= F.pow(F.add(a, b), F.p()) == F.add(F.pow(a, F.p()), F.pow(b, F.p()));
        for (std::uint32_t c = 0; c < q && ok; ++c) {
          ok &= F.add(F.add(a, b), c) == F.add(a, F.add(b, c));
          ok &= F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c));
          ok &= F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c));
        }
      }
    CHECK(ok);
    for (std::uint32_t a = 1; a < q; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.multiplicative_order(F.primitive()) == q - 1);
    if (q % 2 == 1) {
      std::uint32_t squares = 0, positive = 0;
      for (std::uint32_t a = 1; a < q; ++a) {
        squares += F.is_square(a);
        positive += F.is_positive(a);
        CHECK(F.is_positive(a) != F.is_positive(F.neg(a)));
      }
      CHECK(squares == (q - 1) / 2);
      CHECK(positive == (q - 1) / 2);
      CHECK_FALSE(F.is_square(F.nonsquare()));
    }
  }
}

TEST_CASE("larger fields without tables")
{
  Field F = Field::make(3, 7 - 3); // 81, table mode
  CHECK(F.q() == 81);
  Field G = Field::make(2, 4);
  CHECK(G.q() == 16);
  Field H = Field::make(37, 2); // 1369 > table limit, log/exp mode
  for (std::uint32_t a = 1; a < 50; ++a) CHECK(H.mul(a, H.inv(a)) == 1);
  CHECK(H.mul(H.add(5, 40), 77) == H.add(H.mul(5, 77), H.mul(40, 77)));
}
