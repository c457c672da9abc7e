#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "intspec/rational.hpp"

namespace intspec {

struct CycloContext;

/// Exact element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1).
class Cyclotomic {
public:
  Cyclotomic() = default; // invalid until assigned
  static Cyclotomic zero(std::uint32_t n);
  static Cyclotomic from_rational(std::uint32_t n, const Rational& r);
  // zeta_n^e for any integer e.
  static Cyclotomic root(std::uint32_t n, std::int64_t e);

  std::uint32_t conductor() const;
  std::uint32_t dimension() const { return static_cast<std::uint32_t>(c_.size()); }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const; // throws unless is_rational()
  std::complex<double> to_complex() const;
  // Complex conjugate (zeta -> zeta^-1).
  Cyclotomic conj() const;
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }
  Cyclotomic operator-() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
  void same_field(const Cyclotomic& o) const;
  std::shared_ptr<const CycloContext> ctx_;
  std::vector<Rational> c_;
};

std::uint32_t euler_phi(std::uint32_t n);
// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n);

// j -> value of the i-th irreducible character of Z/n at the generator power j,
// expressed in Q(zeta_N) where n | N.
Cyclotomic cyclic_character(std::uint32_t n, std::int64_t i, std::int64_t j, std::uint32_t N);

} // namespace intspec
