#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace intspec {

class FieldError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class FieldElement;

/// Finite field GF(p^k), 1 <= k <= 4, p^k <= 2^20.
///
/// Elements are addressed by a code in [0, q): the coefficient vector
/// (c_0, ..., c_{k-1}) of the polynomial basis read as base-p digits, so
/// code = sum c_i p^i. This code order is the "fixed enumeration" used
/// everywhere a deterministic choice is needed (primitive element, sign
/// rule of projective matrices).
///
/// Handles are cheap to copy; Field::make returns the same instance for
/// the same (p, k).
class Field {
public:
  using Code = std::uint32_t;

  static Field make(std::uint32_t p, std::uint32_t k);
  static Field make_order(std::uint32_t q);

  std::uint32_t p() const;
  std::uint32_t k() const;
  std::uint32_t q() const;
  // Monic, low degree first, size k + 1.
  const std::vector<std::uint32_t>& modulus() const;

  Code zero() const { return 0; }
  Code one() const { return 1; }
  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const;
  Code pow(Code a, std::int64_t e) const;
  // Embedding of the integer n via the prime subfield.
  Code from_int(std::int64_t n) const;

  // Discrete log base the primitive element; a != 0.
  std::uint32_t log(Code a) const;
  Code exp(std::int64_t e) const;

  std::uint32_t multiplicative_order(Code a) const;
  bool is_square(Code a) const;
  // Smallest code of multiplicative order q - 1.
  Code primitive() const;
  // -1 when q = 3 (mod 4), the primitive element otherwise; odd q only.
  Code nonsquare() const;
  // Exactly one of a, -a is positive for a != 0 in odd characteristic.
  bool is_positive(Code a) const;

  std::vector<std::uint32_t> coefficients(Code a) const;
  Code from_coefficients(const std::vector<std::uint32_t>& c) const;
  std::string to_string(Code a) const;

  FieldElement element(Code a) const;

  bool operator==(const Field& other) const { return impl_ == other.impl_; }
  bool operator!=(const Field& other) const { return impl_ != other.impl_; }

  struct Impl;

private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Value-semantic element bound to its field. Mixing fields throws.
class FieldElement {
public:
  FieldElement(Field field, Field::Code code);

  const Field& field() const { return field_; }
  Field::Code code() const { return code_; }
  std::vector<std::uint32_t> coefficients() const { return field_.coefficients(code_); }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::int64_t e) const;

  bool operator==(const FieldElement& o) const { return field_ == o.field_ && code_ == o.code_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
  void check_same(const FieldElement& o) const;
  Field field_;
  Field::Code code_;
};

bool is_prime(std::uint64_t n);
// (p, k) with p^k = q, or throws if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

// Polynomials over GF(p), low degree first.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p);
std::vector<std::uint32_t> lowest_irreducible(std::uint32_t p, std::uint32_t k);
// The built-in modulus table (p^k <= 512, k >= 2).
const std::vector<std::vector<std::uint32_t>>& builtin_moduli();

} // namespace intspec
