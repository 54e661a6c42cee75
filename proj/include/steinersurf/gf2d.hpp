#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steinersurf/permutation.hpp"

namespace steinersurf {

using FieldElement = std::uint32_t;

// GF(2^d) with elements as coefficient bit-vectors and the class of x as the
// primitive element a.
class FieldGF2d {
 public:
  // Throws NotPrimitive if the modulus is not a primitive polynomial of
  // degree d, InvalidArgument if d is outside 2..16.
  explicit FieldGF2d(int d, std::optional<std::uint32_t> modulus = std::nullopt);

  int degree() const { return d_; }
  std::uint32_t size() const { return n_; }  // N = 2^d
  std::uint32_t modulus() const { return modulus_; }
  FieldElement primitive() const { return 2; }

  FieldElement add(FieldElement x, FieldElement y) const { return x ^ y; }
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement pow(FieldElement x, std::uint64_t e) const;
  FieldElement inv(FieldElement x) const;
  // a^i for any integer i
  FieldElement exp(std::int64_t i) const;
  // discrete log base a, x != 0
  std::uint32_t log(FieldElement x) const;

 private:
  int d_;
  std::uint32_t n_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

FieldGF2d make_field(int d, std::optional<std::uint32_t> modulus = std::nullopt);
std::uint32_t default_modulus(int d);
bool is_primitive_polynomial(int d, std::uint32_t modulus);
std::string format_modulus(std::uint32_t modulus);

FieldElement field_add(const FieldGF2d& f, FieldElement x, FieldElement y);
FieldElement field_mul(const FieldGF2d& f, FieldElement x, FieldElement y);
FieldElement field_pow(const FieldGF2d& f, FieldElement x, std::uint64_t e);

// Sum of c_e X^e with no constant term; exponent -> coefficient.
struct FieldPolynomial {
  std::map<std::uint32_t, FieldElement> terms;
};

// Grammar:  poly := term ('+' term)*
//           term := [coef ['*']] 'X' ['^' int]
//           coef := 'a' ['^' int] | int | '0x' hex
// e.g. "a*X^11 + X^6 + X". Throws InvalidArgument on syntax errors.
FieldPolynomial parse_polynomial(const FieldGF2d& f, std::string_view text);
std::string format_polynomial(const FieldGF2d& f, const FieldPolynomial& p);
FieldElement eval_polynomial(const FieldGF2d& f, const FieldPolynomial& p, FieldElement x);

// Permutation of F_N (size N, fixing 0). Throws NotBijective.
Permutation eval_permutation_polynomial(const FieldGF2d& f, const FieldPolynomial& p);
Permutation eval_permutation_monomial(const FieldGF2d& f, std::uint32_t r);

// x -> c * x
Permutation field_multiplication(const FieldGF2d& f, FieldElement c);
// x -> x^2
Permutation field_frobenius(const FieldGF2d& f);

bool is_additive(const FieldGF2d& f, const Permutation& p);

}  // namespace steinersurf
