#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "steinersurf/error.hpp"
#include "steinersurf/gf2d.hpp"

using namespace steinersurf;

namespace {

// carry-less product reduced by the modulus, bit by bit
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, int d, std::uint32_t mod) {
  std::uint32_t r = 0;
  for (int i = d - 1; i >= 0; --i) {
    r <<= 1;
    if (r >> d & 1) r ^= mod;
    if (b >> i & 1) r ^= a;
  }
  return r;
}

// order of x modulo the polynomial by repeated multiplication
std::uint32_t order_of_x(int d, std::uint32_t mod) {
  std::uint32_t y = 2, k = 1;
  while (y != 1) {
    y = slow_mul(y, 2, d, mod);
    if (++k > (1u << d)) return 0;
  }
  return k;
}

}  // namespace

TEST_CASE("default moduli are primitive and the listed ones are used") {
  CHECK(default_modulus(2) == 0b111);
  CHECK(default_modulus(3) == 0b1011);
  CHECK(default_modulus(4) == 0b10011);
  CHECK(default_modulus(5) == 0b100101);
  CHECK(default_modulus(7) == 0b10000011);
  for (int d = 2; d <= 12; ++d) {
    auto m = default_modulus(d);
    CHECK(order_of_x(d, m) == (1u << d) - 1);
    CHECK(is_primitive_polynomial(d, m));
  }
  CHECK_FALSE(is_primitive_polynomial(4, 0b11111));  // x^4+x^3+x^2+x+1 has order 5
  CHECK_THROWS_AS(FieldGF2d(4, 0b11111), Error);
  CHECK_THROWS_AS(FieldGF2d(1), Error);
  CHECK_THROWS_AS(FieldGF2d(17), Error);
  CHECK(format_modulus(0b1011) == "x^3+x+1");
}

TEST_CASE("arithmetic against the bitwise oracle") {
  for (int d = 2; d <= 8; ++d) {
    FieldGF2d f(d);
    const auto n = f.size();
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) CHECK(f.mul(a, b) == slow_mul(a, b, d, f.modulus()));
      if (a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.exp(f.log(a)) == a);
        CHECK(f.pow(a, n - 1) == 1);
      }
    }
    CHECK_THROWS_AS(f.inv(0), Error);
  }
  FieldGF2d f(5);
  CHECK(field_add(f, 5, 3) == 6);
  CHECK(field_mul(f, 2, f.inv(2)) == 1);
  CHECK(field_pow(f, 2, 31) == 1);
  CHECK(f.exp(-1) == f.inv(2));
}

TEST_CASE("polynomial parsing and evaluation") {
  FieldGF2d f(4);
  auto p = parse_polynomial(f, "a*X^11 + X^6 + X");
  REQUIRE(p.terms.size() == 3);
  CHECK(p.terms.at(11) == 2);
  for (std::uint32_t x = 0; x < 16; ++x) {
    auto expect = f.mul(2, f.pow(x, 11)) ^ f.pow(x, 6) ^ x;
    CHECK(eval_polynomial(f, p, x) == expect);
  }
  auto back = parse_polynomial(f, format_polynomial(f, p));
  CHECK(back.terms == p.terms);
  CHECK(parse_polynomial(f, "0x3 X^2 + a^2*X").terms == std::map<std::uint32_t, FieldElement>{{1, 4}, {2, 3}});
  CHECK(parse_polynomial(f, "X + X").terms.empty());
  CHECK_THROWS_AS(parse_polynomial(f, "X + 1"), Error);
  CHECK_THROWS_AS(parse_polynomial(f, "X^15"), Error);
  CHECK_THROWS_AS(parse_polynomial(f, "17 X"), Error);
  CHECK_THROWS_AS(parse_polynomial(f, "Y"), Error);
  CHECK_THROWS_AS(parse_polynomial(f, "X +"), Error);
}

TEST_CASE("permutation polynomials") {
  FieldGF2d f(4);
  auto p = eval_permutation_polynomial(f, parse_polynomial(f, "a*X^11 + X^6 + X"));
  CHECK(p(0) == 0);
  CHECK_THROWS_AS(eval_permutation_polynomial(f, parse_polynomial(f, "X^3")), Error);
  for (int d = 2; d <= 7; ++d) {
    FieldGF2d g(d);
    const std::uint32_t m = g.size() - 1;
    for (std::uint32_t r = 1; r < m; ++r) {
      bool bij = std::gcd(r, m) == 1;
      if (bij) {
        auto q = eval_permutation_monomial(g, r);
        for (std::uint32_t x = 0; x < g.size(); ++x) CHECK(q(x) == g.pow(x, r));
      } else {
        CHECK_THROWS_AS(eval_permutation_monomial(g, r), Error);
      }
    }
  }
}

TEST_CASE("additive maps") {
  for (int d = 2; d <= 6; ++d) {
    FieldGF2d f(d);
    CHECK(is_additive(f, field_frobenius(f)));
    CHECK(is_additive(f, field_multiplication(f, 2)));
    CHECK(field_multiplication(f, 1).is_identity());
    if (d >= 3) CHECK_FALSE(is_additive(f, eval_permutation_monomial(f, f.size() - 2)));
    // the Frobenius map has order d
    auto fr = field_frobenius(f), acc = fr;
    for (int i = 1; i < d; ++i) {
      CHECK_FALSE(acc.is_identity());
      acc = acc.then(fr);
    }
    CHECK(acc.is_identity());
  }
  CHECK_THROWS_AS(field_multiplication(FieldGF2d(3), 0), Error);
}
