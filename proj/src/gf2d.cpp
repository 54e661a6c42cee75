#include "steinersurf/gf2d.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "steinersurf/error.hpp"

namespace steinersurf {

namespace {

int top_bit(std::uint32_t x) { return 31 - __builtin_clz(x); }

}  // namespace

bool is_primitive_polynomial(int d, std::uint32_t modulus) {
  if (d < 1 || d > 16) return false;
  if (modulus >> d != 1 || !(modulus & 1)) return false;
  const std::uint32_t n = 1u << d;
  std::uint32_t x = 1;
  for (std::uint32_t i = 1; i < n; ++i) {
    x <<= 1;
    if (x & n) x ^= modulus;
    if (x == 1) return i == n - 1;
  }
  return false;
}

std::uint32_t default_modulus(int d) {
  switch (d) {
    case 2: return 0b111;
    case 3: return 0b1011;
    case 4: return 0b10011;
    case 5: return 0b100101;
    case 7: return 0b10000011;
    default: break;
  }
  if (d < 2 || d > 16) throw Error(ErrorCode::InvalidArgument, "field degree must be in 2..16");
  // smallest primitive polynomial by value
  for (std::uint32_t m = (1u << d) | 1; m < (2u << d); m += 2)
    if (is_primitive_polynomial(d, m)) return m;
  throw Error(ErrorCode::NotPrimitive, "no primitive polynomial found");
}

std::string format_modulus(std::uint32_t modulus) {
  std::ostringstream os;
  bool first = true;
  for (int e = top_bit(modulus); e >= 0; --e) {
    if (!(modulus >> e & 1)) continue;
    if (!first) os << "+";
    first = false;
    if (e == 0) os << "1";
    else if (e == 1) os << "x";
    else os << "x^" << e;
  }
  return os.str();
}

FieldGF2d::FieldGF2d(int d, std::optional<std::uint32_t> modulus) : d_(d) {
  if (d < 2 || d > 16) throw Error(ErrorCode::InvalidArgument, "field degree must be in 2..16");
  n_ = 1u << d;
  modulus_ = modulus ? *modulus : default_modulus(d);
  if (!is_primitive_polynomial(d, modulus_))
    throw Error(ErrorCode::NotPrimitive, format_modulus(modulus_) + " is not a primitive polynomial of degree " +
                                             std::to_string(d));
  exp_.resize(2 * (n_ - 1));
  log_.assign(n_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < n_ - 1; ++i) {
    exp_[i] = exp_[i + n_ - 1] = x;
    log_[x] = i;
    x <<= 1;
    if (x & n_) x ^= modulus_;
  }
}

FieldElement FieldGF2d::mul(FieldElement x, FieldElement y) const {
  if (!x || !y) return 0;
  return exp_[log_[x] + log_[y]];
}

FieldElement FieldGF2d::pow(FieldElement x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (!x) return 0;
  return exp_[(log_[x] * (e % (n_ - 1))) % (n_ - 1)];
}

FieldElement FieldGF2d::inv(FieldElement x) const {
  if (!x) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
  return exp_[(n_ - 1 - log_[x]) % (n_ - 1)];
}

FieldElement FieldGF2d::exp(std::int64_t i) const {
  std::int64_t m = static_cast<std::int64_t>(n_) - 1;
  return exp_[static_cast<std::size_t>(((i % m) + m) % m)];
}

std::uint32_t FieldGF2d::log(FieldElement x) const {
  if (!x) throw Error(ErrorCode::InvalidArgument, "log of zero");
  return log_[x];
}

FieldGF2d make_field(int d, std::optional<std::uint32_t> modulus) { return FieldGF2d(d, modulus); }

FieldElement field_add(const FieldGF2d& f, FieldElement x, FieldElement y) { return f.add(x, y); }
FieldElement field_mul(const FieldGF2d& f, FieldElement x, FieldElement y) { return f.mul(x, y); }
FieldElement field_pow(const FieldGF2d& f, FieldElement x, std::uint64_t e) { return f.pow(x, e); }

FieldPolynomial parse_polynomial(const FieldGF2d& f, std::string_view text) {
  FieldPolynomial p;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw Error(ErrorCode::InvalidArgument, "polynomial syntax at offset " + std::to_string(i) + ": " + msg);
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto integer = [&]() -> std::uint64_t {
    skip();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected an integer");
    std::uint64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
      if (v > (1ull << 40)) fail("integer too large");
    }
    return v;
  };
  for (;;) {
    skip();
    FieldElement coef = 1;
    bool have_coef = false;
    if (i < text.size() && text[i] == 'a') {
      ++i;
      std::uint64_t e = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        e = integer();
      }
      coef = f.pow(f.primitive(), e);
      have_coef = true;
    } else if (i + 1 < text.size() && text[i] == '0' && (text[i + 1] == 'x' || text[i + 1] == 'X') &&
               i + 2 < text.size() && std::isxdigit(static_cast<unsigned char>(text[i + 2]))) {
      i += 2;
      std::uint64_t v = 0;
      while (i < text.size() && std::isxdigit(static_cast<unsigned char>(text[i]))) {
        char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i++])));
        v = v * 16 + static_cast<std::uint64_t>(std::isdigit(static_cast<unsigned char>(ch)) ? ch - '0' : ch - 'a' + 10);
        if (v >= f.size()) fail("coefficient outside the field");
      }
      coef = static_cast<FieldElement>(v);
      have_coef = true;
    } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      auto v = integer();
      if (v >= f.size()) fail("coefficient outside the field");
      coef = static_cast<FieldElement>(v);
      have_coef = true;
    }
    skip();
    if (have_coef && i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    if (i >= text.size() || (text[i] != 'X' && text[i] != 'x')) {
      if (have_coef) fail("constant terms are not allowed; polynomials must fix 0");
      fail("expected 'X'");
    }
    ++i;
    std::uint64_t e = 1;
    skip();
    if (i < text.size() && text[i] == '^') {
      ++i;
      e = integer();
    }
    if (e == 0) fail("constant terms are not allowed; polynomials must fix 0");
    if (e > f.size() - 2 && f.size() > 2) fail("degree above N-2");
    auto& slot = p.terms[static_cast<std::uint32_t>(e)];
    slot ^= coef;
    if (!slot) p.terms.erase(static_cast<std::uint32_t>(e));
    skip();
    if (i >= text.size()) break;
    if (text[i] != '+') fail("expected '+'");
    ++i;
  }
  return p;
}

std::string format_polynomial(const FieldGF2d& f, const FieldPolynomial& p) {
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if (it->second != 1) {
      auto l = f.log(it->second);
      os << (l == 1 ? std::string("a") : "a^" + std::to_string(l)) << "*";
    }
    os << "X";
    if (it->first != 1) os << "^" << it->first;
  }
  if (first) os << "0";
  return os.str();
}

FieldElement eval_polynomial(const FieldGF2d& f, const FieldPolynomial& p, FieldElement x) {
  FieldElement y = 0;
  for (const auto& [e, c] : p.terms) y ^= f.mul(c, f.pow(x, e));
  return y;
}

Permutation eval_permutation_polynomial(const FieldGF2d& f, const FieldPolynomial& p) {
  std::vector<std::uint32_t> im(f.size());
  std::vector<char> seen(f.size(), 0);
  for (FieldElement x = 0; x < f.size(); ++x) {
    im[x] = eval_polynomial(f, p, x);
    if (seen[im[x]])
      throw Error(ErrorCode::NotBijective, format_polynomial(f, p) + " is not a permutation polynomial");
    seen[im[x]] = 1;
  }
  return Permutation(std::move(im));
}

Permutation eval_permutation_monomial(const FieldGF2d& f, std::uint32_t r) {
  if (r == 0 || std::gcd(r, f.size() - 1) != 1)
    throw Error(ErrorCode::NotBijective, "X^" + std::to_string(r) + " is not a permutation of the field");
  std::vector<std::uint32_t> im(f.size());
  for (FieldElement x = 0; x < f.size(); ++x) im[x] = f.pow(x, r);
  return Permutation(std::move(im));
}

Permutation field_multiplication(const FieldGF2d& f, FieldElement c) {
  if (!c) throw Error(ErrorCode::NotBijective, "multiplication by zero");
  std::vector<std::uint32_t> im(f.size());
  for (FieldElement x = 0; x < f.size(); ++x) im[x] = f.mul(c, x);
  return Permutation(std::move(im));
}

Permutation field_frobenius(const FieldGF2d& f) { return eval_permutation_monomial(f, 2); }

bool is_additive(const FieldGF2d& f, const Permutation& p) {
  for (FieldElement x = 0; x < f.size(); ++x)
    for (FieldElement y = x; y < f.size(); ++y)
      if (p(x ^ y) != (p(x) ^ p(y))) return false;
  return true;
}

}  // namespace steinersurf
