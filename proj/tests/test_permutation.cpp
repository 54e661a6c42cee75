#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "steinersurf/error.hpp"
#include "steinersurf/permutation.hpp"

using namespace steinersurf;

namespace {

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 0u);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(im);
}

}  // namespace

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), Error);
  try {
    Permutation({1, 1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBijective);
  }
}

TEST_CASE("group laws on random permutations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_perm(9, rng), b = random_perm(9, rng), c = random_perm(9, rng);
    CHECK(a.then(a.inverse()).is_identity());
    CHECK(a.inverse().then(a).is_identity());
    CHECK(a.then(b).then(c) == a.then(b.then(c)));
    for (std::uint32_t x = 0; x < 9; ++x) CHECK(a.then(b)(x) == b(a(x)));
    CHECK(a.then(Permutation::identity(9)) == a);
  }
  CHECK_THROWS_AS(Permutation::identity(3).then(Permutation::identity(4)), Error);
}

TEST_CASE("cycles partition the domain and match the cycle type") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_perm(12, rng);
    std::size_t total = 0;
    std::map<std::size_t, std::size_t> type;
    for (const auto& c : p.cycles()) {
      total += c.size();
      ++type[c.size()];
      for (std::size_t i = 0; i < c.size(); ++i) CHECK(p(c[i]) == c[(i + 1) % c.size()]);
    }
    CHECK(total == 12);
    CHECK(type == p.cycle_type());
  }
  Permutation t({0, 2, 1, 3});
  CHECK(t.cycle_type({0, 3}) == std::map<std::size_t, std::size_t>{{2, 1}});
  CHECK(format_cycles(t, {0, 3}) == "(1,2)");
}

TEST_CASE("text round trip") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto im = random_perm(8, rng).images();
    // keep 0 fixed so the default first=1 format is lossless
    auto it = std::find(im.begin(), im.end(), 0u);
    std::iter_swap(it, im.begin());
    Permutation p(im);
    CHECK(parse_permutation(format_permutation(p)) == p);
    CHECK(parse_permutation(format_permutation(p, 0), 0) == p);
  }
  CHECK(format_permutation(Permutation({0, 2, 1})) == "T: [2, 1]");
  CHECK(parse_permutation("[2, 1]") == Permutation({0, 2, 1}));
  CHECK_THROWS_AS(parse_permutation("2, 1]"), Error);
  CHECK_THROWS_AS(parse_permutation("[2, 1"), Error);
  CHECK_THROWS_AS(parse_permutation("[2; 1]"), Error);
  CHECK_THROWS_AS(parse_permutation("[1, 1]"), Error);
}
