#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "steinersurf/coloring.hpp"
#include "steinersurf/embedding.hpp"
#include "steinersurf/error.hpp"
#include "steinersurf/gf2d.hpp"

using namespace steinersurf;

namespace {

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

// checks the completed complex against the f-vector law and the genus claim
void check_completed(const SteinerTripleSystem& sts, const EmbeddingState& s) {
  const std::int64_t n = sts.order();
  CHECK(is_eulerian_boundary(s.cycle, static_cast<int>(n)));
  auto c = complete_to_triangulation(s);
  auto f = f_vector(c.complex);
  CHECK(f.counts == std::vector<std::int64_t>{n + binom2(n) + 1, 5 * binom2(n), 10 * binom2(n) / 3});
  CHECK(f == c.expected_f);
  auto m = classify_closed_manifold(c.complex);
  CHECK(m.orientable == s.orientable);
  const std::int64_t genus = s.orientable ? (n - 1) * (n - 3) / 6 : (n - 1) * (n - 3) / 3;
  CHECK(m.surface->genus == genus);
  CHECK(c.expected_genus == genus);
  // every triple of the STS is a facet
  for (const auto& t : sts.triples()) CHECK(c.complex.has_facet({t[0], t[1], t[2]}));
}

std::multiset<std::pair<int, int>> adjacent_pairs(const std::vector<int>& c) {
  std::multiset<std::pair<int, int>> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int a = c[i], b = c[(i + 1) % c.size()];
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

}  // namespace

TEST_CASE("the STS(7) trace") {
  auto sts = fano_sts();
  auto s = start_embedding(sts, 1, {{1, 2, 4}, {1, 3, 7}, {1, 5, 6}}, {{2, 3, 5}, {2, 6, 7}, {3, 4, 6}, {4, 5, 7}}, true);
  CHECK(cycle_word(s.cycle) == "124137156");
  insert_next(s);
  CHECK(cycle_word(s.cycle) == "123715241356");
  while (!s.pending.empty()) insert_next(s);
  CHECK(cycle_word(s.cycle) == "127524715435641362376");
  CHECK(s.handles == 4);
  CHECK(s.history.size() == 5);
  auto c = complete_to_triangulation(s);
  CHECK(f_vector(c.complex).counts == std::vector<std::int64_t>{29, 105, 70});
  auto m = classify_closed_manifold(c.complex);
  CHECK(m.orientable);
  CHECK(m.euler == -6);
  CHECK(m.surface->genus == 4);
  // defaults reproduce the same run
  CHECK(embed_max_genus(sts).cycle == s.cycle);
}

TEST_CASE("each insertion adds the three edges of its triple") {
  std::mt19937 rng(3);
  for (const auto& sts : {fano_sts(), affine_sts(2), cyclic_sts_13()}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Triple> rest;
      for (const auto& t : sts.triples())
        if (std::find(t.begin(), t.end(), 1) == t.end()) rest.push_back(t);
      std::shuffle(rest.begin(), rest.end(), rng);
      bool orientable = trial % 2 == 0;
      auto s = start_embedding(sts, 1, {}, rest, orientable);
      while (!s.pending.empty()) {
        auto before = adjacent_pairs(s.cycle);
        Triple t = s.pending.front();
        insert_next(s);
        auto after = adjacent_pairs(s.cycle);
        CHECK(after.size() == before.size() + 3);
        for (const auto& p : before) after.erase(after.find(p));
        std::multiset<std::pair<int, int>> want;
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j) want.insert({std::min(t[i], t[j]), std::max(t[i], t[j])});
        CHECK(after == want);
      }
      check_completed(sts, s);
    }
  }
}

TEST_CASE("f-vector law across orders") {
  std::vector<SteinerTripleSystem> sources{fano_sts(), affine_sts(2), cyclic_sts_13(), projective_sts(FieldGF2d(4)),
                                           bose(2), bose(3)};
  for (const auto& sts : sources) {
    for (bool orientable : {true, false}) {
      EmbedOptions o;
      o.orientable = orientable;
      check_completed(sts, embed_max_genus(sts, o));
    }
  }
  auto pg64 = projective_sts(FieldGF2d(6));
  auto c = complete_to_triangulation(embed_max_genus(pg64));
  CHECK(f_vector(c.complex).counts == std::vector<std::int64_t>{2017, 9765, 6510});
  CHECK(classify_closed_manifold(c.complex).surface->genus == 620);
}

TEST_CASE("the AG(5,3) count law") {
  auto s = embed_max_genus(affine_sts(5));
  CHECK(is_eulerian_boundary(s.cycle, 243));
  auto c = complete_to_triangulation(s);
  CHECK(c.expected_f.counts == std::vector<std::int64_t>{29647, 147015, 98010});
  CHECK(c.complex.num_facets() == 98010);
}

TEST_CASE("collar coloring") {
  for (const auto& sts : {fano_sts(), affine_sts(2), cyclic_sts_13(), projective_sts(FieldGF2d(4))}) {
    auto base = search_coloring(make_coloring_problem(sts.to_complex(), 3));
    REQUIRE(base.witness);
    for (bool orientable : {true, false}) {
      EmbedOptions o;
      o.orientable = orientable;
      auto c = complete_to_triangulation(embed_max_genus(sts, o));
      auto col = collar_coloring(c, sts, *base.witness);
      CHECK(col.assignment.at(c.apex) == 3);
      for (int v : c.inner) CHECK((col.assignment.at(v) == 1 || col.assignment.at(v) == 2));
      CHECK(verify_coloring(make_coloring_problem(c.complex, 3), col).valid);
      // chi_2 of the surface equals chi_2 of the STS here, both 3
      CHECK(search_coloring(make_coloring_problem(c.complex, 2)).status == SearchStatus::NotColorable);
    }
  }
  auto sts = fano_sts();
  auto c = complete_to_triangulation(embed_max_genus(sts));
  Coloring mono{{}, 3};
  for (int v = 1; v <= 7; ++v) mono.assignment[v] = 1;
  CHECK_THROWS_AS(collar_coloring(c, sts, mono), Error);
  try {
    collar_coloring(c, sts, mono);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidBaseColoring);
  }
}

TEST_CASE("embedding errors") {
  auto sts = fano_sts();
  auto s = start_embedding(sts, 1, {}, {}, true);
  CHECK_THROWS_AS(complete_to_triangulation(s), Error);
  try {
    complete_to_triangulation(s);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompleteCycle);
  }
  // a selector pointing at the wrong labels
  OccurrenceSelector bad = [](const std::vector<int>&, const Triple&) { return std::array<std::size_t, 3>{0, 1, 2}; };
  try {
    insert_next(s, bad);
    FAIL("expected TripleNotOnCycle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TripleNotOnCycle);
  }
  CHECK_THROWS_AS(start_embedding(sts, 1, {{1, 2, 4}, {1, 3, 7}}, {}, true), Error);
  CHECK_THROWS_AS(start_embedding(sts, 9, {}, {}, true), Error);
  CHECK_THROWS_AS(first_occurrences({1, 2, 4}, Triple{2, 3, 5}), Error);
}

TEST_CASE("rewrites") {
  // u A v B w C with A = {9}, B = {8}, C = {7}
  std::vector<int> c{1, 9, 2, 8, 3, 7};
  CHECK(rewrite_orientable(c, {0, 2, 4}) == std::vector<int>{1, 2, 8, 3, 1, 9, 2, 3, 7});
  CHECK(rewrite_twisted(c, {0, 2, 4}) == std::vector<int>{1, 9, 2, 3, 8, 2, 1, 7, 3});
  CHECK(cycle_word({10, 2, 3}) == "10 2 3");
}
