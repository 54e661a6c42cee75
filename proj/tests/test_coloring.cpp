#include <doctest.h>

#include <filesystem>
#include <functional>
#include <random>
#include <set>

#include "steinersurf/coloring.hpp"
#include "steinersurf/complex.hpp"
#include "steinersurf/error.hpp"
#include "steinersurf/gf2d.hpp"
#include "steinersurf/io.hpp"
#include "steinersurf/steiner.hpp"

using namespace steinersurf;

namespace {

// Independent oracle: tries every assignment in [k]^n.
bool brute_colorable(const SimplicialComplex& k, int colors, const std::vector<Facet>& removed = {}) {
  std::vector<std::array<int, 3>> tris;
  const auto& vs = k.vertices();
  auto idx = [&](Vertex v) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
  for (const auto& f : k.facets()) {
    if (std::find(removed.begin(), removed.end(), f) != removed.end()) continue;
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b)
        for (std::size_t c = b + 1; c < f.size(); ++c) tris.push_back({idx(f[a]), idx(f[b]), idx(f[c])});
  }
  const int n = static_cast<int>(vs.size());
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  for (;;) {
    bool ok = true;
    for (const auto& t : tris)
      if (col[t[0]] == col[t[1]] && col[t[1]] == col[t[2]]) {
        ok = false;
        break;
      }
    if (ok) return true;
    int i = 0;
    while (i < n && ++col[i] == colors) col[i++] = 0;
    if (i == n) return false;
  }
}

SimplicialComplex random_complex(int n, int facets, int dim, std::mt19937& rng) {
  REQUIRE(facets <= n * (n - 1) * (n - 2) / 6);  // enough distinct subsets to draw from
  std::set<Facet> fs;
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  while (static_cast<int>(fs.size()) < facets) {
    std::shuffle(all.begin(), all.end(), rng);
    Facet f(all.begin(), all.begin() + dim + 1);
    std::sort(f.begin(), f.end());
    fs.insert(f);
  }
  return SimplicialComplex(std::vector<Facet>(fs.begin(), fs.end()), "random");
}

std::vector<SimplicialComplex> corpus() {
  std::vector<SimplicialComplex> out = {torus_7(), rp2_6(), simplex_boundary(3), simplex_boundary(4),
                                        fano_sts().to_complex(), affine_sts(2).to_complex(),
                                        suspension(simplex_boundary(3), 5, 6),
                                        connected_sum(rp2_6(), rp2_6(), rp2_6().facets().front(), rp2_6().facets().front())};
  for (int m = 5; m <= 12; ++m) out.push_back(cyclic_polytope_boundary(m, 4));
  for (int m = 6; m <= 10; ++m) out.push_back(cyclic_polytope_boundary(m, 3));
  for (const auto& e : std::filesystem::directory_iterator(STEINERSURF_TEST_DATA)) {
    if (e.path().extension() != ".txt") continue;
    auto k = read_facet_file(e.path().string());
    if (k.num_vertices() <= 12 && k.dimension() >= 2) out.push_back(k);
  }
  std::mt19937 rng(2024);
  for (int i = 0; i < 25; ++i) out.push_back(random_complex(7 + i % 5, 8 + 2 * (i % 10), 2, rng));
  for (int i = 0; i < 6; ++i) out.push_back(random_complex(9, 10 + 3 * i, 3, rng));
  return out;
}

std::vector<SearchOptions> option_grid() {
  std::vector<SearchOptions> grid;
  SearchOptions o;
  o.engine = SearchEngine::Backtrack;
  grid.push_back(o);
  o.backjumping = false;
  grid.push_back(o);
  o.backjumping = true;
  o.threads = 3;
  grid.push_back(o);
  SearchOptions c;
  c.engine = SearchEngine::Clause;
  grid.push_back(c);
  SearchOptions a;
  a.switch_nodes = 1;  // hand over to clause learning almost at once
  grid.push_back(a);
  return grid;
}

}  // namespace

TEST_CASE("search agrees with exhaustive enumeration on the small corpus") {
  auto grid = option_grid();
  int checked = 0;
  for (const auto& k : corpus()) {
    REQUIRE(k.num_vertices() <= 12);
    for (int colors = 2; colors <= 4; ++colors) {
      if (colors == 4 && k.num_vertices() > 10) continue;
      bool expected = brute_colorable(k, colors);
      auto p = make_coloring_problem(k, colors);
      for (const auto& o : grid) {
        auto r = search_coloring(p, o);
        INFO(k.name(), " k=", colors, " engine=", static_cast<int>(o.engine), " bj=", o.backjumping);
        CHECK(r.status == (expected ? SearchStatus::Colorable : SearchStatus::NotColorable));
        if (r.witness) CHECK(verify_coloring(p, *r.witness).valid);
      }
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("removed facets and start triples") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto k = random_complex(9, 24, 2, rng);
    std::vector<Facet> removed = {k.facets()[static_cast<std::size_t>(trial) % k.num_facets()]};
    auto p = make_coloring_problem(k, 2, 2, removed);
    bool expected = brute_colorable(k, 2, removed);
    for (std::size_t start : {std::size_t{0}, p.constraints.size() - 1}) {
      for (auto engine : {SearchEngine::Backtrack, SearchEngine::Clause}) {
        SearchOptions o;
        o.engine = engine;
        o.start_triple = p.constraints[start];
        auto r = search_coloring(p, o);
        CHECK(r.status == (expected ? SearchStatus::Colorable : SearchStatus::NotColorable));
      }
    }
  }
  auto p = make_coloring_problem(torus_7(), 2);
  SearchOptions o;
  o.start_triple = Facet{1, 2, 5};
  CHECK_THROWS_AS(search_coloring(p, o), Error);
  CHECK_THROWS_AS(make_coloring_problem(torus_7(), 2, 2, {{1, 2, 5}}), Error);
}

TEST_CASE("torus and projective plane obstructions") {
  CHECK(search_coloring(make_coloring_problem(torus_7(), 2)).status == SearchStatus::NotColorable);
  CHECK(search_coloring(make_coloring_problem(torus_7(), 2, 2, {{1, 3, 4}})).status == SearchStatus::NotColorable);
  CHECK(search_coloring(make_coloring_problem(torus_7(), 3)).status == SearchStatus::Colorable);
  CHECK(search_coloring(make_coloring_problem(rp2_6(), 2)).status == SearchStatus::NotColorable);
  CHECK(search_coloring(make_coloring_problem(rp2_6(), 2, 2, {{4, 5, 6}})).status == SearchStatus::Colorable);
}

TEST_CASE("chromatic numbers") {
  for (const auto& k : corpus()) {
    if (k.num_vertices() > 10) continue;
    int expected = 2;
    while (!brute_colorable(k, expected)) ++expected;
    auto r = chromatic_number(k, 2, 6);
    REQUIRE(r.value);
    CHECK(*r.value == expected);
    CHECK(r.runs.size() == static_cast<std::size_t>(expected - 1));
  }
  auto r = chromatic_number(torus_7(), 2, 2);
  CHECK_FALSE(r.value);
  CHECK_FALSE(r.undecided);
}

TEST_CASE("limits give unknown") {
  auto k = projective_sts(FieldGF2d(5)).to_complex();  // not 3-colorable, and not quickly
  SearchOptions o;
  o.node_limit = 3;
  o.engine = SearchEngine::Backtrack;
  auto r = search_coloring(make_coloring_problem(k, 3), o);
  CHECK(r.status == SearchStatus::Unknown);
  CHECK_FALSE(r.witness);
}

TEST_CASE("argument errors") {
  auto code = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code([] { search_coloring(make_coloring_problem(torus_7(), 3, 1)); }) == ErrorCode::UnsupportedS);
  SimplicialComplex graph({{1, 2}, {2, 3}, {1, 3}});
  CHECK(code([&] { search_coloring(make_coloring_problem(graph, 3)); }) == ErrorCode::NotPure);
  CHECK(code([] { search_coloring(make_coloring_problem(torus_7(), 1)); }) == ErrorCode::InvalidArgument);
  auto p = make_coloring_problem(torus_7(), 3);
  Coloring partial{{{1, 1}}, 3};
  CHECK(code([&] { verify_coloring(p, partial); }) == ErrorCode::PartialColoring);
}

TEST_CASE("merging a strong coloring halves the colors") {
  Coloring all{{}, 7};
  for (Vertex v = 1; v <= 7; ++v) all.assignment[v] = v;
  auto merged = merge_color_classes(torus_7(), all);
  CHECK(merged.k == 4);
  CHECK(verify_coloring(make_coloring_problem(torus_7(), 4), merged).valid);
  Coloring bad{{{1, 1}, {2, 1}, {3, 2}, {4, 3}, {5, 4}, {6, 5}, {7, 6}}, 7};
  CHECK_THROWS_AS(merge_color_classes(torus_7(), bad), Error);
}

TEST_CASE("identical inputs give identical outcomes") {
  auto p = make_coloring_problem(cyclic_polytope_boundary(11, 4), 3);
  auto a = search_coloring(p), b = search_coloring(p);
  CHECK(a.status == b.status);
  SearchOptions o;
  o.threads = 4;
  o.engine = SearchEngine::Backtrack;
  CHECK(search_coloring(p, o).status == a.status);
}
