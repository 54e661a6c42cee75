#include "steinersurf/sphere.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "steinersurf/coloring.hpp"
#include "steinersurf/error.hpp"

namespace steinersurf {

namespace {

const std::vector<Facet> kB15 = {
      {1, 2, 5, 6}, {1, 2, 5, 12}, {1, 2, 6, 12}, {1, 3, 8, 11}, {1, 4, 5, 6}, {1, 4, 5, 7},
      {1, 4, 6, 12}, {1, 4, 10, 13}, {1, 4, 7, 10}, {1, 4, 12, 13}, {1, 5, 12, 13}, {1, 5, 7, 13},
      {1, 8, 9, 14}, {1, 8, 10, 14}, {1, 8, 10, 15}, {1, 8, 11, 15}, {1, 9, 11, 15}, {1, 9, 14, 15},
      {1, 10, 13, 14}, {1, 7, 10, 15}, {1, 7, 13, 14}, {1, 7, 14, 15}, {2, 3, 4, 13}, {2, 3, 4, 15},
      {2, 3, 13, 15}, {2, 4, 7, 8}, {2, 4, 10, 13}, {2, 4, 7, 10}, {2, 5, 6, 14}, {2, 5, 12, 14},
      {2, 6, 8, 12}, {2, 6, 7, 8}, {2, 6, 9, 14}, {2, 6, 7, 9}, {2, 8, 9, 14}, {2, 8, 12, 14},
      {2, 7, 9, 10}, {3, 4, 12, 13}, {3, 4, 12, 15}, {3, 5, 6, 14}, {3, 5, 8, 11}, {3, 5, 11, 14},
      {3, 6, 9, 14}, {3, 6, 7, 9}, {3, 9, 12, 13}, {3, 7, 9, 12}, {3, 9, 13, 15}, {3, 9, 14, 15},
      {3, 7, 12, 15}, {3, 7, 14, 15}, {4, 5, 7, 8}, {4, 6, 12, 15}, {5, 8, 11, 13}, {5, 7, 8, 13},
      {5, 11, 12, 13}, {5, 11, 12, 14}, {6, 8, 12, 15}, {6, 8, 13, 15}, {6, 7, 8, 13}, {8, 10, 12, 14},
      {8, 10, 12, 15}, {8, 11, 13, 15}, {7, 9, 10, 12}, {9, 11, 12, 13}, {9, 11, 13, 15}, {7, 10, 12, 15},
};

Facet sorted_facet(Facet f) {
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<Facet> boundary_of(const std::vector<Facet>& tets) {
  return boundary_faces(SimplicialComplex(tets));
}

}  // namespace

SimplicialComplex ball_b15() { return SimplicialComplex(kB15, "B15"); }

std::vector<Vertex> b15_boundary_path() { return {14, 12, 11, 9, 10, 2, 13, 15, 4, 8, 1, 3, 5, 6, 7}; }

std::vector<Facet> b15_path_strip() {
  // Orient the boundary sphere, then for each inner path vertex sweep its
  // link from the next path vertex round to the previous one.
  SimplicialComplex bd(boundary_of(kB15));
  auto rep = classify_closed_manifold(bd);
  std::map<std::pair<Vertex, Vertex>, std::pair<Vertex, std::size_t>> next;  // (p, x) -> (y, triangle)
  for (std::size_t i = 0; i < bd.num_facets(); ++i) {
    Facet t = bd.facets()[i];
    if (rep.orientation[i] < 0) std::swap(t[0], t[1]);
    for (int j = 0; j < 3; ++j) next[{t[j], t[(j + 1) % 3]}] = {t[(j + 2) % 3], i};
  }
  auto path = b15_boundary_path();
  std::set<std::size_t> strip;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    Vertex p = path[i], x = path[i + 1], prev = path[i - 1];
    for (std::size_t guard = 0; guard < bd.num_facets(); ++guard) {
      auto [y, tri] = next.at({p, x});
      strip.insert(tri);
      if (y == prev) break;
      x = y;
    }
  }
  std::vector<Facet> out;
  for (auto i : strip) out.push_back(bd.facets()[i]);
  return out;
}

SphereConstruction build_non_4_2_colorable_sphere() {
  const std::vector<Vertex> k5 = {151, 152, 153, 154, 155};
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < k5.size(); ++i)
    for (std::size_t j = i + 1; j < k5.size(); ++j) edges.push_back({k5[i], k5[j]});

  const auto path = b15_boundary_path();
  const auto strip = b15_path_strip();

  // bipyramid over 153 154 155 with apices 151, 152; its interior is split
  // by the central edge, leaving the cavity 151 152 153 154
  std::vector<Facet> tets = {{151, 152, 153, 155}, {151, 152, 154, 155}};
  std::set<Facet> outer = {{151, 153, 154}, {151, 154, 155}, {151, 153, 155},
                           {152, 153, 154}, {152, 154, 155}, {152, 153, 155}};
  std::vector<Facet> cavity;
  std::vector<std::vector<Vertex>> balls;
  std::vector<Vertex> thickening;
  const Vertex cavity_apex = 166, outer_apex = 167;

  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    const Vertex off = static_cast<Vertex>(15 * i);
    const Vertex t = static_cast<Vertex>(156 + i);
    std::vector<Vertex> ball;
    for (Vertex v = 1; v <= 15; ++v) ball.push_back(v + off);
    balls.push_back(ball);
    thickening.push_back(t);

    std::vector<Facet> piece;
    for (const auto& f : kB15) piece.push_back({f[0] + off, f[1] + off, f[2] + off, f[3] + off});
    std::vector<Vertex> p;
    for (auto v : path) p.push_back(v + off);
    // chain joining the edge to the path
    for (std::size_t j = 0; j + 1 < p.size(); ++j) piece.push_back(sorted_facet({a, b, p[j], p[j + 1]}));
    // thickening cone over the strip and the a-side of the chain
    for (const auto& s : strip) piece.push_back(sorted_facet({t, s[0] + off, s[1] + off, s[2] + off}));
    for (std::size_t j = 0; j + 1 < p.size(); ++j) piece.push_back(sorted_facet({t, a, p[j], p[j + 1]}));

    Vertex x = 0;
    if (i == 0) {
      x = 153;
    } else {
      std::vector<Vertex> cands, in_k5;
      for (const auto& tr : outer)
        if (std::binary_search(tr.begin(), tr.end(), a) && std::binary_search(tr.begin(), tr.end(), b))
          for (auto v : tr)
            if (v != a && v != b) cands.push_back(v);
      std::sort(cands.begin(), cands.end());
      for (auto v : cands)
        if (std::find(k5.begin(), k5.end(), v) != k5.end()) in_k5.push_back(v);
      if (cands.empty()) throw std::logic_error("no outer triangle on a K5 edge");
      x = in_k5.empty() ? cands.front() : in_k5.front();
      outer.erase(sorted_facet({a, b, x}));
    }
    // one tetrahedron glues the piece onto a triangle through the edge
    piece.push_back(sorted_facet({a, b, x, p.back()}));
    auto nb = boundary_of(piece);
    const Facet glued = sorted_facet({a, b, x});
    if (i == 0) {
      for (const auto& tr : nb)
        if (tr != glued) cavity.push_back(tr);
      cavity.push_back({151, 152, 154});
      cavity.push_back({151, 153, 154});
      cavity.push_back({152, 153, 154});
    } else {
      for (const auto& tr : nb)
        if (tr != glued) outer.insert(tr);
    }
    tets.insert(tets.end(), piece.begin(), piece.end());
  }
  for (const auto& tr : cavity) tets.push_back(sorted_facet({tr[0], tr[1], tr[2], cavity_apex}));
  for (const auto& tr : boundary_of(tets)) tets.push_back(sorted_facet({tr[0], tr[1], tr[2], outer_apex}));

  return SphereConstruction{SimplicialComplex(std::move(tets), "non_4_2_colorable_sphere"),
                            k5,
                            edges,
                            balls,
                            thickening,
                            cavity_apex,
                            outer_apex};
}

ObstructionReport verify_k5_obstruction(const SimplicialComplex& k, const std::vector<Vertex>& k5,
                                        const std::vector<std::vector<Vertex>>& balls) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < k5.size(); ++i)
    for (std::size_t j = i + 1; j < k5.size(); ++j) edges.push_back({std::min(k5[i], k5[j]), std::max(k5[i], k5[j])});
  std::sort(edges.begin(), edges.end());
  if (k5.size() != 5 || balls.size() != edges.size())
    throw Error(ErrorCode::InvalidArgument, "need 5 K5 vertices and one ball per edge");
  auto triangles = faces_of_dimension(k, 2);
  auto edge_set = faces_of_dimension(k, 1);
  auto has_tri = [&](Facet f) {
    std::sort(f.begin(), f.end());
    return std::binary_search(triangles.begin(), triangles.end(), f);
  };
  for (std::size_t i = 0; i < k5.size(); ++i)
    for (std::size_t j = i + 1; j < k5.size(); ++j)
      if (!std::binary_search(edge_set.begin(), edge_set.end(), Facet{std::min(k5[i], k5[j]), std::max(k5[i], k5[j])}))
        throw Error(ErrorCode::MissingStructure, "K5 edge " + std::to_string(k5[i]) + "-" + std::to_string(k5[j]) + " missing");

  ObstructionReport rep;
  rep.all_obstructed = true;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    ObstructionEntry en;
    en.edge = edges[e];
    en.ball = balls[e];
    std::sort(en.ball.begin(), en.ball.end());
    for (auto v : en.ball)
      if (!has_tri({edges[e].first, edges[e].second, v}))
        throw Error(ErrorCode::MissingStructure, "vertex " + std::to_string(v) + " spans no triangle with edge " +
                                                     std::to_string(edges[e].first) + "-" +
                                                     std::to_string(edges[e].second));
    en.triangles_present = true;
    std::vector<Facet> inside;
    for (const auto& t : triangles)
      if (std::all_of(t.begin(), t.end(), [&](Vertex v) { return std::binary_search(en.ball.begin(), en.ball.end(), v); }))
        inside.push_back(t);
    if (inside.empty()) throw Error(ErrorCode::MissingStructure, "ball has no triangles");
    auto out = search_coloring(make_coloring_problem(en.ball, inside, 3));
    en.ball_3_2_colorable = out.status == SearchStatus::Colorable;
    en.nodes = out.stats.nodes;
    en.seconds = out.stats.seconds;
    rep.all_obstructed = rep.all_obstructed && !en.ball_3_2_colorable;
    rep.entries.push_back(std::move(en));
  }
  return rep;
}

}  // namespace steinersurf
