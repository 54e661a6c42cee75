#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "steinersurf/complex.hpp"

namespace steinersurf {

// The 15-vertex 3-ball with 66 tetrahedra.
SimplicialComplex ball_b15();
// Hamiltonian path on the boundary of the ball.
std::vector<Vertex> b15_boundary_path();
// Boundary triangles forming a disk along one side of the path; the
// thickening cone is taken over these.
std::vector<Facet> b15_path_strip();

struct SphereConstruction {
  SimplicialComplex sphere;
  std::vector<Vertex> k5;
  std::vector<std::pair<Vertex, Vertex>> k5_edges;  // lexicographic
  std::vector<std::vector<Vertex>> balls;           // ball vertex set per edge
  std::vector<Vertex> thickening;                   // cone vertex per edge
  Vertex cavity_apex = 0;
  Vertex outer_apex = 0;
};

SphereConstruction build_non_4_2_colorable_sphere();

struct ObstructionEntry {
  std::pair<Vertex, Vertex> edge;
  std::vector<Vertex> ball;
  bool triangles_present = false;
  bool ball_3_2_colorable = true;
  std::uint64_t nodes = 0;
  double seconds = 0;
};

struct ObstructionReport {
  std::vector<ObstructionEntry> entries;
  // every ball is (3,2)-uncolorable, so no 4-coloring leaves a K5 edge
  // monochromatic, and the K5 forces one
  bool all_obstructed = false;
};

// Ball i belongs to the i-th K5 edge in lexicographic order. Throws
// MissingStructure when some ball vertex does not span a triangle with its edge.
ObstructionReport verify_k5_obstruction(const SimplicialComplex& k, const std::vector<Vertex>& k5,
                                        const std::vector<std::vector<Vertex>>& balls);

}  // namespace steinersurf
