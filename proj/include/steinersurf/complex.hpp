#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace steinersurf {

using Vertex = int;
using Facet = std::vector<Vertex>;

class SimplicialComplex {
 public:
  // Validates and canonicalizes. Throws NonUniform, DegenerateFacet,
  // RedundantFacet, EmptyComplex.
  explicit SimplicialComplex(std::vector<Facet> facets, std::string name = {});

  int dimension() const { return static_cast<int>(facets_.front().size()) - 1; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_facets() const { return facets_.size(); }
  Vertex max_vertex() const { return vertices_.back(); }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool has_vertex(Vertex v) const;
  bool has_facet(const Facet& f) const;
  // true if f (any order) is a face of some facet
  bool has_face(Facet f) const;

  bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }
  bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Facet> facets_;
  std::string name_;
};

SimplicialComplex build_complex(std::vector<Facet> facets, std::string name = {});

struct FVector {
  std::vector<std::int64_t> counts;
  std::int64_t operator[](std::size_t i) const { return counts[i]; }
  bool operator==(const FVector& o) const { return counts == o.counts; }
};

std::string format_fvector(const FVector& f);

FVector f_vector(const SimplicialComplex& k);
std::int64_t euler_characteristic(const SimplicialComplex& k);
std::int64_t euler_characteristic(const FVector& f);

// all faces of the given dimension, sorted
std::vector<Facet> faces_of_dimension(const SimplicialComplex& k, int dim);
// (d-1)-faces lying in exactly one facet
std::vector<Facet> boundary_faces(const SimplicialComplex& k);

SimplicialComplex vertex_link(const SimplicialComplex& k, Vertex v);

struct SurfaceClassification {
  bool is_closed_surface = false;
  bool orientable = false;
  std::int64_t euler = 0;
  int genus = 0;
};

struct ManifoldReport {
  int dimension = 0;
  bool orientable = false;
  std::int64_t euler = 0;
  FVector f;
  // filled for dimension 2
  std::optional<SurfaceClassification> surface;
  // +1/-1 per facet (in facets() order) when orientable: the sign of the
  // sorted vertex order. Adjacent facets induce opposite ridge orientations.
  std::vector<int> orientation;
};

// Closed connected combinatorial manifolds of dimension 1, 2 or 3.
// Throws NotClosed, NotManifold, Disconnected, UnsupportedDimension.
ManifoldReport classify_closed_manifold(const SimplicialComplex& k);

// Sign of the permutation sorting `ordered`, relative to the sorted facet.
int orientation_sign(const std::vector<Vertex>& ordered);

// Checks the opposite-induced-orientation condition directly.
bool is_coherent_orientation(const SimplicialComplex& k, const std::vector<int>& orientation);

bool is_connected(const SimplicialComplex& k);

SimplicialComplex cone(const SimplicialComplex& k, Vertex apex);
SimplicialComplex suspension(const SimplicialComplex& k, Vertex apex1, Vertex apex2);

// Removes f1 and f2, glues along their boundaries. Vertices of k2 outside f2
// receive fresh labels above max(k1). matching[i] is the vertex of f2
// identified with the i-th smallest vertex of f1; empty means sorted order.
SimplicialComplex connected_sum(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                const Facet& f1, const Facet& f2,
                                const std::vector<Vertex>& matching = {});

// Boundary of the cyclic polytope with m vertices in dimension dim, via
// Gale evenness.
SimplicialComplex cyclic_polytope_boundary(int m, int dim);
bool gale_evenness(const std::vector<Vertex>& subset, int m);

SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<Vertex>& map);

// Small fixed complexes.
SimplicialComplex torus_7();
SimplicialComplex rp2_6();
SimplicialComplex simplex_boundary(int dim);

}  // namespace steinersurf
