#pragma once

#include <map>
#include <optional>

#include "steinersurf/complex.hpp"

namespace steinersurf {

// Vertex bijection carrying the facets of a onto the facets of b, found by
// colour refinement on facet incidences plus backtracking.
std::optional<std::map<Vertex, Vertex>> find_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace steinersurf
