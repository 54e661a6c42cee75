#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "steinersurf/complex.hpp"

namespace steinersurf {

// Facet file: '#' comment lines, optional "name=..." token, then a nested
// list [[v,v,v],...]. Throws ParseError with line and column.
SimplicialComplex parse_facet_text(std::string_view text);
SimplicialComplex read_facet_file(const std::string& path);

// Sorted facets, one per line. Header lines are written as '#' comments.
std::string format_facet_text(const SimplicialComplex& k, const std::vector<std::string>& header = {});
void write_facet_file(const std::string& path, const SimplicialComplex& k,
                      const std::vector<std::string>& header = {});

// Coloring file: "vertex<TAB>color" lines with '#' header comments.
std::string format_coloring_text(const std::map<Vertex, int>& assignment,
                                 const std::vector<std::string>& header = {});
std::map<Vertex, int> parse_coloring_text(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace steinersurf
