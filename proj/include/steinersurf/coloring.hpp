#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steinersurf/complex.hpp"

namespace steinersurf {

struct Coloring {
  std::map<Vertex, int> assignment;
  int k = 0;
};

struct ColoringProblem {
  int k = 2;
  int s = 2;
  int dimension = 2;  // of the source complex
  std::vector<Vertex> vertices;
  std::vector<Facet> removed_facets;
  // deduplicated (s+1)-subsets of the remaining facets, sorted
  std::vector<Facet> constraints;
  std::string name;
};

// Throws InvalidArgument when a removed facet is not a facet of k.
ColoringProblem make_coloring_problem(const SimplicialComplex& k, int colors, int s = 2,
                                      std::vector<Facet> removed = {});
// Problem over an explicit vertex set and constraint list.
ColoringProblem make_coloring_problem(std::vector<Vertex> vertices, std::vector<Facet> constraints, int colors,
                                      int s = 2);

struct VerifyResult {
  bool valid = true;
  std::optional<Facet> violation;  // first monochromatic constraint
};

// Throws PartialColoring if some vertex has no color.
VerifyResult verify_coloring(const ColoringProblem& p, const Coloring& c);

enum class SearchStatus { Colorable, NotColorable, Unknown };
const char* to_string(SearchStatus s);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t dead_ends = 0;
  // branch points where no uncolored vertex was reachable from the colored set
  std::uint64_t unreachable_branches = 0;
  std::size_t max_depth = 0;
  double seconds = 0;
  int threads = 1;
  std::uint64_t conflicts = 0;  // learned clauses (clause engine)
  std::string engine;           // "backtrack", "clause" or "backtrack+clause"
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<Coloring> witness;
  SearchStats stats;
};

enum class SearchEngine {
  Auto,       // backtracking for switch_nodes nodes, then clause learning
  Backtrack,  // depth-first search with MRV and color symmetry breaking
  Clause,     // CDCL over the one-hot encoding, one run per seed
};

struct SearchOptions {
  int threads = 1;
  std::optional<Facet> start_triple;  // must be a constraint
  std::uint64_t node_limit = 0;       // 0 = unbounded
  double time_limit = 0;              // seconds, 0 = unbounded
  // Conflict-directed backjumping: on a dead end, return to the deepest
  // choice that contributed to it. Off gives plain chronological DFS.
  bool backjumping = true;
  SearchEngine engine = SearchEngine::Auto;
  std::uint64_t switch_nodes = 200000;
};

// Exhaustive depth-first search for a (k,2)-coloring. Unknown is returned
// only when a node or time limit stops the search.
// Throws UnsupportedS (s != 2), NotPure (dimension < 2), InvalidArgument.
SearchOutcome search_coloring(const ColoringProblem& p, const SearchOptions& opts = {});

struct ChromaticResult {
  std::optional<int> value;  // empty: exceeds k_max, or undecided
  int k_max = 0;
  bool undecided = false;  // a run hit its limit
  std::vector<SearchOutcome> runs;  // one per k tried, starting at 2
};

ChromaticResult chromatic_number(const SimplicialComplex& k, int s, int k_max, const SearchOptions& opts = {});

// Merges color classes (1,2),(3,4),... of a coloring with no monochromatic
// edge inside a facet. Throws NotStrongColoring, PartialColoring.
Coloring merge_color_classes(const SimplicialComplex& k, const Coloring& c);

}  // namespace steinersurf
