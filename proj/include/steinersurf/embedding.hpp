#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "steinersurf/coloring.hpp"
#include "steinersurf/complex.hpp"
#include "steinersurf/steiner.hpp"

namespace steinersurf {

// Picks three increasing positions in the linear cycle word holding the three
// points of the triple; the labels at those positions become u, v, w.
using OccurrenceSelector = std::function<std::array<std::size_t, 3>(const std::vector<int>& cycle, const Triple& t)>;

struct EmbeddingState {
  int n = 0;
  int star_vertex = 1;
  std::vector<Triple> star_order;
  std::vector<Triple> pending;
  std::vector<Triple> inserted;
  std::vector<int> cycle;  // boundary word, read circularly
  int handles = 0;
  bool orientable = true;
  std::vector<std::vector<int>> history;  // word after each insertion
};

struct EmbedOptions {
  int star_vertex = 1;
  std::vector<Triple> star_order;    // empty: sorted triples through the star vertex
  std::vector<Triple> triple_order;  // empty: remaining triples sorted
  bool orientable = true;
  OccurrenceSelector selector;  // empty: first occurrences
};

// Default selection: points ordered by first occurrence, first occurrences
// taken. Throws TripleNotOnCycle.
std::array<std::size_t, 3> first_occurrences(const std::vector<int>& cycle, const Triple& t);

// Star at the given vertex; the word lists each star triple as v x y.
// Throws InvalidArgument for a malformed star order.
EmbeddingState start_embedding(const SteinerTripleSystem& sts, int star_vertex, std::vector<Triple> star_order,
                               std::vector<Triple> triple_order, bool orientable);
// Inserts the next pending triple. The twisted rewrite is used when the state
// is non-orientable and this is the last pending triple.
void insert_next(EmbeddingState& s, const OccurrenceSelector& selector = {});
// Rewrites P u A v B w C into P u v B w u A v w C.
std::vector<int> rewrite_orientable(const std::vector<int>& cycle, const std::array<std::size_t, 3>& pos);
// Rewrites the circular word u A v B w C into u A v w B' v u C' w.
std::vector<int> rewrite_twisted(const std::vector<int>& cycle, const std::array<std::size_t, 3>& pos);

EmbeddingState embed_max_genus(const SteinerTripleSystem& sts, const EmbedOptions& opts = {});

bool is_eulerian_boundary(const std::vector<int>& cycle, int n);
std::string cycle_word(const std::vector<int>& cycle);

struct CompletedEmbedding {
  SimplicialComplex complex;
  std::vector<int> outer;
  std::vector<int> inner;
  int apex = 0;
  bool orientable = true;
  int expected_genus = 0;
  FVector expected_f;
};

// Zigzag annulus to a fresh inner cycle plus a cone. Throws IncompleteCycle.
CompletedEmbedding complete_to_triangulation(const EmbeddingState& s, std::string name = {});

// Extends a (k,2)-coloring of the triples: inner cycle in {1,2}, apex 3.
// Throws InvalidBaseColoring.
Coloring collar_coloring(const CompletedEmbedding& c, const SteinerTripleSystem& sts, const Coloring& base);

}  // namespace steinersurf
