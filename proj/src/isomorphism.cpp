#include "steinersurf/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace steinersurf {

namespace {

struct Graph {
  std::vector<Vertex> labels;
  std::vector<std::vector<int>> adj;
  std::vector<int> facet_count;
  std::vector<std::vector<int>> facets;  // dense, sorted
  std::vector<std::vector<int>> star;    // facet indices per vertex

  explicit Graph(const SimplicialComplex& k) : labels(k.vertices()) {
    const int n = static_cast<int>(labels.size());
    adj.resize(n);
    facet_count.assign(n, 0);
    auto idx = [&](Vertex v) {
      return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
    };
    for (const auto& f : k.facets()) {
      std::vector<int> d;
      for (auto v : f) d.push_back(idx(v));
      for (std::size_t i = 0; i < d.size(); ++i) {
        ++facet_count[d[i]];
        for (std::size_t j = 0; j < d.size(); ++j)
          if (i != j) adj[d[i]].push_back(d[j]);
      }
      facets.push_back(std::move(d));
    }
    for (auto& a : adj) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    std::sort(facets.begin(), facets.end());
    star.resize(n);
    for (std::size_t i = 0; i < facets.size(); ++i)
      for (int v : facets[i]) star[v].push_back(static_cast<int>(i));
  }
};

using Colors = std::vector<int>;

// Refines both colourings jointly so that equal colours mean equal
// signatures across the two graphs. Returns false when class sizes differ.
bool refine(const Graph& ga, const Graph& gb, Colors& ca, Colors& cb) {
  std::size_t classes = 0;
  for (;;) {
    // own colour, then the sorted colour tuples of the facets through v;
    // the 1-skeleton alone says nothing for complete graphs such as an STS
    using Sig = std::pair<int, std::vector<std::vector<int>>>;
    auto sig = [](const Graph& g, const Colors& c, int v) {
      Sig s{c[v], {}};
      for (int fi : g.star[v]) {
        std::vector<int> t;
        for (int w : g.facets[fi])
          if (w != v) t.push_back(c[w]);
        std::sort(t.begin(), t.end());
        s.second.push_back(std::move(t));
      }
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::vector<Sig> sa, sb;
    for (int v = 0; v < static_cast<int>(ca.size()); ++v) sa.push_back(sig(ga, ca, v));
    for (int v = 0; v < static_cast<int>(cb.size()); ++v) sb.push_back(sig(gb, cb, v));
    std::map<Sig, int> ids;
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb)
      if (!ids.count(s)) return false;
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<int> count(ids.size(), 0);
    for (int v = 0; v < static_cast<int>(ca.size()); ++v) ++count[ca[v] = ids[sa[v]]];
    for (int v = 0; v < static_cast<int>(cb.size()); ++v) --count[cb[v] = ids[sb[v]]];
    if (std::any_of(count.begin(), count.end(), [](int c) { return c != 0; })) return false;
    if (ids.size() == classes) return true;
    classes = ids.size();
  }
}

bool search(const Graph& ga, const Graph& gb, Colors ca, Colors cb, std::vector<int>& map) {
  if (!refine(ga, gb, ca, cb)) return false;
  const int n = static_cast<int>(ca.size());
  std::map<int, int> size;
  for (int c : ca) ++size[c];
  int pick = -1;
  for (int v = 0; v < n; ++v)
    if (size[ca[v]] > 1 && (pick < 0 || size[ca[v]] < size[ca[pick]])) pick = v;
  if (pick < 0) {
    std::vector<int> where(n);
    for (int v = 0; v < n; ++v) where[cb[v]] = v;
    map.assign(n, 0);
    for (int v = 0; v < n; ++v) map[v] = where[ca[v]];
    std::vector<std::vector<int>> image;
    for (const auto& f : ga.facets) {
      std::vector<int> g;
      for (int v : f) g.push_back(map[v]);
      std::sort(g.begin(), g.end());
      image.push_back(std::move(g));
    }
    std::sort(image.begin(), image.end());
    return image == gb.facets;
  }
  const int fresh = *std::max_element(ca.begin(), ca.end()) + 1;
  for (int w = 0; w < n; ++w) {
    if (cb[w] != ca[pick]) continue;
    Colors na = ca, nb = cb;
    na[pick] = fresh;
    nb[w] = fresh;
    if (search(ga, gb, std::move(na), std::move(nb), map)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::map<Vertex, Vertex>> find_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.dimension() != b.dimension() || a.num_vertices() != b.num_vertices() || a.num_facets() != b.num_facets())
    return std::nullopt;
  Graph ga(a), gb(b);
  Colors ca(ga.labels.size()), cb(gb.labels.size());
  for (std::size_t v = 0; v < ca.size(); ++v) ca[v] = ga.facet_count[v] * 100000 + static_cast<int>(ga.adj[v].size());
  for (std::size_t v = 0; v < cb.size(); ++v) cb[v] = gb.facet_count[v] * 100000 + static_cast<int>(gb.adj[v].size());
  std::vector<int> map;
  if (!search(ga, gb, ca, cb, map)) return std::nullopt;
  std::map<Vertex, Vertex> out;
  for (std::size_t v = 0; v < map.size(); ++v) out[ga.labels[v]] = gb.labels[map[v]];
  return out;
}

}  // namespace steinersurf
