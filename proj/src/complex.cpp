#include "steinersurf/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "steinersurf/error.hpp"

namespace steinersurf {

namespace {

struct RidgeRef {
  Facet ridge;
  std::uint32_t facet;
  std::uint32_t omitted;  // position of the dropped vertex
};

std::vector<RidgeRef> ridge_incidences(const SimplicialComplex& k) {
  std::vector<RidgeRef> refs;
  refs.reserve(k.num_facets() * k.facets().front().size());
  const auto& fs = k.facets();
  for (std::uint32_t i = 0; i < fs.size(); ++i) {
    for (std::uint32_t j = 0; j < fs[i].size(); ++j) {
      Facet r;
      r.reserve(fs[i].size() - 1);
      for (std::uint32_t t = 0; t < fs[i].size(); ++t)
        if (t != j) r.push_back(fs[i][t]);
      refs.push_back({std::move(r), i, j});
    }
  }
  std::sort(refs.begin(), refs.end(), [](const RidgeRef& a, const RidgeRef& b) {
    if (a.ridge != b.ridge) return a.ridge < b.ridge;
    return a.facet < b.facet;
  });
  return refs;
}

void combinations(const Facet& f, std::size_t size, std::size_t start, Facet& cur, std::vector<Facet>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (size - cur.size()) <= f.size(); ++i) {
    cur.push_back(f[i]);
    combinations(f, size, i + 1, cur, out);
    cur.pop_back();
  }
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Facet> facets, std::string name)
    : facets_(std::move(facets)), name_(std::move(name)) {
  if (facets_.empty()) throw Error(ErrorCode::EmptyComplex, "no facets given");
  const std::size_t width = facets_.front().size();
  if (width == 0) throw Error(ErrorCode::EmptyComplex, "empty facet");
  for (auto& f : facets_) {
    if (f.size() != width)
      throw Error(ErrorCode::NonUniform, "facets of size " + std::to_string(width) + " and " + std::to_string(f.size()));
    std::sort(f.begin(), f.end());
    if (f.front() <= 0) throw Error(ErrorCode::InvalidArgument, "vertex labels must be positive");
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw Error(ErrorCode::DegenerateFacet, "facet repeats vertex " + std::to_string(*std::adjacent_find(f.begin(), f.end())));
  }
  std::sort(facets_.begin(), facets_.end());
  auto dup = std::adjacent_find(facets_.begin(), facets_.end());
  if (dup != facets_.end()) {
    std::ostringstream os;
    os << "facet listed twice:";
    for (auto v : *dup) os << ' ' << v;
    throw Error(ErrorCode::RedundantFacet, os.str());
  }
  for (const auto& f : facets_) vertices_.insert(vertices_.end(), f.begin(), f.end());
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool SimplicialComplex::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimplicialComplex::has_facet(const Facet& f) const {
  Facet s = f;
  std::sort(s.begin(), s.end());
  return std::binary_search(facets_.begin(), facets_.end(), s);
}

bool SimplicialComplex::has_face(Facet f) const {
  std::sort(f.begin(), f.end());
  for (const auto& g : facets_)
    if (std::includes(g.begin(), g.end(), f.begin(), f.end())) return true;
  return false;
}

SimplicialComplex build_complex(std::vector<Facet> facets, std::string name) {
  return SimplicialComplex(std::move(facets), std::move(name));
}

std::string format_fvector(const FVector& f) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < f.counts.size(); ++i) os << (i ? "," : "") << f.counts[i];
  os << ")";
  return os.str();
}

std::vector<Facet> faces_of_dimension(const SimplicialComplex& k, int dim) {
  std::vector<Facet> out;
  if (dim < 0 || dim > k.dimension()) return out;
  if (dim == k.dimension()) return k.facets();
  Facet cur;
  for (const auto& f : k.facets()) combinations(f, dim + 1, 0, cur, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FVector f_vector(const SimplicialComplex& k) {
  FVector f;
  f.counts.push_back(static_cast<std::int64_t>(k.num_vertices()));
  for (int d = 1; d <= k.dimension(); ++d)
    f.counts.push_back(static_cast<std::int64_t>(faces_of_dimension(k, d).size()));
  return f;
}

std::int64_t euler_characteristic(const FVector& f) {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < f.counts.size(); ++i) chi += (i % 2 ? -1 : 1) * f.counts[i];
  return chi;
}

std::int64_t euler_characteristic(const SimplicialComplex& k) { return euler_characteristic(f_vector(k)); }

std::vector<Facet> boundary_faces(const SimplicialComplex& k) {
  std::vector<Facet> out;
  if (k.dimension() == 0) return out;
  auto refs = ridge_incidences(k);
  for (std::size_t i = 0; i < refs.size();) {
    std::size_t j = i;
    while (j < refs.size() && refs[j].ridge == refs[i].ridge) ++j;
    if (j - i == 1) out.push_back(refs[i].ridge);
    i = j;
  }
  return out;
}

SimplicialComplex vertex_link(const SimplicialComplex& k, Vertex v) {
  if (!k.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in complex");
  if (k.dimension() == 0) throw Error(ErrorCode::UnsupportedDimension, "link of a vertex in a 0-dimensional complex is empty");
  std::vector<Facet> link;
  for (const auto& f : k.facets()) {
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    Facet g;
    for (auto w : f)
      if (w != v) g.push_back(w);
    link.push_back(std::move(g));
  }
  return SimplicialComplex(std::move(link));
}

bool is_connected(const SimplicialComplex& k) {
  // facets sharing a vertex; for pure complexes this matches vertex connectivity
  std::vector<std::uint32_t> index(static_cast<std::size_t>(k.max_vertex()) + 1, 0);
  UnionFind uf(index.size());
  for (const auto& f : k.facets())
    for (std::size_t i = 1; i < f.size(); ++i) uf.unite(f[0], f[i]);
  auto root = uf.find(k.vertices().front());
  for (auto v : k.vertices())
    if (uf.find(v) != root) return false;
  return true;
}

int orientation_sign(const std::vector<Vertex>& ordered) {
  int sign = 1;
  for (std::size_t i = 0; i < ordered.size(); ++i)
    for (std::size_t j = i + 1; j < ordered.size(); ++j)
      if (ordered[i] > ordered[j]) sign = -sign;
  return sign;
}

bool is_coherent_orientation(const SimplicialComplex& k, const std::vector<int>& orientation) {
  if (orientation.size() != k.num_facets()) return false;
  auto refs = ridge_incidences(k);
  for (std::size_t i = 0; i < refs.size();) {
    std::size_t j = i;
    while (j < refs.size() && refs[j].ridge == refs[i].ridge) ++j;
    if (j - i != 2) return false;
    int a = orientation[refs[i].facet] * (refs[i].omitted % 2 ? -1 : 1);
    int b = orientation[refs[i + 1].facet] * (refs[i + 1].omitted % 2 ? -1 : 1);
    if (a != -b) return false;
    i = j;
  }
  return true;
}

ManifoldReport classify_closed_manifold(const SimplicialComplex& k) {
  const int d = k.dimension();
  if (d < 1 || d > 3)
    throw Error(ErrorCode::UnsupportedDimension, "classification supports dimensions 1 to 3, got " + std::to_string(d));

  auto refs = ridge_incidences(k);
  const std::size_t nf = k.num_facets();
  std::vector<std::vector<std::pair<std::uint32_t, int>>> adj(nf);  // neighbor, parity of omitted positions
  UnionFind uf(nf);
  for (std::size_t i = 0; i < refs.size();) {
    std::size_t j = i;
    while (j < refs.size() && refs[j].ridge == refs[i].ridge) ++j;
    if (j - i != 2) {
      std::ostringstream os;
      os << "face";
      for (auto v : refs[i].ridge) os << ' ' << v;
      os << " lies in " << (j - i) << " facets";
      throw Error(j - i == 1 ? ErrorCode::NotClosed : ErrorCode::NotManifold, os.str());
    }
    const auto& a = refs[i];
    const auto& b = refs[i + 1];
    int parity = static_cast<int>((a.omitted + b.omitted) % 2);
    adj[a.facet].push_back({b.facet, parity});
    adj[b.facet].push_back({a.facet, parity});
    uf.unite(a.facet, b.facet);
    i = j;
  }
  if (d >= 2) {
    std::vector<std::vector<std::uint32_t>> star(static_cast<std::size_t>(k.max_vertex()) + 1);
    for (std::uint32_t i = 0; i < nf; ++i)
      for (auto v : k.facets()[i]) star[v].push_back(i);
    for (auto v : k.vertices()) {
      std::vector<Facet> link;
      for (auto fi : star[v]) {
        Facet g;
        for (auto w : k.facets()[fi])
          if (w != v) g.push_back(w);
        link.push_back(std::move(g));
      }
      SimplicialComplex lk(std::move(link));
      try {
        auto r = classify_closed_manifold(lk);
        if (d == 3 && r.euler != 2)
          throw Error(ErrorCode::NotManifold, "link is a closed surface with Euler characteristic " + std::to_string(r.euler));
      } catch (const Error& e) {
        throw Error(ErrorCode::NotManifold, "link of vertex " + std::to_string(v) + " is not a sphere (" + e.what() + ")");
      }
    }
  }

  // after the links, so that a pinch point reads as a non-manifold
  for (std::uint32_t f = 1; f < nf; ++f)
    if (uf.find(f) != uf.find(0)) throw Error(ErrorCode::Disconnected, "facet adjacency graph is disconnected");

  ManifoldReport rep;
  rep.dimension = d;
  rep.f = f_vector(k);
  rep.euler = euler_characteristic(rep.f);

  std::vector<int> orient(nf, 0);
  bool orientable = true;
  orient[0] = 1;
  std::queue<std::uint32_t> q;
  q.push(0);
  while (!q.empty() && orientable) {
    auto f = q.front();
    q.pop();
    for (auto [g, parity] : adj[f]) {
      int want = -orient[f] * (parity ? -1 : 1);
      if (orient[g] == 0) {
        orient[g] = want;
        q.push(g);
      } else if (orient[g] != want) {
        orientable = false;
        break;
      }
    }
  }
  rep.orientable = orientable;
  if (orientable) rep.orientation = std::move(orient);

  if (d == 2) {
    SurfaceClassification s;
    s.is_closed_surface = true;
    s.orientable = orientable;
    s.euler = rep.euler;
    s.genus = static_cast<int>(orientable ? (2 - rep.euler) / 2 : 2 - rep.euler);
    rep.surface = s;
  }
  return rep;
}

SimplicialComplex cone(const SimplicialComplex& k, Vertex apex) {
  if (apex <= 0) throw Error(ErrorCode::InvalidArgument, "apex label must be positive");
  if (k.has_vertex(apex)) throw Error(ErrorCode::ApexCollision, "apex " + std::to_string(apex) + " already a vertex");
  std::vector<Facet> fs;
  fs.reserve(k.num_facets());
  for (auto f : k.facets()) {
    f.push_back(apex);
    fs.push_back(std::move(f));
  }
  return SimplicialComplex(std::move(fs));
}

SimplicialComplex suspension(const SimplicialComplex& k, Vertex apex1, Vertex apex2) {
  if (apex1 == apex2) throw Error(ErrorCode::ApexCollision, "suspension apices must differ");
  auto a = cone(k, apex1);
  auto b = cone(k, apex2);
  std::vector<Facet> fs = a.facets();
  fs.insert(fs.end(), b.facets().begin(), b.facets().end());
  return SimplicialComplex(std::move(fs));
}

SimplicialComplex connected_sum(const SimplicialComplex& k1, const SimplicialComplex& k2, const Facet& f1,
                                const Facet& f2, const std::vector<Vertex>& matching) {
  if (k1.dimension() != k2.dimension())
    throw Error(ErrorCode::DimensionMismatch,
                "dimensions " + std::to_string(k1.dimension()) + " and " + std::to_string(k2.dimension()));
  if (!k1.has_facet(f1)) throw Error(ErrorCode::InvalidArgument, "first gluing facet is not a facet");
  if (!k2.has_facet(f2)) throw Error(ErrorCode::InvalidArgument, "second gluing facet is not a facet");
  Facet s1 = f1, s2 = f2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  std::vector<Vertex> m = matching.empty() ? s2 : matching;
  if (m.size() != s1.size()) throw Error(ErrorCode::InvalidArgument, "matching has the wrong size");

  std::vector<Vertex> map(static_cast<std::size_t>(k2.max_vertex()) + 1, 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!std::binary_search(s2.begin(), s2.end(), m[i]))
      throw Error(ErrorCode::IdentificationCollision, "matching target " + std::to_string(m[i]) + " is not in the facet");
    if (map[m[i]] != 0)
      throw Error(ErrorCode::IdentificationCollision, "vertex " + std::to_string(m[i]) + " matched twice");
    map[m[i]] = s1[i];
  }
  Vertex next = k1.max_vertex() + 1;
  for (auto v : k2.vertices())
    if (map[v] == 0) map[v] = next++;

  std::vector<Facet> fs;
  for (const auto& f : k1.facets())
    if (f != s1) fs.push_back(f);
  for (const auto& f : k2.facets()) {
    if (f == s2) continue;
    Facet g;
    for (auto v : f) g.push_back(map[v]);
    fs.push_back(std::move(g));
  }
  try {
    return SimplicialComplex(std::move(fs));
  } catch (const Error& e) {
    throw Error(ErrorCode::IdentificationCollision, e.what());
  }
}

bool gale_evenness(const std::vector<Vertex>& subset, int m) {
  std::vector<char> in(static_cast<std::size_t>(m) + 1, 0);
  for (auto v : subset) in[v] = 1;
  for (int i = 1; i <= m; ++i) {
    if (in[i]) continue;
    for (int j = i + 1; j <= m; ++j) {
      if (in[j]) continue;
      int between = 0;
      for (int t = i + 1; t < j; ++t) between += in[t];
      if (between % 2) return false;
    }
  }
  return true;
}

SimplicialComplex cyclic_polytope_boundary(int m, int dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  if (m < dim + 1)
    throw Error(ErrorCode::TooFewVertices, "cyclic polytope needs at least dim+1 vertices");
  std::vector<Facet> fs;
  Facet cur;
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 1);
  std::vector<Facet> subsets;
  combinations(all, dim, 0, cur, subsets);
  // interior runs of consecutive members must have even length
  for (auto& s : subsets) {
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok;) {
      std::size_t j = i;
      while (j + 1 < s.size() && s[j + 1] == s[j] + 1) ++j;
      bool touches_end = s[i] == 1 || s[j] == m;
      if (!touches_end && (j - i + 1) % 2) ok = false;
      i = j + 1;
    }
    if (ok) fs.push_back(std::move(s));
  }
  return SimplicialComplex(std::move(fs), "cyclic_polytope_boundary_m" + std::to_string(m) + "_d" + std::to_string(dim));
}

SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<Vertex>& map) {
  std::vector<Facet> fs;
  fs.reserve(k.num_facets());
  for (const auto& f : k.facets()) {
    Facet g;
    for (auto v : f) {
      if (static_cast<std::size_t>(v) >= map.size() || map[v] <= 0)
        throw Error(ErrorCode::UnknownVertex, "relabeling misses vertex " + std::to_string(v));
      g.push_back(map[v]);
    }
    fs.push_back(std::move(g));
  }
  return SimplicialComplex(std::move(fs), k.name());
}

SimplicialComplex torus_7() {
  std::vector<Facet> fs;
  for (int i = 0; i < 7; ++i) {
    fs.push_back({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
    fs.push_back({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
  }
  return SimplicialComplex(std::move(fs), "torus_7");
}

SimplicialComplex rp2_6() {
  return SimplicialComplex({{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 6}, {1, 5, 6},
                            {2, 3, 5}, {2, 3, 6}, {2, 4, 6}, {3, 4, 5}, {4, 5, 6}},
                           "rp2_6");
}

SimplicialComplex simplex_boundary(int dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "simplex boundary needs dim >= 1");
  std::vector<Facet> fs;
  for (int skip = 1; skip <= dim + 1; ++skip) {
    Facet f;
    for (int v = 1; v <= dim + 1; ++v)
      if (v != skip) f.push_back(v);
    fs.push_back(std::move(f));
  }
  return SimplicialComplex(std::move(fs), "simplex_boundary_" + std::to_string(dim));
}

}  // namespace steinersurf
