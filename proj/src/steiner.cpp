#include "steinersurf/steiner.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "steinersurf/error.hpp"

namespace steinersurf {

namespace {

std::string triple_text(int a, int b, int c) {
  std::ostringstream os;
  os << "{" << a << "," << b << "," << c << "}";
  return os.str();
}

void check_domain(const SteinerQuasigroup& mu, const Permutation& t) {
  if (t.size() != static_cast<std::size_t>(mu.order()) + 1)
    throw Error(ErrorCode::DomainMismatch, "permutation acts on " + std::to_string(t.size()) +
                                               " points, expected " + std::to_string(mu.order() + 1) +
                                               " (0 plus the points)");
  if (t(0) != 0) throw Error(ErrorCode::DomainMismatch, "permutation must fix 0");
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Shift permutations at every point plus, for each point x, which of the two
// m-orbits of sigma(x) contains y (orbit 0 holds the least label != x).
struct ShiftTable {
  int n = 0;
  bool surface = true;
  int bad_point = 0;
  std::vector<Permutation> sigma;
  std::vector<std::int8_t> side;  // (n+1)*(n+1)

  ShiftTable(const SteinerQuasigroup& minus, const SteinerQuasigroup& plus) : n(minus.order()) {
    const std::size_t w = static_cast<std::size_t>(n) + 1;
    sigma.resize(w);
    side.assign(w * w, -1);
    const std::size_t m = static_cast<std::size_t>(n - 1) / 2;
    for (int x = 1; x <= n; ++x) {
      sigma[x] = transition(minus, x, plus);
      if (!surface) continue;
      int label = 0;
      for (const auto& c : sigma[x].cycles()) {
        if (c.size() == 1) {
          if (c[0] != 0 && c[0] != static_cast<std::uint32_t>(x)) {
            surface = false;
            bad_point = x;
          }
          continue;
        }
        if (c.size() != m || label > 1) {
          surface = false;
          bad_point = x;
          break;
        }
        for (auto y : c) side[x * w + y] = static_cast<std::int8_t>(label);
        ++label;
      }
      if (surface && label != 2) {
        surface = false;
        bad_point = x;
      }
    }
  }

  int orbit(int x, int y) const { return side[static_cast<std::size_t>(x) * (n + 1) + y]; }
};

bool cycles_ok(const Permutation& sigma, int x, int n, std::map<std::size_t, std::size_t>& type) {
  type = sigma.cycle_type({0});
  const std::size_t m = static_cast<std::size_t>(n - 1) / 2;
  if (m == 1) return type.size() == 1 && type.count(1) && type.at(1) == 3;
  (void)x;
  return type.size() == 2 && type.count(1) && type.at(1) == 1 && type.count(m) && type.at(m) == 2;
}

}  // namespace

SteinerTripleSystem::SteinerTripleSystem(std::vector<Triple> triples, int n, std::string name)
    : n_(n), triples_(std::move(triples)), name_(std::move(name)) {
  int maxv = 0;
  for (auto& t : triples_) {
    std::sort(t.begin(), t.end());
    if (t[0] <= 0) throw Error(ErrorCode::InvalidArgument, "points must be positive");
    if (t[0] == t[1] || t[1] == t[2]) throw Error(ErrorCode::InvalidArgument, "triple repeats a point");
    maxv = std::max(maxv, t[2]);
  }
  if (n_ == 0) n_ = maxv;
  if (maxv > n_) throw Error(ErrorCode::InvalidArgument, "point label above n");
  if (n_ > 65535) throw Error(ErrorCode::InvalidArgument, "order too large");
  if (n_ % 6 != 1 && n_ % 6 != 3)
    throw Error(ErrorCode::BadOrder, "n = " + std::to_string(n_) + " is not 1 or 3 mod 6");
  std::sort(triples_.begin(), triples_.end());
  const std::size_t w = static_cast<std::size_t>(n_) + 1;
  table_.assign(w * w, 0);
  for (const auto& t : triples_) {
    for (int i = 0; i < 3; ++i) {
      int x = t[i], y = t[(i + 1) % 3], z = t[(i + 2) % 3];
      if (table_[x * w + y])
        throw Error(ErrorCode::PairDoubleCovered, "pair {" + std::to_string(std::min(x, y)) + "," +
                                                      std::to_string(std::max(x, y)) + "} lies in two triples");
      table_[x * w + y] = static_cast<std::uint16_t>(z);
      table_[y * w + x] = static_cast<std::uint16_t>(z);
    }
  }
  for (int x = 1; x <= n_; ++x)
    for (int y = x + 1; y <= n_; ++y)
      if (!table_[x * w + y])
        throw Error(ErrorCode::PairUncovered, "pair {" + std::to_string(x) + "," + std::to_string(y) + "} lies in no triple");
}

SimplicialComplex SteinerTripleSystem::to_complex() const {
  std::vector<Facet> fs;
  fs.reserve(triples_.size());
  for (const auto& t : triples_) fs.push_back({t[0], t[1], t[2]});
  return SimplicialComplex(std::move(fs), name_);
}

SteinerTripleSystem sts_from_triples(std::vector<Triple> triples, int n, std::string name) {
  return SteinerTripleSystem(std::move(triples), n, std::move(name));
}

SteinerTripleSystem sts_from_complex(const SimplicialComplex& k) {
  if (k.dimension() != 2) throw Error(ErrorCode::NotAnSTS, "a triple system needs 2-dimensional facets");
  if (k.vertices().front() != 1 || k.max_vertex() != static_cast<int>(k.num_vertices()))
    throw Error(ErrorCode::NotAnSTS, "points must be labeled 1..n");
  std::vector<Triple> ts;
  for (const auto& f : k.facets()) ts.push_back({f[0], f[1], f[2]});
  try {
    return SteinerTripleSystem(std::move(ts), static_cast<int>(k.num_vertices()), k.name());
  } catch (const Error& e) {
    throw Error(ErrorCode::NotAnSTS, e.what());
  }
}

SteinerQuasigroup::SteinerQuasigroup(const SteinerTripleSystem& sts) : n_(sts.order()) {
  const std::size_t w = static_cast<std::size_t>(n_) + 1;
  table_.assign(w * w, 0);
  for (std::size_t y = 0; y < w; ++y) {
    table_[y] = static_cast<std::uint16_t>(y);
    table_[y * w] = static_cast<std::uint16_t>(y);
  }
  for (int x = 1; x <= n_; ++x) {
    table_[x * w + x] = static_cast<std::uint16_t>(x);
    for (int y = 1; y <= n_; ++y)
      if (x != y) table_[x * w + y] = static_cast<std::uint16_t>(sts.third(x, y));
  }
}

SteinerQuasigroup SteinerQuasigroup::from_table(int n, std::vector<std::uint16_t> table) {
  const std::size_t w = static_cast<std::size_t>(n) + 1;
  if (n < 1 || table.size() != w * w) throw Error(ErrorCode::NotAnSTS, "table has the wrong size");
  SteinerQuasigroup q;
  q.n_ = n;
  q.table_ = std::move(table);
  for (std::size_t x = 0; x < w; ++x)
    for (std::size_t y = 0; y < w; ++y) {
      auto z = q.table_[x * w + y];
      bool ok = z < w && z == q.table_[y * w + x] && q.table_[x * w + z] == y;
      if (x == y && x != 0) ok = ok && z == x;
      if (x == 0) ok = ok && z == y;
      if (!ok)
        throw Error(ErrorCode::NotAnSTS, "quasigroup axioms fail at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  return q;
}

SteinerQuasigroup quasigroup_of(const SteinerTripleSystem& sts) { return SteinerQuasigroup(sts); }

std::vector<Triple> SteinerQuasigroup::triples() const {
  std::vector<Triple> out;
  for (int x = 1; x <= n_; ++x)
    for (int y = x + 1; y <= n_; ++y) {
      int z = (*this)(x, y);
      if (z > y) out.push_back({x, y, z});
    }
  return out;
}

SteinerTripleSystem SteinerQuasigroup::triple_system(std::string name) const {
  return SteinerTripleSystem(triples(), n_, std::move(name));
}

SteinerQuasigroup SteinerQuasigroup::conjugate(const Permutation& t) const {
  check_domain(*this, t);
  auto ti = t.inverse();
  SteinerQuasigroup q;
  q.n_ = n_;
  const std::size_t w = static_cast<std::size_t>(n_) + 1;
  q.table_.assign(w * w, 0);
  for (std::size_t x = 0; x < w; ++x)
    for (std::size_t y = 0; y < w; ++y)
      q.table_[x * w + y] = static_cast<std::uint16_t>(t((*this)(ti(static_cast<std::uint32_t>(x)), ti(static_cast<std::uint32_t>(y)))));
  return q;
}

bool SteinerQuasigroup::is_automorphism(const Permutation& a) const {
  check_domain(*this, a);
  for (int x = 1; x <= n_; ++x)
    for (int y = x + 1; y <= n_; ++y)
      if (static_cast<int>(a((*this)(x, y))) != (*this)(a(x), a(y))) return false;
  return true;
}

int bose_point(int s, int x, int y) {
  const int q = 2 * s + 1;
  return 1 + ((x % q) + q) % q + q * (((y % 3) + 3) % 3);
}

SteinerTripleSystem bose(int s) {
  if (s < 1) throw Error(ErrorCode::InvalidArgument, "Bose systems need s >= 1");
  const int q = 2 * s + 1;
  std::vector<Triple> ts;
  for (int x = 0; x < q; ++x) ts.push_back({bose_point(s, x, 0), bose_point(s, x, 1), bose_point(s, x, 2)});
  for (int y = 0; y < 3; ++y)
    for (int x1 = 0; x1 < q; ++x1)
      for (int x2 = x1 + 1; x2 < q; ++x2)
        ts.push_back({bose_point(s, x1, y), bose_point(s, x2, y), bose_point(s, (x1 + x2) * (s + 1), y + 1)});
  return SteinerTripleSystem(std::move(ts), 3 * q, "bose_s" + std::to_string(s));
}

SteinerTripleSystem projective_sts(const FieldGF2d& f) {
  std::vector<Triple> ts;
  const int n = static_cast<int>(f.size()) - 1;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      int c = a ^ b;
      if (c > b) ts.push_back({a, b, c});
    }
  return SteinerTripleSystem(std::move(ts), n, "pg" + std::to_string(f.size()));
}

SteinerTripleSystem affine_sts(int k) {
  if (k < 1 || k > 8) throw Error(ErrorCode::InvalidArgument, "affine systems need 1 <= k <= 8");
  int n = 1;
  for (int i = 0; i < k; ++i) n *= 3;
  auto third = [k](int a, int b) {
    int c = 0, p = 1;
    for (int i = 0; i < k; ++i) {
      int da = a / p % 3, db = b / p % 3;
      c += ((6 - da - db) % 3) * p;
      p *= 3;
    }
    return c;
  };
  std::vector<Triple> ts;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int c = third(a, b);
      if (c > b) ts.push_back({a + 1, b + 1, c + 1});
    }
  return SteinerTripleSystem(std::move(ts), n, "ag" + std::to_string(k) + "_3");
}

SteinerTripleSystem cyclic_sts_13() {
  std::vector<Triple> ts;
  for (const auto& base : {Triple{0, 1, 4}, Triple{0, 2, 7}})
    for (int i = 0; i < 13; ++i) ts.push_back({(base[0] + i) % 13 + 1, (base[1] + i) % 13 + 1, (base[2] + i) % 13 + 1});
  return SteinerTripleSystem(std::move(ts), 13, "cyclic_sts13");
}

SteinerTripleSystem fano_sts() {
  return SteinerTripleSystem({{1, 2, 4}, {1, 3, 7}, {1, 5, 6}, {2, 3, 5}, {2, 6, 7}, {3, 4, 6}, {4, 5, 7}}, 7, "sts7");
}

Permutation transition(const SteinerQuasigroup& minus, int x, const SteinerQuasigroup& plus) {
  if (minus.order() != plus.order()) throw Error(ErrorCode::DomainMismatch, "quasigroups of different order");
  if (x < 1 || x > minus.order()) throw Error(ErrorCode::UnknownVertex, "point " + std::to_string(x) + " out of range");
  std::vector<std::uint32_t> im(static_cast<std::size_t>(minus.order()) + 1);
  for (int y = 0; y <= minus.order(); ++y) im[y] = static_cast<std::uint32_t>(minus(x, plus(x, y)));
  im[0] = 0;
  return Permutation(std::move(im));
}

Permutation shift_permutation(const SteinerQuasigroup& mu, int x, const Permutation& t) {
  check_domain(mu, t);
  return transition(mu, x, mu.conjugate(t));
}

Permutation transition_from_rows(const Permutation& minus_row, const Permutation& plus_row) {
  return plus_row.then(minus_row);
}

bool is_steiner_surface(const SteinerQuasigroup& minus, const SteinerQuasigroup& plus) {
  return ShiftTable(minus, plus).surface;
}

TransversalReport is_transversal(const SteinerQuasigroup& mu, const Permutation& t,
                                 const std::vector<Permutation>& group_a) {
  check_domain(mu, t);
  auto plus = mu.conjugate(t);
  const int n = mu.order();
  for (const auto& a : group_a) {
    check_domain(mu, a);
    if (!mu.is_automorphism(a) || !plus.is_automorphism(a))
      throw Error(ErrorCode::InvalidArgument, "group generator is not an automorphism of both systems");
  }
  UnionFind orbits(static_cast<std::size_t>(n) + 1);
  for (const auto& a : group_a)
    for (int x = 1; x <= n; ++x) orbits.unite(x, a(x));

  TransversalReport r;
  r.disjoint = true;
  for (const auto& tr : mu.triples())
    if (plus(tr[0], tr[1]) == tr[2]) {
      r.disjoint = false;
      break;
    }
  r.is_transversal = r.disjoint;
  for (int x = 1; x <= n; ++x) {
    if (orbits.find(x) != static_cast<std::uint32_t>(x)) continue;
    PointCycles pc;
    pc.point = x;
    pc.ok = cycles_ok(transition(mu, x, plus), x, n, pc.type);
    r.is_transversal = r.is_transversal && pc.ok;
    r.points.push_back(std::move(pc));
  }
  return r;
}

TransversalReport analyze_transversal(const SteinerQuasigroup& mu, const Permutation& t,
                                      const std::vector<Permutation>& group_a) {
  auto r = is_transversal(mu, t, group_a);
  if (r.is_transversal) {
    auto o = orientability_of_steiner_surface(mu, mu.conjugate(t));
    r.orientable = o.orientable;
    r.orientation = o.orientation;
  }
  return r;
}

OrientabilityResult orientability_of_steiner_surface(const SteinerQuasigroup& minus, const SteinerQuasigroup& plus) {
  ShiftTable st(minus, plus);
  if (!st.surface)
    throw Error(ErrorCode::NotASurface, "transition permutation at point " + std::to_string(st.bad_point) +
                                            " does not have cycle structure 1^1 m^2");
  const int n = st.n;
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
  OrientabilityResult r;
  r.orientable = true;
  std::queue<int> q;
  for (int root = 1; root <= n && r.orientable; ++root) {
    if (pos[root] >= 0) continue;
    pos[root] = 0;
    q.push(root);
    while (!q.empty() && r.orientable) {
      int v = q.front();
      q.pop();
      for (int u = 1; u <= n; ++u) {
        if (u == v) continue;
        bool in = st.orbit(v, u) == pos[v];
        int w = static_cast<int>(st.sigma[u](v));
        int want = in ? st.orbit(w, u) : 1 - st.orbit(w, u);
        if (pos[w] < 0) {
          pos[w] = want;
          q.push(w);
        } else if (pos[w] != want) {
          r.orientable = false;
          r.conflict_point = w;
          break;
        }
      }
    }
  }
  if (!r.orientable) return r;
  Orientation o;
  o.positive.resize(static_cast<std::size_t>(n) + 1);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (y != x && st.orbit(x, y) == pos[x]) o.positive[x].push_back(y);
  if (!is_orientation(minus, plus, o)) throw std::logic_error("propagated orientation fails the orientation condition");
  r.orientation = std::move(o);
  return r;
}

OrientabilityResult orientability_of_steiner_surface(const SteinerQuasigroup& mu, const Permutation& t) {
  check_domain(mu, t);
  return orientability_of_steiner_surface(mu, mu.conjugate(t));
}

bool is_orientation(const SteinerQuasigroup& minus, const SteinerQuasigroup& plus, const Orientation& o) {
  const int n = minus.order();
  if (o.positive.size() != static_cast<std::size_t>(n) + 1) return false;
  ShiftTable st(minus, plus);
  if (!st.surface) return false;
  std::vector<std::int8_t> in((static_cast<std::size_t>(n) + 1) * (n + 1), 0);
  for (int x = 1; x <= n; ++x) {
    if (o.positive[x].size() != static_cast<std::size_t>(n - 1) / 2) return false;
    int side = -1;
    for (int y : o.positive[x]) {
      if (y < 1 || y > n || y == x) return false;
      int s = st.orbit(x, y);
      if (side >= 0 && s != side) return false;
      side = s;
      in[static_cast<std::size_t>(x) * (n + 1) + y] = 1;
    }
  }
  auto member = [&](int u, int v) { return in[static_cast<std::size_t>(v) * (n + 1) + u] != 0; };
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      if (x == y) continue;
      if (member(x, plus(x, y)) != member(x, minus(x, y))) return false;
    }
  return true;
}

Orientation orientation_from_shift(const SteinerQuasigroup& minus, const SteinerQuasigroup& plus, const Permutation& s) {
  check_domain(minus, s);
  ShiftTable st(minus, plus);
  if (!st.surface) throw Error(ErrorCode::NotASurface, "pair is not a Steiner surface");
  const int n = minus.order();
  Orientation o;
  o.positive.resize(static_cast<std::size_t>(n) + 1);
  for (int x = 1; x <= n; ++x) {
    int ref = static_cast<int>(s(x));
    if (ref == x) throw Error(ErrorCode::InvalidArgument, "shift has a fixed point at " + std::to_string(x));
    for (int y = 1; y <= n; ++y)
      if (y != x && st.orbit(x, y) == st.orbit(x, ref)) o.positive[x].push_back(y);
  }
  return o;
}

int compare_orientations(const Orientation& a, const Orientation& b) {
  if (a.positive.size() != b.positive.size()) return 0;
  bool same = true, opposite = true;
  for (std::size_t x = 1; x < a.positive.size(); ++x) {
    if (a.positive[x] == b.positive[x]) opposite = false;
    else same = false;
  }
  if (same) return 1;
  if (opposite) return -1;
  return 0;
}

std::vector<int> facet_orientation(const SteinerQuasigroup& minus, const SteinerQuasigroup& plus, const Orientation& o,
                                   const SimplicialComplex& surface) {
  const int n = minus.order();
  std::vector<int> sign(surface.num_facets(), 0);
  const auto& fs = surface.facets();
  for (int y = 1; y <= n; ++y) {
    std::vector<char> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int x : o.positive[y]) pos[x] = 1;
    for (int x = 1; x <= n; ++x) {
      if (x == y) continue;
      int z = pos[x] ? plus(x, y) : minus(x, y);
      Facet f{x, z, y};
      int s = orientation_sign(f);
      std::sort(f.begin(), f.end());
      auto it = std::lower_bound(fs.begin(), fs.end(), f);
      if (it == fs.end() || *it != f) throw Error(ErrorCode::InvalidArgument, "triangle " + triple_text(x, z, y) + " not in surface");
      auto& slot = sign[static_cast<std::size_t>(it - fs.begin())];
      if (slot != 0 && slot != s)
        throw Error(ErrorCode::InvalidArgument, "inconsistent orientation on triangle " + triple_text(f[0], f[1], f[2]));
      slot = s;
    }
  }
  for (auto s : sign)
    if (!s) throw Error(ErrorCode::InvalidArgument, "orientation leaves a triangle unoriented");
  return sign;
}

SimplicialComplex union_complex(const SteinerQuasigroup& minus, const SteinerQuasigroup& plus, std::string name) {
  std::vector<Facet> fs;
  for (const auto& t : minus.triples()) fs.push_back({t[0], t[1], t[2]});
  for (const auto& t : plus.triples()) fs.push_back({t[0], t[1], t[2]});
  try {
    return SimplicialComplex(std::move(fs), std::move(name));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::RedundantFacet) throw Error(ErrorCode::NotDisjoint, e.what());
    throw;
  }
}

SimplicialComplex steiner_surface(const SteinerQuasigroup& mu, const Permutation& t, std::string name) {
  auto r = is_transversal(mu, t);
  if (!r.disjoint) throw Error(ErrorCode::NotDisjoint, "the system and its image share a triple");
  if (!r.is_transversal) throw Error(ErrorCode::NotTransversal, "permutation is not a transversal");
  return union_complex(mu, mu.conjugate(t), std::move(name));
}

Permutation bose_transversal(int s, TransversalKind kind) {
  if (s < 1) throw Error(ErrorCode::InvalidArgument, "Bose systems need s >= 1");
  if (kind == TransversalKind::Orientable && s % 2)
    throw Error(ErrorCode::OddSOrientable, "the orientable transversal needs s even");
  const int q = 2 * s + 1;
  std::vector<std::uint32_t> im(3 * q + 1, 0);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < 3; ++y) {
      int tx = x, ty = y;
      if (kind == TransversalKind::Orientable) {
        if (y == 1) tx = x + 1, ty = 2;
        if (y == 2) tx = x + 1, ty = 1;
      } else {
        tx = x + y;
      }
      im[bose_point(s, x, y)] = static_cast<std::uint32_t>(bose_point(s, tx, ty));
    }
  return Permutation(std::move(im));
}

std::vector<Permutation> bose_automorphisms(int s) {
  const int q = 2 * s + 1;
  std::vector<std::uint32_t> col(3 * q + 1, 0), row(3 * q + 1, 0);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < 3; ++y) {
      col[bose_point(s, x, y)] = static_cast<std::uint32_t>(bose_point(s, x + 1, y));
      row[bose_point(s, x, y)] = static_cast<std::uint32_t>(bose_point(s, x, y + 1));
    }
  return {Permutation(std::move(col)), Permutation(std::move(row))};
}

Permutation bose_row_shift(int s) { return bose_automorphisms(s)[1]; }

std::vector<Permutation> general_linear_group(int d) {
  if (d < 1 || d > 4) throw Error(ErrorCode::InvalidArgument, "GL(d,2) enumeration supports d <= 4");
  const std::uint32_t n = 1u << d;
  std::vector<Permutation> out;
  std::vector<std::uint32_t> cols(d, 0);
  // columns are images of the basis vectors; accept when the span is everything
  std::function<void(int)> rec = [&](int i) {
    if (i == d) {
      std::vector<std::uint32_t> im(n, 0);
      std::vector<char> seen(n, 0);
      for (std::uint32_t v = 0; v < n; ++v) {
        std::uint32_t y = 0;
        for (int b = 0; b < d; ++b)
          if (v >> b & 1) y ^= cols[b];
        if (seen[y]) return;
        seen[y] = 1;
        im[v] = y;
      }
      out.emplace_back(std::move(im));
      return;
    }
    for (std::uint32_t c = 1; c < n; ++c) {
      cols[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

CosetCensus enumerate_transversal_cosets(const FieldGF2d& f) {
  if (f.degree() > 3) throw Error(ErrorCode::InvalidArgument, "full coset census only for d <= 3");
  const int d = f.degree();
  const std::uint32_t n = f.size();
  auto gl = general_linear_group(d);
  std::vector<std::uint32_t> base(n - 1);
  std::iota(base.begin(), base.end(), 1u);
  std::vector<Permutation> perms;
  do {
    std::vector<std::uint32_t> im(n, 0);
    for (std::uint32_t i = 1; i < n; ++i) im[i] = base[i - 1];
    perms.emplace_back(std::move(im));
  } while (std::next_permutation(base.begin(), base.end()));
  // perms are in lexicographic order, so binary search gives the rank
  auto rank = [&](const Permutation& p) {
    return static_cast<std::uint32_t>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  UnionFind uf(perms.size());
  for (std::uint32_t i = 0; i < perms.size(); ++i)
    for (const auto& g : gl) {
      uf.unite(i, rank(perms[i].then(g)));
      uf.unite(i, rank(g.then(perms[i])));
    }
  auto mu = quasigroup_of(projective_sts(f));
  CosetCensus c;
  c.d = d;
  c.permutations = perms.size();
  c.group_order = gl.size();
  std::map<std::uint32_t, std::size_t> index;
  for (std::uint32_t i = 0; i < perms.size(); ++i) {
    auto root = uf.find(i);
    auto it = index.find(root);
    if (it == index.end()) {
      it = index.emplace(root, c.classes.size()).first;
      CosetClass cls;
      cls.representative = perms[root];
      c.classes.push_back(std::move(cls));
    }
    auto& cls = c.classes[it->second];
    ++cls.size;
    if (perms[i].is_identity()) cls.contains_identity = true;
  }
  for (auto& cls : c.classes) {
    auto r = analyze_transversal(mu, cls.representative);
    cls.transversal = r.is_transversal;
    cls.orientable = r.orientable;
  }
  return c;
}

CosetCensus enumerate_transversal_cosets_d3() { return enumerate_transversal_cosets(FieldGF2d(3)); }

std::vector<SingerClass> singer_normalizer_search(const FieldGF2d& f) {
  const std::uint32_t p = f.size() - 1;
  for (std::uint32_t q = 2; q * q <= p; ++q)
    if (p % q == 0) throw Error(ErrorCode::NotPrimeOrder, std::to_string(p) + " is not prime");
  auto mu = quasigroup_of(projective_sts(f));
  std::vector<Permutation> singer{field_multiplication(f, f.primitive())};
  std::vector<char> done(p, 0);
  std::vector<SingerClass> out;
  for (std::uint32_t r = 1; r < p; ++r) {
    if (done[r]) continue;
    SingerClass cls;
    for (std::uint32_t e = r; !done[e]; e = (2 * e) % p) {
      done[e] = 1;
      cls.exponents.push_back(e);
    }
    std::sort(cls.exponents.begin(), cls.exponents.end());
    cls.size = static_cast<std::size_t>(p) * cls.exponents.size();
    cls.representative = eval_permutation_monomial(f, r);
    auto rep = analyze_transversal(mu, cls.representative, singer);
    cls.transversal = rep.is_transversal;
    cls.orientable = rep.orientable;
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace steinersurf
