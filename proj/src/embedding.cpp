#include "steinersurf/embedding.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "steinersurf/error.hpp"

namespace steinersurf {

namespace {

Triple sorted(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

std::string triple_text(const Triple& t) {
  std::ostringstream os;
  os << t[0] << t[1] << t[2];
  return os.str();
}

}  // namespace

std::array<std::size_t, 3> first_occurrences(const std::vector<int>& cycle, const Triple& t) {
  std::vector<std::pair<std::size_t, int>> first;
  for (int p : t) {
    auto it = std::find(cycle.begin(), cycle.end(), p);
    if (it == cycle.end())
      throw Error(ErrorCode::TripleNotOnCycle, "point " + std::to_string(p) + " of triple " + triple_text(t) + " is not on the cycle");
    first.push_back({static_cast<std::size_t>(it - cycle.begin()), p});
  }
  std::sort(first.begin(), first.end());
  return {first[0].first, first[1].first, first[2].first};
}

std::vector<int> rewrite_orientable(const std::vector<int>& c, const std::array<std::size_t, 3>& pos) {
  auto [i, j, k] = pos;
  std::vector<int> out;
  out.reserve(c.size() + 3);
  int u = c[i], v = c[j], w = c[k];
  out.insert(out.end(), c.begin(), c.begin() + i);  // P
  out.push_back(u);
  out.push_back(v);
  out.insert(out.end(), c.begin() + j + 1, c.begin() + k);  // B
  out.push_back(w);
  out.push_back(u);
  out.insert(out.end(), c.begin() + i + 1, c.begin() + j);  // A
  out.push_back(v);
  out.push_back(w);
  out.insert(out.end(), c.begin() + k + 1, c.end());  // C
  return out;
}

std::vector<int> rewrite_twisted(const std::vector<int>& c, const std::array<std::size_t, 3>& pos) {
  auto [i, j, k] = pos;
  std::vector<int> out;
  out.reserve(c.size() + 3);
  int u = c[i], v = c[j], w = c[k];
  out.push_back(u);
  out.insert(out.end(), c.begin() + i + 1, c.begin() + j);  // A
  out.push_back(v);
  out.push_back(w);
  for (std::size_t t = k; t-- > j + 1;) out.push_back(c[t]);  // B reversed
  out.push_back(v);
  out.push_back(u);
  // C followed by the wrapped prefix, reversed
  std::vector<int> tail(c.begin() + k + 1, c.end());
  tail.insert(tail.end(), c.begin(), c.begin() + i);
  out.insert(out.end(), tail.rbegin(), tail.rend());
  out.push_back(w);
  return out;
}

EmbeddingState start_embedding(const SteinerTripleSystem& sts, int star_vertex, std::vector<Triple> star_order,
                               std::vector<Triple> triple_order, bool orientable) {
  const int n = sts.order();
  if (star_vertex < 1 || star_vertex > n)
    throw Error(ErrorCode::InvalidArgument, "star vertex " + std::to_string(star_vertex) + " out of range");
  std::set<Triple> star, rest;
  for (const auto& t : sts.triples()) {
    if (std::find(t.begin(), t.end(), star_vertex) != t.end()) star.insert(t);
    else rest.insert(t);
  }
  if (star_order.empty()) star_order.assign(star.begin(), star.end());
  if (triple_order.empty()) triple_order.assign(rest.begin(), rest.end());

  std::set<Triple> seen;
  for (const auto& t : star_order) {
    if (!star.count(sorted(t)) || !seen.insert(sorted(t)).second)
      throw Error(ErrorCode::InvalidArgument, "star order must list each triple through the star vertex once");
  }
  if (seen.size() != star.size()) throw Error(ErrorCode::InvalidArgument, "star order misses a triple");
  seen.clear();
  for (const auto& t : triple_order) {
    if (!rest.count(sorted(t)) || !seen.insert(sorted(t)).second)
      throw Error(ErrorCode::InvalidArgument, "triple order must list each remaining triple once");
  }
  if (seen.size() != rest.size()) throw Error(ErrorCode::InvalidArgument, "triple order misses a triple");
  if (!orientable && triple_order.empty())
    throw Error(ErrorCode::InvalidArgument, "the non-orientable variant needs a triple outside the star");

  EmbeddingState s;
  s.n = n;
  s.star_vertex = star_vertex;
  s.star_order = star_order;
  s.pending = std::move(triple_order);
  s.orientable = orientable;
  for (const auto& t : star_order) {
    s.cycle.push_back(star_vertex);
    for (int p : t)
      if (p != star_vertex) s.cycle.push_back(p);
  }
  s.history.push_back(s.cycle);
  return s;
}

void insert_next(EmbeddingState& s, const OccurrenceSelector& selector) {
  if (s.pending.empty()) throw Error(ErrorCode::InvalidArgument, "no pending triple");
  Triple t = s.pending.front();
  auto pos = selector ? selector(s.cycle, t) : first_occurrences(s.cycle, t);
  if (!(pos[0] < pos[1] && pos[1] < pos[2] && pos[2] < s.cycle.size()))
    throw Error(ErrorCode::TripleNotOnCycle, "selected occurrences are not increasing positions on the cycle");
  Triple at{s.cycle[pos[0]], s.cycle[pos[1]], s.cycle[pos[2]]};
  if (sorted(at) != sorted(t))
    throw Error(ErrorCode::TripleNotOnCycle, "selected occurrences do not spell triple " + triple_text(t));
  bool twist = !s.orientable && s.pending.size() == 1;
  s.cycle = twist ? rewrite_twisted(s.cycle, pos) : rewrite_orientable(s.cycle, pos);
  s.pending.erase(s.pending.begin());
  s.inserted.push_back(t);
  ++s.handles;
  s.history.push_back(s.cycle);
}

EmbeddingState embed_max_genus(const SteinerTripleSystem& sts, const EmbedOptions& opts) {
  auto s = start_embedding(sts, opts.star_vertex, opts.star_order, opts.triple_order, opts.orientable);
  while (!s.pending.empty()) insert_next(s, opts.selector);
  return s;
}

bool is_eulerian_boundary(const std::vector<int>& c, int n) {
  const std::size_t want = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (c.size() != want) return false;
  std::set<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int a = c[i], b = c[(i + 1) % c.size()];
    if (a == b) return false;
    if (!pairs.insert({std::min(a, b), std::max(a, b)}).second) return false;
  }
  return true;
}

std::string cycle_word(const std::vector<int>& c) {
  bool compact = std::all_of(c.begin(), c.end(), [](int v) { return v < 10; });
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!compact && i) os << ' ';
    os << c[i];
  }
  return os.str();
}

CompletedEmbedding complete_to_triangulation(const EmbeddingState& s, std::string name) {
  if (!s.pending.empty())
    throw Error(ErrorCode::IncompleteCycle, std::to_string(s.pending.size()) + " triples not yet inserted");
  if (!is_eulerian_boundary(s.cycle, s.n)) throw Error(ErrorCode::IncompleteCycle, "boundary word is not an Eulerian cycle of K_n");
  const int n = s.n;
  const int len = static_cast<int>(s.cycle.size());
  std::vector<Facet> fs;
  for (const auto& t : s.star_order) fs.push_back({t[0], t[1], t[2]});
  for (const auto& t : s.inserted) fs.push_back({t[0], t[1], t[2]});
  std::vector<int> inner(len);
  for (int i = 0; i < len; ++i) inner[i] = n + 1 + i;
  const int apex = n + len + 1;
  for (int i = 0; i < len; ++i) {
    int j = (i + 1) % len;
    fs.push_back({s.cycle[i], s.cycle[j], inner[i]});
    fs.push_back({s.cycle[j], inner[i], inner[j]});
    fs.push_back({inner[i], inner[j], apex});
  }
  std::int64_t l = len;
  CompletedEmbedding out{SimplicialComplex(std::move(fs), std::move(name)),
                         s.cycle,
                         inner,
                         apex,
                         s.orientable,
                         s.orientable ? (n - 1) * (n - 3) / 6 : (n - 1) * (n - 3) / 3,
                         FVector{{n + l + 1, 5 * l, l / 3 + 3 * l}}};
  return out;
}

Coloring collar_coloring(const CompletedEmbedding& c, const SteinerTripleSystem& sts, const Coloring& base) {
  auto problem = make_coloring_problem(sts.to_complex(), std::max(base.k, 1));
  try {
    auto v = verify_coloring(problem, base);
    if (!v.valid) throw Error(ErrorCode::InvalidBaseColoring, "base coloring has a monochromatic triple");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidBaseColoring) throw;
    throw Error(ErrorCode::InvalidBaseColoring, e.what());
  }
  const auto& w = c.outer;
  const std::size_t len = w.size();
  auto col = [&](int v) { return base.assignment.at(v); };
  // allowed(i, a): c_i = a keeps {w_i, w_{i+1}, c_i} non-monochromatic
  auto allowed = [&](std::size_t i, int a) {
    int x = col(w[i]), y = col(w[(i + 1) % len]);
    return !(x == a && y == a);
  };
  // step(i, a, b): c_i = a, c_{i+1} = b keeps {w_{i+1}, c_i, c_{i+1}} fine
  auto step = [&](std::size_t i, int a, int b) { return a != b || col(w[(i + 1) % len]) != a; };

  std::vector<int> colors;
  for (int first : {1, 2}) {
    if (!allowed(0, first)) continue;
    // reach[i][a]: some valid prefix ends with c_i = a
    std::vector<std::array<int, 3>> from(len, {0, 0, 0});
    std::vector<std::array<bool, 3>> reach(len, {false, false, false});
    reach[0][first] = true;
    for (std::size_t i = 0; i + 1 < len; ++i)
      for (int a : {1, 2}) {
        if (!reach[i][a]) continue;
        // prefer keeping the current color
        for (int b : {a, 3 - a})
          if (allowed(i + 1, b) && step(i, a, b) && !reach[i + 1][b]) {
            reach[i + 1][b] = true;
            from[i + 1][b] = a;
          }
      }
    for (int last : {1, 2}) {
      if (!reach[len - 1][last] || !step(len - 1, last, first)) continue;
      colors.assign(len, 0);
      colors[len - 1] = last;
      for (std::size_t i = len - 1; i > 0; --i) colors[i - 1] = from[i][colors[i]];
      break;
    }
    if (!colors.empty()) break;
  }
  if (colors.empty()) throw std::logic_error("no two-color collar exists");

  Coloring out;
  out.k = std::max(base.k, 3);
  for (int v = 1; v <= sts.order(); ++v) out.assignment[v] = col(v);
  for (std::size_t i = 0; i < len; ++i) out.assignment[c.inner[i]] = colors[i];
  out.assignment[c.apex] = 3;
  if (!verify_coloring(make_coloring_problem(c.complex, out.k), out).valid)
    throw std::logic_error("collar coloring failed verification");
  return out;
}

}  // namespace steinersurf
