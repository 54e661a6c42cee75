#include "steinersurf/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "steinersurf/error.hpp"
#include "steinersurf/sat.hpp"

namespace steinersurf {

namespace {

using Clock = std::chrono::steady_clock;

void subsets(const Facet& f, std::size_t size, std::size_t start, Facet& cur, std::vector<Facet>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (size - cur.size()) <= f.size(); ++i) {
    cur.push_back(f[i]);
    subsets(f, size, i + 1, cur, out);
    cur.pop_back();
  }
}

// Immutable view of the instance in dense indices.
struct Structure {
  int n = 0;
  int k = 0;
  std::vector<Vertex> labels;
  std::vector<std::vector<std::pair<int, int>>> inc;  // other two vertices of each triple
  std::vector<std::array<int, 3>> triples;
};

using Assignment = std::vector<std::pair<int, int>>;  // (vertex index, color)

struct Shared {
  std::atomic<bool> stop{false};
  std::atomic<bool> found{false};
  std::atomic<bool> limited{false};
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t node_limit = 0;
  double time_limit = 0;
  Clock::time_point start;
  std::mutex mu;
  std::vector<int> witness;
};

// Set of search depths, used for conflict sets.
class DepthSet {
 public:
  explicit DepthSet(std::size_t n = 0) : w_((n + 64) / 64, 0) {}
  void add(std::size_t d) { w_[d >> 6] |= std::uint64_t{1} << (d & 63); }
  void remove(std::size_t d) { w_[d >> 6] &= ~(std::uint64_t{1} << (d & 63)); }
  void merge(const DepthSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }
  // highest member, 0 when empty (depth 0 is the fixed prefix)
  std::size_t top() const {
    for (std::size_t i = w_.size(); i-- > 0;)
      if (w_[i]) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(w_[i]));
    return 0;
  }

 private:
  std::vector<std::uint64_t> w_;
};

class Engine {
 public:
  Engine(const Structure& s, Shared& shared, bool backjump)
      : s_(s),
        sh_(shared),
        backjump_(backjump),
        color_(s.n, 0),
        depth_(s.n, 0),
        reach_(s.n, 0),
        block_(static_cast<std::size_t>(s.n) * (s.k + 1), 0),
        mask_(s.n, 0),
        conflict_(s.n + 1) {}

  enum class Result { Found, Exhausted, Stopped };

  // Runs the DFS below the given prefix. With collect set, nodes at the given
  // depth below the prefix are recorded instead of being expanded.
  Result run(const Assignment& prefix, std::vector<Assignment>* collect = nullptr, std::size_t collect_depth = 0) {
    for (auto [v, c] : prefix) assign(v, c);
    maxc_ = 0;
    for (auto [v, c] : prefix) maxc_ = std::max(maxc_, c);
    Result r = dfs(prefix, collect, collect_depth);
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) unassign(it->first, it->second);
    return r;
  }

  SearchStats stats;

 private:
  struct Frame {
    int v;
    std::uint64_t remaining;
    int saved_maxc;
    int color;
    DepthSet conflict;
  };

  void assign(int v, int c) {
    color_[v] = c;
    for (auto [a, b] : s_.inc[v]) {
      int ca = color_[a], cb = color_[b];
      if (ca && !cb) touch(b, ca, c, +1);
      else if (cb && !ca) touch(a, cb, c, +1);
    }
  }

  void unassign(int v, int c) {
    for (auto [a, b] : s_.inc[v]) {
      int ca = color_[a], cb = color_[b];
      if (ca && !cb) touch(b, ca, c, -1);
      else if (cb && !ca) touch(a, cb, c, -1);
    }
    color_[v] = 0;
  }

  // w is the uncolored vertex of a triple whose other two now have colors c1, c2
  void touch(int w, int c1, int c2, int delta) {
    reach_[w] += delta;
    if (c1 != c2) return;
    int& cnt = block_[static_cast<std::size_t>(w) * (s_.k + 1) + c1];
    cnt += delta;
    if (delta > 0 && cnt == 1) mask_[w] |= std::uint64_t{1} << c1;
    if (delta < 0 && cnt == 0) mask_[w] &= ~(std::uint64_t{1} << c1);
  }

  std::uint64_t range() const {
    int lim = std::min(s_.k, maxc_ + 1);
    return ((std::uint64_t{1} << (lim + 1)) - 1) & ~std::uint64_t{1};
  }

  enum class Pick { Branch, Dead, Solved };

  Pick select(int& v_out, std::uint64_t& mask_out) {
    int best = -1;
    int best_cnt = 1 << 30;
    std::uint64_t best_mask = 0;
    const std::uint64_t r = range();
    bool any_uncolored = false;
    for (int v = 0; v < s_.n; ++v) {
      if (color_[v] || s_.inc[v].empty()) continue;
      any_uncolored = true;
      if (!reach_[v]) continue;
      std::uint64_t m = r & ~mask_[v];
      int cnt = std::popcount(m);
      if (cnt == 0) {
        v_out = v;
        return Pick::Dead;
      }
      if (cnt < best_cnt) {
        best_cnt = cnt;
        best = v;
        best_mask = m;
      }
    }
    if (!any_uncolored) return Pick::Solved;
    if (best < 0) {
      ++stats.unreachable_branches;
      for (int v = 0; v < s_.n; ++v)
        if (!color_[v] && !s_.inc[v].empty()) {
          best = v;
          break;
        }
      best_mask = r & ~mask_[best];
    }
    v_out = best;
    mask_out = best_mask;
    return Pick::Branch;
  }

  // Adds to out the depths of blocking pairs for every color of w in colors.
  // A wipeout needs all k colors in use, and colors skipped by the symmetry
  // rule are unused, so that rule never contributes a reason.
  void explain(int w, std::uint64_t colors, DepthSet& out) const {
    for (int c = 1; c <= s_.k; ++c) {
      if (!(colors >> c & 1)) continue;
      int best = -1, da = 0, db = 0;
      for (auto [a, b] : s_.inc[w]) {
        if (color_[a] != c || color_[b] != c) continue;
        int d = std::max(depth_[a], depth_[b]);
        if (best < 0 || d < best) {
          best = d;
          da = depth_[a];
          db = depth_[b];
        }
      }
      if (best < 0) throw std::logic_error("blocked color without a blocking pair");
      if (da > 0) out.add(static_cast<std::size_t>(da));
      if (db > 0) out.add(static_cast<std::size_t>(db));
    }
  }

  void explain_wipeout(int w, std::size_t frames) {
    conflict_.clear();
    if (!backjump_) {
      for (std::size_t d = 1; d <= frames; ++d) conflict_.add(d);
      return;
    }
    explain(w, range(), conflict_);
  }

  bool should_stop() {
    if (sh_.stop.load(std::memory_order_relaxed)) return true;
    if ((stats.nodes & 1023) == 0) {
      if (sh_.node_limit && sh_.nodes.load(std::memory_order_relaxed) >= sh_.node_limit) {
        sh_.limited = true;
        sh_.stop = true;
        return true;
      }
      if (sh_.time_limit > 0 &&
          std::chrono::duration<double>(Clock::now() - sh_.start).count() >= sh_.time_limit) {
        sh_.limited = true;
        sh_.stop = true;
        return true;
      }
    }
    return false;
  }

  void pop(std::vector<Frame>& stack) {
    Frame& f = stack.back();
    if (f.color) {
      unassign(f.v, f.color);
      depth_[f.v] = 0;
      maxc_ = f.saved_maxc;
    }
    stack.pop_back();
  }

  Result dfs(const Assignment& prefix, std::vector<Assignment>* collect, std::size_t collect_depth) {
    std::vector<Frame> stack;
    const std::size_t base = prefix.size();
    for (;;) {
      if (should_stop()) {
        while (!stack.empty()) pop(stack);
        return Result::Stopped;
      }
      if (collect && collect_depth > 0 && stack.size() == collect_depth) {
        Assignment a = prefix;
        for (const auto& f : stack) a.push_back({f.v, f.color});
        collect->push_back(std::move(a));
        conflict_.clear();
        for (std::size_t d = 1; d <= stack.size(); ++d) conflict_.add(d);
      } else {
        int v = -1;
        std::uint64_t m = 0;
        switch (select(v, m)) {
          case Pick::Solved:
            publish();
            while (!stack.empty()) pop(stack);
            return Result::Found;
          case Pick::Dead:
            ++stats.dead_ends;
            explain_wipeout(v, stack.size());
            break;
          case Pick::Branch:
            stack.push_back({v, m, maxc_, 0, DepthSet(static_cast<std::size_t>(s_.n) + 1)});
            if (backjump_) explain(v, range() & ~m, stack.back().conflict);
            stats.max_depth = std::max(stats.max_depth, base + stack.size());
            conflict_.clear();
            conflict_.add(stack.size());
            break;
        }
      }
      // jump to the deepest frame in the conflict set and try its next color;
      // exhausted frames pass their accumulated conflicts further up
      for (;;) {
        std::size_t target = conflict_.top();
        if (target == 0) {
          while (!stack.empty()) pop(stack);
          return Result::Exhausted;
        }
        while (stack.size() > target) pop(stack);
        Frame& top = stack.back();
        conflict_.remove(target);
        top.conflict.merge(conflict_);
        if (top.color) {
          unassign(top.v, top.color);
          top.color = 0;
          maxc_ = top.saved_maxc;
        }
        if (!top.remaining) {
          conflict_ = top.conflict;
          depth_[top.v] = 0;
          stack.pop_back();
          continue;
        }
        int c = std::countr_zero(top.remaining);
        top.remaining &= top.remaining - 1;
        top.color = c;
        assign(top.v, c);
        depth_[top.v] = static_cast<int>(stack.size());
        maxc_ = std::max(maxc_, c);
        ++stats.nodes;
        sh_.nodes.fetch_add(1, std::memory_order_relaxed);
        break;
      }
    }
  }

  void publish() {
    std::lock_guard<std::mutex> lock(sh_.mu);
    if (sh_.found) return;
    sh_.witness = color_;
    for (int v = 0; v < s_.n; ++v)
      if (!sh_.witness[v]) sh_.witness[v] = 1;
    sh_.found = true;
    sh_.stop = true;
  }

  const Structure& s_;
  Shared& sh_;
  bool backjump_;
  std::vector<int> color_;
  std::vector<int> depth_;  // frame depth of each colored vertex, 0 for the prefix
  std::vector<int> reach_;
  std::vector<int> block_;
  std::vector<std::uint64_t> mask_;
  DepthSet conflict_;
  int maxc_ = 0;
};

void merge_stats(SearchStats& into, const SearchStats& s) {
  into.nodes += s.nodes;
  into.dead_ends += s.dead_ends;
  into.unreachable_branches += s.unreachable_branches;
  into.max_depth = std::max(into.max_depth, s.max_depth);
}

std::string facet_text(const Facet& f) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << "}";
  return os.str();
}

}  // namespace

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Colorable: return "colorable";
    case SearchStatus::NotColorable: return "not_colorable";
    case SearchStatus::Unknown: return "unknown";
  }
  return "unknown";
}

ColoringProblem make_coloring_problem(const SimplicialComplex& k, int colors, int s, std::vector<Facet> removed) {
  if (s < 1) throw Error(ErrorCode::InvalidArgument, "s must be at least 1");
  ColoringProblem p;
  p.k = colors;
  p.s = s;
  p.dimension = k.dimension();
  p.vertices = k.vertices();
  p.name = k.name();
  for (auto& f : removed) {
    std::sort(f.begin(), f.end());
    if (!k.has_facet(f)) throw Error(ErrorCode::InvalidArgument, "removed facet " + facet_text(f) + " is not a facet");
  }
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  p.removed_facets = removed;
  Facet cur;
  for (const auto& f : k.facets()) {
    if (std::binary_search(removed.begin(), removed.end(), f)) continue;
    subsets(f, static_cast<std::size_t>(s) + 1, 0, cur, p.constraints);
  }
  std::sort(p.constraints.begin(), p.constraints.end());
  p.constraints.erase(std::unique(p.constraints.begin(), p.constraints.end()), p.constraints.end());
  return p;
}

ColoringProblem make_coloring_problem(std::vector<Vertex> vertices, std::vector<Facet> constraints, int colors, int s) {
  ColoringProblem p;
  p.k = colors;
  p.s = s;
  p.dimension = s;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (auto& c : constraints) {
    std::sort(c.begin(), c.end());
    if (c.size() != static_cast<std::size_t>(s) + 1)
      throw Error(ErrorCode::InvalidArgument, "constraint " + facet_text(c) + " has the wrong size");
    for (auto v : c)
      if (!std::binary_search(vertices.begin(), vertices.end(), v))
        throw Error(ErrorCode::UnknownVertex, "constraint vertex " + std::to_string(v) + " not in vertex set");
  }
  std::sort(constraints.begin(), constraints.end());
  constraints.erase(std::unique(constraints.begin(), constraints.end()), constraints.end());
  p.vertices = std::move(vertices);
  p.constraints = std::move(constraints);
  return p;
}

VerifyResult verify_coloring(const ColoringProblem& p, const Coloring& c) {
  for (auto v : p.vertices) {
    auto it = c.assignment.find(v);
    if (it == c.assignment.end())
      throw Error(ErrorCode::PartialColoring, "vertex " + std::to_string(v) + " has no color");
    if (it->second < 1 || (c.k > 0 && it->second > c.k))
      throw Error(ErrorCode::InvalidArgument, "color of vertex " + std::to_string(v) + " out of range");
  }
  VerifyResult r;
  for (const auto& t : p.constraints) {
    int col = c.assignment.at(t[0]);
    bool mono = true;
    for (std::size_t i = 1; i < t.size() && mono; ++i) mono = c.assignment.at(t[i]) == col;
    if (mono) {
      r.valid = false;
      r.violation = t;
      return r;
    }
  }
  return r;
}

namespace {

SearchOutcome backtrack_search(const ColoringProblem& p, const Facet& start, const SearchOptions& opts) {
  auto t0 = Clock::now();
  SearchOutcome out;
  out.stats.threads = std::max(1, opts.threads);
  out.stats.engine = "backtrack";

  Structure st;
  st.n = static_cast<int>(p.vertices.size());
  st.k = p.k;
  st.labels = p.vertices;
  st.inc.resize(st.n);
  auto index = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(p.vertices.begin(), p.vertices.end(), v) - p.vertices.begin());
  };
  for (const auto& t : p.constraints) {
    std::array<int, 3> a{index(t[0]), index(t[1]), index(t[2])};
    st.triples.push_back(a);
    st.inc[a[0]].push_back({a[1], a[2]});
    st.inc[a[1]].push_back({a[0], a[2]});
    st.inc[a[2]].push_back({a[0], a[1]});
  }

  auto finish = [&](SearchStatus status, const std::vector<int>* colors) {
    out.status = status;
    if (colors) {
      Coloring c;
      c.k = p.k;
      for (int v = 0; v < st.n; ++v) c.assignment[st.labels[v]] = (*colors)[v];
      if (!verify_coloring(p, c).valid) throw std::logic_error("search produced an invalid coloring");
      out.witness = std::move(c);
    }
    out.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return out;
  };

  if (st.triples.empty()) {
    std::vector<int> ones(st.n, 1);
    return finish(SearchStatus::Colorable, &ones);
  }

  int a = index(start[0]), b = index(start[1]), c = index(start[2]);
  std::vector<Assignment> seeds = {
      {{a, 1}, {b, 1}, {c, 2}},
      {{a, 1}, {b, 2}, {c, 1}},
      {{a, 2}, {b, 1}, {c, 1}},
  };
  if (p.k >= 3) seeds.push_back({{a, 1}, {b, 2}, {c, 3}});

  Shared sh;
  sh.node_limit = opts.node_limit;
  sh.time_limit = opts.time_limit;
  sh.start = t0;

  std::vector<Assignment> tasks = seeds;
  const int threads = out.stats.threads;
  if (threads > 1) {
    // split the tree into enough independent subtrees to keep workers busy
    for (std::size_t depth = 1; depth <= 16 && tasks.size() < static_cast<std::size_t>(8 * threads); ++depth) {
      std::vector<Assignment> next;
      Engine e(st, sh, opts.backjumping);
      for (const auto& seed : seeds) {
        auto r = e.run(seed, &next, depth);
        if (r != Engine::Result::Exhausted) break;
      }
      merge_stats(out.stats, e.stats);
      if (sh.found) return finish(SearchStatus::Colorable, &sh.witness);
      if (sh.limited) return finish(SearchStatus::Unknown, nullptr);
      tasks = std::move(next);
      if (tasks.empty()) return finish(SearchStatus::NotColorable, nullptr);
    }
  }

  std::atomic<std::size_t> cursor{0};
  std::vector<SearchStats> per(threads);
  auto worker = [&](int id) {
    Engine e(st, sh, opts.backjumping);
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size() || sh.stop) break;
      if (e.run(tasks[i]) == Engine::Result::Stopped) break;
    }
    per[id] = e.stats;
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker, i);
    for (auto& t : pool) t.join();
  }
  for (const auto& s : per) merge_stats(out.stats, s);
  if (sh.found) return finish(SearchStatus::Colorable, &sh.witness);
  if (sh.limited) return finish(SearchStatus::Unknown, nullptr);
  return finish(SearchStatus::NotColorable, nullptr);
}

// One-hot encoding: variable v*k+c means vertex v gets color c. No
// at-most-one clauses; decoding takes the least true color, which keeps
// every constraint non-monochromatic. The solver persists across calls, so
// a stopped run resumes with its learned clauses.
class ClauseRunner {
 public:
  ClauseRunner(const ColoringProblem& p, const Facet& start) : p_(p), k_(p.k) {
    const int n = static_cast<int>(p.vertices.size());
    for (int i = 0; i < n * k_; ++i) sat_.new_var();
    for (int v = 0; v < n; ++v) {
      std::vector<int> alo;
      for (int c = 1; c <= k_; ++c) alo.push_back(var(v, c));
      sat_.add_clause(alo);
    }
    for (const auto& t : p.constraints) {
      int a = index(t[0]), b = index(t[1]), c = index(t[2]);
      for (int col = 1; col <= k_; ++col) sat_.add_clause({-var(a, col), -var(b, col), -var(c, col)});
    }
    int a = index(start[0]), b = index(start[1]), c = index(start[2]);
    seeds_ = {
        {var(a, 1), var(b, 1), var(c, 2)},
        {var(a, 1), var(b, 2), var(c, 1)},
        {var(a, 2), var(b, 1), var(c, 1)},
    };
    if (k_ >= 3) seeds_.push_back({var(a, 1), var(b, 2), var(c, 3)});
  }

  // decisions and seconds bound this call; 0 = unbounded
  SearchStatus run(std::uint64_t decisions, double seconds) {
    auto t0 = Clock::now();
    const std::uint64_t d0 = sat_.stats().decisions;
    while (next_ < seeds_.size()) {
      SatSolver::Limits lim;
      if (decisions) {
        std::uint64_t used = sat_.stats().decisions - d0;
        if (used >= decisions) return SearchStatus::Unknown;
        lim.decisions = decisions - used;
      }
      if (seconds > 0) {
        double left = seconds - std::chrono::duration<double>(Clock::now() - t0).count();
        if (left <= 0) return SearchStatus::Unknown;
        lim.seconds = left;
      }
      auto r = sat_.solve(seeds_[next_], lim);
      if (r == SatSolver::Result::Unknown) return SearchStatus::Unknown;
      if (r == SatSolver::Result::Sat) {
        witness_.k = k_;
        for (int v = 0; v < static_cast<int>(p_.vertices.size()); ++v) {
          int chosen = 0;
          for (int c = 1; c <= k_ && !chosen; ++c)
            if (sat_.model_value(var(v, c))) chosen = c;
          witness_.assignment[p_.vertices[v]] = chosen;
        }
        if (!verify_coloring(p_, witness_).valid) throw std::logic_error("clause search produced an invalid coloring");
        return SearchStatus::Colorable;
      }
      ++next_;
    }
    return SearchStatus::NotColorable;
  }

  const Coloring& witness() const { return witness_; }
  const SatSolver::Stats& stats() const { return sat_.stats(); }

 private:
  int index(Vertex v) const {
    return static_cast<int>(std::lower_bound(p_.vertices.begin(), p_.vertices.end(), v) - p_.vertices.begin());
  }
  int var(int v, int c) const { return v * k_ + c; }

  const ColoringProblem& p_;
  int k_;
  SatSolver sat_;
  std::vector<std::vector<int>> seeds_;
  std::size_t next_ = 0;
  Coloring witness_;
};

}  // namespace

SearchOutcome search_coloring(const ColoringProblem& p, const SearchOptions& opts) {
  if (p.s != 2) throw Error(ErrorCode::UnsupportedS, "search supports s=2 only");
  if (p.dimension < 2) throw Error(ErrorCode::NotPure, "search needs a pure complex of dimension >= 2");
  if (p.k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
  if (p.k > 63) throw Error(ErrorCode::InvalidArgument, "k above 63 is not supported");

  Facet start;
  if (!p.constraints.empty()) start = p.constraints.front();
  if (opts.start_triple) {
    start = *opts.start_triple;
    std::sort(start.begin(), start.end());
    if (!std::binary_search(p.constraints.begin(), p.constraints.end(), start))
      throw Error(ErrorCode::InvalidArgument, "start triple " + facet_text(start) + " is not a constraint");
  }
  if (p.constraints.empty() || opts.engine == SearchEngine::Backtrack) return backtrack_search(p, start, opts);

  auto t0 = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - t0).count(); };
  SearchOutcome out;
  ClauseRunner clause(p, start);
  std::uint64_t bt_nodes = 0;
  auto finish = [&](SearchStatus status, std::optional<Coloring> witness) {
    out.status = status;
    out.witness = std::move(witness);
    out.stats.nodes = bt_nodes + clause.stats().decisions;
    out.stats.dead_ends += clause.stats().conflicts;
    out.stats.conflicts = clause.stats().learnt;
    out.stats.seconds = elapsed();
    if (out.stats.engine.empty()) out.stats.engine = "clause";
    return out;
  };

  if (opts.engine == SearchEngine::Clause) {
    auto r = clause.run(opts.node_limit, opts.time_limit);
    std::optional<Coloring> w;
    if (r == SearchStatus::Colorable) w = clause.witness();
    return finish(r, std::move(w));
  }

  // Auto: alternate restarted backtracking rounds with growing node budgets
  // and clause-learning slices of equal wall time.
  out.stats.engine = "backtrack";
  std::uint64_t budget = std::max<std::uint64_t>(opts.switch_nodes, 1);
  for (;;) {
    SearchOptions round = opts;
    round.node_limit = budget;
    if (opts.node_limit) {
      std::uint64_t used = bt_nodes + clause.stats().decisions;
      if (used >= opts.node_limit) return finish(SearchStatus::Unknown, std::nullopt);
      round.node_limit = std::min(budget, opts.node_limit - used);
    }
    if (opts.time_limit > 0) {
      round.time_limit = opts.time_limit - elapsed();
      if (round.time_limit <= 0) return finish(SearchStatus::Unknown, std::nullopt);
    }
    auto bt = backtrack_search(p, start, round);
    bt_nodes += bt.stats.nodes;
    out.stats.dead_ends += bt.stats.dead_ends;
    out.stats.unreachable_branches += bt.stats.unreachable_branches;
    out.stats.max_depth = std::max(out.stats.max_depth, bt.stats.max_depth);
    out.stats.threads = bt.stats.threads;
    if (bt.status != SearchStatus::Unknown) return finish(bt.status, std::move(bt.witness));

    out.stats.engine = "backtrack+clause";
    double slice = std::max(bt.stats.seconds, 0.05);
    if (opts.time_limit > 0) slice = std::min(slice, opts.time_limit - elapsed());
    std::uint64_t decisions = 0;
    if (opts.node_limit) {
      std::uint64_t used = bt_nodes + clause.stats().decisions;
      if (used >= opts.node_limit) return finish(SearchStatus::Unknown, std::nullopt);
      decisions = opts.node_limit - used;
    }
    if (slice <= 0) return finish(SearchStatus::Unknown, std::nullopt);
    auto r = clause.run(decisions, slice);
    if (r == SearchStatus::Colorable) return finish(r, clause.witness());
    if (r == SearchStatus::NotColorable) return finish(r, std::nullopt);
    budget *= 4;
  }
}

ChromaticResult chromatic_number(const SimplicialComplex& k, int s, int k_max, const SearchOptions& opts) {
  if (k_max < 2) throw Error(ErrorCode::InvalidArgument, "k_max must be at least 2");
  ChromaticResult r;
  r.k_max = k_max;
  for (int colors = 2; colors <= k_max; ++colors) {
    auto out = search_coloring(make_coloring_problem(k, colors, s), opts);
    r.runs.push_back(out);
    if (out.status == SearchStatus::Colorable) {
      r.value = colors;
      break;
    }
    if (out.status == SearchStatus::Unknown) {
      r.undecided = true;
      break;
    }
  }
  return r;
}

Coloring merge_color_classes(const SimplicialComplex& k, const Coloring& c) {
  auto strong = make_coloring_problem(k, c.k, 1);
  auto check = verify_coloring(strong, c);
  if (!check.valid)
    throw Error(ErrorCode::NotStrongColoring, "edge " + facet_text(*check.violation) + " is monochromatic");
  Coloring out;
  out.k = (c.k + 1) / 2;
  for (const auto& [v, col] : c.assignment) out.assignment[v] = (col + 1) / 2;
  return out;
}

}  // namespace steinersurf
