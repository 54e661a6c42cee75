#include "steinersurf/sat.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>

#include "steinersurf/error.hpp"

namespace steinersurf {

namespace {

using Lit = int;  // 2 * var + negated, var 0-based
constexpr Lit kNoLit = -1;
constexpr int kNoReason = -1;

Lit neg(Lit p) { return p ^ 1; }
int var_of(Lit p) { return p >> 1; }

// Luby sequence 1,1,2,1,1,2,4,...
double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

struct Clause {
  std::vector<Lit> lits;
  bool learnt = false;
  bool deleted = false;
  double activity = 0;
};

struct Watcher {
  int cref;
  Lit blocker;
};

}  // namespace

struct SatSolver::Impl {
  bool ok = true;
  std::vector<Clause> clauses;
  std::vector<int> learnts;
  std::vector<std::vector<Watcher>> watches;  // indexed by the watched literal
  std::vector<signed char> assign;            // per var: 0, +1, -1
  std::vector<int> level;
  std::vector<int> reason;
  std::vector<char> phase;  // saved polarity, 1 = true
  std::vector<char> seen;
  std::vector<double> activity;
  std::vector<Lit> trail;
  std::vector<int> trail_lim;
  std::size_t qhead = 0;
  std::vector<char> model;
  double var_inc = 1, cla_inc = 1;
  double max_learnts = 0;
  Stats stats;

  // indexed binary max-heap on activity
  std::vector<int> heap;
  std::vector<int> heap_pos;

  int nvars() const { return static_cast<int>(assign.size()); }
  int decision_level() const { return static_cast<int>(trail_lim.size()); }

  int value(Lit p) const {
    int v = assign[var_of(p)];
    return (p & 1) ? -v : v;
  }

  bool heap_less(int a, int b) const { return activity[a] > activity[b]; }

  void heap_up(std::size_t i) {
    int x = heap[i];
    while (i > 0) {
      std::size_t parent = (i - 1) / 2;
      if (!heap_less(x, heap[parent])) break;
      heap[i] = heap[parent];
      heap_pos[heap[i]] = static_cast<int>(i);
      i = parent;
    }
    heap[i] = x;
    heap_pos[x] = static_cast<int>(i);
  }

  void heap_down(std::size_t i) {
    int x = heap[i];
    for (;;) {
      std::size_t child = 2 * i + 1;
      if (child >= heap.size()) break;
      if (child + 1 < heap.size() && heap_less(heap[child + 1], heap[child])) ++child;
      if (!heap_less(heap[child], x)) break;
      heap[i] = heap[child];
      heap_pos[heap[i]] = static_cast<int>(i);
      i = child;
    }
    heap[i] = x;
    heap_pos[x] = static_cast<int>(i);
  }

  void heap_insert(int v) {
    if (heap_pos[v] >= 0) return;
    heap.push_back(v);
    heap_up(heap.size() - 1);
  }

  int heap_pop() {
    int top = heap.front();
    heap_pos[top] = -1;
    int last = heap.back();
    heap.pop_back();
    if (!heap.empty()) {
      heap[0] = last;
      heap_pos[last] = 0;
      heap_down(0);
    }
    return top;
  }

  void bump_var(int v) {
    if ((activity[v] += var_inc) > 1e100) {
      for (auto& a : activity) a *= 1e-100;
      var_inc *= 1e-100;
    }
    if (heap_pos[v] >= 0) heap_up(static_cast<std::size_t>(heap_pos[v]));
  }

  void bump_clause(Clause& c) {
    if ((c.activity += cla_inc) > 1e20) {
      for (int i : learnts) clauses[i].activity *= 1e-20;
      cla_inc *= 1e-20;
    }
  }

  void enqueue(Lit p, int from) {
    int v = var_of(p);
    assign[v] = (p & 1) ? -1 : 1;
    level[v] = decision_level();
    reason[v] = from;
    trail.push_back(p);
  }

  void attach(int cref) {
    const auto& c = clauses[cref].lits;
    watches[c[0]].push_back({cref, c[1]});
    watches[c[1]].push_back({cref, c[0]});
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl) return;
    for (std::size_t i = trail.size(); i-- > static_cast<std::size_t>(trail_lim[lvl]);) {
      int v = var_of(trail[i]);
      phase[v] = assign[v] > 0;
      assign[v] = 0;
      reason[v] = kNoReason;
      heap_insert(v);
    }
    trail.resize(static_cast<std::size_t>(trail_lim[lvl]));
    trail_lim.resize(static_cast<std::size_t>(lvl));
    qhead = trail.size();
  }

  // Returns the conflicting clause or kNoReason.
  int propagate() {
    int confl = kNoReason;
    while (qhead < trail.size()) {
      Lit p = trail[qhead++];
      Lit false_lit = neg(p);
      auto& ws = watches[false_lit];
      ++stats.propagations;
      std::size_t i = 0, j = 0;
      while (i < ws.size()) {
        Watcher w = ws[i];
        if (value(w.blocker) > 0) {
          ws[j++] = ws[i++];
          continue;
        }
        Clause& c = clauses[w.cref];
        if (c.deleted) {
          ++i;
          continue;
        }
        auto& lits = c.lits;
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        ++i;
        Lit first = lits[0];
        Watcher keep{w.cref, first};
        if (first != w.blocker && value(first) > 0) {
          ws[j++] = keep;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < lits.size(); ++k) {
          if (value(lits[k]) >= 0) {
            std::swap(lits[1], lits[k]);
            watches[lits[1]].push_back(keep);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = keep;
        if (value(first) < 0) {
          confl = w.cref;
          qhead = trail.size();
          while (i < ws.size()) ws[j++] = ws[i++];
        } else {
          enqueue(first, w.cref);
        }
      }
      ws.resize(j);
      if (confl != kNoReason) break;
    }
    return confl;
  }

  void analyze(int confl, std::vector<Lit>& out, int& bt_level) {
    out.assign(1, kNoLit);
    int path = 0;
    Lit p = kNoLit;
    std::size_t index = trail.size();
    do {
      Clause& c = clauses[confl];
      if (c.learnt) bump_clause(c);
      for (std::size_t j = (p == kNoLit ? 0 : 1); j < c.lits.size(); ++j) {
        Lit q = c.lits[j];
        int v = var_of(q);
        if (seen[v] || level[v] == 0) continue;
        bump_var(v);
        seen[v] = 1;
        if (level[v] >= decision_level())
          ++path;
        else
          out.push_back(q);
      }
      while (!seen[var_of(trail[--index])]) {
      }
      p = trail[index];
      confl = reason[var_of(p)];
      seen[var_of(p)] = 0;
      --path;
    } while (path > 0);
    out[0] = neg(p);

    // drop literals implied by the rest of the clause
    std::vector<Lit> marked(out.begin() + 1, out.end());
    std::size_t keep = 1;
    for (std::size_t i = 1; i < out.size(); ++i) {
      int r = reason[var_of(out[i])];
      bool needed = r == kNoReason;
      if (!needed) {
        const auto& lits = clauses[r].lits;
        for (std::size_t k = 1; k < lits.size(); ++k) {
          int v = var_of(lits[k]);
          if (!seen[v] && level[v] > 0) {
            needed = true;
            break;
          }
        }
      }
      if (needed) out[keep++] = out[i];
    }
    out.resize(keep);
    for (Lit q : marked) seen[var_of(q)] = 0;

    bt_level = 0;
    if (out.size() > 1) {
      std::size_t best = 1;
      for (std::size_t i = 2; i < out.size(); ++i)
        if (level[var_of(out[i])] > level[var_of(out[best])]) best = i;
      std::swap(out[1], out[best]);
      bt_level = level[var_of(out[1])];
    }
  }

  bool locked(int cref) const {
    const auto& c = clauses[cref];
    int v = var_of(c.lits[0]);
    return reason[v] == cref && value(c.lits[0]) > 0;
  }

  void reduce_db() {
    std::sort(learnts.begin(), learnts.end(),
              [&](int a, int b) { return clauses[a].activity < clauses[b].activity; });
    std::vector<int> kept;
    std::size_t half = learnts.size() / 2;
    for (std::size_t i = 0; i < learnts.size(); ++i) {
      Clause& c = clauses[learnts[i]];
      if (i < half && c.lits.size() > 2 && !locked(learnts[i])) {
        c.deleted = true;
        c.lits.clear();
        c.lits.shrink_to_fit();
      } else {
        kept.push_back(learnts[i]);
      }
    }
    learnts = std::move(kept);
  }
};

SatSolver::SatSolver() : impl_(std::make_unique<Impl>()) {}
SatSolver::~SatSolver() = default;
SatSolver::SatSolver(SatSolver&&) noexcept = default;
SatSolver& SatSolver::operator=(SatSolver&&) noexcept = default;

int SatSolver::new_var() {
  auto& s = *impl_;
  int v = s.nvars();
  s.assign.push_back(0);
  s.level.push_back(0);
  s.reason.push_back(kNoReason);
  s.phase.push_back(0);
  s.seen.push_back(0);
  s.activity.push_back(0);
  s.heap_pos.push_back(-1);
  s.watches.emplace_back();
  s.watches.emplace_back();
  s.heap_insert(v);
  return v + 1;
}

int SatSolver::num_vars() const { return impl_->nvars(); }
bool SatSolver::okay() const { return impl_->ok; }
const SatSolver::Stats& SatSolver::stats() const { return impl_->stats; }

bool SatSolver::add_clause(std::vector<int> dimacs) {
  auto& s = *impl_;
  std::vector<Lit> lits;
  for (int d : dimacs) {
    int v = std::abs(d);
    if (d == 0 || v > s.nvars()) throw Error(ErrorCode::InvalidArgument, "literal " + std::to_string(d) + " out of range");
    lits.push_back(2 * (v - 1) + (d < 0 ? 1 : 0));
  }
  if (!s.ok) return false;
  s.cancel_until(0);
  std::sort(lits.begin(), lits.end());
  std::vector<Lit> kept;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    Lit p = lits[i];
    if (s.value(p) > 0 || (i + 1 < lits.size() && lits[i + 1] == neg(p))) return true;
    if (s.value(p) < 0 || (!kept.empty() && kept.back() == p)) continue;
    kept.push_back(p);
  }
  if (kept.empty()) return s.ok = false;
  if (kept.size() == 1) {
    s.enqueue(kept[0], kNoReason);
    if (s.propagate() != kNoReason) s.ok = false;
    return s.ok;
  }
  s.clauses.push_back({std::move(kept), false, false, 0});
  s.attach(static_cast<int>(s.clauses.size()) - 1);
  return true;
}

SatSolver::Result SatSolver::solve(const std::vector<int>& assumptions) { return solve(assumptions, Limits()); }

SatSolver::Result SatSolver::solve(const std::vector<int>& assumptions, const Limits& limits) {
  auto& s = *impl_;
  if (!s.ok) return Result::Unsat;
  std::vector<Lit> assume;
  for (int d : assumptions) {
    int v = std::abs(d);
    if (d == 0 || v > s.nvars()) throw Error(ErrorCode::InvalidArgument, "assumption " + std::to_string(d) + " out of range");
    assume.push_back(2 * (v - 1) + (d < 0 ? 1 : 0));
  }
  s.cancel_until(0);
  auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t conflicts0 = s.stats.conflicts, decisions0 = s.stats.decisions;
  if (s.max_learnts == 0) s.max_learnts = std::max(1000.0, s.clauses.size() / 3.0);

  auto expired = [&] {
    if (limits.seconds > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() >= limits.seconds)
      return true;
    return limits.stop && limits.stop();
  };
  auto out_of_budget = [&] {
    if (limits.conflicts && s.stats.conflicts - conflicts0 >= limits.conflicts) return true;
    return (s.stats.conflicts & 255) == 0 && expired();
  };

  std::vector<Lit> learnt;
  int restart = 0;
  std::uint64_t budget = static_cast<std::uint64_t>(luby(2, restart) * 100);
  std::uint64_t since_restart = 0;
  for (;;) {
    int confl = s.propagate();
    if (confl != kNoReason) {
      ++s.stats.conflicts;
      ++since_restart;
      if (s.decision_level() == 0) {
        s.ok = false;
        return Result::Unsat;
      }
      int bt = 0;
      s.analyze(confl, learnt, bt);
      s.cancel_until(bt);
      if (learnt.size() == 1) {
        s.enqueue(learnt[0], kNoReason);
      } else {
        s.clauses.push_back({learnt, true, false, 0});
        int cref = static_cast<int>(s.clauses.size()) - 1;
        s.learnts.push_back(cref);
        s.attach(cref);
        s.bump_clause(s.clauses[cref]);
        s.enqueue(learnt[0], cref);
      }
      ++s.stats.learnt;
      s.var_inc /= 0.95;
      s.cla_inc /= 0.999;
      if (out_of_budget()) {
        s.cancel_until(0);
        return Result::Unknown;
      }
      continue;
    }
    if (since_restart >= budget) {
      s.cancel_until(0);
      ++s.stats.restarts;
      budget = static_cast<std::uint64_t>(luby(2, ++restart) * 100);
      since_restart = 0;
      s.max_learnts *= 1.05;
      continue;
    }
    if (static_cast<double>(s.learnts.size()) >= s.max_learnts + static_cast<double>(s.trail.size())) s.reduce_db();

    Lit next = kNoLit;
    while (s.decision_level() < static_cast<int>(assume.size())) {
      Lit p = assume[static_cast<std::size_t>(s.decision_level())];
      if (s.value(p) > 0) {
        s.trail_lim.push_back(static_cast<int>(s.trail.size()));
      } else if (s.value(p) < 0) {
        s.cancel_until(0);
        return Result::Unsat;
      } else {
        next = p;
        break;
      }
    }
    if (next == kNoLit) {
      int v = -1;
      while (!s.heap.empty()) {
        int c = s.heap_pop();
        if (s.assign[c] == 0) {
          v = c;
          break;
        }
      }
      if (v < 0) {
        s.model.assign(s.assign.begin(), s.assign.end());
        for (auto& m : s.model) m = m > 0;
        s.cancel_until(0);
        return Result::Sat;
      }
      ++s.stats.decisions;
      next = 2 * v + (s.phase[v] ? 0 : 1);
      if ((limits.decisions && s.stats.decisions - decisions0 > limits.decisions) ||
          ((s.stats.decisions & 4095) == 0 && expired())) {
        s.heap_insert(v);
        s.cancel_until(0);
        return Result::Unknown;
      }
    }
    s.trail_lim.push_back(static_cast<int>(s.trail.size()));
    s.enqueue(next, kNoReason);
  }
}

bool SatSolver::model_value(int var) const {
  if (var < 1 || var > static_cast<int>(impl_->model.size()))
    throw Error(ErrorCode::InvalidArgument, "no model value for variable " + std::to_string(var));
  return impl_->model[static_cast<std::size_t>(var - 1)] != 0;
}

}  // namespace steinersurf
