#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace steinersurf {

// Small CDCL solver: two watched literals, first-UIP learning, VSIDS,
// phase saving, Luby restarts. Literals use the DIMACS convention (+v / -v,
// v >= 1).
class SatSolver {
 public:
  enum class Result { Sat, Unsat, Unknown };

  struct Limits {
    std::uint64_t conflicts = 0;  // 0 = unbounded
    std::uint64_t decisions = 0;
    double seconds = 0;
    std::function<bool()> stop;  // polled now and then; true aborts
  };

  struct Stats {
    std::uint64_t decisions = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t propagations = 0;
    std::uint64_t restarts = 0;
    std::uint64_t learnt = 0;
  };

  SatSolver();
  ~SatSolver();
  SatSolver(SatSolver&&) noexcept;
  SatSolver& operator=(SatSolver&&) noexcept;

  int new_var();
  int num_vars() const;
  // False once the clause set is known to be unsatisfiable.
  bool add_clause(std::vector<int> lits);
  bool okay() const;

  // Learned clauses survive between calls; they never depend on assumptions.
  Result solve(const std::vector<int>& assumptions = {});
  Result solve(const std::vector<int>& assumptions, const Limits& limits);
  // Model of the last Sat answer.
  bool model_value(int var) const;
  const Stats& stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace steinersurf
