#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steinersurf/complex.hpp"
#include "steinersurf/gf2d.hpp"
#include "steinersurf/permutation.hpp"

namespace steinersurf {

using Triple = std::array<int, 3>;

class SteinerTripleSystem {
 public:
  // n = 0 infers the order from the largest label. Throws BadOrder,
  // PairUncovered, PairDoubleCovered, InvalidArgument.
  SteinerTripleSystem(std::vector<Triple> triples, int n = 0, std::string name = {});

  int order() const { return n_; }
  const std::vector<Triple>& triples() const { return triples_; }
  const std::string& name() const { return name_; }
  // third point of the triple through x and y (x != y)
  int third(int x, int y) const { return table_[static_cast<std::size_t>(x) * (n_ + 1) + y]; }
  SimplicialComplex to_complex() const;

 private:
  int n_;
  std::vector<Triple> triples_;
  std::vector<std::uint16_t> table_;
  std::string name_;
};

SteinerTripleSystem sts_from_triples(std::vector<Triple> triples, int n = 0, std::string name = {});
// The facets of a 2-dimensional complex read as triples. Throws NotAnSTS.
SteinerTripleSystem sts_from_complex(const SimplicialComplex& k);

// Steiner quasigroup on 1..n, extended by mu(0, y) = y so that permutations
// of {0..n} fixing 0 act uniformly on V and on F_N.
class SteinerQuasigroup {
 public:
  explicit SteinerQuasigroup(const SteinerTripleSystem& sts);
  // Full (n+1)x(n+1) table including row and column 0. Throws NotAnSTS if
  // the quasigroup axioms fail.
  static SteinerQuasigroup from_table(int n, std::vector<std::uint16_t> table);

  int order() const { return n_; }
  int operator()(int x, int y) const { return table_[static_cast<std::size_t>(x) * (n_ + 1) + y]; }
  std::vector<Triple> triples() const;
  SteinerTripleSystem triple_system(std::string name = {}) const;
  // mu^T(x, y) = T(mu(T^-1 x, T^-1 y))
  SteinerQuasigroup conjugate(const Permutation& t) const;
  bool is_automorphism(const Permutation& a) const;
  bool operator==(const SteinerQuasigroup& o) const { return table_ == o.table_; }

 private:
  SteinerQuasigroup() = default;
  int n_ = 0;
  std::vector<std::uint16_t> table_;
};

SteinerQuasigroup quasigroup_of(const SteinerTripleSystem& sts);

// Generators. Bose points (x, y) are flattened to 1 + x + (2s+1) y; affine
// vectors to base-3 value + 1; projective points are field bit-values.
SteinerTripleSystem bose(int s);
int bose_point(int s, int x, int y);
SteinerTripleSystem projective_sts(const FieldGF2d& f);
SteinerTripleSystem affine_sts(int k);
// cyclic system on Z_13 from base blocks {0,1,4}, {0,2,7}; labels +1
SteinerTripleSystem cyclic_sts_13();
SteinerTripleSystem fano_sts();

// y -> minus(x, plus(x, y)); fixes 0 and x.
Permutation transition(const SteinerQuasigroup& minus, int x, const SteinerQuasigroup& plus);
// sigma(x, T): y -> mu(x, mu^T(x, y)). Throws DomainMismatch.
Permutation shift_permutation(const SteinerQuasigroup& mu, int x, const Permutation& t);
// Same from the two involution rows y -> minus(x,y), y -> plus(x,y).
Permutation transition_from_rows(const Permutation& minus_row, const Permutation& plus_row);

struct PointCycles {
  int point = 0;
  std::map<std::size_t, std::size_t> type;  // on V, excluding 0
  bool ok = false;
};

struct Orientation {
  // positive[x] = the orbit sigma+(x), sorted; positive[0] unused
  std::vector<std::vector<int>> positive;
};

struct TransversalReport {
  bool is_transversal = false;
  bool disjoint = false;
  std::vector<PointCycles> points;  // the points actually checked
  std::optional<bool> orientable;
  std::optional<Orientation> orientation;
};

// Group A given by generators; they must lie in Sigma(mu) and Sigma(mu^T).
// Only one point per A-orbit is checked. Throws DomainMismatch,
// InvalidArgument (generator not an automorphism).
TransversalReport is_transversal(const SteinerQuasigroup& mu, const Permutation& t,
                                 const std::vector<Permutation>& group_a = {});
// As is_transversal, followed by orientability when transversal.
TransversalReport analyze_transversal(const SteinerQuasigroup& mu, const Permutation& t,
                                      const std::vector<Permutation>& group_a = {});

bool is_steiner_surface(const SteinerQuasigroup& minus, const SteinerQuasigroup& plus);

struct OrientabilityResult {
  bool orientable = false;
  std::optional<Orientation> orientation;
  int conflict_point = 0;  // where propagation failed
};

// Propagates a local orientation from the lowest point. Throws NotASurface.
OrientabilityResult orientability_of_steiner_surface(const SteinerQuasigroup& minus, const SteinerQuasigroup& plus);
OrientabilityResult orientability_of_steiner_surface(const SteinerQuasigroup& mu, const Permutation& t);

// Checks the orientation condition for all pairs.
bool is_orientation(const SteinerQuasigroup& minus, const SteinerQuasigroup& plus, const Orientation& o);
// sigma+(x) = orbit of sigma(x) through s(x); s must be fixed-point free on V.
Orientation orientation_from_shift(const SteinerQuasigroup& minus, const SteinerQuasigroup& plus,
                                   const Permutation& s);
// +1 when equal, -1 when every local orientation is reversed, 0 otherwise
int compare_orientations(const Orientation& a, const Orientation& b);
// Facet signs (in the order of the union complex's facets) induced by an
// orientation; throws InvalidArgument if the induced triangle orientations
// are inconsistent.
std::vector<int> facet_orientation(const SteinerQuasigroup& minus, const SteinerQuasigroup& plus,
                                   const Orientation& o, const SimplicialComplex& surface);

SimplicialComplex union_complex(const SteinerQuasigroup& minus, const SteinerQuasigroup& plus, std::string name = {});
// Throws NotDisjoint, NotTransversal.
SimplicialComplex steiner_surface(const SteinerQuasigroup& mu, const Permutation& t, std::string name = {});

enum class TransversalKind { Orientable, Nonorientable };
// Throws OddSOrientable, InvalidArgument.
Permutation bose_transversal(int s, TransversalKind kind);
// (x, y) -> (x, y+1) and (x, y) -> (x+1, y)
std::vector<Permutation> bose_automorphisms(int s);
// s+(u) = u + (0, 1)
Permutation bose_row_shift(int s);

// Matrices of GL(d,2) as permutations of F_N.
std::vector<Permutation> general_linear_group(int d);

struct CosetClass {
  Permutation representative;  // least element in one-line order
  std::size_t size = 0;
  bool contains_identity = false;
  bool transversal = false;
  std::optional<bool> orientable;
};

struct CosetCensus {
  int d = 0;
  std::size_t permutations = 0;
  std::size_t group_order = 0;
  std::vector<CosetClass> classes;
};

// Double cosets GL(d,2) T GL(d,2) of the 0-fixing permutations of F_N, d <= 3.
CosetCensus enumerate_transversal_cosets(const FieldGF2d& f);
CosetCensus enumerate_transversal_cosets_d3();

struct SingerClass {
  std::vector<std::uint32_t> exponents;  // r modulo the doubling action
  Permutation representative;            // x -> x^r with r the least exponent
  std::size_t size = 0;                  // maps c x^r in the class
  bool transversal = false;
  std::optional<bool> orientable;
};

// Maps x -> c x^r normalizing the Singer cycle, grouped under multiplication
// and Frobenius on both sides. Throws NotPrimeOrder unless N-1 is prime.
std::vector<SingerClass> singer_normalizer_search(const FieldGF2d& f);

}  // namespace steinersurf
