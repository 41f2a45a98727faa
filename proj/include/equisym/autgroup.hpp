#pragma once

// Automorphism groups of morphisms of P^2 over Q: periodic and preperiodic
// points over Q, Q(i), Q(zeta_6), candidate matrices from triples of points
// fixed by a putative automorphism, and a finite-field cycle filter.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equisym/dynmaps.hpp"
#include "equisym/groups.hpp"

namespace equisym {

// First nonzero coordinate is 1.
struct ProjPoint {
  std::vector<CycNum> c;

  static ProjPoint normalized(std::vector<CycNum> v);
  const CycField& field() const { return c[0].field(); }
  bool is_rational() const;
  ProjPoint embed(const CycField& target) const;
  // Equality after embedding both points into a common field.
  bool operator==(const ProjPoint& o) const;
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  bool operator<(const ProjPoint& o) const;
  std::size_t hash() const;
  std::string to_string() const;  // "(a : b : c)"
};

// f(P), normalized; f and P must live in one field (P is embedded if needed).
ProjPoint apply_map(const ProjMap& f, const ProjPoint& P);
ProjPoint iterate_map(const ProjMap& f, const ProjPoint& P, int n);

struct PeriodicSet {
  ProjMap map;
  int period = 1;
  CycField field;
  std::vector<ProjPoint> points;  // sorted
  std::vector<bool> exact;        // exact period == period
};

struct SolveOptions {
  long eliminant_degree_cap = 800;
  uint64_t seed = 0;
  int threads = 1;
};

// Points of P^2 over Q(zeta_conductor), conductor in {1, 4, 6}, with f^n(P) = P.
PeriodicSet periodic_points(const ProjMap& f, int n, unsigned conductor, const SolveOptions& opts = {});
// Points Q over Q(zeta_conductor) with f(Q) = P.
std::vector<ProjPoint> preimages(const ProjMap& f, const ProjPoint& P, unsigned conductor,
                                 const SolveOptions& opts = {});

enum class CycleFilter { NoRationalNCycles, Unknown };
// Exhaustive iteration over P^2(F_p) and P^2(F_{p^2}); throws BadReduction.
CycleFilter modp_cycle_filter(const ProjMap& f, int n, uint64_t p);

// s1..s7 as 1..7, with the triple reordered to (x, y, z) of the matching diagram;
// 0 when the images do not fit any diagram.
struct ActionCase {
  int label = 0;
  std::vector<int> order;  // positions in the input triple
};
ActionCase classify_action(const ProjMap& f, const std::vector<ProjPoint>& triple);

struct CandidateAut {
  FMatrix matrix;  // rational, projectively normalized
  std::vector<ProjPoint> triple;
  int n = 1, a = 0, b = 0;
  int case_label = 0;
};

// U^-1 diag(zeta_n^a, zeta_n^b, 1) U with U sending the triple to the standard basis,
// kept only if some scalar multiple is rational. Throws CollinearTriple.
std::optional<CandidateAut> candidate_from_triple(const std::vector<ProjPoint>& triple, int n, int a, int b);
// The same matrix from the explicit column formulas in the triple's coordinates.
FMatrix candidate_by_columns(const std::vector<ProjPoint>& triple, const CycNum& e1, const CycNum& e2);

struct AutOptions {
  bool skip_period_3 = false;
  std::vector<uint64_t> modp_primes{23, 29, 31};
  long eliminant_degree_cap = 800;
  uint64_t seed = 0;
  int threads = 1;
};

struct AutResult {
  ProjMap map;
  ProjGroup elements;                    // over Q
  std::vector<CandidateAut> provenance;  // aligned with elements.elements; identity has n = 1
  std::vector<ProjPoint> pool;           // every point used, over Q(zeta_12)
  uint64_t period3_certificate = 0;      // prime used when 3-periodic points were skipped
  bool closure_added = false;            // products outside the detected set were needed
};

AutResult automorphism_group_p2(const ProjMap& f, const AutOptions& opts = {});

}  // namespace equisym
