#pragma once

// Endomorphisms of P^1 and P^2 given by homogeneous forms: canonical form,
// conjugation, automorphism tests, constructions from invariants, resultants.

#include <cstdint>
#include <string>
#include <vector>

#include "equisym/invariants.hpp"
#include "equisym/mpoly.hpp"
#include "equisym/upoly.hpp"

namespace equisym {

// Coordinates share no common factor; the leading coefficient of the first
// nonzero coordinate is 1.
struct ProjMap {
  CycField field;
  int N = 0;
  std::vector<MPoly> coords;
  int degree = 0;

  bool operator==(const ProjMap& o) const;
  bool operator!=(const ProjMap& o) const { return !(*this == o); }
  bool is_rational() const;
  ProjMap embed(const CycField& target) const;
  std::string to_string() const;  // "[f0, f1]"
};

// Smallest common field of the inputs (lcm of conductors) and the embeddings.
CycField common_field(const std::vector<MPoly>& polys);

ProjMap make_map(const std::vector<MPoly>& coords);
// "[f0, f1, f2]" or "(f0 : f1)"; the field is read off the z<k> literals.
ProjMap parse_map(const std::string& text, unsigned conductor_hint = 1);

// alpha o f o alpha^-1
ProjMap conjugate(const ProjMap& f, const FMatrix& alpha);
// f^alpha == f projectively, tested as f(alpha x) proportional to alpha f(x).
bool is_automorphism(const ProjMap& f, const FMatrix& alpha);
// Coordinate tuples that agree up to a nonzero scalar.
bool proportional(const std::vector<MPoly>& a, const std::vector<MPoly>& b);

// [-dG/dy, dG/dx]
ProjMap klein_map(const MPoly& G);
// [x F/2 + G_y, y F/2 - G_x]; one of F, G may be zero.
ProjMap doyle_mcmullen(const MPoly& F, const MPoly& G);
// Dual of dp_1 ^ ... ^ dp_N in N+1 variables: Klein for N = 1, grad p1 x grad p2 for N = 2.
ProjMap wedge_map(const std::vector<MPoly>& ps);

// Sylvester resultant (N = 1) or Macaulay quotient det(M)/det(E) (N = 2) of the coordinates.
// When det(E) vanishes, a seeded random integer change of variables A is applied and the
// result divided by det(A)^(d^3), so the value does not depend on the retry.
CycNum macaulay_resultant(const ProjMap& f, uint64_t seed = 1);
// Same, for raw coordinate tuples that need not be gcd-reduced.
CycNum resultant_of_forms(const std::vector<MPoly>& coords, uint64_t seed = 1);

struct MorphismCertificate {
  ProjMap map;
  CycNum resultant;
  bool is_morphism = false;
};
MorphismCertificate certify_morphism(const ProjMap& f);

// Res(base + t * direction) as a polynomial in t, by evaluation and interpolation.
UPoly family_resultant(const std::vector<MPoly>& base, const std::vector<MPoly>& direction);

// sum_i multipliers[i] * equivariants[i], gcd-reduced.
ProjMap equivariant_combination(const std::vector<MapTuple>& equivariants, const std::vector<MPoly>& multipliers);

// 6 d^6 for N = 2, max(60, 2d + 2) for N = 1.
long aut_bound(int d, int N);

}  // namespace equisym
