#pragma once

// Dense univariate polynomials over Z (coefficients low to high, trimmed).

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "equisym/nmod.hpp"

namespace equisym::zpoly {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& a);
int deg(const ZPoly& a);
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const mpz_class& c);
ZPoly derivative(const ZPoly& a);
mpz_class content(const ZPoly& a);
// Divides by the content and makes the leading coefficient positive.
ZPoly primitive(const ZPoly& a);
// Clears denominators of a rational polynomial and returns the primitive part.
ZPoly from_rational(const std::vector<mpq_class>& a);
std::vector<mpq_class> to_rational(const ZPoly& a);
mpq_class eval(const ZPoly& a, const mpq_class& x);

// Exact division over Z; returns false if b does not divide a in Z[x].
bool divexact(const ZPoly& a, const ZPoly& b, ZPoly* q);

nmod::Poly reduce(const ZPoly& a, const nmod::Fp& F);

// Bit length of the Euclidean norm, rounded up.
long norm2_bits(const ZPoly& a);

// Primitive gcd with positive leading coefficient; gcd(0,0) = 0.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// Returns (factor, multiplicity) with factors primitive and squarefree, pairwise coprime.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& a);
ZPoly squarefree_part(const ZPoly& a);

// Irreducible factors over Q with multiplicity; primitive, positive leading coefficient,
// ordered by degree then coefficient sequence.
std::vector<std::pair<ZPoly, int>> factor(const ZPoly& a);

// Irreducible factors of degree 1, and of degree 2 whose discriminant is
// -1 or -3 times a rational square, of a nonzero polynomial.
// Uses p-adic lifting of roots at a prime splitting in Q(i) and Q(sqrt(-3)).
std::vector<ZPoly> low_degree_factors(const ZPoly& a);

// Incremental Chinese remaindering of integer vectors with symmetric residues.
class CrtVector {
 public:
  explicit CrtVector(std::size_t n) : vals_(n), modulus_(1) {}
  void add(const std::vector<uint64_t>& residues, uint64_t p);
  const mpz_class& modulus() const { return modulus_; }
  std::vector<mpz_class> symmetric() const;

 private:
  std::vector<mpz_class> vals_;
  mpz_class modulus_;
};

}  // namespace equisym::zpoly
