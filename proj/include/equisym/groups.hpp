#pragma once

// Finite matrix groups: linear and projective closures, the catalog of
// finite subgroups of PGL_2 and PGL_3, linear characters, cyclic subgroups.

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "equisym/matrix.hpp"

namespace equisym {

// Hash index over a growing list of matrices.
class MatrixIndex {
 public:
  // Position of m, or -1.
  long find(const FMatrix& m) const;
  // Records m at the next position.
  void insert(const FMatrix& m);

 private:
  std::unordered_multimap<std::size_t, std::size_t> map_;
  std::vector<FMatrix> store_;
};

// Closure up to exact matrix equality; elements[0] is the identity.
struct MatrixGroup {
  CycField field;
  int n = 0;
  std::vector<FMatrix> generators;
  std::vector<FMatrix> elements;
  // mul_gen[i][j] = index of elements[i] * generators[j].
  std::vector<std::vector<std::size_t>> mul_gen;

  std::size_t order() const { return elements.size(); }
  long index_of(const FMatrix& m) const;
  MatrixIndex index;
};

// Closure up to scalars, each element divided by its first nonzero entry; elements[0] is the identity.
struct ProjGroup {
  CycField field;
  int n = 0;
  std::vector<FMatrix> elements;
  std::vector<std::size_t> generators;  // indices into elements

  std::size_t order() const { return elements.size(); }
  long index_of(const FMatrix& m) const;  // m need not be normalized
  MatrixIndex index;
};

MatrixGroup linear_closure(const std::vector<FMatrix>& gens, std::size_t cap = 20000);
ProjGroup projective_closure(const std::vector<FMatrix>& gens, std::size_t cap = 5000);

// Linear character with values zeta_e^powers[i] on elements[i].
struct Character {
  CycField field;  // contains the group entries and the values
  unsigned exponent = 1;
  std::vector<unsigned> powers;
  std::vector<CycNum> values;
  bool is_trivial() const;
};

// All homomorphisms to roots of unity, ordered by their value tuple (trivial first).
std::vector<Character> linear_characters(const MatrixGroup& G);

// Smallest k >= 1 with g^k scalar.
long projective_element_order(const FMatrix& g, long cap = 100000);

struct CyclicInfo {
  long n;  // largest projective element order
  long m;  // index |G| / n
};
CyclicInfo largest_cyclic(const ProjGroup& G);

struct CatalogEntry {
  std::string label;  // e.g. "pgl2:octahedral", "pgl3:B3"
  std::map<std::string, long> params;
  unsigned conductor = 1;
  std::vector<FMatrix> generators;  // projective generators as printed
  std::vector<FMatrix> lift;        // generators of a finite linear lift
  long stated_order = 0;            // projective order when stated, else 0
};

// label: cyclic, dihedral, tetrahedral, octahedral, icosahedral (dimension 2) or
// A, B1..B4, C, D, E..J, C5, C5prime (dimension 3).
CatalogEntry catalog(int dim, const std::string& label, const std::map<std::string, long>& params = {});
// "pgl2:cyclic:n=5", "pgl3:B3:p=7", "pgl3:C:n=6,a=1,b=2"
CatalogEntry catalog(const std::string& spec);
std::vector<std::string> catalog_labels(int dim);

}  // namespace equisym
