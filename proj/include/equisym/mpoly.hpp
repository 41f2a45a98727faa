#pragma once

// Sparse polynomials in up to three variables over a cyclotomic field.
// Terms are keyed by a packed exponent word whose numeric order is graded lex
// (x > y > z), so the first map entry is the leading term.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "equisym/cyclotomic.hpp"
#include "equisym/matrix.hpp"

namespace equisym {

namespace mono {

using Key = uint64_t;
using Exps = std::array<int, 3>;

inline Key make(const Exps& e) {
  uint64_t d = static_cast<uint64_t>(e[0] + e[1] + e[2]);
  return (d << 48) | (static_cast<uint64_t>(e[0]) << 32) | (static_cast<uint64_t>(e[1]) << 16) |
         static_cast<uint64_t>(e[2]);
}
inline int degree(Key k) { return static_cast<int>(k >> 48); }
inline int exp(Key k, int i) { return static_cast<int>((k >> (32 - 16 * i)) & 0xffff); }
inline Exps exps(Key k) { return {exp(k, 0), exp(k, 1), exp(k, 2)}; }

// Degree-d monomials in n variables, in decreasing term order.
std::vector<Key> of_degree(int nvars, int d);

}  // namespace mono

class MPoly {
 public:
  using Terms = std::map<mono::Key, CycNum, std::greater<mono::Key>>;

  MPoly() = default;
  MPoly(const CycField& F, int nvars) : field_(F), nvars_(nvars) {}

  static MPoly var(const CycField& F, int nvars, int i);
  static MPoly constant(const CycNum& c, int nvars);
  static MPoly monomial(const CycNum& c, int nvars, const mono::Exps& e);

  const CycField& field() const { return field_; }
  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;  // -1 for zero
  int degree_in(int i) const;
  int min_degree_in(int i) const;
  bool is_homogeneous() const;
  mono::Key leading_key() const { return terms_.begin()->first; }
  const CycNum& leading_coeff() const { return terms_.begin()->second; }
  CycNum coeff(const mono::Exps& e) const;

  void add_term(mono::Key k, const CycNum& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator*(const CycNum& c) const;
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly pow(int e) const;
  MPoly derivative(int i) const;
  // Homogeneous component of degree d.
  MPoly component(int d) const;
  CycNum eval(const std::vector<CycNum>& v) const;
  // p(q_0, ..., q_{n-1}); the q_i share a variable count.
  MPoly compose(const std::vector<MPoly>& q) const;
  // p(M x): variable i becomes sum_j M[i][j] x_j.
  MPoly linear_substitute(const FMatrix& M) const;
  // Replaces variable i by the constant c (variable count unchanged).
  MPoly specialize(int i, const CycNum& c) const;
  // Divided by the leading coefficient.
  MPoly monic() const;
  MPoly embed(const CycField& target) const;
  bool is_rational() const;
  std::size_t hash() const;

  // Expanded text in x, y, z; non-rational coefficients use z<m> for zeta_m.
  std::string to_string() const;

 private:
  CycField field_;
  int nvars_ = 0;
  Terms terms_;
};

// Exact division; returns false if b does not divide a.
bool divide_exact(const MPoly& a, const MPoly& b, MPoly* q);

// Monic gcd (leading term coefficient 1); gcd(0, 0) = 0.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

std::string var_name(int i);

}  // namespace equisym
