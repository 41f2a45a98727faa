#pragma once

// Dense univariate polynomials over a cyclotomic field.

#include <utility>
#include <vector>

#include "equisym/cyclotomic.hpp"
#include "equisym/zpoly.hpp"

namespace equisym {

struct UPoly {
  CycField field;
  std::vector<CycNum> c;  // low to high, trimmed

  UPoly() = default;
  explicit UPoly(const CycField& F) : field(F) {}
  UPoly(const CycField& F, std::vector<CycNum> coeffs);

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const CycNum& lead() const { return c.back(); }
  CycNum eval(const CycNum& x) const;
  void trim();
  std::string to_string(const std::string& var = "x") const;
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly monic(const UPoly& a);
UPoly gcd(UPoly a, UPoly b);  // monic
UPoly galois(const UPoly& a, long k);

UPoly from_zpoly(const zpoly::ZPoly& a, const CycField& F);
// Clears denominators of a rational polynomial; requires every coefficient rational.
zpoly::ZPoly to_zpoly(const UPoly& a);

// Irreducible factors over Q with multiplicity, primitive with positive leading coefficient.
std::vector<std::pair<UPoly, int>> upoly_factor_q(const UPoly& p);

// Distinct roots of a rational polynomial lying in the target field, sorted.
// Linear factors, plus quadratic factors whose discriminant is -1 or -3 times a square
// when the target contains i or sqrt(-3) respectively.
std::vector<CycNum> roots_in_field(const UPoly& p, const CycField& target);
std::vector<CycNum> roots_of_factors(const std::vector<zpoly::ZPoly>& factors, const CycField& target);

// Distinct roots in the field of a polynomial with coefficients in a field of conductor 1, 4 or 6
// (or any field whose degree is at most 2): found through the rational norm.
std::vector<CycNum> roots_in_own_field(const UPoly& p);

}  // namespace equisym
