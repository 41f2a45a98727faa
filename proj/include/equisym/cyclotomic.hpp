#pragma once

// Exact arithmetic in Q(zeta_m), power basis modulo the m-th cyclotomic polynomial.

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace equisym {

using Rational = mpq_class;
using Integer = mpz_class;

class CycNum;

class CycField {
 public:
  struct Data {
    unsigned m;
    unsigned phi;
    std::vector<mpz_class> modulus;  // Phi_m, low to high, monic
    std::vector<unsigned> units;     // residues k mod m with gcd(k,m) = 1
  };

  CycField();  // Q
  explicit CycField(unsigned m);

  unsigned conductor() const { return d_->m; }
  unsigned degree() const { return d_->phi; }
  const std::vector<mpz_class>& modulus() const { return d_->modulus; }
  const std::vector<unsigned>& units() const { return d_->units; }
  const Data* data() const { return d_.get(); }

  CycNum zero() const;
  CycNum one() const;
  CycNum gen() const;
  CycNum zeta_pow(long e) const;
  // zeta_n^k; requires n | m, or n | 2m when m is odd.
  CycNum root_of_unity(unsigned n, long k) const;
  CycNum from_rational(const Rational& q) const;
  CycNum from_int(long v) const;

  bool operator==(const CycField& o) const { return d_ == o.d_; }
  bool operator!=(const CycField& o) const { return d_ != o.d_; }

 private:
  std::shared_ptr<const Data> d_;
};

CycField cyclo_field(unsigned m);
unsigned euler_phi(unsigned m);
unsigned lcm_conductor(unsigned a, unsigned b);

class CycNum {
 public:
  CycNum();  // 0 in Q
  CycNum(const CycField& F, std::vector<mpz_class> num, mpz_class den);

  const CycField& field() const { return field_; }
  // Coordinate k in the power basis.
  Rational coeff(std::size_t k) const;
  std::vector<Rational> coeffs() const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws unless is_rational()

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  CycNum& operator*=(const Rational& q);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend CycNum operator*(CycNum a, const Rational& q) { return a *= q; }
  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }
  // Total order on coordinates, for deterministic sorting only.
  int compare(const CycNum& o) const;

  CycNum inverse() const;
  CycNum pow(long e) const;
  // zeta -> zeta^k, gcd(k, m) = 1.
  CycNum galois(long k) const;
  CycNum conj() const { return galois(-1); }
  Rational norm() const;
  std::size_t hash() const;

  std::string to_string(const std::string& symbol = "z") const;

 private:
  void normalize();
  CycField field_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

CycNum cyc_inverse(const CycNum& a);
// Image of a under Q(zeta_m) -> Q(zeta_M), zeta_m -> zeta_M^(M/m); requires m | M.
CycNum embed(const CycNum& a, const CycField& target);

}  // namespace equisym
