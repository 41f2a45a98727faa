#pragma once

// Word-size prime field arithmetic and dense polynomials over F_p.
// Moduli are primes below 2^62.

#include <cstdint>
#include <random>
#include <vector>

namespace equisym::nmod {

struct Fp {
  uint64_t p = 0;
  long double pinv = 0;

  Fp() = default;
  explicit Fp(uint64_t prime) : p(prime), pinv(1.0L / static_cast<long double>(prime)) {}

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    uint64_t q = static_cast<uint64_t>(static_cast<long double>(a) * b * pinv);
    int64_t r = static_cast<int64_t>(a * b - q * p);
    if (r < 0) r += static_cast<int64_t>(p);
    if (r >= static_cast<int64_t>(p)) r -= static_cast<int64_t>(p);
    return static_cast<uint64_t>(r);
  }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const;
  // Reduction of a signed machine integer.
  uint64_t from_i64(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p);
    return static_cast<uint64_t>(r < 0 ? r + static_cast<int64_t>(p) : r);
  }
};

bool is_prime(uint64_t n);

// Primes below 2^62 in decreasing order; index i is stable across calls.
uint64_t big_prime(std::size_t i);

// Smallest prime >= start that is congruent to 1 modulo m.
uint64_t prime_congruent_one(uint64_t start, uint64_t m);

// Primitive m-th root of unity modulo p; requires m | p-1.
uint64_t root_of_unity(const Fp& F, uint64_t m);

// Coefficients low to high; trimmed (no trailing zeros); zero is empty.
using Poly = std::vector<uint64_t>;

void trim(Poly& a);
int deg(const Poly& a);
Poly add(const Fp& F, const Poly& a, const Poly& b);
Poly sub(const Fp& F, const Poly& a, const Poly& b);
Poly mul(const Fp& F, const Poly& a, const Poly& b);
Poly scale(const Fp& F, const Poly& a, uint64_t c);
void divrem(const Fp& F, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly rem(const Fp& F, const Poly& a, const Poly& b);
Poly quo(const Fp& F, const Poly& a, const Poly& b);
Poly monic(const Fp& F, const Poly& a);
Poly gcd(const Fp& F, Poly a, Poly b);
// s*a + t*b = g with g monic.
Poly xgcd(const Fp& F, const Poly& a, const Poly& b, Poly& s, Poly& t);
Poly derivative(const Fp& F, const Poly& a);
uint64_t eval(const Fp& F, const Poly& a, uint64_t x);
Poly mulmod(const Fp& F, const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Fp& F, const Poly& base, uint64_t e, const Poly& m);
Poly powmod_big(const Fp& F, const Poly& base, const std::vector<uint64_t>& e_words, const Poly& m);

// Resultant of a and b as polynomials of formal degrees da >= deg a, db >= deg b.
uint64_t resultant(const Fp& F, Poly a, Poly b, int da, int db);

// Distinct roots in F_p of a nonzero polynomial, sorted ascending.
std::vector<uint64_t> roots(const Fp& F, const Poly& a, std::mt19937_64& rng);

// Complete factorization of a squarefree monic polynomial into monic irreducibles.
std::vector<Poly> factor_squarefree(const Fp& F, const Poly& a, std::mt19937_64& rng);

// Polynomial with given values at points 0..n-1 (Newton form, O(n^2)).
Poly interpolate_consecutive(const Fp& F, const std::vector<uint64_t>& values);

}  // namespace equisym::nmod
