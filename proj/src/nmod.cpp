#include "equisym/nmod.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace equisym::nmod {

uint64_t Fp::pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t Fp::inv(uint64_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  int64_t t = 0, nt = 1;
  int64_t r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a);
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

namespace {

uint64_t mulmod128(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod128(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod128(r, a, m);
    a = mulmod128(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod128(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod128(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

uint64_t big_prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<uint64_t> cache;
  std::lock_guard<std::mutex> lock(mu);
  uint64_t c = cache.empty() ? (1ull << 62) - 1 : cache.back() - 2;
  while (cache.size() <= i) {
    while (!is_prime(c)) c -= 2;
    cache.push_back(c);
    c -= 2;
  }
  return cache[i];
}

uint64_t prime_congruent_one(uint64_t start, uint64_t m) {
  uint64_t c = start + (m - start % m) % m + 1;
  if (c < start) c += m;
  while (!is_prime(c)) c += m;
  return c;
}

uint64_t root_of_unity(const Fp& F, uint64_t m) {
  if ((F.p - 1) % m != 0) throw std::domain_error("m does not divide p-1");
  if (m == 1) return 1;
  std::vector<uint64_t> qs;
  uint64_t t = m;
  for (uint64_t q = 2; q * q <= t; ++q) {
    if (t % q == 0) {
      qs.push_back(q);
      while (t % q == 0) t /= q;
    }
  }
  if (t > 1) qs.push_back(t);
  for (uint64_t g = 2;; ++g) {
    uint64_t w = F.pow(g, (F.p - 1) / m);
    bool ok = true;
    for (uint64_t q : qs) {
      if (F.pow(w, m / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return w;
  }
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Fp& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

Poly sub(const Fp& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly mul(const Fp& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly scale(const Fp& F, const Poly& a, uint64_t c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

void divrem(const Fp& F, const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.empty()) throw std::domain_error("polynomial division by zero mod p");
  r = a;
  trim(r);
  int db = deg(b);
  if (deg(r) < db) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, 0);
  uint64_t li = F.inv(b.back());
  for (int i = deg(r); i >= db; --i) {
    uint64_t c = F.mul(r[i], li);
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
  }
  r.resize(db);
  trim(r);
  trim(q);
}

Poly rem(const Fp& F, const Poly& a, const Poly& b) {
  Poly q, r;
  divrem(F, a, b, q, r);
  return r;
}

Poly quo(const Fp& F, const Poly& a, const Poly& b) {
  Poly q, r;
  divrem(F, a, b, q, r);
  return q;
}

Poly monic(const Fp& F, const Poly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

Poly gcd(const Fp& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Poly xgcd(const Fp& F, const Poly& a, const Poly& b, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    Poly q, r;
    divrem(F, r0, r1, q, r);
    Poly s2 = sub(F, s0, mul(F, q, s1));
    Poly t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = {};
    t = {};
    return r0;
  }
  uint64_t li = F.inv(r0.back());
  s = scale(F, s0, li);
  t = scale(F, t0, li);
  return scale(F, r0, li);
}

Poly derivative(const Fp& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
  trim(r);
  return r;
}

uint64_t eval(const Fp& F, const Poly& a, uint64_t x) {
  uint64_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = F.add(F.mul(v, x), a[i]);
  return v;
}

Poly mulmod(const Fp& F, const Poly& a, const Poly& b, const Poly& m) { return rem(F, mul(F, a, b), m); }

Poly powmod(const Fp& F, const Poly& base, uint64_t e, const Poly& m) {
  Poly r = rem(F, Poly{1}, m);
  Poly b = rem(F, base, m);
  while (e) {
    if (e & 1) r = mulmod(F, r, b, m);
    e >>= 1;
    if (e) b = mulmod(F, b, b, m);
  }
  return r;
}

Poly powmod_big(const Fp& F, const Poly& base, const std::vector<uint64_t>& e_words, const Poly& m) {
  Poly r = rem(F, Poly{1}, m);
  Poly b = rem(F, base, m);
  for (uint64_t w : e_words) {
    for (int bit = 0; bit < 64; ++bit) {
      if (w & 1) r = mulmod(F, r, b, m);
      w >>= 1;
      b = mulmod(F, b, b, m);
    }
  }
  return r;
}

uint64_t resultant(const Fp& F, Poly a, Poly b, int da, int db) {
  trim(a);
  trim(b);
  // a 0 x 0 Sylvester block contributes 1
  if (da == 0) return F.pow(a.empty() ? 0 : a[0], static_cast<uint64_t>(db));
  if (db == 0) return F.pow(b.empty() ? 0 : b[0], static_cast<uint64_t>(da));
  if (a.empty() || b.empty()) return 0;
  if (deg(a) < da && deg(b) < db) return 0;
  // Res_{da,db}(a,b) = lc(b)^(da - deg a) * (-1)^{(da - deg a) db} * Res(a,b) when deg a < da.
  uint64_t acc = 1;
  if (deg(a) < da) {
    int k = da - deg(a);
    acc = F.mul(acc, F.pow(b.back(), static_cast<uint64_t>(k)));
    if ((static_cast<long>(k) * db) & 1) acc = F.neg(acc);
    da = deg(a);
  }
  if (deg(b) < db) {
    int k = db - deg(b);
    acc = F.mul(acc, F.pow(a.back(), static_cast<uint64_t>(k)));
    db = deg(b);
  }
  // Euclidean recursion on actual degrees.
  while (true) {
    if (da == 0) return F.mul(acc, F.pow(a[0], static_cast<uint64_t>(db)));
    if (db == 0) return F.mul(acc, F.pow(b[0], static_cast<uint64_t>(da)));
    if (da < db) {
      std::swap(a, b);
      std::swap(da, db);
      if ((static_cast<long>(da) * db) & 1) acc = F.neg(acc);
    }
    Poly r = rem(F, a, b);
    if (r.empty()) return 0;
    int dr = deg(r);
    // Res(a,b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
    acc = F.mul(acc, F.pow(b.back(), static_cast<uint64_t>(da - dr)));
    if ((static_cast<long>(da) * db) & 1) acc = F.neg(acc);
    a = std::move(b);
    b = std::move(r);
    da = db;
    db = dr;
  }
}

namespace {

void split_roots(const Fp& F, const Poly& f, std::mt19937_64& rng, std::vector<uint64_t>& out) {
  int d = deg(f);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(F.neg(F.mul(f[0], F.inv(f[1]))));
    return;
  }
  if (F.p == 2) {
    for (uint64_t x = 0; x < 2; ++x)
      if (eval(F, f, x) == 0) out.push_back(x);
    return;
  }
  std::uniform_int_distribution<uint64_t> dist(0, F.p - 1);
  while (true) {
    Poly g = powmod(F, Poly{dist(rng), 1}, (F.p - 1) / 2, f);
    g = sub(F, g, Poly{1});
    Poly h = gcd(F, f, g);
    if (deg(h) > 0 && deg(h) < d) {
      split_roots(F, h, rng, out);
      split_roots(F, quo(F, f, h), rng, out);
      return;
    }
  }
}

void equal_degree(const Fp& F, const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  int n = deg(f);
  if (n == d) {
    out.push_back(monic(F, f));
    return;
  }
  std::uniform_int_distribution<uint64_t> dist(0, F.p - 1);
  while (true) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (deg(a) <= 0) continue;
    Poly g;
    if (F.p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      Poly t = a, s = a;
      for (int i = 1; i < d; ++i) {
        t = mulmod(F, t, t, f);
        s = add(F, s, t);
      }
      g = s;
    } else {
      // a^((p^d - 1)/2) computed as a^((p-1)/2 * (1 + p + ... + p^(d-1)))
      Poly pw = a, acc = Poly{1};
      for (int i = 0; i < d; ++i) {
        acc = mulmod(F, acc, pw, f);
        pw = powmod(F, pw, F.p, f);
      }
      g = powmod(F, acc, (F.p - 1) / 2, f);
      g = sub(F, g, Poly{1});
    }
    Poly h = gcd(F, f, g);
    if (deg(h) > 0 && deg(h) < n) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, quo(F, f, h), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<uint64_t> roots(const Fp& F, const Poly& a, std::mt19937_64& rng) {
  Poly f = monic(F, a);
  std::vector<uint64_t> out;
  if (deg(f) <= 0) return out;
  if (f[0] == 0) {
    out.push_back(0);
    std::size_t k = 0;
    while (k < f.size() && f[k] == 0) ++k;
    f.erase(f.begin(), f.begin() + static_cast<long>(k));
  }
  // x^p - x restricted to f
  Poly xp = powmod(F, Poly{0, 1}, F.p, f);
  Poly g = gcd(F, f, sub(F, xp, Poly{0, 1}));
  split_roots(F, g, rng, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Poly> factor_squarefree(const Fp& F, const Poly& a, std::mt19937_64& rng) {
  Poly f = monic(F, a);
  std::vector<Poly> out;
  Poly xpow = {0, 1};
  int d = 0;
  while (deg(f) > 0) {
    ++d;
    if (2 * d > deg(f)) {
      out.push_back(f);
      break;
    }
    xpow = powmod(F, xpow, F.p, f);
    Poly g = gcd(F, f, sub(F, xpow, Poly{0, 1}));
    if (deg(g) > 0) {
      equal_degree(F, g, d, rng, out);
      f = quo(F, f, g);
      xpow = rem(F, xpow, f);
    }
  }
  std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

Poly interpolate_consecutive(const Fp& F, const std::vector<uint64_t>& values) {
  std::size_t n = values.size();
  std::vector<uint64_t> c = values;
  // divided differences with nodes 0..n-1
  for (std::size_t k = 1; k < n; ++k) {
    uint64_t ik = F.inv(k % F.p);
    for (std::size_t i = n - 1; i >= k; --i) {
      c[i] = F.mul(F.sub(c[i], c[i - 1]), ik);
      if (i == k) break;
    }
  }
  Poly r = {};
  r.assign(n, 0);
  // Horner in Newton basis: r = c[n-1]; r = r*(x - i) + c[i]
  Poly acc = {c[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // acc *= (x - i)
    Poly nacc(acc.size() + 1, 0);
    uint64_t xi = i % F.p;
    for (std::size_t j = 0; j < acc.size(); ++j) {
      nacc[j + 1] = F.add(nacc[j + 1], acc[j]);
      nacc[j] = F.sub(nacc[j], F.mul(acc[j], xi));
    }
    nacc[0] = F.add(nacc[0], c[i]);
    acc = std::move(nacc);
  }
  trim(acc);
  return acc;
}

}  // namespace equisym::nmod
