#include "equisym/zpoly.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "equisym/errors.hpp"

namespace equisym::zpoly {

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

ZPoly scale(const ZPoly& a, const mpz_class& c) {
  if (c == 0) return {};
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive(const ZPoly& a) {
  ZPoly r = a;
  trim(r);
  if (r.empty()) return r;
  mpz_class g = content(r);
  if (r.back() < 0) g = -g;
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

ZPoly from_rational(const std::vector<mpq_class>& a) {
  mpz_class l = 1;
  for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].get_num() * (l / a[i].get_den());
  return primitive(r);
}

std::vector<mpq_class> to_rational(const ZPoly& a) {
  std::vector<mpq_class> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  return r;
}

mpq_class eval(const ZPoly& a, const mpq_class& x) {
  // Homogenized Horner: acc = sum a_i n^i d^(deg - i).
  if (a.empty()) return 0;
  const mpz_class& n = x.get_num();
  const mpz_class& d = x.get_den();
  mpz_class acc = 0, dpow = 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    acc = acc * n + a[i] * dpow;
    dpow *= d;
  }
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), d.get_mpz_t(), a.size() - 1);
  mpq_class r(acc, den);
  r.canonicalize();
  return r;
}

bool divexact(const ZPoly& a, const ZPoly& b, ZPoly* q) {
  ZPoly r = a;
  trim(r);
  if (b.empty()) throw DomainError("ZeroDivision", "division by zero polynomial");
  int db = deg(b);
  if (r.empty()) {
    if (q) q->clear();
    return true;
  }
  if (deg(r) < db) return false;
  ZPoly quot(r.size() - b.size() + 1);
  mpz_class c;
  for (int i = deg(r); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), b.back().get_mpz_t());
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  trim(quot);
  if (q) *q = std::move(quot);
  return true;
}

nmod::Poly reduce(const ZPoly& a, const nmod::Fp& F) {
  nmod::Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), F.p);
  nmod::trim(r);
  return r;
}

long norm2_bits(const ZPoly& a) {
  mpz_class s = 0;
  for (const auto& c : a) s += c * c;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return static_cast<long>(mpz_sizeinbase(r.get_mpz_t(), 2)) + 1;
}

void CrtVector::add(const std::vector<uint64_t>& residues, uint64_t p) {
  nmod::Fp F(p);
  uint64_t mmod = mpz_fdiv_ui(modulus_.get_mpz_t(), p);
  uint64_t minv = F.inv(mmod);
  for (std::size_t i = 0; i < vals_.size(); ++i) {
    uint64_t r = i < residues.size() ? residues[i] : 0;
    uint64_t v = mpz_fdiv_ui(vals_[i].get_mpz_t(), p);
    uint64_t t = F.mul(F.sub(r, v), minv);
    if (t) mpz_addmul_ui(vals_[i].get_mpz_t(), modulus_.get_mpz_t(), t);
  }
  modulus_ *= p;
}

std::vector<mpz_class> CrtVector::symmetric() const {
  std::vector<mpz_class> out(vals_.size());
  mpz_class half = modulus_ / 2;
  for (std::size_t i = 0; i < vals_.size(); ++i) out[i] = vals_[i] > half ? vals_[i] - modulus_ : vals_[i];
  return out;
}

namespace {

long bits(const mpz_class& x) { return static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)); }

}  // namespace

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  ZPoly a = a0, b = b0;
  trim(a);
  trim(b);
  if (a.empty()) return primitive(b);
  if (b.empty()) return primitive(a);
  ZPoly A = primitive(a), B = primitive(b);
  if (deg(A) == 0 || deg(B) == 0) return ZPoly{1};
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
  long bound = bits(g) + std::min(deg(A), deg(B)) + std::min(norm2_bits(A), norm2_bits(B)) + 2;
  int best = std::min(deg(A), deg(B)) + 1;
  CrtVector crt(0);
  ZPoly prev;
  for (std::size_t i = 0;; ++i) {
    uint64_t p = nmod::big_prime(i);
    if (mpz_fdiv_ui(A.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(B.back().get_mpz_t(), p) == 0) continue;
    nmod::Fp F(p);
    nmod::Poly gp = nmod::gcd(F, reduce(A, F), reduce(B, F));
    int dg = nmod::deg(gp);
    if (dg == 0) return ZPoly{1};
    if (dg > best) continue;
    if (dg < best) {
      best = dg;
      crt = CrtVector(static_cast<std::size_t>(dg) + 1);
      prev.clear();
    }
    gp = nmod::scale(F, gp, mpz_fdiv_ui(g.get_mpz_t(), p));
    gp.resize(static_cast<std::size_t>(dg) + 1, 0);
    crt.add(gp, p);
    ZPoly cand = primitive(crt.symmetric());
    bool stable = cand == prev;
    prev = cand;
    if (stable || bits(crt.modulus()) > bound) {
      if (deg(cand) == dg && divexact(A, cand, nullptr) && divexact(B, cand, nullptr)) return cand;
      if (bits(crt.modulus()) > bound) {
        // every prime so far was unlucky; start over
        best = std::min(deg(A), deg(B)) + 1;
        crt = CrtVector(0);
        prev.clear();
      }
    }
  }
}

ZPoly squarefree_part(const ZPoly& a) {
  ZPoly A = primitive(a);
  if (deg(A) <= 0) return A;
  ZPoly G = gcd(A, derivative(A));
  if (deg(G) == 0) return A;
  ZPoly S;
  divexact(A, G, &S);
  return primitive(S);
}

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& a) {
  std::vector<std::pair<ZPoly, int>> out;
  ZPoly f = primitive(a);
  if (deg(f) <= 0) return out;
  ZPoly fp = derivative(f);
  ZPoly a0 = gcd(f, fp);
  ZPoly b, c;
  divexact(f, a0, &b);
  divexact(fp, a0, &c);
  ZPoly d = sub(c, derivative(b));
  int i = 1;
  while (deg(b) > 0) {
    ZPoly ai = gcd(b, d);
    if (deg(ai) > 0) out.emplace_back(ai, i);
    ZPoly nb, nc;
    divexact(b, ai, &nb);
    divexact(d, ai, &nc);
    b = primitive(nb);
    d = sub(nc, derivative(nb));
    // keep d consistent with the primitive normalization of b
    if (!nb.empty() && nb.back() < 0) {
      for (auto& x : d) x = -x;
    }
    ++i;
  }
  return out;
}

namespace {

struct Lifted {
  std::vector<ZPoly> g;
  mpz_class pk;
};

Lifted hensel_lift(const ZPoly& f, const std::vector<nmod::Poly>& gbar, const nmod::Fp& F, long target_bits) {
  std::size_t r = gbar.size();
  std::vector<nmod::Poly> acoef(r);
  for (std::size_t i = 0; i < r; ++i) {
    nmod::Poly P = {1};
    for (std::size_t l = 0; l < r; ++l)
      if (l != i) P = nmod::rem(F, nmod::mul(F, P, gbar[l]), gbar[i]);
    nmod::Poly s, t;
    nmod::xgcd(F, P, gbar[i], s, t);
    acoef[i] = s;
  }
  uint64_t p = F.p;
  mpz_class lc = f.back();
  uint64_t lcinv = F.inv(mpz_fdiv_ui(lc.get_mpz_t(), p));
  Lifted L;
  for (const auto& g : gbar) {
    ZPoly z(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) z[k] = static_cast<unsigned long>(g[k]);
    L.g.push_back(z);
  }
  mpz_class pj = p;
  while (bits(pj) <= target_bits) {
    mpz_class pj1 = pj * p;
    ZPoly P = {lc};
    for (const auto& g : L.g) {
      P = mul(P, g);
      for (auto& c : P) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pj1.get_mpz_t());
    }
    ZPoly diff = sub(f, P);
    nmod::Poly e(diff.size());
    for (std::size_t k = 0; k < diff.size(); ++k) {
      mpz_class c = diff[k];
      mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pj1.get_mpz_t());
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
      e[k] = mpz_fdiv_ui(c.get_mpz_t(), p);
    }
    nmod::trim(e);
    e = nmod::scale(F, e, lcinv);
    for (std::size_t i = 0; i < r; ++i) {
      nmod::Poly delta = nmod::rem(F, nmod::mul(F, e, acoef[i]), gbar[i]);
      for (std::size_t k = 0; k < delta.size(); ++k)
        if (delta[k]) mpz_addmul_ui(L.g[i][k].get_mpz_t(), pj.get_mpz_t(), delta[k]);
    }
    pj = pj1;
  }
  L.pk = pj;
  return L;
}

void symmetric_mod(mpz_class& c, const mpz_class& m) {
  mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  if (c > m / 2) c -= m;
}

std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& f) {
  if (deg(f) <= 1) return {f};
  std::mt19937_64 rng(0x5eed);
  // pick the prime with the fewest modular factors among a few good ones
  nmod::Fp bestF;
  std::vector<nmod::Poly> bestFactors;
  int tried = 0;
  for (std::size_t i = 0; tried < 3; ++i) {
    uint64_t p = nmod::big_prime(i);
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
    nmod::Fp F(p);
    nmod::Poly fp = reduce(f, F);
    nmod::Poly g = nmod::gcd(F, fp, nmod::derivative(F, fp));
    if (nmod::deg(g) > 0) continue;
    auto facs = nmod::factor_squarefree(F, fp, rng);
    ++tried;
    if (bestFactors.empty() || facs.size() < bestFactors.size()) {
      bestFactors = facs;
      bestF = F;
    }
    if (bestFactors.size() == 1) break;
  }
  if (bestFactors.size() == 1) return {f};
  long target = bits(f.back()) + deg(f) + norm2_bits(f) + 2;
  Lifted L = hensel_lift(f, bestFactors, bestF, target);
  std::vector<ZPoly> out;
  std::vector<std::size_t> rem(L.g.size());
  for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = i;
  ZPoly cur = f;
  std::size_t s = 1;
  while (2 * s <= rem.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      mpz_class lc = cur.back();
      mpz_class c0 = lc;
      for (std::size_t i : idx) c0 *= L.g[rem[i]][0];
      symmetric_mod(c0, L.pk);
      bool plausible = cur[0] == 0 ? true : (c0 != 0 && mpz_divisible_p(mpz_class(lc * cur[0]).get_mpz_t(), c0.get_mpz_t()));
      if (plausible) {
        ZPoly G = {lc};
        for (std::size_t i : idx) {
          G = mul(G, L.g[rem[i]]);
          for (auto& c : G) symmetric_mod(c, L.pk);
        }
        ZPoly g = primitive(G);
        ZPoly q;
        if (divexact(cur, g, &q)) {
          out.push_back(g);
          cur = q;
          std::vector<std::size_t> nrem;
          for (std::size_t i = 0; i < rem.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) nrem.push_back(rem[i]);
          rem = nrem;
          found = true;
          break;
        }
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == rem.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  out.push_back(primitive(cur));
  return out;
}

bool poly_less(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

std::vector<std::pair<ZPoly, int>> factor(const ZPoly& a) {
  ZPoly f = primitive(a);
  if (f.empty()) throw DomainError("InvalidInput", "cannot factor the zero polynomial");
  std::vector<std::pair<ZPoly, int>> out;
  for (auto& [s, m] : squarefree_decomposition(f)) {
    for (auto& g : factor_squarefree_primitive(s)) out.emplace_back(g, m);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (poly_less(x.first, y.first)) return true;
    if (poly_less(y.first, x.first)) return false;
    return x.second < y.second;
  });
  return out;
}

namespace {

bool is_square(const mpz_class& x) { return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()); }

// -D is a square or -D/3 is a square, D < 0.
bool quadratic_in_target(const ZPoly& q) {
  mpz_class D = q[1] * q[1] - 4 * q[2] * q[0];
  if (D >= 0) return false;
  mpz_class nd = -D;
  if (is_square(nd)) return true;
  return mpz_divisible_ui_p(nd.get_mpz_t(), 3) && is_square(nd / 3);
}

}  // namespace

std::vector<ZPoly> low_degree_factors(const ZPoly& a) {
  std::vector<ZPoly> out;
  ZPoly S = squarefree_part(a);
  if (deg(S) <= 0) return out;
  if (S[0] == 0) {
    out.push_back(ZPoly{0, 1});
    S.erase(S.begin());
    S = primitive(S);
    if (deg(S) <= 0) return out;
  }
  std::mt19937_64 rng(0x900d);
  // primes p = 1 mod 12 split in Q(i) and Q(sqrt(-3))
  uint64_t start = (1ull << 61);
  nmod::Fp F;
  std::vector<uint64_t> rts;
  bool have = false;
  for (int tries = 0; tries < 3;) {
    uint64_t p = nmod::prime_congruent_one(start, 12);
    start = p + 1;
    if (mpz_fdiv_ui(S.back().get_mpz_t(), p) == 0) continue;
    nmod::Fp Fp(p);
    nmod::Poly sp = reduce(S, Fp);
    if (nmod::deg(nmod::gcd(Fp, sp, nmod::derivative(Fp, sp))) > 0) continue;
    auto r = nmod::roots(Fp, sp, rng);
    ++tries;
    if (!have || r.size() < rts.size()) {
      rts = r;
      F = Fp;
      have = true;
    }
    if (rts.empty()) break;
  }
  if (rts.empty()) return out;
  const mpz_class lc = S.back();
  long bound_bits = bits(lc) + norm2_bits(S) + 2;
  long target = bound_bits + 2;
  ZPoly dS = derivative(S);
  // lift every root by Newton iteration
  mpz_class m = F.p;
  std::vector<mpz_class> R(rts.size());
  for (std::size_t i = 0; i < rts.size(); ++i) R[i] = static_cast<unsigned long>(rts[i]);
  while (bits(m) <= target) {
    m = m * m;
    for (auto& r : R) {
      mpz_class fv = 0, dv = 0;
      for (std::size_t k = S.size(); k-- > 0;) {
        fv = fv * r + S[k];
        mpz_fdiv_r(fv.get_mpz_t(), fv.get_mpz_t(), m.get_mpz_t());
      }
      for (std::size_t k = dS.size(); k-- > 0;) {
        dv = dv * r + dS[k];
        mpz_fdiv_r(dv.get_mpz_t(), dv.get_mpz_t(), m.get_mpz_t());
      }
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("Internal", "Hensel lifting hit a singular root");
      r = r - fv * inv;
      mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    }
  }
  mpz_class half = m / 2;
  mpz_class limit = 1;
  mpz_mul_2exp(limit.get_mpz_t(), limit.get_mpz_t(), static_cast<mp_bitcnt_t>(bound_bits));
  std::vector<mpz_class> L(R.size());
  for (std::size_t i = 0; i < R.size(); ++i) {
    L[i] = lc * R[i];
    mpz_fdiv_r(L[i].get_mpz_t(), L[i].get_mpz_t(), m.get_mpz_t());
  }
  auto sym = [&](mpz_class v) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
    return v;
  };
  auto small = [&](const mpz_class& v) { return mpz_cmpabs(v.get_mpz_t(), limit.get_mpz_t()) <= 0; };
  std::vector<bool> used(R.size(), false);
  for (std::size_t i = 0; i < R.size(); ++i) {
    mpz_class c = sym(L[i]);
    if (!small(c)) continue;
    ZPoly cand = primitive(ZPoly{-c, lc});
    if (divexact(S, cand, nullptr)) {
      out.push_back(cand);
      used[i] = true;
    }
  }
  for (std::size_t i = 0; i < R.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < R.size(); ++j) {
      if (used[j]) continue;
      mpz_class s = sym(L[i] + L[j]);
      if (!small(s)) continue;
      mpz_class q = sym(L[i] * R[j]);
      if (!small(q)) continue;
      ZPoly cand = primitive(ZPoly{q, -s, lc});
      if (!quadratic_in_target(cand)) continue;
      if (divexact(S, cand, nullptr)) {
        out.push_back(cand);
        used[i] = used[j] = true;
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

}  // namespace equisym::zpoly
