#include "equisym/autgroup.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "equisym/errors.hpp"
#include "equisym/nmod.hpp"
#include "equisym/zpoly.hpp"

namespace equisym {

// ---------------------------------------------------------------- points

ProjPoint ProjPoint::normalized(std::vector<CycNum> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    CycNum inv = v[i].inverse();
    for (std::size_t j = i; j < v.size(); ++j) v[j] *= inv;
    return ProjPoint{std::move(v)};
  }
  fail("ZeroPoint", "the zero vector is not a projective point");
}

bool ProjPoint::is_rational() const {
  return std::all_of(c.begin(), c.end(), [](const CycNum& x) { return x.is_rational(); });
}

ProjPoint ProjPoint::embed(const CycField& target) const {
  ProjPoint r;
  for (const auto& x : c) r.c.push_back(equisym::embed(x, target));
  return r;
}

bool ProjPoint::operator==(const ProjPoint& o) const {
  if (c.size() != o.c.size()) return false;
  if (c.empty() || field() == o.field()) return c == o.c;
  CycField K = cyclo_field(lcm_conductor(field().conductor(), o.field().conductor()));
  return embed(K).c == o.embed(K).c;
}

bool ProjPoint::operator<(const ProjPoint& o) const {
  for (std::size_t i = 0; i < c.size() && i < o.c.size(); ++i) {
    int s = c[i].compare(o.c[i]);
    if (s) return s < 0;
  }
  return c.size() < o.c.size();
}

std::size_t ProjPoint::hash() const {
  std::size_t h = 0;
  for (const auto& x : c) h = h * 1000003u ^ x.hash();
  return h;
}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " : " : "") << c[i].to_string();
  os << ")";
  return os.str();
}

namespace {

CycField join(const CycField& a, const CycField& b) {
  if (a == b) return a;
  return cyclo_field(lcm_conductor(a.conductor(), b.conductor()));
}

std::vector<MPoly> embed_all(const std::vector<MPoly>& v, const CycField& K) {
  std::vector<MPoly> r;
  for (const auto& p : v) r.push_back(p.embed(K));
  return r;
}

std::vector<CycNum> eval_all(const std::vector<MPoly>& G, const std::vector<CycNum>& v) {
  std::vector<CycNum> r;
  for (const auto& g : G) r.push_back(g.eval(v));
  return r;
}

}  // namespace

ProjPoint apply_map(const ProjMap& f, const ProjPoint& P) {
  CycField K = join(f.field, P.field());
  ProjPoint Q = P.embed(K);
  return ProjPoint::normalized(eval_all(embed_all(f.coords, K), Q.c));
}

ProjPoint iterate_map(const ProjMap& f, const ProjPoint& P, int n) {
  CycField K = join(f.field, P.field());
  auto G = embed_all(f.coords, K);
  ProjPoint Q = P.embed(K);
  for (int i = 0; i < n; ++i) Q = ProjPoint::normalized(eval_all(G, Q.c));
  return Q;
}

// ---------------------------------------------------------------- elimination

namespace {

// sum c_ij x^i y^j with coefficients in Z[zeta_c] (power basis), after clearing denominators.
struct IntBiv {
  int degy = 0;
  int total = 0;
  struct Term {
    int i, j;
    std::vector<mpz_class> num;
  };
  std::vector<Term> terms;
};

IntBiv to_int_biv(const MPoly& p) {
  IntBiv b;
  mpz_class L = 1;
  for (const auto& [k, c] : p.terms()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.denominator().get_mpz_t());
  for (const auto& [k, c] : p.terms()) {
    IntBiv::Term t{mono::exp(k, 0), mono::exp(k, 1), {}};
    mpz_class s = L / c.denominator();
    for (const auto& n : c.numerators()) t.num.push_back(n * s);
    b.degy = std::max(b.degy, t.j);
    b.total = std::max(b.total, t.i + t.j);
    b.terms.push_back(std::move(t));
  }
  return b;
}

double log2_norm1(const IntBiv& b) {
  mpz_class s = 0;
  for (const auto& t : b.terms)
    for (const auto& n : t.num) s += abs(n);
  return static_cast<double>(mpz_sizeinbase(s.get_mpz_t(), 2));
}

// Embeddings zeta_c -> r^k mod p, k a unit mod c.
std::vector<uint64_t> embeddings(const nmod::Fp& F, unsigned c) {
  if (c == 1) return {1};
  uint64_t r = nmod::root_of_unity(F, c);
  std::vector<uint64_t> out;
  for (unsigned k = 1; k < c; ++k)
    if (std::gcd(k, c) == 1) out.push_back(F.pow(r, k));
  return out;
}

// Columns by y-power, each a polynomial in x, for one embedding.
std::vector<nmod::Poly> reduce_biv(const nmod::Fp& F, const IntBiv& b, uint64_t zeta) {
  std::vector<nmod::Poly> cols(static_cast<std::size_t>(b.degy) + 1);
  for (const auto& t : b.terms) {
    uint64_t v = 0, zp = 1;
    for (const auto& n : t.num) {
      uint64_t r = mpz_fdiv_ui(n.get_mpz_t(), F.p);
      v = F.add(v, F.mul(r, zp));
      zp = F.mul(zp, zeta);
    }
    auto& col = cols[static_cast<std::size_t>(t.j)];
    if (col.size() <= static_cast<std::size_t>(t.i)) col.resize(static_cast<std::size_t>(t.i) + 1, 0);
    col[static_cast<std::size_t>(t.i)] = F.add(col[static_cast<std::size_t>(t.i)], v);
  }
  for (auto& c : cols) nmod::trim(c);
  return cols;
}

// Residues mod p of prod over embeddings of Res_y(A, B), a polynomial in x of degree < npts.
std::vector<uint64_t> eliminant_mod(uint64_t p, const IntBiv& A, const IntBiv& B, unsigned c, std::size_t npts) {
  nmod::Fp F(p);
  std::vector<uint64_t> vals(npts, 1);
  for (uint64_t z : embeddings(F, c)) {
    auto ca = reduce_biv(F, A, z), cb = reduce_biv(F, B, z);
    nmod::Poly a(ca.size()), b(cb.size());
    for (std::size_t t = 0; t < npts; ++t) {
      for (std::size_t j = 0; j < ca.size(); ++j) a[j] = nmod::eval(F, ca[j], t);
      for (std::size_t j = 0; j < cb.size(); ++j) b[j] = nmod::eval(F, cb[j], t);
      vals[t] = F.mul(vals[t], nmod::resultant(F, a, b, A.degy, B.degy));
    }
  }
  nmod::Poly e = nmod::interpolate_consecutive(F, vals);
  e.resize(npts, 0);
  return e;
}

// Rational polynomial in x vanishing at the x-coordinates of all common zeros of A and B
// (and of their Galois conjugates). A and B live in Q(zeta_c), c in {1, 4, 6}.
zpoly::ZPoly eliminant(const MPoly& A0, const MPoly& B0, const SolveOptions& opts) {
  unsigned c = A0.field().conductor();
  IntBiv A = to_int_biv(A0), B = to_int_biv(B0);
  long nemb = c == 1 ? 1 : 2;
  long degree = nemb * A.total * B.total;
  if (degree > opts.eliminant_degree_cap)
    throw ResourceCap("eliminant degree bound " + std::to_string(degree) + " exceeds the cap " +
                      std::to_string(opts.eliminant_degree_cap));
  std::size_t npts = static_cast<std::size_t>(degree) + 1;
  double bound = static_cast<double>(nemb) * (B.degy * log2_norm1(A) + A.degy * log2_norm1(B)) + 2.0;
  std::vector<uint64_t> primes;
  double have = 0;
  for (std::size_t i = 0; have <= bound; ++i) {
    uint64_t p = nmod::big_prime(i);
    if ((p - 1) % 12 != 0) continue;
    primes.push_back(p);
    have += 61.0;
  }
  zpoly::CrtVector crt(npts);
  int threads = std::max(1, opts.threads);
  for (std::size_t s = 0; s < primes.size(); s += static_cast<std::size_t>(threads)) {
    std::vector<std::future<std::vector<uint64_t>>> jobs;
    std::size_t e = std::min(primes.size(), s + static_cast<std::size_t>(threads));
    for (std::size_t k = s; k < e; ++k) {
      uint64_t p = primes[k];
      auto policy = threads > 1 ? std::launch::async : std::launch::deferred;
      jobs.push_back(std::async(policy, [p, &A, &B, c, npts] { return eliminant_mod(p, A, B, c, npts); }));
    }
    for (std::size_t k = s; k < e; ++k) crt.add(jobs[k - s].get(), primes[k]);
  }
  zpoly::ZPoly E = crt.symmetric();
  zpoly::trim(E);
  if (E.empty()) fail("EliminationDegenerate", "the eliminant vanishes identically");
  return E;
}

UPoly univariate(const MPoly& p, int var, const CycField& K) {
  UPoly u(K);
  for (const auto& [k, c] : p.terms()) {
    auto e = static_cast<std::size_t>(mono::exp(k, var));
    if (u.c.size() <= e) u.c.resize(e + 1, K.zero());
    u.c[e] += equisym::embed(c, K);
  }
  u.trim();
  return u;
}

// Common zeros (x0, y0) in K^2 of A(x, y) and B(x, y), given the rational factors of the eliminant.
std::vector<ProjPoint> chart_points(const MPoly& A0, const MPoly& B0, const std::vector<zpoly::ZPoly>& factors,
                                    const CycField& K) {
  MPoly A = A0.embed(K), B = B0.embed(K);
  std::vector<ProjPoint> out;
  for (const auto& x0 : roots_of_factors(factors, K)) {
    UPoly a = univariate(A.specialize(0, x0), 1, K), b = univariate(B.specialize(0, x0), 1, K);
    UPoly g = gcd(a, b);
    if (g.is_zero()) fail("EliminationDegenerate", "a whole vertical line solves the system");
    if (g.deg() < 1) continue;
    for (const auto& y0 : roots_in_own_field(g)) out.push_back(ProjPoint{{x0, y0, K.one()}});
  }
  return out;
}

// Points Q with G(Q) parallel to T(Q), over each field in `fields`.
// G and T are triples of forms (T either the coordinates or a constant point).
std::vector<std::vector<ProjPoint>> solve_parallel(const std::vector<MPoly>& G0, const std::vector<MPoly>& T0,
                                                   const std::vector<CycField>& fields, const SolveOptions& opts) {
  CycField F0 = join(G0[0].field(), T0[0].field());
  auto G = embed_all(G0, F0), T = embed_all(T0, F0);
  // T_k is nonzero on the chart z = 1: the coordinate z itself, or a nonzero constant
  int k = 2;
  if (T[2].is_zero()) k = T[0].is_zero() ? 1 : 0;
  std::vector<MPoly> eqs;
  for (int i = 0; i < 3; ++i) {
    if (i == k) continue;
    MPoly e = G[static_cast<std::size_t>(i)] * T[static_cast<std::size_t>(k)] -
              T[static_cast<std::size_t>(i)] * G[static_cast<std::size_t>(k)];
    eqs.push_back(e.specialize(2, F0.one()));
  }
  std::vector<zpoly::ZPoly> factors;
  bool all_zero = eqs[0].is_zero() && eqs[1].is_zero();
  if (all_zero) fail("EliminationDegenerate", "the chart equations vanish identically");
  factors = zpoly::low_degree_factors(eliminant(eqs[0], eqs[1], opts));

  std::vector<std::vector<ProjPoint>> out;
  for (const auto& K0 : fields) {
    CycField K = join(K0, F0);
    if (K != K0) {
      // a constant target outside the field has no solutions there
      out.emplace_back();
      continue;
    }
    std::vector<ProjPoint> pts = chart_points(eqs[0], eqs[1], factors, K);
    // line z = 0, chart y = 1
    std::vector<MPoly> g, t;
    for (int i = 0; i < 3; ++i) {
      g.push_back(G[static_cast<std::size_t>(i)].embed(K).specialize(1, K.one()).specialize(2, K.zero()));
      t.push_back(T[static_cast<std::size_t>(i)].embed(K).specialize(1, K.one()).specialize(2, K.zero()));
    }
    UPoly h(K);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        h = gcd(h, univariate(g[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(j)] -
                                  g[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(i)],
                              0, K));
    if (h.is_zero()) fail("EliminationDegenerate", "the line at infinity is a solution component");
    if (h.deg() >= 1)
      for (const auto& x0 : roots_in_own_field(h)) pts.push_back(ProjPoint{{x0, K.one(), K.zero()}});
    // (1 : 0 : 0)
    std::vector<CycNum> e{K.one(), K.zero(), K.zero()};
    auto gv = eval_all(embed_all(G, K), e), tv = eval_all(embed_all(T, K), e);
    bool par = true;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        par = par && (gv[static_cast<std::size_t>(i)] * tv[static_cast<std::size_t>(j)] ==
                      gv[static_cast<std::size_t>(j)] * tv[static_cast<std::size_t>(i)]);
    if (par) pts.push_back(ProjPoint{e});
    for (auto& P : pts) P = ProjPoint::normalized(P.c);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    out.push_back(std::move(pts));
  }
  return out;
}

void check_input(const ProjMap& f) {
  if (f.N != 2) fail("InvalidInput", "need a map of P^2");
  if (f.degree < 2) fail("InvalidInput", "need degree at least 2");
}

std::vector<MPoly> iterate_forms(const ProjMap& f, int n) {
  std::vector<MPoly> G;
  for (int i = 0; i < 3; ++i) G.push_back(MPoly::var(f.field, 3, i));
  for (int k = 0; k < n; ++k) {
    std::vector<MPoly> H;
    for (const auto& c : f.coords) H.push_back(c.compose(G));
    G = std::move(H);
  }
  return G;
}

bool is_exact(const ProjMap& f, const ProjPoint& P, int n) {
  for (int m = 1; m < n; ++m)
    if (n % m == 0 && iterate_map(f, P, m) == P) return false;
  return true;
}

std::vector<PeriodicSet> periodic_in_fields(const ProjMap& f, int n, const std::vector<unsigned>& conductors,
                                            const SolveOptions& opts) {
  check_input(f);
  if (n < 1) fail("InvalidInput", "period must be positive");
  for (unsigned c : conductors)
    if (c != 1 && c != 4 && c != 6) fail("InvalidInput", "field conductor must be 1, 4 or 6");
  if (f.field.degree() > 2) fail("InvalidInput", "map coefficients must lie in Q, Q(i) or Q(zeta_6)");
  std::vector<CycField> fields;
  for (unsigned c : conductors) fields.push_back(cyclo_field(c));
  auto G = iterate_forms(f, n);
  std::vector<MPoly> T;
  for (int i = 0; i < 3; ++i) T.push_back(MPoly::var(f.field, 3, i));
  auto sols = solve_parallel(G, T, fields, opts);
  std::vector<PeriodicSet> out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    PeriodicSet s;
    s.map = f;
    s.period = n;
    s.field = fields[i];
    for (auto& P : sols[i]) {
      if (iterate_map(f, P, n) != P.embed(join(f.field, P.field())))
        fail("InternalError", "eliminated point " + P.to_string() + " is not periodic");
      s.exact.push_back(is_exact(f, P, n));
      s.points.push_back(std::move(P));
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

PeriodicSet periodic_points(const ProjMap& f, int n, unsigned conductor, const SolveOptions& opts) {
  return periodic_in_fields(f, n, {conductor}, opts)[0];
}

std::vector<ProjPoint> preimages(const ProjMap& f, const ProjPoint& P, unsigned conductor, const SolveOptions& opts) {
  check_input(f);
  if (conductor != 1 && conductor != 4 && conductor != 6) fail("InvalidInput", "field conductor must be 1, 4 or 6");
  if (P.c.size() != 3) fail("InvalidInput", "need a point of P^2");
  CycField K = cyclo_field(conductor);
  if (join(K, P.field()) != K) return {};
  std::vector<MPoly> T;
  for (const auto& x : P.c) T.push_back(MPoly::constant(equisym::embed(x, K), 3));
  auto sols = solve_parallel(f.coords, T, {K}, opts)[0];
  for (const auto& Q : sols)
    if (apply_map(f, Q) != P.embed(join(f.field, K)))
      fail("InternalError", "eliminated point is not a preimage");
  return sols;
}

// ---------------------------------------------------------------- finite fields

namespace {

// F_{p^2} = F_p[s] / (s^2 - nr), p small.
struct Fq {
  uint64_t p, nr;
  struct E {
    uint64_t a, b;
    bool operator==(const E& o) const { return a == o.a && b == o.b; }
  };
  E add(E x, E y) const { return {(x.a + y.a) % p, (x.b + y.b) % p}; }
  E mul(E x, E y) const { return {(x.a * y.a + nr * (x.b * y.b % p)) % p, (x.a * y.b + x.b * y.a) % p}; }
  E inv(E x) const {
    uint64_t n = (x.a * x.a + p * p - nr * (x.b * x.b % p)) % p;
    uint64_t ni = powm(n, p - 2);
    return {x.a * ni % p, (p - x.b) % p * ni % p};
  }
  uint64_t powm(uint64_t b, uint64_t e) const {
    uint64_t r = 1;
    b %= p;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  }
  bool zero(E x) const { return x.a == 0 && x.b == 0; }
};

struct ModpMap {
  struct Term {
    Fq::E c;
    int e[3];
  };
  std::vector<Term> coords[3];
};

std::array<Fq::E, 3> eval_modp(const Fq& F, const ModpMap& m, const std::array<Fq::E, 3>& v, int deg) {
  std::array<std::vector<Fq::E>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    pw[static_cast<std::size_t>(i)].push_back({1, 0});
    for (int k = 0; k < deg; ++k)
      pw[static_cast<std::size_t>(i)].push_back(F.mul(pw[static_cast<std::size_t>(i)].back(), v[static_cast<std::size_t>(i)]));
  }
  std::array<Fq::E, 3> out{};
  for (int i = 0; i < 3; ++i) {
    Fq::E s{0, 0};
    for (const auto& t : m.coords[i]) {
      Fq::E x = t.c;
      for (int j = 0; j < 3; ++j) x = F.mul(x, pw[static_cast<std::size_t>(j)][static_cast<std::size_t>(t.e[j])]);
      s = F.add(s, x);
    }
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

bool normalize_modp(const Fq& F, std::array<Fq::E, 3>& v) {
  for (int i = 0; i < 3; ++i) {
    if (F.zero(v[static_cast<std::size_t>(i)])) continue;
    Fq::E inv = F.inv(v[static_cast<std::size_t>(i)]);
    for (int j = i; j < 3; ++j) v[static_cast<std::size_t>(j)] = F.mul(v[static_cast<std::size_t>(j)], inv);
    return true;
  }
  return false;
}

}  // namespace

CycleFilter modp_cycle_filter(const ProjMap& f, int n, uint64_t p) {
  check_input(f);
  if (!f.is_rational()) fail("InvalidInput", "the cycle filter needs a map over Q");
  if (n < 1) fail("InvalidInput", "period must be positive");
  if (p < 3 || p > 100000 || !nmod::is_prime(p)) fail("InvalidInput", "need an odd prime below 10^5");
  // integral primitive model
  mpz_class L = 1;
  for (const auto& c : f.coords)
    for (const auto& [k, v] : c.terms()) {
      if (mpz_divisible_ui_p(v.denominator().get_mpz_t(), p)) fail("BadReduction", "p divides a denominator");
      mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), v.denominator().get_mpz_t());
    }
  std::vector<MPoly> scaled;
  for (const auto& c : f.coords) scaled.push_back(c * f.field.from_rational(Rational(L)));
  CycNum res = resultant_of_forms(scaled);
  Rational r = res.to_rational();
  if (mpz_divisible_ui_p(r.get_num_mpz_t(), p)) fail("BadReduction", "the reduction is not a morphism");

  Fq F{p, 0};
  for (uint64_t a = 2; a < p; ++a)
    if (F.powm(a, (p - 1) / 2) == p - 1) {
      F.nr = a;
      break;
    }
  ModpMap m;
  for (int i = 0; i < 3; ++i)
    for (const auto& [k, v] : scaled[static_cast<std::size_t>(i)].terms()) {
      Rational q = v.to_rational();
      uint64_t c = mpz_fdiv_ui(q.get_num_mpz_t(), p);
      m.coords[i].push_back({{c, 0}, {mono::exp(k, 0), mono::exp(k, 1), mono::exp(k, 2)}});
    }
  // every point of P^2(F_{p^2}), which contains P^2(F_p)
  std::vector<Fq::E> elems;
  for (uint64_t a = 0; a < p; ++a)
    for (uint64_t b = 0; b < p; ++b) elems.push_back({a, b});
  auto orbit_has_exact = [&](std::array<Fq::E, 3> P) {
    std::vector<std::array<Fq::E, 3>> orbit{P};
    for (int k = 1; k <= n; ++k) {
      auto Q = eval_modp(F, m, orbit.back(), f.degree);
      if (!normalize_modp(F, Q)) fail("BadReduction", "reduced map has a base point");
      orbit.push_back(Q);
    }
    auto same = [](const std::array<Fq::E, 3>& a, const std::array<Fq::E, 3>& b) {
      return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
    };
    if (!same(orbit[static_cast<std::size_t>(n)], P)) return false;
    for (int d = 1; d < n; ++d)
      if (n % d == 0 && same(orbit[static_cast<std::size_t>(d)], P)) return false;
    return true;
  };
  const Fq::E one{1, 0}, zero{0, 0};
  if (orbit_has_exact({zero, zero, one})) return CycleFilter::Unknown;
  for (const auto& a : elems)
    if (orbit_has_exact({zero, one, a})) return CycleFilter::Unknown;
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (orbit_has_exact({one, a, b})) return CycleFilter::Unknown;
  return CycleFilter::NoRationalNCycles;
}

// ---------------------------------------------------------------- candidates

ActionCase classify_action(const ProjMap& f, const std::vector<ProjPoint>& triple) {
  if (triple.size() != 3) fail("InvalidInput", "need three points");
  int img[3];
  for (int i = 0; i < 3; ++i) {
    ProjPoint Q = apply_map(f, triple[static_cast<std::size_t>(i)]);
    img[i] = -1;
    for (int j = 0; j < 3; ++j) {
      CycField K = join(Q.field(), triple[static_cast<std::size_t>(j)].field());
      if (Q.embed(K) == triple[static_cast<std::size_t>(j)].embed(K)) img[i] = j;
    }
    if (img[i] < 0) return {};
  }
  std::vector<int> ord{0, 1, 2};
  for (int label = 1; label <= 7; ++label) {
    std::sort(ord.begin(), ord.end());
    do {
      int x = ord[0], y = ord[1], z = ord[2];
      bool ok = false;
      switch (label) {
        case 1: ok = img[x] == x && img[y] == y && img[z] == z; break;
        case 2: ok = img[x] == y && img[y] == z && img[z] == x; break;
        case 3: ok = img[x] == y && img[y] == x && img[z] == z; break;
        case 4: ok = img[x] == y && img[y] == x && img[z] == x; break;
        case 5: ok = img[x] == x && img[y] == y && img[z] == x; break;
        case 6: ok = img[x] == x && img[y] == x && img[z] == x; break;
        case 7: ok = img[x] == x && img[y] == x && img[z] == y; break;
      }
      if (ok) return {label, ord};
    } while (std::next_permutation(ord.begin(), ord.end()));
  }
  return {};
}

namespace {

// Rank-one pieces R_k = M e_k e_k^T M^-1 with M = [x | y | z].
struct TripleFrame {
  CycField field;
  FMatrix R[3];
};

std::optional<TripleFrame> frame(const std::vector<ProjPoint>& t, const CycField& K) {
  FMatrix M(K, 3);
  for (int j = 0; j < 3; ++j) {
    ProjPoint P = t[static_cast<std::size_t>(j)].embed(K);
    for (int i = 0; i < 3; ++i) M.at(i, j) = P.c[static_cast<std::size_t>(i)];
  }
  if (M.det().is_zero()) return std::nullopt;
  FMatrix Mi = M.inverse();
  TripleFrame fr{K, {FMatrix(K, 3), FMatrix(K, 3), FMatrix(K, 3)}};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) fr.R[k].at(i, j) = M.at(i, k) * Mi.at(k, j);
  return fr;
}

// Rational representative of the projective class, if one exists.
std::optional<FMatrix> rational_class(const FMatrix& S) {
  FMatrix N = S.projective_normal();
  if (!N.is_rational()) return std::nullopt;
  CycField Q = cyclo_field(1);
  std::vector<CycNum> e;
  for (const auto& x : N.entries()) e.push_back(Q.from_rational(x.to_rational()));
  return FMatrix(Q, 3, e);
}

std::optional<FMatrix> candidate_in_frame(const TripleFrame& fr, const CycNum& e1, const CycNum& e2) {
  FMatrix S = fr.R[0] * e1 + fr.R[1] * e2 + fr.R[2];
  return rational_class(S);
}

CycField field_for(const std::vector<ProjPoint>& t, int n) {
  unsigned c = std::max(1, n);
  for (const auto& P : t) c = lcm_conductor(c, P.field().conductor());
  return cyclo_field(c);
}

}  // namespace

std::optional<CandidateAut> candidate_from_triple(const std::vector<ProjPoint>& triple, int n, int a, int b) {
  if (triple.size() != 3) fail("InvalidInput", "need three points");
  if (n < 1) fail("InvalidInput", "root-of-unity order must be positive");
  CycField K = field_for(triple, n);
  auto fr = frame(triple, K);
  if (!fr) fail("CollinearTriple", "the three points are collinear");
  auto S = candidate_in_frame(*fr, K.root_of_unity(static_cast<unsigned>(n), a),
                              K.root_of_unity(static_cast<unsigned>(n), b));
  if (!S) return std::nullopt;
  return CandidateAut{*S, triple, n, a, b, 0};
}

FMatrix candidate_by_columns(const std::vector<ProjPoint>& t, const CycNum& e1, const CycNum& e2) {
  CycField K = join(join(t[0].field(), t[1].field()), join(t[2].field(), join(e1.field(), e2.field())));
  auto P = [&](int k) { return t[static_cast<std::size_t>(k)].embed(K).c; };
  auto x = P(0), y = P(1), z = P(2);
  CycNum z1 = equisym::embed(e1, K), z2 = equisym::embed(e2, K);
  FMatrix S(K, 3);
  // column 1
  S.at(0, 0) = (x[0] * y[2] * z[1] - x[0] * y[1] * z[2]) * z1 + (-(x[2] * y[0] * z[1]) + x[1] * y[0] * z[2]) * z2 +
               (x[2] * y[1] * z[0] - x[1] * y[2] * z[0]);
  S.at(1, 0) = (x[1] * y[2] * z[1] - x[1] * y[1] * z[2]) * z1 + (-(x[2] * y[1] * z[1]) + x[1] * y[1] * z[2]) * z2 +
               (x[2] * y[1] * z[1] - x[1] * y[2] * z[1]);
  S.at(2, 0) = (x[2] * y[2] * z[1] - x[2] * y[1] * z[2]) * z1 + (-(x[2] * y[2] * z[1]) + x[1] * y[2] * z[2]) * z2 +
               (x[2] * y[1] * z[2] - x[1] * y[2] * z[2]);
  // column 2
  S.at(0, 1) = (-(x[0] * y[2] * z[0]) + x[0] * y[0] * z[2]) * z1 + (x[2] * y[0] * z[0] - x[0] * y[0] * z[2]) * z2 +
               (-(x[2] * y[0] * z[0]) + x[0] * y[2] * z[0]);
  S.at(1, 1) = (-(x[1] * y[2] * z[0]) + x[1] * y[0] * z[2]) * z1 + (x[2] * y[1] * z[0] - x[0] * y[1] * z[2]) * z2 +
               (-(x[2] * y[0] * z[1]) + x[0] * y[2] * z[1]);
  S.at(2, 1) = (-(x[2] * y[2] * z[0]) + x[2] * y[0] * z[2]) * z1 + (x[2] * y[2] * z[0] - x[0] * y[2] * z[2]) * z2 +
               (-(x[2] * y[0] * z[2]) + x[0] * y[2] * z[2]);
  // column 3
  S.at(0, 2) = (x[0] * y[1] * z[0] - x[0] * y[0] * z[1]) * z1 + (-(x[1] * y[0] * z[0]) + x[0] * y[0] * z[1]) * z2 +
               (x[1] * y[0] * z[0] - x[0] * y[1] * z[0]);
  S.at(1, 2) = (x[1] * y[1] * z[0] - x[1] * y[0] * z[1]) * z1 + (-(x[1] * y[1] * z[0]) + x[0] * y[1] * z[1]) * z2 +
               (x[1] * y[0] * z[1] - x[0] * y[1] * z[1]);
  S.at(2, 2) = (x[2] * y[1] * z[0] - x[2] * y[0] * z[1]) * z1 + (-(x[1] * y[2] * z[0]) + x[0] * y[2] * z[1]) * z2 +
               (x[1] * y[0] * z[2] - x[0] * y[1] * z[2]);
  return S;
}

// ---------------------------------------------------------------- the group

namespace {

struct FieldPool {
  CycField field;
  std::vector<ProjPoint> pts;
  std::vector<int> image;  // index of f(P) in pts, or -1
  std::vector<int> kind;   // 1 fixed, 2 two-periodic, 3 three-periodic, 0 strictly preperiodic

  int add(const ProjPoint& P, int k) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (pts[i] == P) return static_cast<int>(i);
    pts.push_back(P);
    kind.push_back(k);
    return static_cast<int>(pts.size()) - 1;
  }
};

struct Triple {
  int i[3];
  int label;
};

std::vector<Triple> enumerate_triples(const FieldPool& pool) {
  std::size_t N = pool.pts.size();
  std::vector<std::vector<int>> pre(N);
  for (std::size_t j = 0; j < N; ++j)
    if (pool.image[j] >= 0 && pool.image[j] != static_cast<int>(j)) pre[static_cast<std::size_t>(pool.image[j])].push_back(static_cast<int>(j));
  std::vector<int> fixed, two, three;
  for (std::size_t j = 0; j < N; ++j) {
    if (pool.kind[j] == 1) fixed.push_back(static_cast<int>(j));
    if (pool.kind[j] == 2) two.push_back(static_cast<int>(j));
    if (pool.kind[j] == 3) three.push_back(static_cast<int>(j));
  }
  std::map<std::array<int, 3>, int> seen;
  std::vector<Triple> out;
  auto put = [&](int a, int b, int c, int label) {
    std::array<int, 3> k{a, b, c};
    std::sort(k.begin(), k.end());
    if (k[0] == k[1] || k[1] == k[2]) return;
    if (seen.emplace(k, label).second) out.push_back({{k[0], k[1], k[2]}, label});
  };
  auto img = [&](int j) { return pool.image[static_cast<std::size_t>(j)]; };
  auto npre = [&](int j) -> const std::vector<int>& { return pre[static_cast<std::size_t>(j)]; };
  // s1
  for (std::size_t a = 0; a < fixed.size(); ++a)
    for (std::size_t b = a + 1; b < fixed.size(); ++b)
      for (std::size_t c = b + 1; c < fixed.size(); ++c) put(fixed[a], fixed[b], fixed[c], 1);
  // s2
  for (int x : three) put(x, img(x), img(img(x)), 2);
  // s3, s4
  for (int x : two) {
    int y = img(x);
    for (int z : fixed) put(x, y, z, 3);
    for (int z : npre(x))
      if (z != y) put(x, y, z, 4);
  }
  // s5, s6, s7
  for (int x : fixed) {
    for (int y : fixed)
      if (y != x)
        for (int z : npre(x)) put(x, y, z, 5);
    const auto& px = npre(x);
    for (std::size_t a = 0; a < px.size(); ++a) {
      for (std::size_t b = a + 1; b < px.size(); ++b) put(x, px[a], px[b], 6);
      for (int z : npre(px[a])) put(x, px[a], z, 7);
    }
  }
  std::sort(out.begin(), out.end(), [](const Triple& u, const Triple& v) {
    if (u.label != v.label) return u.label < v.label;
    return std::lexicographical_compare(u.i, u.i + 3, v.i, v.i + 3);
  });
  return out;
}

}  // namespace

AutResult automorphism_group_p2(const ProjMap& f, const AutOptions& opts) {
  check_input(f);
  if (!f.is_rational()) fail("InvalidInput", "the automorphism search needs a map over Q");
  if (macaulay_resultant(f, opts.seed).is_zero()) fail("NotMorphism", "the map has a base point");
  SolveOptions so{opts.eliminant_degree_cap, opts.seed, opts.threads};
  AutResult res;
  res.map = f;

  if (opts.skip_period_3) {
    for (uint64_t p : opts.modp_primes) {
      try {
        if (modp_cycle_filter(f, 3, p) == CycleFilter::NoRationalNCycles) {
          res.period3_certificate = p;
          break;
        }
      } catch (const DomainError& e) {
        if (e.kind() != "BadReduction") throw;
      }
    }
  }

  const std::vector<unsigned> conds{4, 6};
  std::vector<FieldPool> pools(conds.size());
  for (std::size_t k = 0; k < conds.size(); ++k) pools[k].field = cyclo_field(conds[k]);
  for (int n = 1; n <= 3; ++n) {
    if (n == 3 && res.period3_certificate) break;
    auto sets = periodic_in_fields(f, n, conds, so);
    for (std::size_t k = 0; k < conds.size(); ++k)
      for (std::size_t i = 0; i < sets[k].points.size(); ++i)
        if (sets[k].exact[i]) pools[k].add(sets[k].points[i], n);
  }
  // strictly preperiodic points: preimages of fixed and 2-periodic points, and second preimages of fixed points
  for (std::size_t k = 0; k < conds.size(); ++k) {
    FieldPool& pool = pools[k];
    std::vector<ProjPoint> first;
    std::size_t base = pool.pts.size();
    for (std::size_t i = 0; i < base; ++i) {
      if (pool.kind[i] == 3) continue;
      for (const auto& Q : preimages(f, pool.pts[i], conds[k], so)) {
        bool periodic = false;
        for (std::size_t j = 0; j < base; ++j) periodic = periodic || pool.pts[j] == Q;
        if (periodic) continue;
        pool.add(Q, 0);
        if (pool.kind[i] == 1) first.push_back(Q);
      }
    }
    for (const auto& P : first)
      for (const auto& Q : preimages(f, P, conds[k], so)) pool.add(Q, 0);
    pool.image.assign(pool.pts.size(), -1);
    for (std::size_t i = 0; i < pool.pts.size(); ++i) {
      ProjPoint Q = apply_map(f, pool.pts[i]).embed(pool.field);
      for (std::size_t j = 0; j < pool.pts.size(); ++j)
        if (pool.pts[j] == Q) pool.image[i] = static_cast<int>(j);
    }
  }

  // candidates
  CycField Q = cyclo_field(1);
  MatrixIndex tried;
  std::vector<FMatrix> tried_list;
  std::vector<CandidateAut> accepted;
  for (std::size_t k = 0; k < conds.size(); ++k) {
    const FieldPool& pool = pools[k];
    std::vector<int> orders = conds[k] == 4 ? std::vector<int>{2, 4} : std::vector<int>{2, 3, 6};
    for (const auto& t : enumerate_triples(pool)) {
      std::vector<ProjPoint> tp{pool.pts[static_cast<std::size_t>(t.i[0])], pool.pts[static_cast<std::size_t>(t.i[1])],
                                pool.pts[static_cast<std::size_t>(t.i[2])]};
      bool all_rational = tp[0].is_rational() && tp[1].is_rational() && tp[2].is_rational();
      CycField K = cyclo_field(conds[k] == 4 ? 4 : 6);
      auto fr = frame(tp, K);
      if (!fr) continue;
      for (int n : orders) {
        if (k > 0 && n == 2 && all_rational) continue;  // already done over Q(i)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            if (std::gcd(std::gcd(a, b), n) != 1) continue;
            auto S = candidate_in_frame(*fr, K.root_of_unity(static_cast<unsigned>(n), a),
                                        K.root_of_unity(static_cast<unsigned>(n), b));
            if (!S || S->is_identity() || tried.find(*S) >= 0) continue;
            tried.insert(*S);
            tried_list.push_back(*S);
            if (is_automorphism(f, *S)) {
              std::vector<ProjPoint> src;
              for (int j = 0; j < 3; ++j) src.push_back(tp[static_cast<std::size_t>(j)].embed(cyclo_field(12)));
              accepted.push_back(CandidateAut{*S, src, n, a, b, t.label});
            }
          }
      }
    }
  }

  std::vector<FMatrix> gens{FMatrix::identity(Q, 3)};
  for (const auto& c : accepted) gens.push_back(c.matrix);
  res.elements = projective_closure(gens, static_cast<std::size_t>(aut_bound(f.degree, 2)) + 1);
  res.provenance.assign(res.elements.order(), CandidateAut{});
  std::vector<bool> found(res.elements.order(), false);
  found[0] = true;
  res.provenance[0] = CandidateAut{res.elements.elements[0], {}, 1, 0, 0, 0};
  for (const auto& c : accepted) {
    long i = res.elements.index_of(c.matrix);
    if (i < 0) fail("InternalError", "accepted candidate missing from its closure");
    if (!found[static_cast<std::size_t>(i)]) {
      res.provenance[static_cast<std::size_t>(i)] = c;
      found[static_cast<std::size_t>(i)] = true;
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    if (!found[i]) {
      res.closure_added = true;
      res.provenance[i] = CandidateAut{res.elements.elements[i], {}, 0, 0, 0, 0};
      if (!is_automorphism(f, res.elements.elements[i])) fail("InternalError", "closure left the automorphism group");
    }
  if (static_cast<long>(res.elements.order()) > aut_bound(f.degree, 2))
    fail("InternalError", "automorphism group exceeds the degree bound");

  CycField K12 = cyclo_field(12);
  for (const auto& pool : pools)
    for (const auto& P : pool.pts) res.pool.push_back(P.embed(K12));
  std::sort(res.pool.begin(), res.pool.end());
  res.pool.erase(std::unique(res.pool.begin(), res.pool.end()), res.pool.end());
  return res;
}

}  // namespace equisym
