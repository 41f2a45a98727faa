#include "equisym/dynmaps.hpp"

#include <numeric>
#include <random>

#include "equisym/errors.hpp"
#include "equisym/text.hpp"

namespace equisym {

CycField common_field(const std::vector<MPoly>& polys) {
  unsigned m = 1;
  for (const auto& p : polys) m = std::lcm(m, p.field().conductor());
  for (const auto& p : polys)
    if (p.field().conductor() == m) return p.field();
  return cyclo_field(m);
}

namespace {

std::vector<MPoly> unify(const std::vector<MPoly>& polys) {
  CycField F = common_field(polys);
  std::vector<MPoly> out;
  for (const auto& p : polys) out.push_back(p.field() == F ? p : p.embed(F));
  return out;
}

MPoly zero_like(const MPoly& p) { return MPoly(p.field(), p.nvars()); }

CycNum det_dense(DenseMat A) {
  std::size_t n = A.size();
  if (n == 0) return CycNum();
  CycNum d = A[0][0].field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A[p][c].is_zero()) ++p;
    if (p == n) return A[0][0].field().zero();
    if (p != c) {
      std::swap(A[p], A[c]);
      d = -d;
    }
    d *= A[c][c];
    CycNum inv = A[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (A[r][c].is_zero()) continue;
      CycNum f = A[r][c] * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!A[c][k].is_zero()) A[r][k] -= f * A[c][k];
    }
  }
  return d;
}

// Coefficients of a binary form of degree d, from x^d down to y^d.
std::vector<CycNum> binary_coeffs(const MPoly& p, int d) {
  std::vector<CycNum> c;
  for (int i = d; i >= 0; --i) c.push_back(p.coeff({i, d - i, 0}));
  return c;
}

// Resultant of binary forms of degrees da, db.
CycNum sylvester(const MPoly& a, int da, const MPoly& b, int db) {
  const CycField& F = a.field();
  auto ca = binary_coeffs(a, da), cb = binary_coeffs(b, db);
  std::size_t n = static_cast<std::size_t>(da + db);
  DenseMat S(n, std::vector<CycNum>(n, F.zero()));
  for (std::size_t r = 0; r < static_cast<std::size_t>(db); ++r)
    for (std::size_t k = 0; k < ca.size(); ++k) S[r][r + k] = ca[k];
  for (std::size_t r = 0; r < static_cast<std::size_t>(da); ++r)
    for (std::size_t k = 0; k < cb.size(); ++k) S[r + static_cast<std::size_t>(db)][r + k] = cb[k];
  return det_dense(std::move(S));
}

struct MacaulayParts {
  CycNum num, den;
};

MacaulayParts macaulay_parts(const std::vector<MPoly>& f, int d) {
  const CycField& F = f[0].field();
  int D = 3 * d - 2;
  auto keys = mono::of_degree(3, D);
  std::unordered_map<mono::Key, std::size_t> pos;
  for (std::size_t i = 0; i < keys.size(); ++i) pos[keys[i]] = i;
  std::size_t n = keys.size();
  DenseMat M(n, std::vector<CycNum>(n, F.zero()));
  std::vector<std::size_t> extraneous;
  for (std::size_t r = 0; r < n; ++r) {
    mono::Exps e = mono::exps(keys[r]);
    int big = 0, owner = -1;
    for (int i = 0; i < 3; ++i)
      if (e[static_cast<std::size_t>(i)] >= d) {
        ++big;
        if (owner < 0) owner = i;
      }
    if (big >= 2) extraneous.push_back(r);
    e[static_cast<std::size_t>(owner)] -= d;
    MPoly row = f[static_cast<std::size_t>(owner)] * MPoly::monomial(F.one(), 3, e);
    for (const auto& [k, c] : row.terms()) M[r][pos.at(k)] = c;
  }
  DenseMat E;
  for (std::size_t r : extraneous) {
    std::vector<CycNum> row;
    for (std::size_t c : extraneous) row.push_back(M[r][c]);
    E.push_back(std::move(row));
  }
  CycNum den = E.empty() ? F.one() : det_dense(std::move(E));
  return {den.is_zero() ? F.zero() : det_dense(std::move(M)), den};
}

}  // namespace

bool ProjMap::operator==(const ProjMap& o) const {
  if (N != o.N || degree != o.degree) return false;
  if (field == o.field) return coords == o.coords;
  std::vector<MPoly> all = coords;
  all.insert(all.end(), o.coords.begin(), o.coords.end());
  auto u = unify(all);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (u[i] != u[i + coords.size()]) return false;
  return true;
}

bool ProjMap::is_rational() const {
  for (const auto& c : coords)
    if (!c.is_rational()) return false;
  return true;
}

ProjMap ProjMap::embed(const CycField& target) const {
  ProjMap g = *this;
  g.field = target;
  for (auto& c : g.coords) c = c.embed(target);
  return g;
}

std::string ProjMap::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? ", " : "") + coords[i].to_string();
  return s + "]";
}

ProjMap make_map(const std::vector<MPoly>& coords0) {
  std::size_t n = coords0.size();
  if (n < 2 || n > 3) fail("InvalidInput", "a map needs 2 or 3 coordinates");
  auto coords = unify(coords0);
  int deg = -1;
  for (const auto& c : coords) {
    if (c.nvars() != static_cast<int>(n)) fail("InvalidInput", "variable count must equal the number of coordinates");
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) fail("NotHomogeneous", "coordinate " + c.to_string() + " is not homogeneous");
    if (deg >= 0 && c.total_degree() != deg) fail("DegreeMismatch", "coordinates have different degrees");
    deg = c.total_degree();
  }
  if (deg < 0) fail("ZeroMap", "all coordinates are zero");
  MPoly g = zero_like(coords[0]);
  for (const auto& c : coords) g = mpoly_gcd(g, c);
  ProjMap f;
  f.field = coords[0].field();
  f.N = static_cast<int>(n) - 1;
  for (const auto& c : coords) {
    MPoly q = zero_like(c);
    if (!c.is_zero() && !divide_exact(c, g, &q)) fail("InternalError", "gcd does not divide a coordinate");
    f.coords.push_back(std::move(q));
  }
  f.degree = deg - g.total_degree();
  if (f.degree < 1) fail("DegreeMismatch", "map is constant after removing common factors");
  for (const auto& c : f.coords)
    if (!c.is_zero()) {
      CycNum s = c.leading_coeff().inverse();
      for (auto& d : f.coords) d = d * s;
      break;
    }
  return f;
}

ProjMap parse_map(const std::string& s, unsigned hint) {
  CycField F = cyclo_field(text::infer_conductor(s, hint));
  return make_map(text::parse_tuple(s, F));
}

namespace {

std::vector<MPoly> apply_linear(const FMatrix& A, const std::vector<MPoly>& f) {
  std::vector<MPoly> out;
  for (int i = 0; i < A.dim(); ++i) {
    MPoly s = zero_like(f[0]);
    for (int j = 0; j < A.dim(); ++j)
      if (!A.at(i, j).is_zero()) s += f[static_cast<std::size_t>(j)] * A.at(i, j);
    out.push_back(std::move(s));
  }
  return out;
}

// Puts f and alpha in one field.
std::pair<ProjMap, FMatrix> align(const ProjMap& f, const FMatrix& alpha) {
  if (alpha.dim() != f.N + 1) fail("InvalidInput", "matrix size does not match the map");
  unsigned m = std::lcm(f.field.conductor(), alpha.field().conductor());
  if (m == f.field.conductor() && alpha.field() == f.field) return {f, alpha};
  CycField F = m == f.field.conductor() ? f.field : cyclo_field(m);
  return {f.field == F ? f : f.embed(F), alpha.field() == F ? alpha : alpha.embed(F)};
}

}  // namespace

bool proportional(const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
  if (a.size() != b.size()) return false;
  CycNum ratio;
  bool have = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    if (!have) {
      if (a[i].leading_key() != b[i].leading_key()) return false;
      ratio = a[i].leading_coeff() / b[i].leading_coeff();
      have = true;
    }
    if (a[i] != b[i] * ratio) return false;
  }
  return have;
}

ProjMap conjugate(const ProjMap& f0, const FMatrix& alpha0) {
  auto [f, alpha] = align(f0, alpha0);
  FMatrix inv = alpha.inverse();
  std::vector<MPoly> sub;
  for (const auto& c : f.coords) sub.push_back(c.linear_substitute(inv));
  return make_map(apply_linear(alpha, sub));
}

bool is_automorphism(const ProjMap& f0, const FMatrix& alpha0) {
  auto [f, alpha] = align(f0, alpha0);
  if (alpha.det().is_zero()) fail("SingularMatrix", "matrix is singular");
  std::vector<MPoly> lhs;
  for (const auto& c : f.coords) lhs.push_back(c.linear_substitute(alpha));
  return proportional(lhs, apply_linear(alpha, f.coords));
}

ProjMap klein_map(const MPoly& G) {
  if (G.nvars() != 2) fail("InvalidInput", "Klein's construction needs a binary form");
  if (!G.is_homogeneous() || G.total_degree() < 2) fail("InvalidInput", "need a homogeneous form of degree at least 2");
  return make_map({-G.derivative(1), G.derivative(0)});
}

ProjMap doyle_mcmullen(const MPoly& F0, const MPoly& G0) {
  auto u = unify({F0, G0});
  const MPoly &F = u[0], &G = u[1];
  if (F.nvars() != 2 || G.nvars() != 2) fail("InvalidInput", "need binary forms");
  if (!F.is_zero() && !G.is_zero() && G.total_degree() != F.total_degree() + 2)
    fail("DegreeMismatch", "deg G must equal deg F + 2");
  if ((!F.is_zero() && !F.is_homogeneous()) || (!G.is_zero() && !G.is_homogeneous()))
    fail("NotHomogeneous", "inputs must be homogeneous");
  const CycField& K = F.field();
  MPoly x = MPoly::var(K, 2, 0), y = MPoly::var(K, 2, 1);
  CycNum half = K.from_rational(Rational(1, 2));
  return make_map({x * F * half + G.derivative(1), y * F * half - G.derivative(0)});
}

ProjMap wedge_map(const std::vector<MPoly>& ps0) {
  if (ps0.empty()) fail("InvalidInput", "no invariants given");
  int n = ps0[0].nvars();
  if (n == 2 && ps0.size() == 1) return klein_map(ps0[0]);
  if (n != 3) fail("InvalidInput", "wedge maps are supported on P^1 and P^2 only");
  if (ps0.size() != 2) fail("InvalidInput", "P^2 needs exactly two invariants");
  auto ps = unify(ps0);
  std::vector<MPoly> a, b;
  for (int i = 0; i < 3; ++i) {
    a.push_back(ps[0].derivative(i));
    b.push_back(ps[1].derivative(i));
  }
  return make_map({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]});
}

CycNum resultant_of_forms(const std::vector<MPoly>& coords0, uint64_t seed) {
  auto coords = unify(coords0);
  int n = static_cast<int>(coords.size());
  const CycField& F = coords[0].field();
  for (const auto& c : coords)
    if (c.is_zero()) return F.zero();
  for (const auto& c : coords)
    if (!c.is_homogeneous()) fail("NotHomogeneous", "resultant needs homogeneous forms");
  int d = coords[0].total_degree();
  if (n == 2) return sylvester(coords[0], d, coords[1], coords[1].total_degree());
  for (const auto& c : coords)
    if (c.total_degree() != d) fail("DegreeMismatch", "ternary resultant needs forms of equal degree");
  if (n != 3) fail("InvalidInput", "resultants are supported for N = 1, 2");
  auto parts = macaulay_parts(coords, d);
  if (!parts.den.is_zero()) return parts.num / parts.den;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<CycNum> e;
    for (int k = 0; k < 9; ++k) e.push_back(F.from_int(pick(rng)));
    FMatrix A(F, 3, e);
    CycNum detA = A.det();
    if (detA.is_zero()) continue;
    std::vector<MPoly> g;
    for (const auto& c : coords) g.push_back(c.linear_substitute(A));
    auto q = macaulay_parts(g, d);
    if (q.den.is_zero()) continue;
    return q.num / q.den / detA.pow(static_cast<long>(d) * d * d);
  }
  // Res(f + t (x^d, y^d, z^d)) has degree at most 3 d^2 in t; interpolate it from
  // parameters where the extraneous minor survives and evaluate at t = 0.
  std::size_t need = static_cast<std::size_t>(3 * d * d + 1);
  std::vector<CycNum> xs, ys;
  for (long t = 1; xs.size() < need && t <= 20 * static_cast<long>(need); ++t) {
    CycNum tt = F.from_int(t);
    std::vector<MPoly> g;
    for (int i = 0; i < 3; ++i) {
      mono::Exps e{0, 0, 0};
      e[static_cast<std::size_t>(i)] = d;
      g.push_back(coords[static_cast<std::size_t>(i)] + MPoly::monomial(tt, 3, e));
    }
    auto q = macaulay_parts(g, d);
    if (q.den.is_zero()) continue;
    xs.push_back(tt);
    ys.push_back(q.num / q.den);
  }
  if (xs.size() < need) fail("ResultantFailed", "extraneous minor vanished along the perturbation");
  CycNum r = F.zero();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CycNum w = ys[i];
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) w = w * (-xs[j]) / (xs[i] - xs[j]);
    r = r + w;
  }
  return r;
}

CycNum macaulay_resultant(const ProjMap& f, uint64_t seed) { return resultant_of_forms(f.coords, seed); }

MorphismCertificate certify_morphism(const ProjMap& f) {
  MorphismCertificate c{f, macaulay_resultant(f), false};
  c.is_morphism = !c.resultant.is_zero();
  return c;
}

UPoly family_resultant(const std::vector<MPoly>& base0, const std::vector<MPoly>& dir0) {
  if (base0.size() != dir0.size()) fail("InvalidInput", "family members have different lengths");
  std::vector<MPoly> all = base0;
  all.insert(all.end(), dir0.begin(), dir0.end());
  auto u = unify(all);
  std::size_t n = base0.size();
  std::vector<MPoly> base(u.begin(), u.begin() + static_cast<long>(n)), dir(u.begin() + static_cast<long>(n), u.end());
  int d = -1;
  for (const auto& c : u)
    if (!c.is_zero()) d = c.total_degree();
  if (d < 1) fail("InvalidInput", "family is constant");
  const CycField& F = u[0].field();
  int bound = n == 2 ? 2 * d : 3 * d * d;
  std::vector<CycNum> xs, ys;
  for (long t = 0; static_cast<int>(xs.size()) <= bound; ++t) {
    CycNum tt = F.from_int(t);
    std::vector<MPoly> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(base[i] + dir[i] * tt);
    xs.push_back(tt);
    ys.push_back(resultant_of_forms(g));
  }
  // Newton divided differences.
  std::vector<CycNum> coef = ys;
  for (std::size_t j = 1; j < xs.size(); ++j)
    for (std::size_t i = xs.size() - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  UPoly p(F, {coef.back()});
  for (std::size_t k = coef.size() - 1; k-- > 0;) {
    p = p * UPoly(F, {-xs[k], F.one()}) + UPoly(F, {coef[k]});
  }
  p.trim();
  return p;
}

ProjMap equivariant_combination(const std::vector<MapTuple>& eqs, const std::vector<MPoly>& mult) {
  if (eqs.empty() || eqs.size() != mult.size()) fail("InvalidInput", "need one multiplier per equivariant");
  std::size_t n = eqs[0].size();
  std::vector<MPoly> all;
  for (const auto& e : eqs) {
    if (e.size() != n) fail("InvalidInput", "equivariants have different lengths");
    all.insert(all.end(), e.begin(), e.end());
  }
  all.insert(all.end(), mult.begin(), mult.end());
  auto u = unify(all);
  std::vector<MPoly> sum(n, zero_like(u[0]));
  int deg = -1;
  for (std::size_t k = 0; k < eqs.size(); ++k) {
    const MPoly& m = u[eqs.size() * n + k];
    for (std::size_t i = 0; i < n; ++i) {
      MPoly t = u[k * n + i] * m;
      if (t.is_zero()) continue;
      if (deg >= 0 && t.total_degree() != deg) fail("DegreeMismatch", "terms of the combination have different degrees");
      deg = t.total_degree();
      sum[i] += t;
    }
  }
  return make_map(sum);
}

long aut_bound(int d, int N) {
  if (d < 2 || d > 1000) fail("InvalidInput", "degree must be between 2 and 1000");
  if (N == 2) {
    long v = 6;
    for (int k = 0; k < 6; ++k) v *= d;
    return v;
  }
  if (N == 1) return std::max(60L, 2L * d + 2);
  fail("InvalidInput", "dimension must be 1 or 2");
}

}  // namespace equisym
