#include "equisym/invariants.hpp"

#include <algorithm>
#include <unordered_map>

#include "equisym/errors.hpp"

namespace equisym {

namespace {

MPoly to_field(const MPoly& p, const CycField& F) { return p.field() == F ? p : p.embed(F); }

const CycNum& gen_value(const MatrixGroup& G, const Character& chi, std::size_t j) {
  return chi.values[G.mul_gen[0][j]];
}

// Elements grouped by character value and characteristic polynomial.
struct Class {
  unsigned power;
  std::vector<CycNum> e;  // principal minor sums e_0..e_n
  std::size_t count;
};

std::vector<Class> classes(const MatrixGroup& G, const Character& chi) {
  std::vector<Class> out;
  std::unordered_multimap<std::size_t, std::size_t> where;
  for (std::size_t k = 0; k < G.order(); ++k) {
    std::vector<CycNum> e = G.elements[k].principal_minor_sums();
    for (auto& c : e) c = embed(c, chi.field);
    std::size_t h = chi.powers[k] * 0x9e3779b97f4a7c15ull;
    for (const auto& c : e) h = h * 31 + c.hash();
    bool found = false;
    auto [b, en] = where.equal_range(h);
    for (auto it = b; it != en && !found; ++it) {
      Class& c = out[it->second];
      if (c.power == chi.powers[k] && c.e == e) {
        ++c.count;
        found = true;
      }
    }
    if (!found) {
      where.emplace(h, out.size());
      out.push_back({chi.powers[k], std::move(e), 1});
    }
  }
  return out;
}

// 1 / det(1 - t g) from the principal minor sums of g.
TruncSeries inverse_charpoly(const CycField& F, const std::vector<CycNum>& e, int precision) {
  std::vector<CycNum> c;
  for (std::size_t k = 0; k < e.size(); ++k) c.push_back(k % 2 ? -e[k] : e[k]);
  return TruncSeries::from_poly(F, precision, c).inverse();
}

CycNum root(const Character& chi, long p) { return chi.field.root_of_unity(chi.exponent, p); }

// Images m(M x) of all degree-d monomials, in mono::of_degree order.
std::vector<MPoly> monomial_images(const FMatrix& M, int d) {
  const CycField& F = M.field();
  int n = M.dim();
  std::vector<MPoly> lin;
  for (int i = 0; i < n; ++i) {
    MPoly L(F, n);
    for (int j = 0; j < n; ++j) L += MPoly::var(F, n, j) * M.at(i, j);
    lin.push_back(L);
  }
  std::unordered_map<mono::Key, MPoly> prev{{mono::make({0, 0, 0}), MPoly::constant(F.one(), n)}};
  for (int k = 1; k <= d; ++k) {
    std::unordered_map<mono::Key, MPoly> cur;
    for (mono::Key key : mono::of_degree(n, k)) {
      mono::Exps e = mono::exps(key);
      int i = 0;
      while (e[static_cast<std::size_t>(i)] == 0) ++i;
      --e[static_cast<std::size_t>(i)];
      cur.emplace(key, prev.at(mono::make(e)) * lin[static_cast<std::size_t>(i)]);
    }
    prev = std::move(cur);
  }
  std::vector<MPoly> out;
  for (mono::Key key : mono::of_degree(n, d)) out.push_back(prev.at(key));
  return out;
}

std::unordered_map<mono::Key, std::size_t> positions(const std::vector<mono::Key>& keys) {
  std::unordered_map<mono::Key, std::size_t> pos;
  for (std::size_t i = 0; i < keys.size(); ++i) pos[keys[i]] = i;
  return pos;
}

void scatter(const MPoly& p, const std::unordered_map<mono::Key, std::size_t>& pos, std::size_t offset,
             std::vector<CycNum>& row) {
  for (const auto& [k, c] : p.terms()) row[offset + pos.at(k)] += c;
}

// Appends block to A and row reduces, keeping A at most ncols rows.
void absorb(DenseMat& A, DenseMat block) {
  for (auto& r : block)
    if (std::any_of(r.begin(), r.end(), [](const CycNum& c) { return !c.is_zero(); })) A.push_back(std::move(r));
  rref(A);
}

DenseMat echelon_basis(DenseMat rows) {
  rref(rows);
  return rows;
}

MPoly poly_from(const std::vector<CycNum>& v, std::size_t offset, const std::vector<mono::Key>& keys,
                const CycField& F, int n) {
  MPoly p(F, n);
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (!v[offset + i].is_zero()) p.add_term(keys[i], v[offset + i]);
  return p;
}

std::vector<CycNum> coords(const MPoly& p, const std::unordered_map<mono::Key, std::size_t>& pos, const CycField& F) {
  std::vector<CycNum> v(pos.size(), F.zero());
  scatter(p, pos, 0, v);
  return v;
}

MapTuple apply_matrix(const FMatrix& M, const MapTuple& f) {
  MapTuple out;
  for (int i = 0; i < M.dim(); ++i) {
    MPoly s(M.field(), f[0].nvars());
    for (int j = 0; j < M.dim(); ++j)
      if (!M.at(i, j).is_zero()) s += f[static_cast<std::size_t>(j)] * M.at(i, j);
    out.push_back(std::move(s));
  }
  return out;
}

void check_tuple(const MatrixGroup& G, const MapTuple& f) {
  if (static_cast<int>(f.size()) != G.n) fail("InvalidInput", "map has the wrong number of coordinates");
  for (const auto& p : f)
    if (p.nvars() != G.n) fail("InvalidInput", "map coordinates have the wrong number of variables");
}

}  // namespace

TruncSeries molien(const MatrixGroup& G, const Character& chi, int precision) {
  TruncSeries sum(chi.field, precision);
  for (const auto& c : classes(G, chi))
    sum = sum + inverse_charpoly(chi.field, c.e, precision) * (root(chi, c.power) * Rational(static_cast<long>(c.count)));
  return sum * chi.field.from_rational(Rational(1, static_cast<long>(G.order())));
}

std::vector<TruncSeries> molien_forms(const MatrixGroup& G, const Character& chi, int precision) {
  std::vector<TruncSeries> out(static_cast<std::size_t>(G.n) + 1, TruncSeries(chi.field, precision));
  CycNum scale = chi.field.from_rational(Rational(1, static_cast<long>(G.order())));
  for (const auto& c : classes(G, chi)) {
    TruncSeries base = inverse_charpoly(chi.field, c.e, precision) *
                       (root(chi, c.power) * Rational(static_cast<long>(c.count)) * scale);
    for (std::size_t p = 0; p < out.size(); ++p) out[p] = out[p] + base * c.e[p];
  }
  return out;
}

TruncSeries equivariant_molien(const MatrixGroup& G, const Character& chi, int precision) {
  TruncSeries sum(chi.field, precision);
  std::size_t n = static_cast<std::size_t>(G.n);
  for (const auto& c : classes(G, chi)) {
    CycNum tr_inv = c.e[n - 1] / c.e[n];
    CycNum w = root(chi, -static_cast<long>(c.power)) * tr_inv * Rational(static_cast<long>(c.count));
    sum = sum + inverse_charpoly(chi.field, c.e, precision) * w;
  }
  return sum * chi.field.from_rational(Rational(1, static_cast<long>(G.order())));
}

MPoly reynolds(const MatrixGroup& G, const Character& chi, const MPoly& F0) {
  MPoly F = to_field(F0, chi.field);
  MPoly sum(chi.field, F.nvars());
  for (std::size_t k = 0; k < G.order(); ++k)
    sum += F.linear_substitute(G.elements[k].embed(chi.field)) * chi.values[k];
  return sum * chi.field.from_rational(Rational(1, static_cast<long>(G.order())));
}

MapTuple equivariant_reynolds(const MatrixGroup& G, const Character& chi, const MapTuple& f0) {
  check_tuple(G, f0);
  MapTuple f;
  for (const auto& p : f0) f.push_back(to_field(p, chi.field));
  MapTuple sum(f.size(), MPoly(chi.field, G.n));
  for (std::size_t k = 0; k < G.order(); ++k) {
    FMatrix g = G.elements[k].embed(chi.field);
    MapTuple fg;
    for (const auto& p : f) fg.push_back(p.linear_substitute(g));
    MapTuple term = apply_matrix(g.inverse() * chi.values[k].inverse(), fg);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += term[i];
  }
  CycNum s = chi.field.from_rational(Rational(1, static_cast<long>(G.order())));
  for (auto& p : sum) p = p * s;
  return sum;
}

bool is_relative_invariant(const MatrixGroup& G, const Character& chi, const MPoly& F0, bool all_elements) {
  MPoly F = to_field(F0, chi.field);
  auto test = [&](const FMatrix& g, const CycNum& v) {
    return F.linear_substitute(g.embed(chi.field).inverse()) == F * v;
  };
  if (all_elements) {
    for (std::size_t k = 0; k < G.order(); ++k)
      if (!test(G.elements[k], chi.values[k])) return false;
    return true;
  }
  for (std::size_t j = 0; j < G.generators.size(); ++j)
    if (!test(G.generators[j], gen_value(G, chi, j))) return false;
  return true;
}

bool is_equivariant(const MatrixGroup& G, const Character& chi, const MapTuple& f0, bool all_elements) {
  check_tuple(G, f0);
  MapTuple f;
  for (const auto& p : f0) f.push_back(to_field(p, chi.field));
  auto test = [&](const FMatrix& g0, const CycNum& v) {
    FMatrix g = g0.embed(chi.field);
    MapTuple rhs = apply_matrix(g * v, f);
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i].linear_substitute(g) != rhs[i]) return false;
    return true;
  };
  if (all_elements) {
    for (std::size_t k = 0; k < G.order(); ++k)
      if (!test(G.elements[k], chi.values[k])) return false;
    return true;
  }
  for (std::size_t j = 0; j < G.generators.size(); ++j)
    if (!test(G.generators[j], gen_value(G, chi, j))) return false;
  return true;
}

std::vector<MPoly> invariant_space(const MatrixGroup& G, const Character& chi, int d) {
  if (d < 0) fail("InvalidInput", "degree must be nonnegative");
  const CycField& F = chi.field;
  auto keys = mono::of_degree(G.n, d);
  auto pos = positions(keys);
  std::size_t N = keys.size();
  DenseMat A;
  for (std::size_t j = 0; j < G.generators.size(); ++j) {
    FMatrix ginv = G.generators[j].embed(F).inverse();
    const CycNum& v = gen_value(G, chi, j);
    auto img = monomial_images(ginv, d);
    DenseMat block(N, std::vector<CycNum>(N, F.zero()));
    for (std::size_t c = 0; c < N; ++c) {
      for (const auto& [k, coef] : img[c].terms()) block[pos.at(k)][c] += coef;
      block[c][c] -= v;
    }
    absorb(A, std::move(block));
  }
  DenseMat basis = echelon_basis(nullspace(A, F, N));
  std::vector<MPoly> out;
  for (const auto& row : basis) out.push_back(poly_from(row, 0, keys, F, G.n));
  return out;
}

std::vector<MPoly> invariant_space_by_sweep(const MatrixGroup& G, const Character& chi, int d) {
  const CycField& F = chi.field;
  auto keys = mono::of_degree(G.n, d);
  auto pos = positions(keys);
  DenseMat rows;
  for (mono::Key k : keys) rows.push_back(coords(reynolds(G, chi, MPoly::monomial(F.one(), G.n, mono::exps(k))), pos, F));
  rows = echelon_basis(std::move(rows));
  std::vector<MPoly> out;
  for (const auto& row : rows) out.push_back(poly_from(row, 0, keys, F, G.n));
  return out;
}

std::vector<MapTuple> equivariant_space(const MatrixGroup& G, const Character& chi, int d) {
  if (d < 0) fail("InvalidInput", "degree must be nonnegative");
  const CycField& F = chi.field;
  std::size_t n = static_cast<std::size_t>(G.n);
  auto keys = mono::of_degree(G.n, d);
  auto pos = positions(keys);
  std::size_t N = keys.size(), cols = n * N;
  DenseMat A;
  for (std::size_t j = 0; j < G.generators.size(); ++j) {
    FMatrix g = G.generators[j].embed(F);
    FMatrix ginv = g.inverse();
    const CycNum& v = gen_value(G, chi, j);
    auto img = monomial_images(g, d);
    // column (i, m): e_i m  ->  g^-1 e_i m(g x) - v e_i m
    DenseMat block(cols, std::vector<CycNum>(cols, F.zero()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < N; ++c) {
        std::size_t col = i * N + c;
        for (std::size_t r = 0; r < n; ++r) {
          const CycNum& a = ginv.at(static_cast<int>(r), static_cast<int>(i));
          if (a.is_zero()) continue;
          for (const auto& [k, coef] : img[c].terms()) block[r * N + pos.at(k)][col] += a * coef;
        }
        block[col][col] -= v;
      }
    absorb(A, std::move(block));
  }
  DenseMat basis = echelon_basis(nullspace(A, F, cols));
  std::vector<MapTuple> out;
  for (const auto& row : basis) {
    MapTuple f;
    for (std::size_t i = 0; i < n; ++i) f.push_back(poly_from(row, i * N, keys, F, G.n));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<MapTuple> equivariant_space_by_sweep(const MatrixGroup& G, const Character& chi, int d) {
  const CycField& F = chi.field;
  std::size_t n = static_cast<std::size_t>(G.n);
  auto keys = mono::of_degree(G.n, d);
  auto pos = positions(keys);
  std::size_t N = keys.size();
  DenseMat rows;
  for (std::size_t i = 0; i < n; ++i)
    for (mono::Key k : keys) {
      MapTuple f(n, MPoly(F, G.n));
      f[i] = MPoly::monomial(F.one(), G.n, mono::exps(k));
      MapTuple r = equivariant_reynolds(G, chi, f);
      std::vector<CycNum> row(n * N, F.zero());
      for (std::size_t c = 0; c < n; ++c) scatter(r[c], pos, c * N, row);
      rows.push_back(std::move(row));
    }
  rows = echelon_basis(std::move(rows));
  std::vector<MapTuple> out;
  for (const auto& row : rows) {
    MapTuple f;
    for (std::size_t i = 0; i < n; ++i) f.push_back(poly_from(row, i * N, keys, F, G.n));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<int> secondary_degrees(const std::function<TruncSeries(int)>& series, const std::vector<int>& primaries,
                                   int precision) {
  if (primaries.empty()) fail("InvalidInput", "no primary degrees");
  int dmax = 0;
  for (int d : primaries) {
    if (d < 1) fail("InvalidInput", "primary degrees must be positive");
    dmax = std::max(dmax, d);
  }
  for (int p : {precision, std::max(precision, 40)}) {
    TruncSeries H = series(p);
    const CycField& F = H.field();
    TruncSeries prod = H;
    for (int d : primaries) {
      std::vector<CycNum> c(static_cast<std::size_t>(d) + 1, F.zero());
      c[0] = F.one();
      c[static_cast<std::size_t>(d)] = -F.one();
      prod = prod * TruncSeries::from_poly(F, p, c);
    }
    std::vector<long> c;
    try {
      c = prod.integer_coeffs();
    } catch (const DomainError&) {
      fail("NotPolynomial", "series times the primary factors has non-integer coefficients");
    }
    int last = -1;
    for (int k = 0; k < p; ++k) {
      if (c[static_cast<std::size_t>(k)] < 0)
        fail("NotPolynomial", "negative coefficient at t^" + std::to_string(k) + "; primary degrees are wrong");
      if (c[static_cast<std::size_t>(k)] != 0) last = k;
    }
    if (p - 1 - last >= dmax) {
      std::vector<int> out;
      for (int k = 0; k <= last; ++k)
        for (long r = 0; r < c[static_cast<std::size_t>(k)]; ++r) out.push_back(k);
      return out;
    }
  }
  fail("NotPolynomial", "nonzero coefficients persist at the maximum precision");
}

std::vector<int> secondary_degrees(const MatrixGroup& G, const Character& chi, const std::vector<int>& primaries,
                                   bool equivariant) {
  return secondary_degrees(
      [&](int p) { return equivariant ? equivariant_molien(G, chi, p) : molien(G, chi, p); }, primaries);
}

long fundamental_equivariant_count(std::size_t group_order, const std::vector<int>& primaries, int w_dim) {
  Integer num = w_dim;
  for (int d : primaries) num *= d;
  Integer g = static_cast<unsigned long>(group_order);
  if (g == 0 || num % g != 0) fail("NotInteger", "m d_1...d_N / |G| is not an integer");
  Integer q = num / g;
  return q.get_si();
}

namespace {

MPoly det_poly(const std::vector<std::vector<MPoly>>& M) {
  std::size_t k = M.size();
  if (k == 1) return M[0][0];
  if (k == 2) return M[0][0] * M[1][1] - M[0][1] * M[1][0];
  MPoly s(M[0][0].field(), M[0][0].nvars());
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<MPoly>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<MPoly> row;
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(M[r][cc]);
      minor.push_back(std::move(row));
    }
    MPoly t = M[0][c] * det_poly(minor);
    s = c % 2 ? s - t : s + t;
  }
  return s;
}

}  // namespace

bool algebraically_independent(const std::vector<MPoly>& polys) {
  if (polys.empty()) return true;
  int n = polys[0].nvars();
  std::size_t k = polys.size();
  if (k > static_cast<std::size_t>(n)) return false;
  CycField F = polys[0].field();
  for (const auto& p : polys)
    if (p.field().conductor() > F.conductor()) F = p.field();
  std::vector<std::vector<MPoly>> J;
  for (const auto& p0 : polys) {
    MPoly p = to_field(p0, F);
    std::vector<MPoly> row;
    for (int i = 0; i < n; ++i) row.push_back(p.derivative(i));
    J.push_back(std::move(row));
  }
  // every k-subset of the variable columns
  std::vector<int> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = static_cast<int>(i);
  for (;;) {
    std::vector<std::vector<MPoly>> M;
    for (const auto& row : J) {
      std::vector<MPoly> r;
      for (int c : cols) r.push_back(row[static_cast<std::size_t>(c)]);
      M.push_back(std::move(r));
    }
    if (!det_poly(M).is_zero()) return true;
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cols[static_cast<std::size_t>(i)] == n - static_cast<int>(k) + i) --i;
    if (i < 0) return false;
    ++cols[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
}

}  // namespace equisym
