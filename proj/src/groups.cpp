#include "equisym/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

#include "equisym/errors.hpp"

namespace equisym {

long MatrixIndex::find(const FMatrix& m) const {
  auto [b, e] = map_.equal_range(m.hash());
  for (auto it = b; it != e; ++it)
    if (store_[it->second] == m) return static_cast<long>(it->second);
  return -1;
}

void MatrixIndex::insert(const FMatrix& m) {
  map_.emplace(m.hash(), store_.size());
  store_.push_back(m);
}

long MatrixGroup::index_of(const FMatrix& m) const { return index.find(m); }

long ProjGroup::index_of(const FMatrix& m) const { return index.find(m.projective_normal()); }

namespace {

void check_gens(const std::vector<FMatrix>& gens) {
  if (gens.empty()) fail("InvalidInput", "no generators");
  for (const auto& g : gens) {
    if (g.dim() != gens[0].dim() || g.field() != gens[0].field()) fail("InvalidInput", "generators differ in dimension or field");
    if (g.det().is_zero()) fail("SingularMatrix", "generator is singular");
  }
}

}  // namespace

MatrixGroup linear_closure(const std::vector<FMatrix>& gens, std::size_t cap) {
  check_gens(gens);
  MatrixGroup G;
  G.field = gens[0].field();
  G.n = gens[0].dim();
  G.generators = gens;
  G.elements.push_back(FMatrix::identity(G.field, G.n));
  G.index.insert(G.elements[0]);
  for (std::size_t i = 0; i < G.elements.size(); ++i) {
    std::vector<std::size_t> row;
    for (const auto& g : gens) {
      FMatrix p = G.elements[i] * g;
      long k = G.index.find(p);
      if (k < 0) {
        if (G.elements.size() >= cap)
          throw ResourceCap("linear closure exceeds " + std::to_string(cap) + " elements");
        k = static_cast<long>(G.elements.size());
        G.index.insert(p);
        G.elements.push_back(std::move(p));
      }
      row.push_back(static_cast<std::size_t>(k));
    }
    G.mul_gen.push_back(std::move(row));
  }
  return G;
}

ProjGroup projective_closure(const std::vector<FMatrix>& gens0, std::size_t cap) {
  check_gens(gens0);
  std::vector<FMatrix> gens;
  for (const auto& g : gens0) gens.push_back(g.projective_normal());
  ProjGroup G;
  G.field = gens[0].field();
  G.n = gens[0].dim();
  G.elements.push_back(FMatrix::identity(G.field, G.n));
  G.index.insert(G.elements[0]);
  for (std::size_t i = 0; i < G.elements.size(); ++i) {
    for (const auto& g : gens) {
      FMatrix p = (G.elements[i] * g).projective_normal();
      if (G.index.find(p) >= 0) continue;
      if (G.elements.size() >= cap)
        throw ResourceCap("projective closure exceeds " + std::to_string(cap) + " elements");
      G.index.insert(p);
      G.elements.push_back(std::move(p));
    }
  }
  for (const auto& g : gens) G.generators.push_back(static_cast<std::size_t>(G.index.find(g)));
  return G;
}

bool Character::is_trivial() const {
  return std::all_of(powers.begin(), powers.end(), [](unsigned p) { return p == 0; });
}

namespace {

// Index of a product inside the group.
std::size_t mul_index(const MatrixGroup& G, std::size_t a, std::size_t b) {
  long k = G.index_of(G.elements[a] * G.elements[b]);
  if (k < 0) fail("InternalError", "group not closed");
  return static_cast<std::size_t>(k);
}

std::size_t inv_index(const MatrixGroup& G, std::size_t a) {
  long k = G.index_of(G.elements[a].inverse());
  if (k < 0) fail("InternalError", "group not closed under inverse");
  return static_cast<std::size_t>(k);
}

// Subgroup generated by the given elements together with its normal closure.
std::vector<bool> normal_closure(const MatrixGroup& G, std::vector<std::size_t> seeds) {
  std::vector<bool> in(G.order(), false);
  std::vector<std::size_t> members{0};
  in[0] = true;
  std::vector<std::size_t> ginv;
  for (const auto& g : G.generators) ginv.push_back(static_cast<std::size_t>(G.index_of(g.inverse())));
  std::vector<std::size_t> gidx;
  for (const auto& g : G.generators) gidx.push_back(static_cast<std::size_t>(G.index_of(g)));
  std::deque<std::size_t> todo(seeds.begin(), seeds.end());
  while (!todo.empty()) {
    std::size_t s = todo.front();
    todo.pop_front();
    if (in[s]) continue;
    // Add s and close under products with existing members.
    std::vector<std::size_t> fresh{s};
    in[s] = true;
    for (std::size_t f = 0; f < fresh.size(); ++f) {
      std::size_t x = fresh[f];
      members.push_back(x);
      for (std::size_t m = 0; m < members.size(); ++m) {
        for (std::size_t p : {mul_index(G, x, members[m]), mul_index(G, members[m], x)}) {
          if (!in[p]) {
            in[p] = true;
            fresh.push_back(p);
          }
        }
      }
      for (std::size_t j = 0; j < gidx.size(); ++j) todo.push_back(mul_index(G, mul_index(G, ginv[j], x), gidx[j]));
    }
  }
  return in;
}

}  // namespace

std::vector<Character> linear_characters(const MatrixGroup& G) {
  std::size_t r = G.generators.size();
  std::vector<std::size_t> gidx, ginv;
  for (const auto& g : G.generators) {
    gidx.push_back(static_cast<std::size_t>(G.index_of(g)));
    ginv.push_back(inv_index(G, gidx.back()));
  }
  std::vector<std::size_t> comms;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      comms.push_back(mul_index(G, mul_index(G, gidx[a], gidx[b]), mul_index(G, ginv[a], ginv[b])));
  std::vector<bool> derived = normal_closure(G, comms);
  std::size_t dsize = static_cast<std::size_t>(std::count(derived.begin(), derived.end(), true));
  std::size_t quotient = G.order() / dsize;

  // Exponent of the abelianization.
  unsigned e = 1;
  for (std::size_t i = 0; i < G.order(); ++i) {
    std::size_t p = i;
    unsigned k = 1;
    while (!derived[p]) {
      p = mul_index(G, p, i);
      ++k;
    }
    e = std::lcm(e, k);
  }

  // Spanning tree from the identity along right multiplication by generators.
  std::vector<long> parent(G.order(), -1), via(G.order(), -1);
  std::vector<std::size_t> order_bfs{0};
  parent[0] = 0;
  for (std::size_t q = 0; q < order_bfs.size(); ++q) {
    std::size_t i = order_bfs[q];
    for (std::size_t j = 0; j < r; ++j) {
      std::size_t k = G.mul_gen[i][j];
      if (parent[k] < 0) {
        parent[k] = static_cast<long>(i);
        via[k] = static_cast<long>(j);
        order_bfs.push_back(k);
      }
    }
  }

  std::vector<std::vector<unsigned>> found;
  std::vector<unsigned> tuple(r, 0);
  for (;;) {
    std::vector<unsigned> val(G.order(), 0);
    for (std::size_t q = 1; q < order_bfs.size(); ++q) {
      std::size_t k = order_bfs[q];
      val[k] = (val[static_cast<std::size_t>(parent[k])] + tuple[static_cast<std::size_t>(via[k])]) % e;
    }
    bool ok = true;
    for (std::size_t i = 0; i < G.order() && ok; ++i)
      for (std::size_t j = 0; j < r && ok; ++j) ok = val[G.mul_gen[i][j]] == (val[i] + tuple[j]) % e;
    if (ok) found.push_back(std::move(val));
    std::size_t pos = 0;
    while (pos < r && ++tuple[pos] == e) tuple[pos++] = 0;
    if (pos == r) break;
  }
  if (found.size() != quotient) fail("InternalError", "character count does not match the abelianization");
  std::sort(found.begin(), found.end());

  CycField F = cyclo_field(std::lcm(G.field.conductor(), e));
  std::vector<Character> out;
  for (auto& pw : found) {
    Character c;
    c.field = F;
    c.exponent = e;
    c.powers = pw;
    for (unsigned p : pw) c.values.push_back(F.root_of_unity(e, p));
    out.push_back(std::move(c));
  }
  return out;
}

long projective_element_order(const FMatrix& g, long cap) {
  long k = g.projective_order(cap);
  if (k == 0) throw ResourceCap("element order exceeds " + std::to_string(cap));
  return k;
}

CyclicInfo largest_cyclic(const ProjGroup& G) {
  long n = 1;
  for (const auto& g : G.elements) n = std::max(n, projective_element_order(g));
  return {n, static_cast<long>(G.order()) / n};
}

// ---------------------------------------------------------------- catalog

namespace {

struct Builder {
  CycField F;
  explicit Builder(unsigned m) : F(cyclo_field(m)) {}
  CycNum z(unsigned n, long k) const { return F.root_of_unity(n, k); }
  CycNum q(long a, long b = 1) const { return F.from_rational(Rational(a, b)); }
  CycNum i() const { return z(4, 1); }
  // sqrt(5) as a Gauss sum.
  CycNum sqrt5() const { return z(5, 1) - z(5, 2) - z(5, 3) + z(5, 4); }
  CycNum sqrt2() const { return z(8, 1) + z(8, -1); }
  // sqrt(-3) = zeta_3 - zeta_3^2
  CycNum sqrtm3() const { return z(3, 1) - z(3, 2); }
  FMatrix m(int n, std::vector<CycNum> e) const { return FMatrix(F, n, std::move(e)); }
  FMatrix diag(std::vector<CycNum> d) const { return FMatrix::diag(F, d); }
  // Embeds a 2x2 block in the lower right of a 3x3 matrix.
  FMatrix block(const FMatrix& b, const CycNum& corner) const {
    return m(3, {corner, q(0), q(0), q(0), b.at(0, 0), b.at(0, 1), q(0), b.at(1, 0), b.at(1, 1)});
  }
  FMatrix perm3() const { return m(3, {q(0), q(1), q(0), q(0), q(0), q(1), q(1), q(0), q(0)}); }
};

long need(const std::map<std::string, long>& p, const std::string& k) {
  auto it = p.find(k);
  if (it == p.end()) fail("InvalidInput", "missing parameter " + k);
  return it->second;
}

long get(const std::map<std::string, long>& p, const std::string& k, long dflt) {
  auto it = p.find(k);
  return it == p.end() ? dflt : it->second;
}

unsigned positive(long v, const std::string& what) {
  if (v < 1 || v > 10000) fail("InvalidInput", what + " must be a positive integer");
  return static_cast<unsigned>(v);
}

}  // namespace

CatalogEntry catalog(int dim, const std::string& label0, const std::map<std::string, long>& params) {
  std::string label = label0;
  if (dim == 2)
    std::transform(label.begin(), label.end(), label.begin(), [](unsigned char c) { return std::tolower(c); });
  CatalogEntry E;
  E.params = params;
  E.label = (dim == 2 ? "pgl2:" : "pgl3:") + label;
  if (dim == 2) {
    if (label == "cyclic" || label == "dihedral") {
      unsigned n = positive(need(params, "n"), "n");
      if (label == "dihedral" && n < 2) fail("InvalidInput", "dihedral groups need n >= 2");
      Builder B(n);
      // diag(zeta_n, zeta_n^-1) has projective order n/2 for even n; use diag(zeta_n, 1) there.
      FMatrix r = n % 2 ? B.diag({B.z(n, 1), B.z(n, -1)}) : B.diag({B.z(n, 1), B.q(1)});
      E.generators = {r};
      if (label == "dihedral") E.generators.push_back(B.m(2, {B.q(0), B.q(1), B.q(1), B.q(0)}));
      E.lift = E.generators;
      E.stated_order = label == "cyclic" ? n : 2 * n;
      E.conductor = n;
    } else if (label == "tetrahedral") {
      Builder B(4);
      auto i = B.i();
      E.generators = {B.m(2, {i, i, B.q(1), B.q(-1)}), B.diag({B.q(-1), B.q(1)}), B.m(2, {B.q(0), B.q(1), B.q(1), B.q(0)})};
      auto h = B.q(1, 2);
      E.lift = {B.m(2, {(i - B.q(1)) * h, (i - B.q(1)) * h, (i + B.q(1)) * h, -(i + B.q(1)) * h}),
                B.m(2, {B.q(0), i, -i, B.q(0)})};
      E.stated_order = 12;
      E.conductor = 4;
    } else if (label == "octahedral") {
      Builder B(8);
      auto i = B.i();
      E.generators = {B.m(2, {i, i, B.q(1), B.q(-1)}), B.diag({i, B.q(1)}), B.m(2, {B.q(0), B.q(1), B.q(1), B.q(0)})};
      auto h = B.q(1, 2);
      auto s = B.sqrt2().inverse();
      E.lift = {B.m(2, {(i - B.q(1)) * h, (i - B.q(1)) * h, (i + B.q(1)) * h, -(i + B.q(1)) * h}),
                B.diag({(B.q(1) + i) * s, (B.q(1) - i) * s})};
      E.stated_order = 24;
      E.conductor = 8;
    } else if (label == "icosahedral") {
      Builder B(5);
      auto c = B.z(5, 1) + B.z(5, -1);
      E.generators = {B.m(2, {c, B.q(1), B.q(1), -c}), B.diag({B.z(5, 1), B.q(1)}), B.m(2, {B.q(0), B.q(1), B.q(-1), B.q(0)})};
      auto s = B.sqrt5().inverse();
      auto u = (B.z(5, 4) - B.z(5, 1)) * s, v = (B.z(5, 2) - B.z(5, 3)) * s;
      E.lift = {B.diag({B.z(5, 3), B.z(5, 2)}), B.m(2, {B.q(0), B.q(1), B.q(-1), B.q(0)}), B.m(2, {u, v, v, -u})};
      E.stated_order = 60;
      E.conductor = 5;
    } else {
      fail("InvalidInput", "unknown PGL2 catalog label " + label);
    }
    return E;
  }
  if (dim != 3) fail("InvalidInput", "catalog dimension must be 2 or 3");

  if (label == "A" || label == "C" || label == "D") {
    unsigned n = positive(need(params, "n"), "n");
    long a = need(params, "a"), b = need(params, "b");
    if (std::gcd(a, static_cast<long>(n)) != 1 && std::gcd(b, static_cast<long>(n)) != 1)
      fail("InvalidInput", "need gcd(a,n) = 1 or gcd(b,n) = 1");
    Builder B(n);
    E.generators = {B.diag({B.z(n, a), B.z(n, b), B.q(1)})};
    if (label != "A") E.generators.push_back(B.perm3());
    if (label == "D") {
      long x = get(params, "x", 0), y = get(params, "y", 0);
      E.generators.push_back(B.m(3, {B.z(n, x), B.q(0), B.q(0), B.q(0), B.q(0), B.z(n, y), B.q(0), B.q(1), B.q(0)}));
    }
    E.lift = E.generators;
    if (label == "A") E.stated_order = n;
    E.conductor = n;
  } else if (label == "B1" || label == "B2" || label == "B3" || label == "B4") {
    unsigned p = positive(get(params, "p", 1), "p");
    unsigned q = label == "B1" ? positive(need(params, "q"), "q") : 1;
    unsigned base = label == "B1" ? q : label == "B2" ? 4 : label == "B3" ? 8 : 20;
    unsigned m = std::lcm(base, p);
    Builder B(m);
    auto i = m % 4 == 0 ? B.i() : B.q(0);
    auto h = B.q(1, 2);
    FMatrix t1 = B.m(2, {(i - B.q(1)) * h, (i - B.q(1)) * h, (i + B.q(1)) * h, -(i + B.q(1)) * h});
    if (p > 1) E.generators.push_back(B.diag({B.z(p, 1), B.q(1), B.q(1)}));
    if (label == "B1") {
      E.generators.push_back(B.diag({B.q(1), B.z(q, 1), B.q(1)}));
      E.generators.push_back(B.block(B.m(2, {B.q(0), B.q(1), B.q(1), B.q(0)}), B.q(1)));
      E.stated_order = p == 1 ? 2 * q : 0;
    } else if (label == "B2") {
      E.generators.push_back(B.block(t1, B.q(1)));
      E.generators.push_back(B.block(B.diag({i, -i}), B.q(1)));
    } else if (label == "B3") {
      auto s = B.sqrt2().inverse();
      E.generators.push_back(B.block(t1, B.q(1)));
      E.generators.push_back(B.block(B.diag({(B.q(1) + i) * s, (B.q(1) - i) * s}), B.q(1)));
    } else {
      auto r5 = B.sqrt5();
      auto beta = (B.q(1) - r5) * B.q(1, 4), gamma = (B.q(1) + r5) * B.q(1, 4);
      E.generators.push_back(B.block(t1, B.q(1)));
      E.generators.push_back(B.block(B.diag({i, -i}), B.q(1)));
      E.generators.push_back(B.block(B.m(2, {i * h, beta - i * gamma, -beta - i * gamma, -(i * h)}), B.q(1)));
    }
    E.lift = E.generators;
    E.conductor = m;
  } else if (label == "E" || label == "F" || label == "G") {
    Builder B(label == "G" ? 9 : 3);
    auto w = B.z(3, 1), w2 = B.z(3, 2), one = B.q(1), s = B.sqrtm3().inverse();
    FMatrix V = B.m(3, {one, one, one, one, w, w2, one, w2, w}) * s;
    if (label == "E") {
      E.generators = {B.diag({w, w2, one}), B.perm3(), V};
      E.stated_order = 36;
    } else {
      E.generators = {B.diag({one, w, w2}), B.perm3(), V};
      if (label == "F") {
        E.generators.push_back(B.m(3, {one, one, w2, one, w, w, w, one, w}) * s);
        E.stated_order = 72;
      } else {
        auto eta = B.z(9, 2);  // eta^3 = zeta_3^2
        E.generators.push_back(B.diag({eta, eta, eta * w}));
        E.stated_order = 216;
      }
    }
    E.lift = E.generators;
    E.conductor = label == "G" ? 9 : 3;
  } else if (label == "H" || label == "I") {
    Builder B(label == "H" ? 5 : 15);
    auto r5 = B.sqrt5(), one = B.q(1), zero = B.q(0);
    auto mu1 = (r5 - one) * B.q(1, 2), mu2 = (-r5 - one) * B.q(1, 2);
    FMatrix M = B.m(3, {-one, mu2, mu1, mu2, mu1, -one, mu1, -one, mu2});
    E.generators = {B.perm3(), B.diag({one, -one, -one}), M};
    E.lift = {B.perm3(), B.diag({one, -one, -one}), M * B.q(1, 2)};
    if (label == "I") {
      auto w = B.z(3, 1);
      FMatrix T = B.m(3, {-one, zero, zero, zero, zero, -w, zero, -(w * w), zero});
      E.generators.push_back(T);
      E.lift.push_back(T);
    }
    E.stated_order = label == "H" ? 60 : 360;
    E.conductor = label == "H" ? 5 : 15;
  } else if (label == "J") {
    Builder B(7);
    auto z = [&](long k) { return B.z(7, k); };
    auto a = z(4) - z(3), b = z(2) - z(5), c = z(1) - z(6);
    FMatrix M = B.m(3, {a, b, c, b, c, a, c, a, b});
    E.generators = {B.diag({B.q(1), z(1), z(3)}), B.perm3(), M};
    auto h = (z(1) + z(2) + z(4) - z(6) - z(5) - z(3)).inverse();
    E.lift = {B.diag({z(1), z(2), z(4)}), B.perm3(), M * h};
    E.stated_order = 168;
    E.conductor = 7;
  } else if (label == "C5" || label == "C5prime") {
    Builder B(5);
    E.generators = {label == "C5" ? B.diag({B.z(5, 1), B.q(1), B.z(5, -1)}) : B.diag({B.z(5, 1), B.z(5, 2), B.z(5, 2)})};
    E.lift = E.generators;
    E.stated_order = 5;
    E.conductor = 5;
  } else {
    fail("InvalidInput", "unknown PGL3 catalog label " + label);
  }
  return E;
}

CatalogEntry catalog(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ':' || c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() < 2 || (parts[0] != "pgl2" && parts[0] != "pgl3"))
    fail("InvalidInput", "catalog label must look like pgl2:<name> or pgl3:<name>");
  std::map<std::string, long> params;
  for (std::size_t k = 2; k < parts.size(); ++k) {
    auto eq = parts[k].find('=');
    if (eq == std::string::npos) fail("InvalidInput", "catalog parameter must be key=value: " + parts[k]);
    try {
      params[parts[k].substr(0, eq)] = std::stol(parts[k].substr(eq + 1));
    } catch (const std::exception&) {
      fail("InvalidInput", "bad catalog parameter value: " + parts[k]);
    }
  }
  return catalog(parts[0] == "pgl2" ? 2 : 3, parts[1], params);
}

std::vector<std::string> catalog_labels(int dim) {
  if (dim == 2) return {"cyclic", "dihedral", "tetrahedral", "octahedral", "icosahedral"};
  return {"A", "B1", "B2", "B3", "B4", "C", "D", "E", "F", "G", "H", "I", "J", "C5", "C5prime"};
}

}  // namespace equisym
