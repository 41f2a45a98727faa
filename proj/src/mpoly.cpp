#include "equisym/mpoly.hpp"

#include <sstream>
#include <unordered_map>

#include "equisym/errors.hpp"

namespace equisym {

namespace mono {

std::vector<Key> of_degree(int nvars, int d) {
  std::vector<Key> r;
  if (nvars == 1) {
    r.push_back(make({d, 0, 0}));
  } else if (nvars == 2) {
    for (int a = d; a >= 0; --a) r.push_back(make({a, d - a, 0}));
  } else {
    for (int a = d; a >= 0; --a)
      for (int b = d - a; b >= 0; --b) r.push_back(make({a, b, d - a - b}));
  }
  return r;
}

}  // namespace mono

std::string var_name(int i) {
  static const char* names[] = {"x", "y", "z"};
  return names[i];
}

MPoly MPoly::var(const CycField& F, int nvars, int i) {
  mono::Exps e{0, 0, 0};
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(F.one(), nvars, e);
}

MPoly MPoly::constant(const CycNum& c, int nvars) { return monomial(c, nvars, {0, 0, 0}); }

MPoly MPoly::monomial(const CycNum& c, int nvars, const mono::Exps& e) {
  MPoly p(c.field(), nvars);
  if (!c.is_zero()) p.terms_.emplace(mono::make(e), c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mono::degree(terms_.begin()->first) == 0);
}

int MPoly::total_degree() const { return terms_.empty() ? -1 : mono::degree(terms_.begin()->first); }

int MPoly::degree_in(int i) const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, mono::exp(k, i));
  return d;
}

int MPoly::min_degree_in(int i) const {
  int d = terms_.empty() ? 0 : 1 << 30;
  for (const auto& [k, c] : terms_) d = std::min(d, mono::exp(k, i));
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = mono::degree(terms_.begin()->first);
  return mono::degree(terms_.rbegin()->first) == d;
}

CycNum MPoly::coeff(const mono::Exps& e) const {
  auto it = terms_.find(mono::make(e));
  return it == terms_.end() ? field_.zero() : it->second;
}

void MPoly::add_term(mono::Key k, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (field_ != o.field_ && !o.is_zero()) {
    if (is_zero()) {
      field_ = o.field_;
      nvars_ = o.nvars_;
    } else {
      fail("FieldMismatch", "polynomials over different fields");
    }
  }
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(a.field_, std::max(a.nvars_, b.nvars_));
  if (a.is_zero() || b.is_zero()) return r;
  if (a.field_ != b.field_) fail("FieldMismatch", "polynomials over different fields");
  std::unordered_map<mono::Key, CycNum> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      auto [it, ins] = acc.try_emplace(ka + kb, ca * cb);
      if (!ins) it->second += ca * cb;
    }
  for (auto& [k, c] : acc)
    if (!c.is_zero()) r.terms_.emplace(k, std::move(c));
  return r;
}

MPoly MPoly::operator*(const CycNum& c) const {
  MPoly r(field_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, v * c);
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (terms_.empty()) return true;
  return field_ == o.field_ && terms_ == o.terms_;
}

MPoly MPoly::pow(int e) const {
  MPoly r = constant(field_.one(), nvars_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

MPoly MPoly::derivative(int i) const {
  MPoly r(field_, nvars_);
  for (const auto& [k, c] : terms_) {
    auto e = mono::exps(k);
    int p = e[static_cast<std::size_t>(i)];
    if (p == 0) continue;
    e[static_cast<std::size_t>(i)] = p - 1;
    r.terms_.emplace(mono::make(e), c * field_.from_int(p));
  }
  return r;
}

MPoly MPoly::component(int d) const {
  MPoly r(field_, nvars_);
  for (const auto& [k, c] : terms_)
    if (mono::degree(k) == d) r.terms_.emplace_hint(r.terms_.end(), k, c);
  return r;
}

CycNum MPoly::eval(const std::vector<CycNum>& v) const {
  CycNum s = field_.zero();
  std::vector<std::vector<CycNum>> pw(static_cast<std::size_t>(nvars_));
  for (const auto& [k, c] : terms_) {
    CycNum t = c;
    for (int i = 0; i < nvars_; ++i) {
      int e = mono::exp(k, i);
      if (e == 0) continue;
      auto& tab = pw[static_cast<std::size_t>(i)];
      if (tab.empty()) tab.push_back(field_.one());
      while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * v[static_cast<std::size_t>(i)]);
      t *= tab[static_cast<std::size_t>(e)];
    }
    s += t;
  }
  return s;
}

MPoly MPoly::compose(const std::vector<MPoly>& q) const {
  int nv = q.empty() ? nvars_ : q[0].nvars();
  CycField F = field_;
  MPoly r(F, nv);
  std::vector<std::vector<MPoly>> pw(static_cast<std::size_t>(nvars_));
  for (const auto& [k, c] : terms_) {
    MPoly t = constant(c, nv);
    for (int i = 0; i < nvars_; ++i) {
      int e = mono::exp(k, i);
      if (e == 0) continue;
      auto& tab = pw[static_cast<std::size_t>(i)];
      if (tab.empty()) tab.push_back(constant(F.one(), nv));
      while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * q[static_cast<std::size_t>(i)]);
      t = t * tab[static_cast<std::size_t>(e)];
    }
    r += t;
  }
  return r;
}

MPoly MPoly::linear_substitute(const FMatrix& M) const {
  if (M.is_monomial()) {
    // x_i -> M[i][s(i)] x_{s(i)}
    MPoly r(field_, nvars_);
    std::vector<int> col(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i)
      for (int j = 0; j < nvars_; ++j)
        if (!M.at(i, j).is_zero()) col[static_cast<std::size_t>(i)] = j;
    std::vector<std::vector<CycNum>> pw(static_cast<std::size_t>(nvars_));
    for (const auto& [k, c] : terms_) {
      mono::Exps e{0, 0, 0};
      CycNum t = c;
      for (int i = 0; i < nvars_; ++i) {
        int p = mono::exp(k, i);
        if (p == 0) continue;
        int j = col[static_cast<std::size_t>(i)];
        e[static_cast<std::size_t>(j)] += p;
        auto& tab = pw[static_cast<std::size_t>(i)];
        if (tab.empty()) tab.push_back(field_.one());
        while (static_cast<int>(tab.size()) <= p) tab.push_back(tab.back() * M.at(i, j));
        t *= tab[static_cast<std::size_t>(p)];
      }
      r.add_term(mono::make(e), t);
    }
    return r;
  }
  std::vector<MPoly> forms;
  for (int i = 0; i < nvars_; ++i) {
    MPoly l(field_, nvars_);
    for (int j = 0; j < nvars_; ++j) l += var(field_, nvars_, j) * M.at(i, j);
    forms.push_back(std::move(l));
  }
  return compose(forms);
}

MPoly MPoly::specialize(int i, const CycNum& c) const {
  MPoly r(field_, nvars_);
  std::vector<CycNum> tab{field_.one()};
  for (const auto& [k, v] : terms_) {
    auto e = mono::exps(k);
    int p = e[static_cast<std::size_t>(i)];
    e[static_cast<std::size_t>(i)] = 0;
    while (static_cast<int>(tab.size()) <= p) tab.push_back(tab.back() * c);
    r.add_term(mono::make(e), v * tab[static_cast<std::size_t>(p)]);
  }
  return r;
}

MPoly MPoly::monic() const {
  if (terms_.empty() || leading_coeff().is_one()) return *this;
  return *this * leading_coeff().inverse();
}

MPoly MPoly::embed(const CycField& target) const {
  if (target == field_) return *this;
  MPoly r(target, nvars_);
  for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, equisym::embed(c, target));
  return r;
}

bool MPoly::is_rational() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

std::size_t MPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& [k, c] : terms_) h ^= (k * 0x9e3779b97f4a7c15ull) + c.hash() + (h << 6) + (h >> 2);
  return h;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string sym = "z" + std::to_string(field_.conductor());
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string m;
    for (int i = 0; i < nvars_; ++i) {
      int e = mono::exp(k, i);
      if (e == 0) continue;
      if (!m.empty()) m += "*";
      m += var_name(i);
      if (e > 1) m += "^" + std::to_string(e);
    }
    if (c.is_rational()) {
      Rational q = c.to_rational();
      bool neg = q < 0;
      if (neg) q = -q;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (m.empty()) {
        os << q.get_str();
      } else if (q == 1) {
        os << m;
      } else {
        os << q.get_str() << "*" << m;
      }
    } else {
      os << (first ? "" : " + ") << "(" << c.to_string(sym) << ")";
      if (!m.empty()) os << "*" << m;
    }
    first = false;
  }
  return os.str();
}

bool divide_exact(const MPoly& a, const MPoly& b, MPoly* q) {
  if (b.is_zero()) fail("ZeroDivision", "division by the zero polynomial");
  MPoly quot(a.field(), a.nvars());
  MPoly r = a;
  mono::Key lb = b.leading_key();
  auto eb = mono::exps(lb);
  CycNum lcinv = b.leading_coeff().inverse();
  while (!r.is_zero()) {
    auto er = mono::exps(r.leading_key());
    mono::Exps d{er[0] - eb[0], er[1] - eb[1], er[2] - eb[2]};
    if (d[0] < 0 || d[1] < 0 || d[2] < 0) return false;
    MPoly t = MPoly::monomial(r.leading_coeff() * lcinv, a.nvars(), d);
    quot += t;
    r -= t * b;
  }
  if (q) *q = std::move(quot);
  return true;
}

namespace {

// Coefficients with respect to variable v (index = power of x_v).
std::vector<MPoly> coeffs_in(const MPoly& a, int v) {
  std::vector<MPoly> r(static_cast<std::size_t>(std::max(a.degree_in(v), 0) + 1), MPoly(a.field(), a.nvars()));
  for (const auto& [k, c] : a.terms()) {
    auto e = mono::exps(k);
    int p = e[static_cast<std::size_t>(v)];
    e[static_cast<std::size_t>(v)] = 0;
    r[static_cast<std::size_t>(p)].add_term(mono::make(e), c);
  }
  return r;
}

MPoly xpow(const CycField& F, int nvars, int v, int p) {
  mono::Exps e{0, 0, 0};
  e[static_cast<std::size_t>(v)] = p;
  return MPoly::monomial(F.one(), nvars, e);
}

MPoly gcd_rec(const MPoly& a, const MPoly& b, int v);

MPoly content_in(const MPoly& a, int v) {
  MPoly g(a.field(), a.nvars());
  for (const auto& c : coeffs_in(a, v)) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c, v - 1);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

MPoly primitive_in(const MPoly& a, int v) {
  MPoly c = content_in(a, v), q;
  if (!divide_exact(a, c, &q)) fail("InternalError", "content does not divide");
  return q.monic();
}

MPoly prem(MPoly a, const MPoly& b, int v) {
  int db = b.degree_in(v);
  MPoly lb = coeffs_in(b, v).back();
  while (!a.is_zero() && a.degree_in(v) >= db) {
    int da = a.degree_in(v);
    MPoly la = coeffs_in(a, v).back();
    a = a * lb - la * xpow(a.field(), a.nvars(), v, da - db) * b;
  }
  return a;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b, int v) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (v < 0) return MPoly::constant(a.field().one(), a.nvars());
  if (a.degree_in(v) <= 0 && b.degree_in(v) <= 0) return gcd_rec(a, b, v - 1);
  MPoly c = gcd_rec(content_in(a, v), content_in(b, v), v - 1);
  MPoly p = primitive_in(a, v), q = primitive_in(b, v);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  // Primitive remainder sequence; a nonzero remainder free of x_v means coprime.
  while (!q.is_zero() && q.degree_in(v) > 0) {
    MPoly r = prem(p, q, v);
    p = std::move(q);
    q = r.is_zero() ? r : primitive_in(r, v);
  }
  if (!q.is_zero()) p = MPoly::constant(a.field().one(), a.nvars());
  return (c * p).monic();
}

}  // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.field() != b.field()) fail("FieldMismatch", "gcd over different fields");
  int n = std::max(a.nvars(), b.nvars());
  if (n >= 2 && a.is_homogeneous() && b.is_homogeneous()) {
    int v = n - 1;
    int ka = a.min_degree_in(v), kb = b.min_degree_in(v);
    MPoly a1, b1;
    divide_exact(a, xpow(a.field(), n, v, ka), &a1);
    divide_exact(b, xpow(b.field(), n, v, kb), &b1);
    MPoly g = gcd_rec(a1.specialize(v, a.field().one()), b1.specialize(v, b.field().one()), v - 1);
    int dg = g.total_degree();
    MPoly h(a.field(), n);
    for (const auto& [k, c] : g.terms()) {
      auto e = mono::exps(k);
      e[static_cast<std::size_t>(v)] = dg - mono::degree(k);
      h.add_term(mono::make(e), c);
    }
    return (h * xpow(a.field(), n, v, std::min(ka, kb))).monic();
  }
  return gcd_rec(a, b, n - 1);
}

}  // namespace equisym
