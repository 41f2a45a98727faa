#include "equisym/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "equisym/errors.hpp"

namespace equisym {

UPoly::UPoly(const CycField& F, std::vector<CycNum> coeffs) : field(F), c(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

CycNum UPoly::eval(const CycNum& x) const {
  CycNum r = field.zero();
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    os << (first ? "" : " + ") << "(" << c[i].to_string() << ")";
    if (i) os << "*" << var << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return os.str();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r(a.field);
  r.c.assign(std::max(a.c.size(), b.c.size()), a.field.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  UPoly r(a.field);
  r.c.assign(std::max(a.c.size(), b.c.size()), a.field.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r(a.field);
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, a.field.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      if (!b.c[j].is_zero()) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) fail("ZeroDivision", "polynomial division by zero");
  r = a;
  q = UPoly(a.field);
  if (a.deg() < b.deg()) return;
  q.c.assign(static_cast<std::size_t>(a.deg() - b.deg() + 1), a.field.zero());
  CycNum inv = b.lead().inverse();
  for (int i = r.deg(); i >= b.deg(); --i) {
    CycNum f = r.c[static_cast<std::size_t>(i)] * inv;
    if (f.is_zero()) continue;
    q.c[static_cast<std::size_t>(i - b.deg())] = f;
    for (int j = 0; j <= b.deg(); ++j) r.c[static_cast<std::size_t>(i - b.deg() + j)] -= f * b.c[static_cast<std::size_t>(j)];
  }
  r.trim();
  q.trim();
}

UPoly monic(const UPoly& a) {
  if (a.is_zero() || a.lead().is_one()) return a;
  UPoly r = a;
  CycNum inv = a.lead().inverse();
  for (auto& x : r.c) x *= inv;
  return r;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divrem(a, b, q, r);
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

UPoly galois(const UPoly& a, long k) {
  UPoly r(a.field);
  for (const auto& x : a.c) r.c.push_back(x.galois(k));
  return r;
}

UPoly from_zpoly(const zpoly::ZPoly& a, const CycField& F) {
  UPoly r(F);
  for (const auto& x : a) r.c.push_back(F.from_rational(Rational(x)));
  r.trim();
  return r;
}

zpoly::ZPoly to_zpoly(const UPoly& a) {
  std::vector<mpq_class> q;
  for (const auto& x : a.c) q.push_back(x.to_rational());
  return zpoly::from_rational(q);
}

std::vector<std::pair<UPoly, int>> upoly_factor_q(const UPoly& p) {
  if (p.field.conductor() != 1 && !p.is_zero()) {
    for (const auto& x : p.c)
      if (!x.is_rational()) fail("InvalidInput", "factorization is only available over Q");
  }
  if (p.is_zero()) fail("InvalidInput", "cannot factor the zero polynomial");
  std::vector<std::pair<UPoly, int>> out;
  for (auto& [f, e] : zpoly::factor(to_zpoly(p))) out.emplace_back(from_zpoly(f, cyclo_field(1)), e);
  return out;
}

namespace {

bool square_root(const mpz_class& n, mpz_class& r) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return false;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return true;
}

}  // namespace

std::vector<CycNum> roots_of_factors(const std::vector<zpoly::ZPoly>& factors, const CycField& target) {
  std::vector<CycNum> out;
  unsigned m = target.conductor();
  for (const auto& f : factors) {
    int d = zpoly::deg(f);
    if (d == 1) {
      out.push_back(target.from_rational(Rational(-f[0], f[1])));
    } else if (d == 2) {
      const mpz_class &a = f[2], &b = f[1], &c = f[0];
      mpz_class disc = b * b - 4 * a * c, k;
      CycNum sq;
      if (square_root(disc, k)) {
        sq = target.from_rational(Rational(k));
      } else if (m % 4 == 0 && square_root(-disc, k)) {
        sq = target.root_of_unity(4, 1) * target.from_rational(Rational(k));
      } else if (m % 3 == 0 && -disc % 3 == 0 && square_root(-disc / 3, k)) {
        CycNum s3 = target.from_int(1) + target.root_of_unity(3, 1) * target.from_int(2);  // sqrt(-3)
        sq = s3 * target.from_rational(Rational(k));
      } else {
        continue;
      }
      CycNum inv2a = target.from_rational(Rational(1) / Rational(2 * a));
      CycNum mb = target.from_rational(Rational(-b));
      out.push_back((mb + sq) * inv2a);
      out.push_back((mb - sq) * inv2a);
    }
  }
  std::sort(out.begin(), out.end(), [](const CycNum& x, const CycNum& y) { return x.compare(y) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CycNum> roots_in_field(const UPoly& p, const CycField& target) {
  std::vector<zpoly::ZPoly> fs;
  for (auto& [f, e] : zpoly::factor(to_zpoly(p))) fs.push_back(f);
  return roots_of_factors(fs, target);
}

std::vector<CycNum> roots_in_own_field(const UPoly& p) {
  const CycField& K = p.field;
  if (p.is_zero()) fail("InvalidInput", "roots of the zero polynomial");
  auto over_q = [](const UPoly& a) {
    UPoly r(cyclo_field(1));
    for (const auto& x : a.c) r.c.push_back(r.field.from_rational(x.to_rational()));
    return r;
  };
  bool rational = true;
  for (const auto& x : p.c) rational = rational && x.is_rational();
  if (rational) return roots_in_field(over_q(p), K);
  if (K.degree() != 2) fail("InvalidInput", "root finding needs a field of degree at most 2");
  // p * conj(p) is rational and its roots in K contain those of p.
  std::vector<CycNum> out;
  for (const auto& r : roots_in_field(over_q(p * galois(p, -1)), K))
    if (p.eval(r).is_zero()) out.push_back(r);
  return out;
}

}  // namespace equisym
