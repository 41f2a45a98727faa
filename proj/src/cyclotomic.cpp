#include "equisym/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "equisym/errors.hpp"
#include "equisym/zpoly.hpp"

namespace equisym {

namespace {

struct FieldData : CycField::Data {
  std::vector<std::vector<mpz_class>> zpow;  // zeta^e for e in [0, m)
};

// Reduce an integer coefficient vector modulo the monic modulus in place.
void reduce_mod(std::vector<mpz_class>& v, const std::vector<mpz_class>& mod) {
  std::size_t phi = mod.size() - 1;
  for (std::size_t k = v.size(); k-- > phi;) {
    if (v[k] == 0) continue;
    const mpz_class c = v[k];
    for (std::size_t j = 0; j < phi; ++j) {
      if (mod[j] != 0) mpz_submul(v[k - phi + j].get_mpz_t(), c.get_mpz_t(), mod[j].get_mpz_t());
    }
    v[k] = 0;
  }
  v.resize(phi);
}

zpoly::ZPoly cyclotomic_poly(unsigned m, std::map<unsigned, zpoly::ZPoly>& memo) {
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  zpoly::ZPoly f(m + 1);
  f[0] = -1;
  f[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    zpoly::ZPoly q;
    zpoly::divexact(f, cyclotomic_poly(d, memo), &q);
    f = q;
  }
  memo[m] = f;
  return f;
}

std::shared_ptr<const FieldData> make_field(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const FieldData>> cache;
  static std::map<unsigned, zpoly::ZPoly> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto d = std::make_shared<FieldData>();
  d->m = m;
  d->modulus = cyclotomic_poly(m, memo);
  d->phi = static_cast<unsigned>(d->modulus.size() - 1);
  for (unsigned k = 0; k < m; ++k)
    if (std::gcd(k, m) == 1) d->units.push_back(k);
  if (m == 1) d->units = {0};
  d->zpow.resize(m);
  std::vector<mpz_class> cur(d->phi);
  cur[0] = 1;
  for (unsigned e = 0; e < m; ++e) {
    d->zpow[e] = cur;
    std::vector<mpz_class> nxt(d->phi + 1);
    for (unsigned j = 0; j < d->phi; ++j) nxt[j + 1] = cur[j];
    reduce_mod(nxt, d->modulus);
    cur = nxt;
  }
  cache[m] = d;
  return d;
}

const FieldData& fd(const CycField& F) { return *static_cast<const FieldData*>(F.data()); }

// Rational polynomial helpers for the inverse.
using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  qtrim(r);
  return r;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qtrim(r);
  return r;
}

void qdivrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  qtrim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, 0);
  for (std::size_t i = r.size(); i-- >= b.size();) {
    mpq_class c = r[i] / b.back();
    q[i - b.size() + 1] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[i - b.size() + 1 + j] -= c * b[j];
    if (i == b.size() - 1) break;
  }
  r.resize(b.size() - 1);
  qtrim(r);
  qtrim(q);
}

}  // namespace

unsigned euler_phi(unsigned m) {
  unsigned r = m;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

unsigned lcm_conductor(unsigned a, unsigned b) { return std::lcm(a, b); }

CycField::CycField() : d_(make_field(1)) {}

CycField::CycField(unsigned m) {
  if (m == 0) fail("InvalidInput", "cyclotomic conductor must be positive");
  d_ = make_field(m);
}

CycField cyclo_field(unsigned m) { return CycField(m); }

CycNum CycField::zero() const { return CycNum(*this, std::vector<mpz_class>(degree()), 1); }

CycNum CycField::one() const { return from_int(1); }

CycNum CycField::gen() const { return zeta_pow(1); }

CycNum CycField::zeta_pow(long e) const {
  long m = conductor();
  long r = ((e % m) + m) % m;
  return CycNum(*this, fd(*this).zpow[static_cast<std::size_t>(r)], 1);
}

CycNum CycField::root_of_unity(unsigned n, long k) const {
  unsigned m = conductor();
  if (n == 0) fail("InvalidInput", "root of unity of order 0");
  if (m % n == 0) return zeta_pow(k * static_cast<long>(m / n));
  if (m % 2 == 1 && (2 * m) % n == 0) {
    // zeta_{2m} = -zeta_m^((m+1)/2)
    long e = k * static_cast<long>(2 * m / n);
    long ee = ((e % (2 * static_cast<long>(m))) + 2 * static_cast<long>(m)) % (2 * static_cast<long>(m));
    CycNum z = zeta_pow(ee * static_cast<long>((m + 1) / 2));
    return (ee % 2) ? -z : z;
  }
  fail("InvalidInput", "zeta_" + std::to_string(n) + " is not in Q(zeta_" + std::to_string(m) + ")");
}

CycNum CycField::from_rational(const Rational& q) const {
  std::vector<mpz_class> num(degree());
  num[0] = q.get_num();
  return CycNum(*this, std::move(num), q.get_den());
}

CycNum CycField::from_int(long v) const { return from_rational(Rational(v)); }

CycNum::CycNum() : field_(), num_(1), den_(1) {}

CycNum::CycNum(const CycField& F, std::vector<mpz_class> num, mpz_class den)
    : field_(F), num_(std::move(num)), den_(std::move(den)) {
  if (num_.size() != F.degree()) {
    if (num_.size() > F.degree()) {
      reduce_mod(num_, F.modulus());
    } else {
      num_.resize(F.degree());
    }
  }
  if (den_ == 0) fail("ZeroDivision", "zero denominator");
  normalize();
}

void CycNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  bool allzero = true;
  for (const auto& c : num_)
    if (c != 0) allzero = false;
  if (allzero) {
    den_ = 1;
    return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

Rational CycNum::coeff(std::size_t k) const {
  Rational r(num_.at(k), den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> CycNum::coeffs() const {
  std::vector<Rational> r;
  for (std::size_t k = 0; k < num_.size(); ++k) r.push_back(coeff(k));
  return r;
}

bool CycNum::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_one() const {
  if (den_ != 1 || num_[0] != 1) return false;
  for (std::size_t k = 1; k < num_.size(); ++k)
    if (num_[k] != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t k = 1; k < num_.size(); ++k)
    if (num_[k] != 0) return false;
  return true;
}

Rational CycNum::to_rational() const {
  if (!is_rational()) fail("InvalidInput", "element is not rational: " + to_string());
  return coeff(0);
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

static void check_same(const CycField& a, const CycField& b) {
  if (a != b)
    fail("FieldMismatch", "operands live in Q(zeta_" + std::to_string(a.conductor()) + ") and Q(zeta_" +
                              std::to_string(b.conductor()) + ")");
}

CycNum& CycNum::operator+=(const CycNum& o) {
  check_same(field_, o.field_);
  if (den_ == o.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += o.num_[k];
  } else {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
    mpz_class fa = o.den_ / g, fb = den_ / g;
    for (std::size_t k = 0; k < num_.size(); ++k) {
      num_[k] *= fa;
      mpz_addmul(num_[k].get_mpz_t(), o.num_[k].get_mpz_t(), fb.get_mpz_t());
    }
    den_ *= fa;
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum operator*(const CycNum& a, const CycNum& b) {
  check_same(a.field_, b.field_);
  std::size_t phi = a.num_.size();
  if (phi == 1) {
    std::vector<mpz_class> n(1);
    n[0] = a.num_[0] * b.num_[0];
    return CycNum(a.field_, std::move(n), a.den_ * b.den_);
  }
  std::vector<mpz_class> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (b.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
  }
  reduce_mod(prod, a.field_.modulus());
  return CycNum(a.field_, std::move(prod), a.den_ * b.den_);
}

CycNum& CycNum::operator*=(const CycNum& o) {
  *this = *this * o;
  return *this;
}

CycNum& CycNum::operator*=(const Rational& q) {
  for (auto& c : num_) c *= q.get_num();
  den_ *= q.get_den();
  normalize();
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) {
  *this = *this * o.inverse();
  return *this;
}

bool CycNum::operator==(const CycNum& o) const {
  return field_ == o.field_ && den_ == o.den_ && num_ == o.num_;
}

int CycNum::compare(const CycNum& o) const {
  for (std::size_t k = 0; k < num_.size() && k < o.num_.size(); ++k) {
    int c = cmp(coeff(k), o.coeff(k));
    if (c) return c < 0 ? -1 : 1;
  }
  return 0;
}

CycNum CycNum::inverse() const {
  if (is_zero()) fail("ZeroDivision", "inverse of zero");
  std::size_t phi = num_.size();
  if (phi == 1) {
    std::vector<mpz_class> n(1);
    n[0] = den_;
    return CycNum(field_, std::move(n), num_[0]);
  }
  // Extended Euclid: s*a + t*Phi = g (g constant).
  QPoly a(phi), mod(field_.modulus().size());
  for (std::size_t k = 0; k < phi; ++k) a[k] = num_[k];
  for (std::size_t k = 0; k < mod.size(); ++k) mod[k] = field_.modulus()[k];
  qtrim(a);
  QPoly r0 = mod, r1 = a, s0 = {}, s1 = {mpq_class(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    qdivrem(r0, r1, q, r);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since Phi is irreducible and deg a < phi.
  mpq_class c = r1.at(0);
  std::vector<mpz_class> num(phi);
  mpz_class l = 1;
  for (auto& x : s1) {
    x /= c;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  for (std::size_t k = 0; k < s1.size(); ++k) num[k] = s1[k].get_num() * (l / s1[k].get_den());
  // multiply back by the original denominator
  for (auto& x : num) x *= den_;
  return CycNum(field_, std::move(num), l);
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum r = field_.one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

CycNum CycNum::galois(long k) const {
  const auto& F = fd(field_);
  long m = F.m;
  long kk = ((k % m) + m) % m;
  if (m > 1 && std::gcd(kk, m) != 1) fail("InvalidInput", "Galois exponent not a unit");
  std::vector<mpz_class> num(num_.size());
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    const auto& z = F.zpow[static_cast<std::size_t>((static_cast<long>(j) * kk) % m)];
    for (std::size_t i = 0; i < num.size(); ++i)
      if (z[i] != 0) mpz_addmul(num[i].get_mpz_t(), num_[j].get_mpz_t(), z[i].get_mpz_t());
  }
  return CycNum(field_, std::move(num), den_);
}

Rational CycNum::norm() const {
  CycNum r = field_.one();
  for (unsigned k : field_.units()) r *= galois(k == 0 ? 1 : k);
  return r.to_rational();
}

std::size_t CycNum::hash() const {
  std::size_t h = field_.conductor();
  auto mix = [&h](const mpz_class& x) {
    std::size_t v = mpz_size(x.get_mpz_t()) ? mpz_getlimbn(x.get_mpz_t(), 0) : 0;
    v ^= static_cast<std::size_t>(mpz_sgn(x.get_mpz_t()) + 1) << 1;
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const auto& c : num_) mix(c);
  mix(den_);
  return h;
}

std::string CycNum::to_string(const std::string& symbol) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = num_.size(); k-- > 0;) {
    if (num_[k] == 0) continue;
    Rational c = coeff(k);
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << symbol;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

CycNum cyc_inverse(const CycNum& a) { return a.inverse(); }

CycNum embed(const CycNum& a, const CycField& target) {
  unsigned m = a.field().conductor(), M = target.conductor();
  if (m == M) return a;
  if (M % m != 0)
    fail("FieldMismatch", "Q(zeta_" + std::to_string(m) + ") does not embed in Q(zeta_" + std::to_string(M) + ")");
  unsigned s = M / m;
  CycNum r = target.zero();
  const auto& nums = a.numerators();
  std::vector<mpz_class> acc(target.degree());
  for (std::size_t j = 0; j < nums.size(); ++j) {
    if (nums[j] == 0) continue;
    CycNum z = target.zeta_pow(static_cast<long>(j * s));
    const auto& zn = z.numerators();
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (zn[i] != 0) mpz_addmul(acc[i].get_mpz_t(), nums[j].get_mpz_t(), zn[i].get_mpz_t());
  }
  return CycNum(target, std::move(acc), a.denominator());
}

}  // namespace equisym
