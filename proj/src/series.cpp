#include "equisym/series.hpp"

#include <sstream>

#include "equisym/errors.hpp"

namespace equisym {

TruncSeries::TruncSeries(const CycField& F, int prec) : field_(F), c_(static_cast<std::size_t>(prec), F.zero()) {
  if (prec < 1) fail("InvalidInput", "series precision must be at least 1");
}

TruncSeries::TruncSeries(const CycField& F, int prec, std::vector<CycNum> coeffs) : TruncSeries(F, prec) {
  for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = std::move(coeffs[k]);
}

TruncSeries TruncSeries::from_poly(const CycField& F, int prec, const std::vector<CycNum>& c) {
  return TruncSeries(F, prec, c);
}

TruncSeries TruncSeries::from_ints(const CycField& F, int prec, const std::vector<long>& c) {
  std::vector<CycNum> v;
  for (long x : c) v.push_back(F.from_int(x));
  return TruncSeries(F, prec, v);
}

TruncSeries TruncSeries::truncate(int prec) const {
  if (prec > precision()) fail("InvalidInput", "cannot raise series precision");
  return TruncSeries(field_, prec, c_);
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  int p = std::min(precision(), o.precision());
  TruncSeries r(field_, p);
  for (int k = 0; k < p; ++k) r.c_[static_cast<std::size_t>(k)] = (*this)[k] + o[k];
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  int p = std::min(precision(), o.precision());
  TruncSeries r(field_, p);
  for (int k = 0; k < p; ++k) r.c_[static_cast<std::size_t>(k)] = (*this)[k] - o[k];
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  int p = std::min(precision(), o.precision());
  TruncSeries r(field_, p);
  for (int i = 0; i < p; ++i) {
    if ((*this)[i].is_zero()) continue;
    for (int j = 0; i + j < p; ++j)
      if (!o[j].is_zero()) r.c_[static_cast<std::size_t>(i + j)] += (*this)[i] * o[j];
  }
  return r;
}

TruncSeries TruncSeries::operator*(const CycNum& s) const {
  TruncSeries r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (c_[0].is_zero()) fail("ZeroDivision", "series with zero constant term is not invertible");
  int p = precision();
  TruncSeries r(field_, p);
  CycNum inv0 = c_[0].inverse();
  r.c_[0] = inv0;
  for (int k = 1; k < p; ++k) {
    CycNum s = field_.zero();
    for (int j = 1; j <= k; ++j)
      if (!c_[static_cast<std::size_t>(j)].is_zero()) s += c_[static_cast<std::size_t>(j)] * r.c_[static_cast<std::size_t>(k - j)];
    r.c_[static_cast<std::size_t>(k)] = -(s * inv0);
  }
  return r;
}

std::vector<long> TruncSeries::integer_coeffs() const {
  std::vector<long> out;
  for (const auto& x : c_) {
    Rational q = x.to_rational();
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) fail("InvalidInput", "series coefficient is not a small integer");
    out.push_back(q.get_num().get_si());
  }
  return out;
}

std::string TruncSeries::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < precision(); ++k) {
    const CycNum& c = (*this)[k];
    if (c.is_zero()) continue;
    std::string mon = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (c.is_rational()) {
      Rational q = c.to_rational();
      bool neg = q < 0;
      if (neg) q = -q;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (mon.empty()) {
        os << q.get_str();
      } else if (q == 1) {
        os << mon;
      } else {
        os << q.get_str() << "*" << mon;
      }
    } else {
      os << (first ? "" : " + ") << "(" << c.to_string() << ")" << (mon.empty() ? "" : "*" + mon);
    }
    first = false;
  }
  os << (first ? "" : " + ") << "O(" << var << "^" << precision() << ")";
  return os.str();
}

TruncSeries series_div(const TruncSeries& a, const TruncSeries& b) {
  if (a.precision() != b.precision()) fail("InvalidInput", "series precisions differ");
  return a * b.inverse();
}

}  // namespace equisym
