#pragma once

// Truncated power series sum c_k t^k + O(t^prec) over a cyclotomic field.

#include <string>
#include <vector>

#include "equisym/cyclotomic.hpp"

namespace equisym {

class TruncSeries {
 public:
  static constexpr int kDefaultPrecision = 20;

  TruncSeries() = default;
  TruncSeries(const CycField& F, int prec);  // zero
  TruncSeries(const CycField& F, int prec, std::vector<CycNum> coeffs);  // extra terms dropped

  // Polynomial sum c_k t^k truncated to prec.
  static TruncSeries from_poly(const CycField& F, int prec, const std::vector<CycNum>& c);
  static TruncSeries from_ints(const CycField& F, int prec, const std::vector<long>& c);

  const CycField& field() const { return field_; }
  int precision() const { return static_cast<int>(c_.size()); }
  const CycNum& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<CycNum>& coeffs() const { return c_; }
  TruncSeries truncate(int prec) const;

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries operator*(const CycNum& s) const;
  TruncSeries inverse() const;  // requires a nonzero constant term
  bool operator==(const TruncSeries& o) const { return field_ == o.field_ && c_ == o.c_; }

  // Integer coefficient list; throws unless every coefficient is an integer.
  std::vector<long> integer_coeffs() const;
  // "c0 + c1*t + ... + O(t^p)", zero terms omitted.
  std::string to_string(const std::string& var = "t") const;

 private:
  CycField field_;
  std::vector<CycNum> c_;
};

TruncSeries series_div(const TruncSeries& a, const TruncSeries& b);

}  // namespace equisym
