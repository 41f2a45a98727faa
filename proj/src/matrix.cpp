#include "equisym/matrix.hpp"

#include <sstream>

#include "equisym/errors.hpp"

namespace equisym {

FMatrix::FMatrix(const CycField& F, int n) : field_(F), n_(n), a_(static_cast<std::size_t>(n * n), F.zero()) {}

FMatrix::FMatrix(const CycField& F, int n, std::vector<CycNum> entries)
    : field_(F), n_(n), a_(std::move(entries)) {
  if (a_.size() != static_cast<std::size_t>(n * n)) fail("InvalidInput", "matrix entry count mismatch");
  for (auto& e : a_)
    if (e.field() != F) e = equisym::embed(e, F);
}

FMatrix FMatrix::identity(const CycField& F, int n) {
  FMatrix r(F, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = F.one();
  return r;
}

FMatrix FMatrix::diag(const CycField& F, const std::vector<CycNum>& d) {
  int n = static_cast<int>(d.size());
  FMatrix r(F, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = d[static_cast<std::size_t>(i)].field() == F ? d[static_cast<std::size_t>(i)] : equisym::embed(d[static_cast<std::size_t>(i)], F);
  return r;
}

FMatrix operator*(const FMatrix& A, const FMatrix& B) {
  if (A.n_ != B.n_) fail("InvalidInput", "matrix dimension mismatch");
  FMatrix r(A.field_, A.n_);
  for (int i = 0; i < A.n_; ++i)
    for (int k = 0; k < A.n_; ++k) {
      const CycNum& aik = A.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < A.n_; ++j)
        if (!B.at(k, j).is_zero()) r.at(i, j) += aik * B.at(k, j);
    }
  return r;
}

FMatrix FMatrix::operator*(const CycNum& c) const {
  FMatrix r = *this;
  for (auto& e : r.a_) e = e * c;
  return r;
}

FMatrix FMatrix::operator+(const FMatrix& B) const {
  FMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += B.a_[i];
  return r;
}

FMatrix FMatrix::operator-(const FMatrix& B) const {
  FMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= B.a_[i];
  return r;
}

namespace {

CycNum det_dense(DenseMat m, const CycField& F) {
  std::size_t n = m.size();
  CycNum d = F.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return F.zero();
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    CycNum inv = m[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      CycNum f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!m[c][k].is_zero()) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

}  // namespace

CycNum FMatrix::det() const {
  if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  if (n_ == 3) {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  }
  DenseMat m(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m[static_cast<std::size_t>(i)].push_back(at(i, j));
  return det_dense(std::move(m), field_);
}

CycNum FMatrix::trace() const {
  CycNum t = field_.zero();
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

std::vector<CycNum> FMatrix::principal_minor_sums() const {
  std::vector<CycNum> e(static_cast<std::size_t>(n_ + 1), field_.zero());
  for (unsigned mask = 0; mask < (1u << n_); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n_; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    DenseMat m;
    for (int r : idx) {
      m.emplace_back();
      for (int c : idx) m.back().push_back(at(r, c));
    }
    e[idx.size()] += idx.empty() ? field_.one() : det_dense(std::move(m), field_);
  }
  return e;
}

FMatrix FMatrix::inverse() const {
  DenseMat m(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m[static_cast<std::size_t>(i)].push_back(at(i, j));
    for (int j = 0; j < n_; ++j) m[static_cast<std::size_t>(i)].push_back(i == j ? field_.one() : field_.zero());
  }
  auto piv = rref(m);
  if (static_cast<int>(piv.size()) < n_ || piv[static_cast<std::size_t>(n_ - 1)] != n_ - 1)
    fail("SingularMatrix", "matrix is not invertible");
  FMatrix r(field_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n_ + j)];
  return r;
}

FMatrix FMatrix::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FMatrix r = identity(field_, n_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

FMatrix FMatrix::transpose() const {
  FMatrix r(field_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
  return r;
}

bool FMatrix::is_scalar() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i != j && !at(i, j).is_zero()) return false;
      if (i == j && at(i, i) != at(0, 0)) return false;
    }
  return !at(0, 0).is_zero();
}

bool FMatrix::is_identity() const { return is_scalar() && at(0, 0).is_one(); }

bool FMatrix::is_monomial() const {
  for (int i = 0; i < n_; ++i) {
    int rc = 0, cc = 0;
    for (int j = 0; j < n_; ++j) {
      rc += !at(i, j).is_zero();
      cc += !at(j, i).is_zero();
    }
    if (rc != 1 || cc != 1) return false;
  }
  return true;
}

bool FMatrix::is_rational() const {
  for (const auto& e : a_)
    if (!e.is_rational()) return false;
  return true;
}

FMatrix FMatrix::projective_normal() const {
  for (const auto& e : a_) {
    if (e.is_zero()) continue;
    if (e.is_one()) return *this;
    return *this * e.inverse();
  }
  fail("SingularMatrix", "zero matrix has no projective class");
}

long FMatrix::projective_order(long cap) const {
  FMatrix p = *this;
  for (long k = 1; k <= cap; ++k) {
    if (p.is_scalar()) return k;
    p = p * *this;
  }
  return 0;
}

long FMatrix::order(long cap) const {
  FMatrix p = *this;
  for (long k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * *this;
  }
  return 0;
}

std::size_t FMatrix::hash() const {
  std::size_t h = static_cast<std::size_t>(n_);
  for (const auto& e : a_) h ^= e.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

FMatrix FMatrix::embed(const CycField& target) const {
  FMatrix r(target, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = equisym::embed(a_[i], target);
  return r;
}

std::string FMatrix::to_string(const std::string& symbol) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).to_string(symbol);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<int> rref(DenseMat& A) {
  std::vector<int> piv;
  if (A.empty()) return piv;
  std::size_t rows = A.size(), cols = A[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    CycNum inv = A[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k)
      if (!A[r][k].is_zero()) A[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      CycNum f = A[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!A[r][k].is_zero()) A[i][k] -= f * A[r][k];
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  A.resize(r);
  return piv;
}

int rank(DenseMat A) { return static_cast<int>(rref(A).size()); }

DenseMat nullspace(DenseMat A, const CycField& F, std::size_t ncols) {
  auto piv = rref(A);
  std::vector<bool> is_piv(ncols, false);
  for (int p : piv) is_piv[static_cast<std::size_t>(p)] = true;
  DenseMat basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<CycNum> v(ncols, F.zero());
    v[f] = F.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[static_cast<std::size_t>(piv[r])] = -A[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace equisym
