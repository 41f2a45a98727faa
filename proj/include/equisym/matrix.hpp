#pragma once

// Square matrices and dense linear algebra over a cyclotomic field.

#include <string>
#include <vector>

#include "equisym/cyclotomic.hpp"

namespace equisym {

class FMatrix {
 public:
  FMatrix() = default;
  FMatrix(const CycField& F, int n);  // zero matrix
  FMatrix(const CycField& F, int n, std::vector<CycNum> entries);  // row-major

  static FMatrix identity(const CycField& F, int n);
  static FMatrix diag(const CycField& F, const std::vector<CycNum>& d);

  const CycField& field() const { return field_; }
  int dim() const { return n_; }
  const CycNum& at(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  CycNum& at(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<CycNum>& entries() const { return a_; }

  friend FMatrix operator*(const FMatrix& A, const FMatrix& B);
  FMatrix operator*(const CycNum& c) const;
  FMatrix operator+(const FMatrix& B) const;
  FMatrix operator-(const FMatrix& B) const;
  bool operator==(const FMatrix& B) const { return n_ == B.n_ && a_ == B.a_; }
  bool operator!=(const FMatrix& B) const { return !(*this == B); }

  CycNum det() const;
  CycNum trace() const;
  // Sum of principal k-minors, k = 0..n; det(1 + sA) = sum_k e_k s^k.
  std::vector<CycNum> principal_minor_sums() const;
  FMatrix inverse() const;  // throws SingularMatrix
  FMatrix pow(long e) const;
  FMatrix transpose() const;
  bool is_identity() const;
  bool is_scalar() const;
  bool is_monomial() const;  // exactly one nonzero entry per row and column
  bool is_rational() const;

  // Divided by its first nonzero entry in row-major order.
  FMatrix projective_normal() const;
  // Smallest k >= 1 with A^k scalar, or 0 if none up to cap.
  long projective_order(long cap = 100000) const;
  long order(long cap = 100000) const;

  std::size_t hash() const;
  FMatrix embed(const CycField& target) const;
  std::string to_string(const std::string& symbol = "z") const;

 private:
  CycField field_;
  int n_ = 0;
  std::vector<CycNum> a_;
};

// Dense rectangular matrices for row reduction.
using DenseMat = std::vector<std::vector<CycNum>>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(DenseMat& A);
int rank(DenseMat A);
// Basis of {v : A v = 0}, in the order of the free columns.
DenseMat nullspace(DenseMat A, const CycField& F, std::size_t ncols);

}  // namespace equisym
