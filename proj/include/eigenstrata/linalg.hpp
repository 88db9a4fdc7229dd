#pragma once

#include <cstddef>
#include <vector>

#include "eigenstrata/matrix.hpp"

namespace eigenstrata {

/// Exact rank (fraction-free elimination on the row-wise integer clearing of M).
std::size_t rank(const ExactMatrix& m);

/// Exact basis of {v : M v = 0}.
///
/// The basis is returned in reduced row echelon form when the vectors are
/// stacked as rows: each vector has a unit entry at a distinct pivot
/// column, all other vectors vanish there, and vectors are ordered by
/// pivot column. This form is unique, so results are reproducible.
std::vector<ExactVector> nullspace(const ExactMatrix& m);

Rational determinant(const ExactMatrix& m);

/// Reduced row echelon form of the given rows (drops zero rows).
std::vector<ExactVector> reduced_row_echelon(std::vector<ExactVector> rows);

ExactVector mat_vec(const ExactMatrix& m, const ExactVector& v);

/// Fraction-free determinant over an integral domain T that provides
/// exact_divide(a, b). Used for matrices with polynomial entries.
template <class T>
T bareiss_determinant(Matrix<T> a) {
  if (!a.is_square()) throw NonSquareError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t piv = k + 1;
      while (piv < n && is_zero(a(piv, k))) ++piv;
      if (piv == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = exact_divide(v, prev);
      }
      a(i, k) = T(0);
    }
    prev = a(k, k);
  }
  T det = a(n - 1, n - 1);
  return negate ? T(0) - det : det;
}

inline Rational exact_divide(const Rational& a, const Rational& b) { return a / b; }

}  // namespace eigenstrata
