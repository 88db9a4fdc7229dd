#include "eigenstrata/linalg.hpp"

#include <algorithm>

namespace eigenstrata {

namespace {

struct IntegerEchelon {
  std::size_t cols = 0;
  std::vector<mpz_class> entries;  // rank × cols, row-major
  std::vector<std::size_t> pivots;
  std::vector<mpz_class> row_scale;  // integer row i = row_scale[i] · original row
  bool odd_swaps = false;
};

// Multiply each row by the lcm of its denominators.
std::vector<mpz_class> clear_denominators(const ExactMatrix& m, std::vector<mpz_class>& scale) {
  std::vector<mpz_class> a(m.rows() * m.cols());
  scale.assign(m.rows(), mpz_class(1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (const Rational& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get().get_den_mpz_t());
    scale[i] = l;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m(i, j).get();
      mpz_class t;
      mpz_divexact(t.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
      a[i * m.cols() + j] = q.get_num() * t;
    }
  }
  return a;
}

// Fraction-free forward elimination. Zero columns are skipped; every
// entry stays a minor of the cleared matrix, so divisions are exact.
IntegerEchelon bareiss_echelon(const ExactMatrix& m) {
  IntegerEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  out.cols = cols;
  std::vector<mpz_class> scale;
  std::vector<mpz_class> a = clear_denominators(m, scale);
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };
  std::vector<std::size_t> order(rows);
  for (std::size_t i = 0; i < rows; ++i) order[i] = i;

  mpz_class prev = 1;
  mpz_class t1, t2;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Pivot: largest bit length; earliest row on ties.
    std::size_t piv = rows;
    std::size_t best = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(at(i, c)) == 0) continue;
      std::size_t bits = mpz_sizeinbase(at(i, c).get_mpz_t(), 2);
      if (piv == rows || bits > best) {
        piv = i;
        best = bits;
      }
    }
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));
      std::swap(order[piv], order[r]);
      out.odd_swaps = !out.odd_swaps;
    }
    const mpz_class& p = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      mpz_class& lead = at(i, c);
      if (sgn(lead) == 0) {
        // a(i,j) = p·a(i,j)/prev, still exact
        for (std::size_t j = c + 1; j < cols; ++j) {
          if (sgn(at(i, j)) == 0) continue;
          mpz_mul(t1.get_mpz_t(), p.get_mpz_t(), at(i, j).get_mpz_t());
          mpz_divexact(at(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_mul(t1.get_mpz_t(), p.get_mpz_t(), at(i, j).get_mpz_t());
        mpz_mul(t2.get_mpz_t(), lead.get_mpz_t(), at(r, j).get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(at(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = p;
    out.pivots.push_back(c);
    ++r;
  }
  out.entries.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(r * cols));
  for (std::size_t i = 0; i < rows; ++i) out.row_scale.push_back(scale[order[i]]);
  return out;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) { return bareiss_echelon(m).pivots.size(); }

std::vector<ExactVector> reduced_row_echelon(std::vector<ExactVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    Rational inv = rows[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      }
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<ExactVector> nullspace(const ExactMatrix& m) {
  const IntegerEchelon e = bareiss_echelon(m);
  const std::size_t cols = m.cols();
  const std::size_t r = e.pivots.size();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  std::vector<ExactVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ExactVector v(cols, Rational(0));
    v[f] = Rational(1);
    for (std::size_t ii = r; ii-- > 0;) {
      const std::size_t pc = e.pivots[ii];
      mpq_class acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        const mpz_class& a = e.entries[ii * cols + j];
        if (sgn(a) == 0 || v[j].is_zero()) continue;
        acc += mpq_class(a) * v[j].get();
      }
      acc /= mpq_class(e.entries[ii * cols + pc]);
      v[pc] = Rational(mpq_class(-acc));
    }
    basis.push_back(std::move(v));
  }
  return reduced_row_echelon(std::move(basis));
}

Rational determinant(const ExactMatrix& m) {
  if (!m.is_square()) throw NonSquareError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  const IntegerEchelon e = bareiss_echelon(m);
  if (e.pivots.size() < n) return Rational(0);
  mpz_class scale = 1;
  for (const auto& s : e.row_scale) scale *= s;
  Rational det(e.entries[(n - 1) * n + (n - 1)], scale);
  return e.odd_swaps ? -det : det;
}

ExactVector mat_vec(const ExactMatrix& m, const ExactVector& v) {
  if (v.size() != m.cols()) throw DimensionError("mat_vec shape mismatch");
  ExactVector out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace eigenstrata
