#pragma once

#include <string>
#include <vector>

#include "eigenstrata/linalg.hpp"
#include "eigenstrata/matrix.hpp"
#include "eigenstrata/polynomial.hpp"

namespace eigenstrata {

/// Univariate polynomial with coefficients in C (Rational, or Polynomial
/// for characteristic polynomials of symbolic matrices). Coefficients are
/// stored low degree first; the leading coefficient is never zero.
template <class C>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(std::size_t degree, C coeff = C(1)) {
    std::vector<C> c(degree + 1, C(0));
    c[degree] = std::move(coeff);
    return UniPoly(std::move(c));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const C& coeff(std::size_t i) const { return c_.at(i); }
  C coeff_or_zero(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  const C& leading() const { return c_.back(); }
  const std::vector<C>& coeffs() const { return c_; }

  UniPoly derivative() const {
    std::vector<C> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UniPoly(std::move(d));
  }

  C evaluate(const C& x) const {
    C acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<C> c(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<C> c(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> c(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(UniPoly a, const Rational& s) {
    for (auto& x : a.c_) x = x * s;
    a.trim();
    return a;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && is_zero_coeff(c_.back())) c_.pop_back();
  }
  static bool is_zero_coeff(const C& x) { return x == C(0); }

  std::vector<C> c_;
};

using RationalUniPoly = UniPoly<Rational>;
using SymbolicUniPoly = UniPoly<Polynomial>;

/// Quotient and remainder over the rationals.
std::pair<RationalUniPoly, RationalUniPoly> divmod(const RationalUniPoly& a, const RationalUniPoly& b);
RationalUniPoly monic(const RationalUniPoly& p);
/// Monic gcd; gcd(0, 0) = 0.
RationalUniPoly gcd(RationalUniPoly a, RationalUniPoly b);
/// e.g. "x^3-3*x+2" (variable name selectable).
std::string to_text(const RationalUniPoly& p, const std::string& var = "x");
/// Expanded product of (x - root) over the given roots (with repetition).
RationalUniPoly from_roots(const std::vector<Rational>& roots);

/// Multiplicities of the distinct complex roots, sorted descending, from
/// the square-free chain p, gcd(p, p'), gcd(g, g'), ...
std::vector<int> root_multiplicities(const RationalUniPoly& p);

/// det(xI - A) by the Faddeev-LeVerrier recurrence; throws NonSquareError.
RationalUniPoly char_poly(const ExactMatrix& a);
SymbolicUniPoly char_poly(const Matrix<Polynomial>& a);

/// The symmetric n×n matrix whose (i,j) entry is the variable x_ij.
Matrix<Polynomial> symbolic_symmetric_matrix(std::size_t n);

/// sDisc_0 .. sDisc_{n-1} of a monic p of degree n ≥ 1.
///
/// sDisc_k = (-1)^{(n-k)(n-k-1)/2} · psc_k(p, p'), the signed k-th principal
/// subresultant coefficient. With this sign, sDisc_0 is the classical
/// discriminant and sDisc_k = Σ_{|I| = n-k} Π_{i<j in I} (r_i - r_j)² over the
/// roots r; a real-rooted p has exactly n-k distinct roots iff
/// sDisc_0 = ... = sDisc_{k-1} = 0 ≠ sDisc_k. Throws NotMonicError.
std::vector<Rational> subdiscriminants(const RationalUniPoly& p);
std::vector<Polynomial> subdiscriminants(const SymbolicUniPoly& p);

/// k-th principal subresultant coefficient of (p, q), deg p ≥ deg q, taken
/// as the determinant of the leading square block of the k-th Sylvester
/// submatrix.
Rational principal_subresultant(const RationalUniPoly& p, const RationalUniPoly& q, std::size_t k);
Polynomial principal_subresultant(const SymbolicUniPoly& p, const SymbolicUniPoly& q, std::size_t k);

/// Discriminant of the characteristic polynomial of the symbolic
/// symmetric n×n matrix, as a polynomial in the x_ij. Computed as the
/// Sylvester resultant Res(p, p') by fraction-free elimination over the
/// polynomial ring. Throws SizeError unless 2 ≤ n ≤ 4.
Polynomial matrix_discriminant_symbolic(std::size_t n);

/// Number of distinct roots of a real-rooted monic p, read off the
/// subdiscriminant vanishing pattern.
int distinct_root_count(const std::vector<Rational>& sdisc);

}  // namespace eigenstrata
