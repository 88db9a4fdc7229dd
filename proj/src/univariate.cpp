#include "eigenstrata/univariate.hpp"

#include <algorithm>

namespace eigenstrata {

std::pair<RationalUniPoly, RationalUniPoly> divmod(const RationalUniPoly& a, const RationalUniPoly& b) {
  if (b.is_zero()) throw DivisionByZeroError("univariate division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RationalUniPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational inv = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    const Rational& ri = r[static_cast<std::size_t>(i)];
    if (ri.is_zero()) continue;
    Rational f = ri * inv;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
    q[static_cast<std::size_t>(i - db)] = f;
  }
  return {RationalUniPoly(std::move(q)), RationalUniPoly(std::move(r))};
}

RationalUniPoly monic(const RationalUniPoly& p) {
  if (p.is_zero()) return p;
  return p * p.leading().inverse();
}

RationalUniPoly gcd(RationalUniPoly a, RationalUniPoly b) {
  while (!b.is_zero()) {
    RationalUniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::string to_text(const RationalUniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    if (c.sign() < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    Rational mag = c.abs();
    if (i == 0) {
      out += mag.str();
      continue;
    }
    if (!mag.is_one()) out += mag.str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

RationalUniPoly from_roots(const std::vector<Rational>& roots) {
  RationalUniPoly p(std::vector<Rational>{Rational(1)});
  for (const auto& r : roots) p = p * RationalUniPoly(std::vector<Rational>{-r, Rational(1)});
  return p;
}

std::vector<int> root_multiplicities(const RationalUniPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<int> at_least;  // at_least[i] = #roots of multiplicity ≥ i+1
  RationalUniPoly g = monic(p);
  while (g.degree() > 0) {
    RationalUniPoly next = gcd(g, g.derivative());
    at_least.push_back(g.degree() - next.degree());
    g = std::move(next);
  }
  std::vector<int> mult;
  for (std::size_t i = 0; i < at_least.size(); ++i) {
    const int exact = at_least[i] - (i + 1 < at_least.size() ? at_least[i + 1] : 0);
    for (int k = 0; k < exact; ++k) mult.push_back(static_cast<int>(i) + 1);
  }
  std::sort(mult.begin(), mult.end(), std::greater<>());
  return mult;
}

namespace {

template <class T>
UniPoly<T> faddeev_leverrier(const Matrix<T>& a) {
  if (!a.is_square()) throw NonSquareError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> am(n, n, T(0));  // A·M_{k-1}, with M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    am = a * m;
    c[n - k] = am.trace() * Rational(-1, static_cast<long>(k));
  }
  return UniPoly<T>(std::move(c));
}

Rational det_of(const ExactMatrix& m) { return determinant(m); }
Polynomial det_of(const Matrix<Polynomial>& m) { return bareiss_determinant(m); }

template <class T>
T psc(const UniPoly<T>& p, const UniPoly<T>& q, std::size_t k) {
  const int a = p.degree();
  const int b = q.degree();
  if (b < 0 || a < b) throw DimensionError("subresultant needs deg p ≥ deg q ≥ 0");
  if (static_cast<int>(k) > b) throw DimensionError("subresultant index exceeds deg q");
  const int kk = static_cast<int>(k);
  const int size = a + b - 2 * kk;
  if (size == 0) return T(1);
  Matrix<T> s(static_cast<std::size_t>(size), static_cast<std::size_t>(size), T(0));
  int row = 0;
  auto fill = [&](const UniPoly<T>& f, int shifts) {
    for (int sh = shifts - 1; sh >= 0; --sh, ++row) {
      for (int col = 0; col < size; ++col) {
        const int e = a + b - kk - 1 - col - sh;
        if (e >= 0 && e <= f.degree()) s(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = f.coeff(static_cast<std::size_t>(e));
      }
    }
  };
  fill(p, b - kk);
  fill(q, a - kk);
  return det_of(s);
}

template <class T>
std::vector<T> subdisc_impl(const UniPoly<T>& p) {
  const int n = p.degree();
  if (n < 1) throw DimensionError("subdiscriminants need degree ≥ 1");
  if (!(p.leading() == T(1))) throw NotMonicError("subdiscriminants need a monic polynomial");
  const UniPoly<T> dp = p.derivative();
  std::vector<T> out;
  for (int k = 0; k < n; ++k) {
    T v = psc(p, dp, static_cast<std::size_t>(k));
    const int r = n - k;
    if (((r * (r - 1)) / 2) % 2 != 0) v = T(0) - v;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

RationalUniPoly char_poly(const ExactMatrix& a) { return faddeev_leverrier(a); }
SymbolicUniPoly char_poly(const Matrix<Polynomial>& a) { return faddeev_leverrier(a); }

Matrix<Polynomial> symbolic_symmetric_matrix(std::size_t n) {
  VariableIndexing vars(n);
  Matrix<Polynomial> m(n, n, Polynomial(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Polynomial::variable(vars.size(), vars.index(i + 1, j + 1));
  return m;
}

Rational principal_subresultant(const RationalUniPoly& p, const RationalUniPoly& q, std::size_t k) { return psc(p, q, k); }
Polynomial principal_subresultant(const SymbolicUniPoly& p, const SymbolicUniPoly& q, std::size_t k) { return psc(p, q, k); }

std::vector<Rational> subdiscriminants(const RationalUniPoly& p) { return subdisc_impl(p); }
std::vector<Polynomial> subdiscriminants(const SymbolicUniPoly& p) { return subdisc_impl(p); }

Polynomial matrix_discriminant_symbolic(std::size_t n) {
  if (n < 2 || n > 4) throw SizeError("symbolic discriminant supports 2 ≤ n ≤ 4");
  const SymbolicUniPoly p = char_poly(symbolic_symmetric_matrix(n));
  Polynomial disc = psc(p, p.derivative(), 0);
  const std::size_t r = n;
  if (((r * (r - 1)) / 2) % 2 != 0) disc = -disc;
  const std::size_t num_vars = n * (n + 1) / 2;
  Polynomial out = Polynomial::zero(num_vars);
  out += disc;
  return out;
}

int distinct_root_count(const std::vector<Rational>& sdisc) {
  const int n = static_cast<int>(sdisc.size());
  for (int k = 0; k < n; ++k) {
    if (!sdisc[static_cast<std::size_t>(k)].is_zero()) return n - k;
  }
  return 0;
}

}  // namespace eigenstrata
