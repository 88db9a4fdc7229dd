#include "doctest.h"

#include <algorithm>

#include "eigenstrata/polynomial.hpp"
#include "eigenstrata/rng.hpp"
#include "eigenstrata/univariate.hpp"

using namespace eigenstrata;

namespace {

Polynomial random_poly(std::size_t nv, unsigned maxdeg, std::uint64_t seed) {
  Rng rng(seed);
  Polynomial p = Polynomial::zero(nv);
  for (unsigned d = 0; d <= maxdeg; ++d)
    for (const auto& m : monomials_of_degree(nv, d))
      if (rng.uniform(0, 2) == 0) p.add_term(m, rng.rational(7));
  return p;
}

ExactVector random_point(std::size_t nv, std::uint64_t seed) {
  Rng rng(seed);
  ExactVector x;
  for (std::size_t k = 0; k < nv; ++k) x.push_back(rng.rational(5));
  return x;
}

// Σ over k-subsets of roots of Π (r_i - r_j)^2.
Rational brute_subdisc(const std::vector<Rational>& roots, std::size_t k) {
  const std::size_t n = roots.size();
  Rational total(0);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    Rational prod(1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (pick[i] && pick[j]) prod *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
    total += prod;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

}  // namespace

TEST_CASE("variable indexing") {
  VariableIndexing v(3);
  CHECK(v.size() == 6);
  CHECK(v.name(0) == "x11");
  CHECK(v.name(1) == "x12");
  CHECK(v.name(5) == "x33");
  CHECK(v.index(2, 1) == v.index(1, 2));
  CHECK(VariableIndexing(10).name(1) == "x1_2");
}

TEST_CASE("monomial counts and order") {
  CHECK(monomials_of_degree(6, 2).size() == 21);
  CHECK(monomials_of_degree(10, 5).size() == 2002);
  const auto ms = monomials_of_degree(3, 2);
  CHECK(ms.front() == Monomial::variable(0, 2));
  CHECK(std::is_sorted(ms.begin(), ms.end(), GrlexDescending{}));
}

TEST_CASE("ring axioms and evaluation homomorphism") {
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const Polynomial a = random_poly(3, 2, s), b = random_poly(3, 2, s + 100), c = random_poly(3, 1, s + 200);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    const auto x = random_point(3, s);
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
  }
}

TEST_CASE("text round trip and tex input") {
  VariableIndexing v(2);
  const Polynomial p = parse_polynomial("-x11*x22+x12^2+1/2*x11-3", v);
  CHECK(parse_polynomial(to_text(p, v), v) == p);
  CHECK(parse_polynomial("x_{11}x_{22}-x_{12}^2", v) == parse_polynomial("x11*x22-x12^2", v));
  CHECK(to_text(parse_polynomial("4*x12^2", v), v) == "4*x12^2");
  CHECK_THROWS_AS(parse_polynomial("x13", v), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x11+*", v), ParseError);
}

TEST_CASE("json round trip") {
  VariableIndexing v(3);
  const Polynomial p = random_poly(6, 3, 5);
  CHECK(polynomial_from_json(to_json(p, v)) == p);
}

TEST_CASE("exact division") {
  const Polynomial a = random_poly(3, 2, 7), b = random_poly(3, 2, 8);
  if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
  const Polynomial x = Polynomial::variable(3, 0), y = Polynomial::variable(3, 1);
  CHECK_THROWS_AS(exact_divide(x, y), InexactDivisionError);
}

TEST_CASE("univariate gcd and roots") {
  const auto p = from_roots({Rational(1), Rational(1), Rational(2)});
  CHECK(to_text(p) == "x^3-4*x^2+5*x-2");
  CHECK(gcd(p, p.derivative()) == from_roots({Rational(1)}));
  CHECK(root_multiplicities(p) == std::vector<int>{2, 1});
  const auto [q, r] = divmod(p, from_roots({Rational(2)}));
  CHECK(r.is_zero());
  CHECK(q == from_roots({Rational(1), Rational(1)}));
}

TEST_CASE("subdiscriminants match root sums") {
  const std::vector<std::vector<Rational>> cases = {
      {0, 1, 2}, {1, 1, 3, 5}, {Rational(1, 2), -3, 4, 4, 7}, {2, 2, 2}, {-1, 0, 1, 5, Rational(2, 3)}};
  for (const auto& roots : cases) {
    const auto sd = subdiscriminants(from_roots(roots));
    const std::size_t n = roots.size();
    REQUIRE(sd.size() == n);
    for (std::size_t k = 0; k < n; ++k) CHECK(sd[k] == brute_subdisc(roots, n - k));
    std::vector<Rational> distinct = roots;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    CHECK(distinct_root_count(sd) == static_cast<int>(distinct.size()));
  }
}

TEST_CASE("characteristic polynomial") {
  ExactMatrix a(2, 2, std::vector<Rational>{2, 1, 1, 2});
  CHECK(char_poly(a) == from_roots({Rational(1), Rational(3)}));
}

TEST_CASE("symbolic subdiscriminants specialize") {
  const auto sym = subdiscriminants(char_poly(symbolic_symmetric_matrix(3)));
  ExactMatrix a(3, 3, std::vector<Rational>{1, 2, 0, 2, -1, 3, 0, 3, 4});
  const auto num = subdiscriminants(char_poly(a));
  const ExactVector x{1, 2, 0, -1, 3, 4};
  REQUIRE(sym.size() == num.size());
  for (std::size_t k = 0; k < sym.size(); ++k) CHECK(sym[k].evaluate(x) == num[k]);
  CHECK(matrix_discriminant_symbolic(3).evaluate(x) == num[0]);
  CHECK(matrix_discriminant_symbolic(3).degree() == 6);
}
