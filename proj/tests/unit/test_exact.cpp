#include "doctest.h"

#include "eigenstrata/jet.hpp"
#include "eigenstrata/linalg.hpp"
#include "eigenstrata/modular.hpp"
#include "eigenstrata/rng.hpp"

using namespace eigenstrata;

namespace {

ExactMatrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed, std::int64_t h = 9) {
  Rng rng(seed);
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(rng.uniform(-h, h));
  return m;
}

// Rank-k product of random factors.
ExactMatrix low_rank(std::size_t r, std::size_t c, std::size_t k, std::uint64_t seed) {
  return random_matrix(r, k, seed) * random_matrix(k, c, seed + 1);
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK(Rational::parse("-4/2") == Rational(-2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-2, 4).sign() == -1);
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZeroError);
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("field axioms on random rationals") {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    Rational a = rng.rational(50), b = rng.rational(50), c = rng.rational(50);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}

TEST_CASE("determinant rank nullspace") {
  ExactMatrix a(3, 3, std::vector<Rational>{2, 0, 1, 1, 3, 2, 1, 1, 2});
  CHECK(determinant(a) == Rational(6));
  CHECK(bareiss_determinant(a) == Rational(6));
  CHECK(inverse(a) * a == ExactMatrix::identity(3));

  ExactMatrix s(2, 3, std::vector<Rational>{1, 2, 3, 2, 4, 6});
  CHECK(rank(s) == 1);
  const auto ns = nullspace(s);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns)
    for (const auto& x : mat_vec(s, v)) CHECK(x.is_zero());
}

TEST_CASE("rank plus nullity equals columns") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::size_t k = seed % 5;
    ExactMatrix m = low_rank(6, 7, k, seed * 31);
    CHECK(rank(m) == k);
    CHECK(nullspace(m).size() == 7 - k);
    CHECK(determinant(random_matrix(4, 4, seed)) == bareiss_determinant(random_matrix(4, 4, seed)));
  }
}

TEST_CASE("modular rank agrees with exact rank") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const std::size_t k = 1 + seed % 6;
    ExactMatrix m = low_rank(9, 8, k, seed * 7);
    const auto primes = primes_for_seed(seed, 3);
    CHECK(rank_modular(m, primes).rank == k);
    CHECK(rank_mod(reduce_mod(m, primes[0])) == k);
  }
}

TEST_CASE("modular nullspace is the image of the exact one") {
  ExactMatrix m = low_rank(5, 7, 3, 99);
  const auto exact = nullspace(m);
  const std::uint64_t p = kPrimes62[2];
  const auto mod = nullspace_mod(reduce_mod(m, p));
  REQUIRE(mod.basis.size() == exact.size());
  ModField f(p);
  for (std::size_t i = 0; i < exact.size(); ++i)
    for (std::size_t j = 0; j < exact[i].size(); ++j) CHECK(f.reduce(exact[i][j]) == mod.basis[i][j]);
}

TEST_CASE("full rank nullspace is empty") {
  ExactMatrix m = random_matrix(12, 10, 5);
  CHECK(nullspace_mod(reduce_mod(m, kPrimes62[0])).basis.empty());
  CHECK(nullspace(m).empty());
}

TEST_CASE("mod field arithmetic") {
  const std::uint64_t p = kPrimes62[0];
  ModField f(p);
  Rng rng(3);
  for (int k = 0; k < 1000; ++k) {
    const std::uint64_t a = rng.next() % p, b = rng.next() % p;
    const auto exact = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    CHECK(f.mul(a, b) == exact);
    CHECK(f.mul_shoup(a, b, f.shoup(b)) == exact);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
  }
  CHECK_THROWS_AS(f.inv(0), DivisionByZeroError);
  CHECK_THROWS_AS(f.reduce(Rational(mpz_class(1), mpz_class(p))), BadPrimeError);
}

TEST_CASE("crt and rational reconstruction") {
  const std::vector<std::uint64_t> ps(kPrimes62.begin(), kPrimes62.begin() + 2);
  for (const Rational& x : {Rational(2, 3), Rational(-17, 19), Rational(mpz_class("123456789012345"), mpz_class(7))}) {
    std::vector<std::uint64_t> res;
    for (auto p : ps) res.push_back(ModField(p).reduce(x));
    CHECK(rational_reconstruct(res, ps) == x);
  }
  const std::vector<std::uint64_t> small{7, 11};
  const std::vector<std::uint64_t> r{3, 5};
  CHECK(crt(r, small) == 38);
  // 38 = -1/2 mod 77, within the bound sqrt(77/2)
  CHECK(rational_reconstruct(mpz_class(38), mpz_class(77)) == Rational(-1, 2));
}

TEST_CASE("primes by seed are reproducible") {
  CHECK(primes_for_seed(4, 3) == primes_for_seed(4, 3));
  CHECK(primes_for_seed(4, 3)[0] == kPrimes62[4]);
  CHECK(primes_for_seed(15, 2)[1] == kPrimes62[0]);
  CHECK_THROWS_AS(primes_for_seed(0, 17), SizeGuardError);
}

TEST_CASE("jets differentiate") {
  // f(x) = x^3 / (x + 1) at x = 2: f' = (3x^2(x+1) - x^3) / (x+1)^2 = 28/9
  Jet x = Jet::variable(Rational(2));
  Jet f = x * x * x / (x + Jet(1));
  CHECK(f.value == Rational(8, 3));
  CHECK(f.deriv == Rational(28, 9));
}

TEST_CASE("rng determinism") {
  Rng a(42), b(42);
  for (int k = 0; k < 10; ++k) CHECK(a.next() == b.next());
  CHECK(split_seed(1, 2) != split_seed(2, 1));
  Rng c(1);
  for (int k = 0; k < 500; ++k) {
    const auto v = c.uniform(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}
