#include "doctest.h"

#include <cstdlib>

#include "eigenstrata/golden.hpp"
#include "eigenstrata/interpolator.hpp"
#include "eigenstrata/rng.hpp"

using namespace eigenstrata;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

InterpolationOptions with_mode(ArithmeticMode m) {
  InterpolationOptions o;
  o.mode = m;
  return o;
}

bool vanishes(const std::vector<Polynomial>& fs, const ExactMatrix& a) {
  const ExactVector x = ambient_coordinates(a);
  for (const auto& f : fs)
    if (!f.evaluate(x).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("mode parsing") {
  CHECK(parse_mode("exact") == ArithmeticMode::Exact);
  CHECK(to_string(parse_mode("modular")) == "modular");
  CHECK_THROWS_AS(parse_mode("fast"), ParseError);
}

TEST_CASE("known vanishing counts") {
  CHECK(vanishing_forms(P("2,1"), 2, 1).nullspace_dim == 0);
  CHECK(vanishing_forms(P("2,1"), 3, 1).nullspace_dim == 7);
  CHECK(vanishing_forms(P("3,1"), 2, 1).nullspace_dim == 10);
  CHECK(vanishing_forms(P("2,2"), 2, 1).nullspace_dim == 9);
  // scalar matrices: x11 - x22, x12, ... all linear
  CHECK(vanishing_forms(P("3"), 1, 1).nullspace_dim == 5);
  CHECK(vanishing_forms(P("1,1"), 2, 1).nullspace_dim == 0);
}

TEST_CASE("exact and modular bases agree") {
  const auto e = vanishing_forms(P("2,1"), 3, 4, with_mode(ArithmeticMode::Exact));
  const auto m = vanishing_forms(P("2,1"), 3, 4, with_mode(ArithmeticMode::Modular));
  CHECK(e.mode == ArithmeticMode::Exact);
  CHECK(m.mode == ArithmeticMode::Modular);
  CHECK(m.nullity_per_prime.size() == 3);
  CHECK(span_equals(e.basis, m.basis));
  // canonical echelon form: the bases are identical, not just equal spans
  CHECK(e.basis == m.basis);
}

TEST_CASE("forms are stable under conjugation, scaling and shifts") {
  const auto r = vanishing_forms(P("2,2"), 2, 2);
  const auto pts = random_samples(P("2,2"), 3, 55);
  const auto b = SkewParams::random(4, 8, 6);
  const ExactMatrix q = orthogonal_det_minus_one(b, {1, 3});
  for (const auto& s : pts) {
    CHECK(vanishes(r.basis, s.matrix * Rational(-7, 3)));
    CHECK(vanishes(r.basis, s.matrix + ExactMatrix::identity(4) * Rational(5)));
    CHECK(vanishes(r.basis, q * s.matrix * q.transpose()));
  }
  for (const auto& f : r.basis) {
    CHECK(f.degree() == 2);
    for (const auto& [mono, c] : f.terms()) CHECK(mono.degree() == 2);
  }
}

TEST_CASE("span comparison") {
  const std::size_t nv = 3;
  const Polynomial x = Polynomial::variable(nv, 0), y = Polynomial::variable(nv, 1);
  const std::vector<Polynomial> a{x * x, x * y};
  const std::vector<Polynomial> b{x * x + x * y * Rational(2), x * y * Rational(3)};
  const std::vector<Polynomial> c{x * x, y * y};
  CHECK(span_equals(a, b));
  CHECK_FALSE(span_equals(a, c));
  const std::vector<Polynomial> mixed{x, y * y};
  CHECK_THROWS_AS(span_equals(mixed, a), MixedDegreeError);
}

TEST_CASE("jacobian codimension") {
  const auto r = vanishing_forms(P("2,1"), 3, 1);
  const auto pt = random_samples(P("2,1"), 1, 12).front();
  CHECK(jacobian_codim(r.basis, pt) == 2);
  const auto off = random_samples(P("1,1,1"), 1, 12).front();
  CHECK_THROWS_AS(jacobian_codim(r.basis, off), NotOnVarietyError);
}

TEST_CASE("parametrization rank equals the stratum dimension") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions_of(n)) CHECK(parametrization_rank(l, 3) == static_cast<std::size_t>(dimension(l)));
}

TEST_CASE("evaluation matrices agree modulo p") {
  const auto ms = monomials_of_degree(3, 3);
  std::vector<ExactVector> pts;
  Rng rng(5);
  for (int i = 0; i < 6; ++i) pts.push_back({rng.rational(9), rng.rational(9), rng.rational(9)});
  const ExactMatrix e = evaluation_matrix(ms, pts);
  const ModularMatrix m = modular_evaluation_matrix(ms, pts, kPrimes62[1]);
  const ModularMatrix r = reduce_mod(e, kPrimes62[1]);
  CHECK(m.entries == r.entries);
  CHECK(e(0, 0) == pow(pts[0][0], 3));
}

TEST_CASE("golden generator lists") {
  for (const auto& g : golden_cases()) {
    const auto c = check_golden(g, default_data_dir(), 1, 10);
    CHECK(c.polys.size() == g.count);
    CHECK(c.failures.empty());
    CHECK(c.span_equal);
    CHECK(c.interpolated_dim == g.count);
  }
  CHECK_THROWS_AS(load_golden(golden_cases()[0], "/nonexistent"), Error);
}
