#include "doctest.h"

#include <cmath>

#include "eigenstrata/distance.hpp"
#include "eigenstrata/rng.hpp"
#include "eigenstrata/sampler.hpp"

using namespace eigenstrata;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

FloatSymmetric diag(std::vector<double> d) {
  FloatSymmetric m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

FloatSymmetric random_float(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  FloatSymmetric m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, 20 * rng.unit() - 10);
  return m;
}

}  // namespace

TEST_CASE("projection onto a subspace") {
  const ExactVector u{0, 2, 10};
  const auto p = project(u, BlockAssignment({{1, 2}, {3}}));
  CHECK(p.point == ExactVector{1, 1, 10});
  CHECK(p.squared_distance == Rational(2));
  for (const auto& r : orthogonality_residuals(u, p)) CHECK(r.is_zero());
  const std::vector<double> uf{0, 2, 10};
  const auto q = project(uf, BlockAssignment({{1, 3}, {2}}));
  CHECK(q.point[0] == doctest::Approx(5));
  CHECK(q.squared_distance == doctest::Approx(50));
}

TEST_CASE("critical points of the distance function") {
  const auto s = critical_points(ExactVector{0, 2, 10}, P("2,1"));
  REQUIRE(s.points.size() == 3);
  CHECK(s.points[0].subspace.str() == "12|3");
  CHECK(s.points[0].squared_distance == Rational(2));
  CHECK(s.points[1].squared_distance == Rational(32));
  CHECK(s.points[2].squared_distance == Rational(50));
  CHECK(s.minimizers == 1);
  CHECK_FALSE(s.tie);

  const auto t = critical_points(ExactVector{0, 1, 2}, P("2,1"));
  CHECK(t.tie);
  CHECK(t.minimizers == 2);
  CHECK(t.points[0].squared_distance == Rational(1, 2));
}

TEST_CASE("edd for distinct parts") {
  for (const char* s : {"2,1", "3,1", "4,1", "3,2,1"}) {
    const auto r = edd_report(P(s), 1);
    CHECK(r.generic);
    CHECK(r.real_critical == r.formula_edd);
    CHECK(r.subspace_count == r.formula_edd);
  }
  const auto r = edd_report(P("2,2"), 1);
  CHECK(r.formula_edd == 6);
  CHECK(r.real_critical == 3);
}

TEST_CASE("jacobi eigensolver") {
  FloatSymmetric a(2);
  a.set(0, 0, 2);
  a.set(1, 1, 2);
  a.set(0, 1, 1);
  const auto e = jacobi_eigen(a);
  CHECK(e.values[0] == doctest::Approx(1));
  CHECK(e.values[1] == doctest::Approx(3));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto m = random_float(6, seed);
    const auto es = jacobi_eigen(m);
    const auto back = conjugate_diagonal(es.vectors, es.values);
    CHECK(frobenius_distance(back, m) < 1e-9);
    for (std::size_t k = 1; k < es.values.size(); ++k) CHECK(es.values[k - 1] <= es.values[k]);
  }
}

TEST_CASE("nearest matrix with prescribed multiplicities") {
  const auto r = nearest_symmetric(diag({1, 2, 10}), P("2,1"));
  CHECK(r.squared_distance == doctest::Approx(0.5));
  CHECK(r.matrix(0, 0) == doctest::Approx(1.5));
  CHECK(r.matrix(2, 2) == doctest::Approx(10));
  CHECK(r.contiguous);
  CHECK_FALSE(r.tie);
  CHECK(nearest_symmetric(diag({0, 1, 2}), P("2,1")).tie);
  CHECK(nearest_symmetric(diag({1, 1, 5}), P("1,1,1")).degenerate);
  // the input itself when it already lies on the stratum
  const auto q = cayley_float(3, std::vector<double>{0.3, -1.2, 0.5});
  const std::vector<double> vals{4, 4, -2};
  const auto on = conjugate_diagonal(q, vals);
  CHECK(nearest_symmetric(on, P("2,1")).squared_distance < 1e-18);
}

TEST_CASE("nearest beats random points of the stratum") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto u = random_float(4, seed);
    const auto r = nearest_symmetric(u, P("2,2"));
    CHECK(frobenius_distance(u, r.matrix) * frobenius_distance(u, r.matrix) == doctest::Approx(r.squared_distance));
    for (const auto& s : random_samples(P("2,2"), 5, seed)) {
      Matrix<double> d(4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) d(i, j) = s.matrix(i, j).to_double();
      const double dist = frobenius_distance(u, FloatSymmetric::from_dense(d));
      CHECK(r.squared_distance <= dist * dist + 1e-9);
    }
  }
}

TEST_CASE("float symmetric json") {
  const auto m = random_float(3, 2);
  const auto back = float_symmetric_from_json(to_json(m));
  CHECK(frobenius_distance(m, back) == 0.0);
  CHECK_THROWS(float_symmetric_from_json(nlohmann::json::parse(R"({"n":2,"upper":[1,2]})")));
}
