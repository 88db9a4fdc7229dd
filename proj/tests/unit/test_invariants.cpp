#include "doctest.h"

#include "eigenstrata/invariants.hpp"
#include "eigenstrata/sampler.hpp"

using namespace eigenstrata;

namespace {
Partition P(const char* s) { return Partition::parse(s); }
}  // namespace

TEST_CASE("monomial symmetric functions") {
  CHECK(monomial_symmetric(P("2,1"), 3).size() == 6);
  CHECK(monomial_symmetric(P("1,1"), 3).size() == 3);
  CHECK(monomial_symmetric(P("2"), 2) == Polynomial::variable(2, 0) * Polynomial::variable(2, 0) +
                                             Polynomial::variable(2, 1) * Polynomial::variable(2, 1));
  CHECK_THROWS_AS(monomial_symmetric(P("1,1,1"), 2), DimensionError);
}

TEST_CASE("power traces") {
  VariableIndexing v(2);
  CHECK(to_text(power_trace(2, 1), v) == "x11+x22");
  CHECK(to_text(power_trace(2, 2), v) == "x11^2+2*x12^2+x22^2");
}

TEST_CASE("graded dimensions") {
  // the discriminant is the first invariant vanishing on (2,1)
  for (unsigned d = 1; d <= 5; ++d) CHECK(sn_invariant_dim(P("2,1"), d, 1) == 0);
  CHECK(sn_invariant_dim(P("2,1"), 6, 1) == 1);
  CHECK(son_invariant_dim(P("2,1"), 6, 1) == 1);
  CHECK(sn_invariant_dim(P("3"), 1, 1) == 0);
  CHECK(sn_invariant_dim(P("3"), 2, 1) == 1);
  CHECK(son_invariant_dim(P("3"), 2, 1) == 1);
}

TEST_CASE("invariant basis vanishes and is conjugation stable") {
  const auto basis = son_invariant_basis(P("2,1"), 6, 1);
  REQUIRE(basis.size() == 1);
  const auto b = SkewParams::random(3, 4, 5);
  const ExactMatrix q = orthogonal_det_minus_one(b, {0, 2});
  for (const auto& pt : random_samples(P("2,1"), 3, 8)) CHECK(basis[0].evaluate(pt.ambient).is_zero());
  const auto generic = random_samples(P("1,1,1"), 1, 8).front().matrix;
  const auto x = ambient_coordinates(generic);
  CHECK_FALSE(basis[0].evaluate(x).is_zero());
  CHECK(basis[0].evaluate(ambient_coordinates(q * generic * q.transpose())) == basis[0].evaluate(x));
}

TEST_CASE("chevalley restriction table") {
  const auto t = chevalley_check(P("2,1"), 6, 1);
  CHECK(t.rows.size() == 6);
  CHECK(t.all_match());
  CHECK(chevalley_check(P("2,2"), 4, 1).all_match());
  InvariantOptions small;
  small.max_n = 3;
  CHECK_THROWS_AS(sn_invariant_dim(P("2,2"), 2, 1, small), SizeGuardError);
}
