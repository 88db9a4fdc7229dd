#include "doctest.h"

#include "eigenstrata/linalg.hpp"
#include "eigenstrata/sampler.hpp"
#include "eigenstrata/strata.hpp"

using namespace eigenstrata;

namespace {
Partition P(const char* s) { return Partition::parse(s); }
}  // namespace

TEST_CASE("partition parsing") {
  CHECK(P("2,1").parts() == std::vector<int>{2, 1});
  CHECK(P("1,2") == P("2,1"));
  CHECK(P("3,1,1").n() == 5);
  CHECK(P("3,1,1").m() == 3);
  CHECK(P("2,1").str() == "2,1");
  CHECK_THROWS_AS(P("2,,1"), ParseError);
  CHECK_THROWS_AS(P("0,1"), Error);
  CHECK_THROWS_AS(P("x"), ParseError);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(6).size() == 11);
}

TEST_CASE("dimension and codimension") {
  CHECK(dimension(P("1,1,1")) == 6);
  CHECK(dimension(P("3")) == 1);
  CHECK(dimension(P("2,1")) == 4);
  CHECK(codimension(P("2,1")) == 2);
  CHECK(codimension(P("3,1")) == 5);
  CHECK(codimension(P("2,2")) == 4);
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n)) CHECK(dimension(l) + codimension(l) == ambient_dimension(n));
}

TEST_CASE("subspace counts times symmetry give the multinomial") {
  CHECK(multinomial(P("2,1")) == 3);
  CHECK(multinomial(P("2,2")) == 6);
  CHECK(count_distinct_subspaces(P("2,2")) == 3);
  CHECK(count_distinct_subspaces(P("3,3")) == 10);
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : partitions_of(n))
      CHECK(count_distinct_subspaces(l) * repeated_part_symmetry(l) == multinomial(l));
}

TEST_CASE("coarsening order") {
  CHECK(is_coarsening(P("3"), P("2,1")));
  CHECK(is_coarsening(P("2,2"), P("2,1,1")));
  CHECK(is_coarsening(P("2,1"), P("2,1")));
  CHECK_FALSE(is_coarsening(P("3,1"), P("2,2")));
  CHECK_FALSE(is_coarsening(P("2,1,1"), P("3,1")));
  CHECK_THROWS_AS(is_coarsening(P("3"), P("2,1,1")), SizeMismatchError);
  // Reflexive and transitive on n = 5.
  const auto all = partitions_of(5);
  for (const auto& a : all) {
    CHECK(is_coarsening(a, a));
    for (const auto& b : all)
      for (const auto& c : all)
        if (is_coarsening(a, b) && is_coarsening(b, c)) CHECK(is_coarsening(a, c));
  }
}

TEST_CASE("cayley transform is orthogonal") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto b = SkewParams::random(n, n * 17, 10);
    const ExactMatrix q = cayley(b);
    CHECK(q * q.transpose() == ExactMatrix::identity(n));
    CHECK(determinant(q) == Rational(1));
    const ExactMatrix r = orthogonal_det_minus_one(b, {0, 1});
    CHECK(r * r.transpose() == ExactMatrix::identity(n));
    CHECK(determinant(r) == Rational(-1));
  }
  CHECK(cayley(SkewParams::zero(3)) == ExactMatrix::identity(3));
  CHECK_THROWS_AS(orthogonal_det_minus_one(SkewParams::zero(3), {0, 3}), IndexError);
}

TEST_CASE("samples lie on their stratum") {
  for (const char* s : {"2,1", "3,1", "2,2", "2,1,1", "1,1,1"}) {
    const Partition l = P(s);
    for (const auto& pt : random_samples(l, 5, 3)) {
      CHECK(pt.matrix.is_symmetric());
      CHECK(multiplicity_partition(pt.matrix) == l);
      CHECK(membership_exact(pt.matrix, l));
      CHECK(ambient_coordinates(pt.matrix) == pt.ambient);
      CHECK(symmetric_from_ambient(pt.matrix.rows(), pt.ambient) == pt.matrix);
    }
  }
  // A (3) matrix lies in the closure of every stratum of n = 3.
  const ExactMatrix scalar = ExactMatrix::identity(3) * Rational(2);
  CHECK(membership_exact(scalar, P("2,1")));
  CHECK(membership_exact(scalar, P("1,1,1")));
  const auto generic = random_samples(P("1,1,1"), 1, 9).front().matrix;
  CHECK_FALSE(membership_exact(generic, P("2,1")));
  ExactMatrix ns(2, 2, std::vector<Rational>{1, 2, 3, 4});
  CHECK_THROWS_AS(membership_exact(ns, P("1,1")), NonSymmetricError);
}

TEST_CASE("spectrum validation") {
  SpectrumSpec bad{P("2,1"), {Rational(1), Rational(1)}};
  CHECK_THROWS_AS(bad.validate(), DuplicateEigenvalueError);
  SpectrumSpec wrong{P("2,1"), {Rational(1)}};
  CHECK_THROWS_AS(wrong.validate(), DimensionError);
  SpectrumSpec ok{P("2,1"), {Rational(5), Rational(-1)}};
  CHECK(ok.diagonal() == ExactVector{5, 5, -1});
}

TEST_CASE("sampling is deterministic") {
  const auto a = random_samples(P("2,2"), 4, 77);
  const auto b = random_samples(P("2,2"), 4, 77);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].matrix == b[i].matrix);
  CHECK_FALSE(random_samples(P("2,2"), 1, 78)[0].matrix == a[0].matrix);
}
